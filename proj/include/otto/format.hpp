#pragma once

// Shared numeric text formatting: every number this project emits (CSV cells,
// JSON values) goes through the same 12-significant-digit conversion, which
// keeps repeated runs byte-identical.

#include <cstdio>
#include <string>

namespace otto {

inline std::string fmt_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace otto
