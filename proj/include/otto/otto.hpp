#pragma once

// Umbrella header: thermodynamics of asymmetrically driven harmonic quantum
// Otto cycles — exact finite-temperature cycle quantities, the
// high-temperature closed forms and efficiency bounds, operational-mode
// phase maps, Monte-Carlo bound verification, and the numeric adiabaticity
// oracle.

#include "otto/adiabaticity.hpp"
#include "otto/asym.hpp"
#include "otto/cubic.hpp"
#include "otto/cycle.hpp"
#include "otto/format.hpp"
#include "otto/high_temp.hpp"
#include "otto/parallel.hpp"
#include "otto/phase.hpp"
#include "otto/sampling.hpp"
