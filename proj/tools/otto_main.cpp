// Command-line interface for the driven quantum Otto cycle library.
//
// Subcommands:
//   compute    exact heats, work, efficiency and operating mode for one cycle
//   sweep      high-temperature work/efficiency curves for all four drive schemes
//   bounds     efficiency bounds and maximum-work efficiencies vs Carnot efficiency
//   phase      operating-mode map over the (tau, z) parameter square
//   histogram  Monte Carlo efficiency histogram under random frequency draws
//   lambda     numerical adiabaticity parameter for a frequency ramp
//   verify     run the acceptance suite and report each criterion
//
// Exit codes: 0 success, 1 acceptance failure (verify), 2 invalid input,
// 3 non-converged numerical integration (lambda).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "otto/otto.hpp"

namespace {

using otto::fmt_g12;

std::string opt_num(const std::optional<double>& v) {
  return v ? fmt_g12(*v) : std::string{};
}

std::string json_num(double v) { return fmt_g12(v); }

std::string json_opt(const std::optional<double>& v) {
  return v ? fmt_g12(*v) : std::string{"null"};
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

otto::Scheme parse_scheme(const std::string& name) {
  static const std::map<std::string, otto::Scheme> table = {
      {"ad", otto::Scheme::adiabatic},
      {"se", otto::Scheme::sudden_expansion},
      {"sc", otto::Scheme::sudden_compression},
      {"ss", otto::Scheme::sudden_switch},
  };
  return table.at(name);
}

// Writes rows either to stdout or to the file given via --out.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct CommonOpts {
  std::string format = "csv";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--format", opts->format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts->out_path, "write output to this file instead of stdout");
}

// ---------------------------------------------------------------- compute ---

struct ComputeOpts {
  CommonOpts common;
  std::string scheme;
  double wc = 0, wh = 0, bc = 0, bh = 0;
};

int run_compute(const ComputeOpts& o) {
  const otto::Scheme scheme = parse_scheme(o.scheme);
  const otto::FrequencyPair freq(o.wc, o.wh);
  const otto::BathPair bath(o.bc, o.bh);
  const double sudden = otto::lambda_sudden(freq);
  otto::AdiabaticityPair lam(1.0, 1.0);
  switch (scheme) {
    case otto::Scheme::adiabatic: lam = otto::AdiabaticityPair(1.0, 1.0); break;
    case otto::Scheme::sudden_expansion: lam = otto::AdiabaticityPair(1.0, sudden); break;
    case otto::Scheme::sudden_compression: lam = otto::AdiabaticityPair(sudden, 1.0); break;
    case otto::Scheme::sudden_switch: lam = otto::AdiabaticityPair(sudden, sudden); break;
  }
  const otto::CycleOutcome oc = otto::heats_and_work(freq, bath, lam);
  const otto::OperationalMode mode = otto::mode_from_signs(oc.w_ext, oc.q_hot, oc.q_cold);

  OutputSink sink(o.common.out_path);
  std::ostream& os = sink.stream();
  if (o.common.format == "csv") {
    os << "scheme,wc,wh,bc,bh,qh,qc,w,eta,mode\n";
    os << o.scheme << ',' << fmt_g12(o.wc) << ',' << fmt_g12(o.wh) << ','
       << fmt_g12(o.bc) << ',' << fmt_g12(o.bh) << ',' << fmt_g12(oc.q_hot) << ','
       << fmt_g12(oc.q_cold) << ',' << fmt_g12(oc.w_ext) << ',' << opt_num(oc.eta)
       << ',' << otto::mode_name(mode) << '\n';
  } else {
    os << "{\"scheme\":\"" << o.scheme << "\",\"wc\":" << json_num(o.wc)
       << ",\"wh\":" << json_num(o.wh) << ",\"bc\":" << json_num(o.bc)
       << ",\"bh\":" << json_num(o.bh) << ",\"qh\":" << json_num(oc.q_hot)
       << ",\"qc\":" << json_num(oc.q_cold) << ",\"w\":" << json_num(oc.w_ext)
       << ",\"eta\":" << json_opt(oc.eta) << ",\"mode\":\""
       << otto::mode_name(mode) << "\"}\n";
  }
  return 0;
}

// ------------------------------------------------------------------ sweep ---

struct SweepOpts {
  CommonOpts common;
  double tau = 0;
  double z_min = 0.001;
  double z_max = 1.0;
  int points = 1000;
};

int run_sweep(const SweepOpts& o) {
  if (o.points < 2) throw std::invalid_argument("sweep requires at least 2 points");
  if (!(o.z_min > 0.0) || !(o.z_max <= 1.0) || !(o.z_min < o.z_max))
    throw std::invalid_argument("sweep z range must satisfy 0 < z-min < z-max <= 1");
  if (!(o.tau > 0.0) || !(o.tau <= 1.0))
    throw std::invalid_argument("sweep tau must lie in (0, 1]");

  struct Row {
    double z, w_ad, w_se, w_sc, w_ss;
    std::optional<double> eta_se, eta_sc, eta_ss;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(o.points));
  for (int i = 0; i < o.points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(o.points - 1);
    const double z = o.z_min + (o.z_max - o.z_min) * t;
    const otto::ReducedParams p(z, o.tau);
    const auto ad = otto::ht_quantities(otto::Scheme::adiabatic, p);
    const auto se = otto::ht_quantities(otto::Scheme::sudden_expansion, p);
    const auto sc = otto::ht_quantities(otto::Scheme::sudden_compression, p);
    const auto ss = otto::ht_quantities(otto::Scheme::sudden_switch, p);
    rows.push_back({z, ad.w, se.w, sc.w, ss.w, se.eta, sc.eta, ss.eta});
  }

  OutputSink sink(o.common.out_path);
  std::ostream& os = sink.stream();
  if (o.common.format == "csv") {
    os << "z,w_ad,w_se,w_sc,w_ss,eta_se,eta_sc,eta_ss\n";
    for (const Row& r : rows) {
      os << fmt_g12(r.z) << ',' << fmt_g12(r.w_ad) << ',' << fmt_g12(r.w_se) << ','
         << fmt_g12(r.w_sc) << ',' << fmt_g12(r.w_ss) << ',' << opt_num(r.eta_se)
         << ',' << opt_num(r.eta_sc) << ',' << opt_num(r.eta_ss) << '\n';
    }
  } else {
    os << "{\"tau\":" << json_num(o.tau) << ",\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      if (i) os << ',';
      os << "{\"z\":" << json_num(r.z) << ",\"w_ad\":" << json_num(r.w_ad)
         << ",\"w_se\":" << json_num(r.w_se) << ",\"w_sc\":" << json_num(r.w_sc)
         << ",\"w_ss\":" << json_num(r.w_ss) << ",\"eta_se\":" << json_opt(r.eta_se)
         << ",\"eta_sc\":" << json_opt(r.eta_sc) << ",\"eta_ss\":" << json_opt(r.eta_ss)
         << '}';
    }
    os << "]}\n";
  }
  return 0;
}

// ----------------------------------------------------------------- bounds ---

struct BoundsOpts {
  CommonOpts common;
  double ec_min = 0.0;
  double ec_max = 0.99;
  int points = 200;
};

int run_bounds(const BoundsOpts& o) {
  if (o.points < 2) throw std::invalid_argument("bounds requires at least 2 points");
  if (!(o.ec_min >= 0.0) || !(o.ec_max < 1.0) || !(o.ec_min < o.ec_max))
    throw std::invalid_argument("bounds range must satisfy 0 <= ec-min < ec-max < 1");

  OutputSink sink(o.common.out_path);
  std::ostream& os = sink.stream();
  const bool csv = o.common.format == "csv";
  if (csv)
    os << "eta_c,eta_up_se,eta_mw_se,eta_up_sc,eta_mw_sc,delta,delta_prime\n";
  else
    os << "{\"rows\":[";
  for (int i = 0; i < o.points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(o.points - 1);
    const double ec = o.ec_min + (o.ec_max - o.ec_min) * t;
    const double tau = 1.0 - ec;
    const double up_se = otto::eta_up_se(tau);
    const double up_sc = otto::eta_up_sc(tau);
    const double mw_se = otto::eta_mw_se(ec);
    const double mw_sc = otto::eta_mw_sc(ec);
    if (csv) {
      os << fmt_g12(ec) << ',' << fmt_g12(up_se) << ',' << fmt_g12(mw_se) << ','
         << fmt_g12(up_sc) << ',' << fmt_g12(mw_sc) << ','
         << fmt_g12(up_se - mw_se) << ',' << fmt_g12(up_sc - mw_sc) << '\n';
    } else {
      if (i) os << ',';
      os << "{\"eta_c\":" << json_num(ec) << ",\"eta_up_se\":" << json_num(up_se)
         << ",\"eta_mw_se\":" << json_num(mw_se) << ",\"eta_up_sc\":" << json_num(up_sc)
         << ",\"eta_mw_sc\":" << json_num(mw_sc) << ",\"delta\":" << json_num(up_se - mw_se)
         << ",\"delta_prime\":" << json_num(up_sc - mw_sc) << '}';
    }
  }
  if (!csv) os << "]}\n";
  return 0;
}

// ------------------------------------------------------------------ phase ---

struct PhaseOpts {
  CommonOpts common;
  std::string scheme;
  int res = 200;
  std::optional<double> tau_min, tau_max, z_min, z_max;
  int threads = 0;
};

int run_phase(const PhaseOpts& o) {
  if (o.res < 2) throw std::invalid_argument("phase requires --res >= 2");
  const double half_cell = 0.5 / static_cast<double>(o.res);
  const double t_lo = o.tau_min.value_or(half_cell);
  const double t_hi = o.tau_max.value_or(1.0 - half_cell);
  const double z_lo = o.z_min.value_or(half_cell);
  const double z_hi = o.z_max.value_or(1.0 - half_cell);
  const otto::PhaseGrid grid = otto::phase_grid(
      parse_scheme(o.scheme), {t_lo, t_hi}, {z_lo, z_hi},
      static_cast<std::size_t>(o.res), static_cast<unsigned>(o.threads));

  OutputSink sink(o.common.out_path);
  std::ostream& os = sink.stream();
  const bool csv = o.common.format == "csv";
  if (csv)
    os << "tau,z,mode\n";
  else
    os << "{\"scheme\":\"" << o.scheme << "\",\"res\":" << o.res << ",\"cells\":[";
  bool first = true;
  for (std::size_t i = 0; i < grid.tau_values.size(); ++i) {
    for (std::size_t j = 0; j < grid.z_values.size(); ++j) {
      const char* mode = otto::mode_name(grid.at(i, j));
      if (csv) {
        os << fmt_g12(grid.tau_values[i]) << ',' << fmt_g12(grid.z_values[j]) << ','
           << mode << '\n';
      } else {
        if (!first) os << ',';
        first = false;
        os << "{\"tau\":" << json_num(grid.tau_values[i]) << ",\"z\":"
           << json_num(grid.z_values[j]) << ",\"mode\":\"" << mode << "\"}";
      }
    }
  }
  if (!csv) os << "]}\n";
  return 0;
}

// -------------------------------------------------------------- histogram ---

struct HistogramOpts {
  CommonOpts common;
  std::string scheme;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
  double bc = 1.0;
  double bh = 0.1;
  double omega_max = 100.0;
  double bin = 0.01;
  int threads = 0;
};

int run_histogram(const HistogramOpts& o) {
  otto::SamplingPlan plan;
  plan.scheme = parse_scheme(o.scheme);
  plan.seed = o.seed;
  plan.sample_count = o.samples;
  plan.beta_c = o.bc;
  plan.beta_h = o.bh;
  plan.omega_max = o.omega_max;
  plan.bin_width = o.bin;
  plan.thread_count = static_cast<unsigned>(o.threads);
  const otto::Histogram h = otto::sample_efficiencies(plan);

  OutputSink sink(o.common.out_path);
  std::ostream& os = sink.stream();
  if (o.common.format == "csv") {
    os << "bin_lo,bin_hi,count\n";
    for (const auto& b : h.bins)
      os << fmt_g12(b.lo) << ',' << fmt_g12(b.hi) << ',' << b.count << '\n';
    os << "# max_eta=" << opt_num(h.max_eta) << " accepted=" << h.accepted
       << " rejected=" << h.rejected << " bound=" << fmt_g12(h.bound)
       << " margin=" << opt_num(h.margin) << '\n';
  } else {
    os << "{\"scheme\":\"" << o.scheme << "\",\"seed\":" << o.seed
       << ",\"samples\":" << o.samples << ",\"accepted\":" << h.accepted
       << ",\"rejected\":" << h.rejected << ",\"max_eta\":" << json_opt(h.max_eta)
       << ",\"bound\":" << json_num(h.bound) << ",\"margin\":" << json_opt(h.margin)
       << ",\"bins\":[";
    for (std::size_t i = 0; i < h.bins.size(); ++i) {
      if (i) os << ',';
      os << "{\"lo\":" << json_num(h.bins[i].lo) << ",\"hi\":" << json_num(h.bins[i].hi)
         << ",\"count\":" << h.bins[i].count << '}';
    }
    os << "]}\n";
  }
  return 0;
}

// ------------------------------------------------------------------ lambda ---

struct LambdaOpts {
  CommonOpts common;
  std::string ramp;
  double wi = 0, wf = 0, duration = 0;
  std::uint64_t steps = 100000;
};

int run_lambda(const LambdaOpts& o) {
  otto::FrequencyProtocol protocol = [&] {
    if (o.ramp == "linear") return otto::linear_ramp(o.wi, o.wf, o.duration);
    if (o.ramp == "exponential") return otto::exponential_ramp(o.wi, o.wf, o.duration);
    return otto::sudden_step(o.wi, o.wf, o.duration);
  }();
  otto::IntegratorConfig config;
  config.step_count = o.steps;
  const otto::LambdaEstimate est = otto::lambda_numeric(protocol, config);
  const double sudden = otto::lambda_sudden(o.wi, o.wf);

  OutputSink sink(o.common.out_path);
  std::ostream& os = sink.stream();
  if (o.common.format == "csv") {
    os << "ramp,wi,wf,duration,steps,lambda,lambda_sudden,refine_delta,converged\n";
    os << o.ramp << ',' << fmt_g12(o.wi) << ',' << fmt_g12(o.wf) << ','
       << fmt_g12(o.duration) << ',' << o.steps << ',' << fmt_g12(est.value) << ','
       << fmt_g12(sudden) << ',' << fmt_g12(est.refine_delta) << ','
       << bool_str(est.converged) << '\n';
  } else {
    os << "{\"ramp\":\"" << o.ramp << "\",\"wi\":" << json_num(o.wi)
       << ",\"wf\":" << json_num(o.wf) << ",\"duration\":" << json_num(o.duration)
       << ",\"steps\":" << o.steps << ",\"lambda\":" << json_num(est.value)
       << ",\"lambda_sudden\":" << json_num(sudden)
       << ",\"refine_delta\":" << json_num(est.refine_delta)
       << ",\"converged\":" << bool_str(est.converged) << "}\n";
  }
  return est.converged ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermodynamics of asymmetrically driven quantum Otto cycles"};
  app.require_subcommand(1);

  ComputeOpts compute_opts;
  CLI::App* compute = app.add_subcommand(
      "compute", "exact heats, work and efficiency for one cycle");
  compute->add_option("--scheme", compute_opts.scheme, "drive scheme")
      ->required()
      ->check(CLI::IsMember({"ad", "se", "sc", "ss"}));
  compute->add_option("--wc", compute_opts.wc, "cold-stroke frequency")->required();
  compute->add_option("--wh", compute_opts.wh, "hot-stroke frequency")->required();
  compute->add_option("--bc", compute_opts.bc, "cold-bath inverse temperature")->required();
  compute->add_option("--bh", compute_opts.bh, "hot-bath inverse temperature")->required();
  add_common(compute, &compute_opts.common);

  SweepOpts sweep_opts;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "high-temperature work and efficiency vs frequency ratio");
  sweep->add_option("--tau", sweep_opts.tau, "temperature ratio Tc/Th")->required();
  sweep->add_option("--z-min", sweep_opts.z_min, "lowest frequency ratio")
      ->capture_default_str();
  sweep->add_option("--z-max", sweep_opts.z_max, "highest frequency ratio")
      ->capture_default_str();
  sweep->add_option("--points", sweep_opts.points, "number of grid points")
      ->capture_default_str();
  add_common(sweep, &sweep_opts.common);

  BoundsOpts bounds_opts;
  CLI::App* bounds = app.add_subcommand(
      "bounds", "efficiency bounds and maximum-work efficiencies vs Carnot efficiency");
  bounds->add_option("--ec-min", bounds_opts.ec_min, "lowest Carnot efficiency")
      ->capture_default_str();
  bounds->add_option("--ec-max", bounds_opts.ec_max, "highest Carnot efficiency")
      ->capture_default_str();
  bounds->add_option("--points", bounds_opts.points, "number of grid points")
      ->capture_default_str();
  add_common(bounds, &bounds_opts.common);

  PhaseOpts phase_opts;
  CLI::App* phase = app.add_subcommand(
      "phase", "operating-mode map over the (tau, z) square");
  phase->add_option("--scheme", phase_opts.scheme, "drive scheme")
      ->required()
      ->check(CLI::IsMember({"se", "sc"}));
  phase->add_option("--res", phase_opts.res, "cells per axis")->capture_default_str();
  phase->add_option("--tau-min", phase_opts.tau_min, "lowest temperature ratio");
  phase->add_option("--tau-max", phase_opts.tau_max, "highest temperature ratio");
  phase->add_option("--z-min", phase_opts.z_min, "lowest frequency ratio");
  phase->add_option("--z-max", phase_opts.z_max, "highest frequency ratio");
  phase->add_option("--threads", phase_opts.threads, "worker threads (0 = env/auto)")
      ->capture_default_str();
  add_common(phase, &phase_opts.common);

  HistogramOpts histogram_opts;
  CLI::App* histogram = app.add_subcommand(
      "histogram", "Monte Carlo efficiency histogram under random frequency draws");
  histogram->add_option("--scheme", histogram_opts.scheme, "drive scheme")
      ->required()
      ->check(CLI::IsMember({"se", "sc"}));
  histogram->add_option("--seed", histogram_opts.seed, "random seed")
      ->capture_default_str();
  histogram->add_option("--samples", histogram_opts.samples, "number of draws")
      ->capture_default_str();
  histogram->add_option("--bc", histogram_opts.bc, "cold-bath inverse temperature")
      ->capture_default_str();
  histogram->add_option("--bh", histogram_opts.bh, "hot-bath inverse temperature")
      ->capture_default_str();
  histogram->add_option("--omega-max", histogram_opts.omega_max, "frequency upper bound")
      ->capture_default_str();
  histogram->add_option("--bin", histogram_opts.bin, "efficiency bin width")
      ->capture_default_str();
  histogram->add_option("--threads", histogram_opts.threads, "worker threads (0 = env/auto)")
      ->capture_default_str();
  add_common(histogram, &histogram_opts.common);

  LambdaOpts lambda_opts;
  CLI::App* lambda = app.add_subcommand(
      "lambda", "numerical adiabaticity parameter for a frequency ramp");
  lambda->add_option("--ramp", lambda_opts.ramp, "ramp shape")
      ->required()
      ->check(CLI::IsMember({"linear", "exponential", "sudden"}));
  lambda->add_option("--wi", lambda_opts.wi, "initial frequency")->required();
  lambda->add_option("--wf", lambda_opts.wf, "final frequency")->required();
  lambda->add_option("--duration", lambda_opts.duration, "ramp duration")->required();
  lambda->add_option("--steps", lambda_opts.steps, "integration steps")
      ->capture_default_str();
  add_common(lambda, &lambda_opts.common);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the acceptance suite and report each criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_opts);
    if (sweep->parsed()) return run_sweep(sweep_opts);
    if (bounds->parsed()) return run_bounds(bounds_opts);
    if (phase->parsed()) return run_phase(phase_opts);
    if (histogram->parsed()) return run_histogram(histogram_opts);
    if (lambda->parsed()) return run_lambda(lambda_opts);
    if (verify->parsed()) return otto::acceptance::run_and_report(std::cout) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
