// fdstab: command-line front end for the scheme/boundary stability toolkit.
//
// Exit codes: 0 ok, 1 a check ran and failed, 2 usage or input error,
// 3 numerical failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fdstab/builtins.hpp"
#include "fdstab/io.hpp"
#include "fdstab/kernels.hpp"
#include "fdstab/reproduce.hpp"
#include "fdstab/simulate.hpp"
#include "fdstab/spectral.hpp"

namespace {

using nlohmann::json;
using namespace fdstab;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kNumeric = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemeArgs {
  std::string scheme;
  double lam_a = 0.5;
  double nu = NAN;
  double lambda = 1.0;

  void add(CLI::App* app) {
    app->add_option("--scheme", scheme, "Builtin name or path to a scheme JSON file")->required();
    app->add_option("--lam-a", lam_a, "lambda*a for the three-point family")->capture_default_str();
    app->add_option("--nu", nu, "Numerical viscosity for --scheme three-point");
    app->add_option("--lambda", lambda, "CFL ratio dt/dx for the three-point family")->capture_default_str();
  }

  Scheme load() const {
    const auto names = builtin_names();
    if (std::find(names.begin(), names.end(), scheme) != names.end()) {
      BuiltinParams p;
      p.lam_a = lam_a;
      p.lambda = lambda;
      if (!std::isnan(nu)) p.nu = nu;
      try {
        return builtin(scheme, p);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (!std::filesystem::exists(scheme))
      throw UsageError("'" + scheme + "' is neither a builtin scheme nor an existing file");
    try {
      return io::load_scheme(scheme);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }

  json describe(const Scheme& s) const {
    json j = io::scheme_to_json(s);
    j["source"] = scheme;
    return j;
  }
};

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_text_atomic(out, text);
  }
}

json modes_json(const std::vector<WaveMode>& modes) {
  json arr = json::array();
  for (const auto& m : modes) {
    arr.push_back({{"theta", m.theta},
                   {"theta_over_pi", m.theta / std::numbers::pi},
                   {"z", {{"re", m.z.real()}, {"im", m.z.imag()}}},
                   {"group_velocity", m.group_velocity},
                   {"modulus_defect", m.tolerance}});
  }
  return arr;
}

InitialCondition parse_ic(const std::string& spec, double center, double width) {
  if (spec == "gaussian") return InitialCondition::gaussian(center, width);
  const std::string prefix = "wavepacket:";
  if (spec.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const std::string num = spec.substr(prefix.size());
      const double t = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument("");
      return InitialCondition::wavepacket(t * std::numbers::pi, center, width);
    } catch (const std::exception&) {
      throw UsageError("bad wave-packet frequency in '" + spec + "'");
    }
  }
  throw UsageError("--ic must be 'gaussian' or 'wavepacket:<theta/pi>'");
}

int threads_from_env() {
  if (const char* v = std::getenv("FDSTAB_NUM_THREADS")) {
    const int n = std::atoi(v);
    if (n > 0) kernels::set_max_threads(n);
  }
  return kernels::max_threads();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability laboratory for explicit finite-difference transport schemes with Dirichlet "
               "inflow and extrapolation outflow closures"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "fdstab 1.0.0");

  // scheme check
  auto* scheme_cmd = app.add_subcommand("scheme", "Inspect a scheme");
  scheme_cmd->require_subcommand(1);
  auto* check = scheme_cmd->add_subcommand("check", "Consistency, von Neumann sup, unimodular modes");
  SchemeArgs check_scheme;
  check_scheme.add(check);
  double check_tol = 1e-8;
  int check_samples = 1 << 14;
  bool assert_stable = false;
  std::string check_out;
  check->add_option("--tol", check_tol, "Unit-circle tolerance")->capture_default_str();
  check->add_option("--samples", check_samples, "Dense theta samples")->capture_default_str();
  check->add_flag("--assert-stable", assert_stable, "Exit 1 when sup|C| > 1 + tol");
  check->add_option("--out", check_out, "Write the JSON report here instead of stdout");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Spectral radius of the iteration matrix");
  SchemeArgs spec_scheme;
  spec_scheme.add(spectrum);
  int spec_k = 1;
  int spec_J = 0;
  bool spec_full = false;
  std::string spec_out, spec_method = "auto", spec_matrix;
  double spec_tol = 1e-8;
  spectrum->add_option("--k", spec_k, "Extrapolation order")->capture_default_str();
  spectrum->add_option("--J", spec_J, "Index of the last interior cell")->required();
  spectrum->add_flag("--full", spec_full, "Dense solve and dump every eigenvalue (needs --out)");
  spectrum->add_option("--method", spec_method, "auto | dense | iterative")
      ->check(CLI::IsMember({"auto", "dense", "iterative"}))
      ->capture_default_str();
  spectrum->add_option("--tol", spec_tol, "Eigen-residual tolerance")->capture_default_str();
  spectrum->add_option("--out", spec_out, "JSON report path; with --full also writes <out>.spectrum.csv");
  spectrum->add_option("--export-matrix", spec_matrix,
                       "Write A as column-major float64 (+ .json sidecar; + .csv when n <= 64)");

  // scan
  auto* scan = app.add_subcommand("scan", "Spectral radius versus J");
  SchemeArgs scan_scheme;
  scan_scheme.add(scan);
  int scan_k = 1;
  std::vector<int> scan_J;
  std::string scan_out;
  scan->add_option("--k", scan_k, "Extrapolation order")->capture_default_str();
  scan->add_option("--J", scan_J, "List of J values")->required()->delimiter(',');
  scan->add_option("--out", scan_out, "Write CSV here instead of stdout");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Time-step the interval scheme and record norms");
  SchemeArgs sim_scheme;
  sim_scheme.add(simulate);
  int sim_k = 1, sim_J = 0, sim_steps = 0, sim_stride = 0;
  std::string sim_ic = "gaussian", sim_out;
  bool sim_cell = false;
  double sim_center = 0.5, sim_width = 50.0;
  std::vector<double> sim_window;
  simulate->add_option("--k", sim_k, "Extrapolation order")->capture_default_str();
  simulate->add_option("--J", sim_J, "Index of the last interior cell")->required();
  simulate->add_option("--ic", sim_ic, "gaussian | wavepacket:<theta/pi>")->capture_default_str();
  simulate->add_option("--center", sim_center, "Packet centre")->capture_default_str();
  simulate->add_option("--width", sim_width, "Gaussian exponent coefficient")->capture_default_str();
  simulate->add_option("--steps", sim_steps, "Number of time steps")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--out", sim_out, "Output prefix: <out>.csv, <out>.json[, <out>.snapshots.csv]");
  simulate->add_option("--snapshot-stride", sim_stride, "Store the state every N steps")->check(CLI::NonNegativeNumber);
  simulate->add_flag("--cell-average", sim_cell, "Initialise with cell averages instead of point samples");
  simulate->add_option("--window", sim_window, "Regression window t0,t1 (default: last half, t >= 2)")
      ->expected(2)
      ->delimiter(',');

  // reproduce
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Re-run a published experiment against its reference");
  std::string target, rep_out;
  reproduce_cmd->add_option("--target", target, "example1 | example2 | lemma1 | halfline | modes")
      ->required()
      ->check(CLI::IsMember(reproduce_targets()));
  reproduce_cmd->add_option("--out", rep_out, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const int threads = threads_from_env();

  try {
    if (*check) {
      const Scheme s = check_scheme.load();
      const auto res = consistency_residuals(s);
      const auto vn = von_neumann_sup(s, check_samples);
      json j;
      j["scheme"] = check_scheme.describe(s);
      j["consistency"] = {{"r0", res.r0}, {"r1", res.r1},
                          {"r0_exact", res.exact_r0.str()}, {"r1_exact", res.exact_r1.str()}};
      if (auto info = builtin_info(s.name()); info && info->residual_tol > 0)
        j["consistency"]["recorded_tolerance"] = info->residual_tol;
      j["von_neumann"] = {{"sup", vn.sup}, {"sup_minus_one", vn.sup - 1.0},
                          {"argmax_theta", vn.argmax_thetas}, {"flat", vn.flat}};
      const bool stable = vn.sup <= 1.0 + check_tol;
      j["von_neumann"]["stable"] = stable;
      try {
        j["modes"] = modes_json(unimodular_modes(s, check_tol, check_samples));
      } catch (const std::domain_error& e) {
        j["modes"] = nullptr;
        j["modes_note"] = e.what();
      }
      emit(j, check_out);
      return (assert_stable && !stable) ? kCheckFailed : kOk;
    }

    if (*spectrum) {
      const Scheme s = spec_scheme.load();
      IterationMatrix A;
      try {
        A = assemble_matrix(s, spec_k, spec_J);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (spec_full && spec_out.empty()) throw UsageError("--full needs --out for the spectrum CSV");
      EigenMethod method = EigenMethod::Auto;
      if (spec_method == "dense" || spec_full) method = EigenMethod::Dense;
      if (spec_method == "iterative") method = EigenMethod::Iterative;
      const auto rep = spectral_radius(A, spec_tol, method);
      const Grid grid = Grid::make(spec_J, s.lambda());
      json j;
      j["scheme"] = spec_scheme.describe(s);
      j["k"] = spec_k;
      j["J"] = spec_J;
      j["dx"] = grid.dx;
      j["report"] = io::spectral_report_json(rep);
      j["rho"] = rep.rho;
      j["rate"] = (rep.rho - 1.0) / grid.dx;
      j["threads"] = threads;
      if (!spec_matrix.empty()) {
        io::export_matrix_binary(A, spec_matrix);
        if (A.n() <= 64) io::write_text_atomic(spec_matrix + ".csv", io::matrix_csv(A));
      }
      if (spec_full) {
        io::write_text_atomic(spec_out + ".spectrum.csv", io::spectrum_csv(dense_eigen_oracle(A.entries)));
        j["spectrum_csv"] = spec_out + ".spectrum.csv";
      }
      emit(j, spec_out);
      return kOk;
    }

    if (*scan) {
      const Scheme s = scan_scheme.load();
      std::vector<RhoScanRow> rows;
      try {
        rows = rho_vs_J_scan(s, scan_k, scan_J);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::string csv = "J,rho,J_times_rho_minus_1,rate\n";
      for (const auto& r : rows)
        csv += std::to_string(r.J) + "," + io::format_double(r.rho) + "," + io::format_double(r.excess) + "," +
               io::format_double(r.rate) + "\n";
      if (scan_out.empty()) {
        std::cout << csv;
      } else {
        io::write_text_atomic(scan_out, csv);
      }
      return kOk;
    }

    if (*simulate) {
      const Scheme s = sim_scheme.load();
      InitialCondition ic = parse_ic(sim_ic, sim_center, sim_width);
      if (sim_cell) ic.sampling = Sampling::CellAverage;
      Grid grid;
      try {
        grid = Grid::make(sim_J, s.lambda());
        IntervalStepper(s, sim_k, sim_J);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto rec = run(s, sim_k, grid, ic, sim_steps, sim_stride);

      json j;
      j["scheme"] = sim_scheme.describe(s);
      j["k"] = sim_k;
      j["J"] = sim_J;
      j["L"] = grid.L;
      j["dx"] = grid.dx;
      j["dt"] = grid.dt;
      j["ic"] = {{"spec", sim_ic}, {"center", sim_center}, {"width", sim_width},
                 {"sampling", sim_cell ? "cell_average" : "point"}, {"description", ic.describe()}};
      j["steps_requested"] = sim_steps;
      j["steps_completed"] = rec.steps_completed();
      j["truncated"] = rec.truncated;
      j["snapshot_stride"] = sim_stride;
      j["final_l2norm"] = rec.l2_norms.back();
      auto window = default_window(rec, grid.L);
      if (sim_window.size() == 2) window = {sim_window[0], sim_window[1]};
      try {
        const auto fit = growth_slope(rec, window.first, window.second);
        j["slope"] = fit.slope;
        j["intercept"] = fit.intercept;
        j["window"] = {fit.t_start, fit.t_end};
        j["r_squared"] = fit.r_squared ? json(*fit.r_squared) : json(nullptr);
      } catch (const std::invalid_argument& e) {
        j["slope"] = nullptr;
        j["window"] = {window.first, window.second};
        j["slope_note"] = e.what();
      }
      if (!sim_out.empty()) {
        io::write_text_atomic(sim_out + ".csv", io::record_csv(rec));
        if (sim_stride > 0) io::write_text_atomic(sim_out + ".snapshots.csv", io::snapshots_csv(rec));
        io::write_text_atomic(sim_out + ".json", j.dump(2) + "\n");
      }
      std::cout << j.dump(2) << "\n";
      return kOk;
    }

    if (*reproduce_cmd) {
      const auto rep = reproduce(target);
      emit(rep.to_json(), rep_out);
      for (const auto& c : rep.checks) {
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.name << ": computed " << c.computed;
        if (c.reference) std::cerr << ", reference " << *c.reference;
        std::cerr << ", tolerance " << c.tolerance << "\n";
      }
      return rep.pass() ? kOk : kCheckFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << " (best estimate " << e.best_estimate() << ", residual "
              << e.residual() << ")\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  }
  return kOk;
}
