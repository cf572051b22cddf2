#include "fdstab/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fdstab/builtins.hpp"
#include "fdstab/operator.hpp"
#include "fdstab/simulate.hpp"
#include "fdstab/spectral.hpp"

namespace fdstab {

using nlohmann::json;
using std::numbers::pi;

bool ReproduceReport::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

json ReproduceReport::to_json() const {
  json arr = json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"reference", c.reference ? json(*c.reference) : json(nullptr)},
                   {"computed", c.computed},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass},
                   {"detail", c.detail}});
  }
  return json{{"target", target}, {"pass", pass()}, {"checks", arr}};
}

std::vector<std::string> reproduce_targets() {
  return {"example1", "example2", "lemma1", "halfline", "modes"};
}

namespace {

InitialCondition parse_ic(const std::string& spec) {
  if (spec == "gaussian") return InitialCondition::gaussian();
  const std::string prefix = "wavepacket:";
  if (spec.rfind(prefix, 0) == 0) return InitialCondition::wavepacket(std::stod(spec.substr(prefix.size())) * pi);
  throw std::invalid_argument("manifest: unknown initial condition '" + spec + "'");
}

ReproduceReport example(const std::string& target) {
  const json& m = reference_manifest().at(target);
  const Scheme s = builtin(m.at("scheme").get<std::string>());
  const int k = m.at("k").get<int>();
  const int J = m.at("J").get<int>();
  ReproduceReport rep{target, {}};

  const auto A = assemble_matrix(s, k, J);
  const auto spec = spectral_radius(A, 1e-8, EigenMethod::Dense);
  const Grid grid = Grid::make(J, s.lambda());
  const double rate = (spec.rho - 1.0) / grid.dx;
  const double ref_rate = m.at("rate").get<double>();
  const double rate_tol = m.at("rate_abs_tol").get<double>();
  rep.checks.push_back({"(rho(A)-1)/dx", ref_rate, rate, rate_tol,
                        std::abs(rate - ref_rate) <= rate_tol,
                        "dense eigensolve, rho = " + std::to_string(spec.rho)});

  const auto rec = run(s, k, grid, parse_ic(m.at("ic").get<std::string>()), m.at("steps").get<int>());
  const auto [t0, t1] = default_window(rec, grid.L);
  const auto fit = growth_slope(rec, t0, t1);
  const double rel_rate = std::abs(fit.slope - rate) / std::abs(rate);
  const double tol_rate = m.at("slope_vs_rate_rel_tol").get<double>();
  rep.checks.push_back({"slope vs eigenvalue rate (relative)", std::nullopt, rel_rate, tol_rate,
                        rel_rate <= tol_rate,
                        "slope = " + std::to_string(fit.slope) + " over t in [" + std::to_string(fit.t_start) +
                            ", " + std::to_string(fit.t_end) + "]"});
  const double ref_slope = m.at("slope").get<double>();
  const double rel_ref = std::abs(fit.slope - ref_slope) / ref_slope;
  const double tol_ref = m.at("slope_vs_reference_rel_tol").get<double>();
  rep.checks.push_back({"slope vs published slope (relative)", ref_slope, fit.slope, tol_ref,
                        rel_ref <= tol_ref, "relative error " + std::to_string(rel_ref)});
  return rep;
}

ReproduceReport lemma1() {
  const json& m = reference_manifest().at("lemma1");
  const int pts = m.at("grid_points").get<int>();
  const int per = m.at("J_per_point").get<int>();
  const double slack = m.at("norm_slack").get<double>();
  std::mt19937 rng(m.at("seed").get<unsigned>());
  std::uniform_int_distribution<int> pick(m.at("J_min").get<int>(), m.at("J_max").get<int>());
  double worst = 0.0;
  std::string where;
  for (int i = 0; i < pts; ++i) {
    const double la = static_cast<double>(i) / (pts - 1);
    for (int j = 0; j < pts; ++j) {
      const double nu = la * la + (1.0 - la * la) * static_cast<double>(j) / (pts - 1);
      const Scheme s = three_point(la, nu);
      for (int t = 0; t < per; ++t) {
        const int J = pick(rng);
        const double nrm = operator_norm(assemble_matrix(s, 1, J));
        if (nrm > worst) {
          worst = nrm;
          where = "lam_a=" + std::to_string(la) + " nu=" + std::to_string(nu) + " J=" + std::to_string(J);
        }
      }
    }
  }
  ReproduceReport rep{"lemma1", {}};
  rep.checks.push_back({"max ||A|| over the admissible box", 1.0, worst, slack, worst <= 1.0 + slack,
                        "attained at " + where});
  return rep;
}

std::vector<Scheme> stable_builtins() {
  BuiltinParams half;
  half.lam_a = 0.5;
  return {builtin("lax-friedrichs", half), builtin("upwind", half), builtin("lax-wendroff", half),
          three_point(0.5, 0.5), coeff1(), coeff2()};
}

ReproduceReport halfline() {
  const json& m = reference_manifest().at("halfline");
  ReproduceReport rep{"halfline", {}};
  std::mt19937 rng(m.at("seed").get<unsigned>());
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::uniform_int_distribution<int> len(1, 40);
  std::uniform_int_distribution<int> start(0, 30);

  const int ics = m.at("inflow_ics").get<int>();
  const int steps = m.at("inflow_steps").get<int>();
  const double slack = m.at("inflow_slack").get<double>();
  for (const auto& s : stable_builtins()) {
    // sup |C| of the rounded coefficients may exceed 1 by rounding noise
    const double excess = std::max(0.0, von_neumann_sup(s).sup - 1.0);
    double worst = 0.0;
    for (int c = 0; c < ics; ++c) {
      LatticeSequence u0;
      u0.offset = start(rng);
      u0.values.resize(static_cast<std::size_t>(len(rng)));
      for (auto& v : u0.values) v = val(rng);
      const auto runres = run_halfline_inflow(s, u0, steps);
      for (std::size_t n = 1; n < runres.norms.size(); ++n)
        worst = std::max(worst, runres.norms[n] / runres.norms[n - 1] - 1.0);
    }
    rep.checks.push_back({"inflow contraction " + s.name(), std::nullopt, worst, slack + excess,
                          worst <= slack + excess, "max one-step relative growth"});
  }

  const auto horizons = m.at("outflow_horizons").get<std::vector<int>>();
  const double max_change = m.at("outflow_max_change").get<double>();
  const auto J = m.at("outflow_J").get<std::int64_t>();
  for (const auto& cs : m.at("outflow_cases")) {
    const Scheme s = builtin(cs.at(0).get<std::string>());
    const int k = cs.at(1).get<int>();
    double worst = 0.0;
    for (int c = 0; c < 10; ++c) {
      LatticeSequence u0;
      u0.values.resize(static_cast<std::size_t>(len(rng)));
      u0.offset = J - static_cast<std::int64_t>(u0.values.size()) + 1;
      for (auto& v : u0.values) v = val(rng);
      const auto runres = run_halfline_outflow(s, k, J, u0, horizons.back());
      auto max_upto = [&](int N) {
        return *std::max_element(runres.norms.begin(), runres.norms.begin() + N + 1) / runres.norms[0];
      };
      const double a = max_upto(horizons.front());
      const double b = max_upto(horizons.back());
      worst = std::max(worst, (b - a) / a);
    }
    rep.checks.push_back({"outflow power bound " + s.name() + " k=" + std::to_string(k), std::nullopt, worst,
                          max_change, worst < max_change,
                          "relative change of max ||u^n||/||u^0|| from N=" + std::to_string(horizons.front()) +
                              " to N=" + std::to_string(horizons.back())});
  }
  return rep;
}

ReproduceReport modes() {
  const json& m = reference_manifest().at("wave_modes");
  const double ttol = m.at("theta_tol").get<double>();
  const double vtol = m.at("group_velocity_tol").get<double>();
  ReproduceReport rep{"modes", {}};
  for (const char* name : {"coeff1", "coeff2"}) {
    const Scheme s = builtin(name);
    const auto found = unimodular_modes(s);
    const auto thetas = m.at(name).at("theta_over_pi").get<std::vector<double>>();
    const auto vgs = m.at(name).at("group_velocity").get<std::vector<double>>();
    rep.checks.push_back({std::string(name) + " mode count", static_cast<double>(thetas.size()),
                          static_cast<double>(found.size()), 0.0, found.size() == thetas.size(), ""});
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      const double target = thetas[i] * pi;
      const WaveMode* best = nullptr;
      for (const auto& w : found)
        if (!best || std::abs(w.theta - target) < std::abs(best->theta - target)) best = &w;
      const double dtheta = best ? std::abs(best->theta - target) : INFINITY;
      const double dv = best ? std::abs(best->group_velocity - vgs[i]) : INFINITY;
      rep.checks.push_back({std::string(name) + " theta " + std::to_string(thetas[i]) + "pi", target,
                            best ? best->theta : NAN, ttol, dtheta <= ttol, ""});
      rep.checks.push_back({std::string(name) + " v_g at " + std::to_string(thetas[i]) + "pi", vgs[i],
                            best ? best->group_velocity : NAN, vtol, dv <= vtol, ""});
    }
  }
  return rep;
}

}  // namespace

ReproduceReport reproduce(std::string_view target) {
  if (target == "example1" || target == "example2") return example(std::string(target));
  if (target == "lemma1") return lemma1();
  if (target == "halfline") return halfline();
  if (target == "modes") return modes();
  throw std::invalid_argument("unknown reproduce target '" + std::string(target) + "'");
}

}  // namespace fdstab
