#include "run.hpp"

#include <chrono>
#include <cmath>
#include <algorithm>
#include <random>

#include "dqg/errors.hpp"
#include "dqg/random.hpp"

namespace dqgm {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace dqg;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"verify-axioms", "verify-invariance", "convolve",
                                                 "dual-unit",     "slice",             "slice-dim",
                                                 "factor",        "almost-periodic",   "check-nondegenerate"};
  return names;
}

namespace {

ordered_json index_json(const Index& i) {
  if (i.size() == 1) return i.value();
  return i.coords();
}

ordered_json matrix_json(const DenseMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json table_json(const Multiplier& m, const std::vector<Index>& window) {
  ordered_json out = ordered_json::array();
  for (const auto& i : window) out.push_back({{"index", index_json(i)}, {"matrix", matrix_json(m.block(i))}});
  return out;
}

ordered_json element_json(const Element& e) {
  ordered_json out = ordered_json::array();
  for (const auto& [i, m] : e.blocks()) out.push_back({{"index", index_json(i)}, {"matrix", matrix_json(m)}});
  return out;
}

ordered_json functional_json(const ReducedFunctional& f) {
  return {{"side", f.side() == FunctionalSide::LeftOfPhi ? "left" : "right"},
          {"representative", element_json(f.representative())}};
}

ordered_json check_json(const Check& c) {
  return {{"name", c.name},
          {"passed", c.passed},
          {"max_deviation", c.max_deviation},
          {"window_relative", c.window_relative},
          {"detail", c.detail}};
}

ordered_json history_json(const SliceSpaceReport& r) {
  ordered_json out = ordered_json::array();
  for (const auto& h : r.history)
    out.push_back({{"level", h.level},
                   {"b_window", h.b_window},
                   {"a_window", h.a_window},
                   {"functionals", h.functionals},
                   {"dimension", h.dimension}});
  return out;
}

// Values of a multiplier with 1×1 blocks over an integer window.
std::optional<std::vector<std::pair<std::int64_t, Scalar>>> scalar_values(const Multiplier& m,
                                                                          const std::vector<Index>& window) {
  if (m.algebra()->model() != IndexModel::Integers) return std::nullopt;
  std::vector<std::pair<std::int64_t, Scalar>> out;
  for (const auto& i : window) out.emplace_back(i.value(), m.block(i)(0, 0));
  return out;
}

std::optional<ordered_json> infer_polynomial(const std::vector<std::pair<std::int64_t, Scalar>>& v) {
  for (const auto& [n, s] : v)
    if (!s.is_exact()) return std::nullopt;
  for (std::size_t deg = 0; deg <= 3 && deg + 1 < v.size(); ++deg) {
    DenseMatrix vander(v.size(), deg + 1);
    Vector rhs;
    for (std::size_t r = 0; r < v.size(); ++r) {
      Scalar p(1);
      for (std::size_t c = 0; c <= deg; ++c) {
        vander(r, c) = p;
        p *= Scalar(v[r].first);
      }
      rhs.push_back(v[r].second);
    }
    if (auto sol = solve(vander, rhs)) {
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : *sol) coeffs.push_back(c.to_string());
      return ordered_json{{"polynomial", coeffs}};
    }
  }
  return std::nullopt;
}

std::optional<ordered_json> infer_character(const std::vector<std::pair<std::int64_t, Scalar>>& v, double tol) {
  const auto zero = std::find_if(v.begin(), v.end(), [](const auto& p) { return p.first == 0; });
  const auto one = std::find_if(v.begin(), v.end(), [](const auto& p) { return p.first == 1; });
  if (zero == v.end() || one == v.end() || zero->second.magnitude() == 0.0) return std::nullopt;
  const Scalar c = zero->second;
  const Scalar r = one->second / c;
  const bool exact = c.is_exact() && r.is_exact();
  for (const auto& [n, s] : v) {
    Scalar p(1);
    Scalar base = n >= 0 ? r : Scalar(1) / r;
    for (std::int64_t k = 0; k < std::abs(n); ++k) p *= base;
    const Scalar want = c * p;
    if (exact ? !(want - s).exactly_zero() : (want - s).magnitude() > tol * std::max(1.0, s.magnitude()))
      return std::nullopt;
  }
  ordered_json rule;
  if (exact) {
    const Scalar units[4] = {Scalar(1), Scalar::imaginary_unit(), Scalar(-1), Scalar(0) - Scalar::imaginary_unit()};
    for (long p = 0; p < 4; ++p)
      if ((units[p] - r).exactly_zero()) rule = {{"character", {{"order", 4}, {"power", p}}}};
    if (rule.is_null()) return std::nullopt;
  } else {
    if (std::abs(r.magnitude() - 1.0) > tol) return std::nullopt;
    rule = {{"character", {{"angle", std::arg(r.to_complex())}}}};
  }
  if ((c - Scalar(1)).magnitude() == 0.0) return rule;
  return ordered_json{{"sum", ordered_json::array({{{"coeff", c.to_string()}, {"rule", rule}}})}};
}

ordered_json inferred_rule(const Multiplier& m, const std::vector<Index>& window, double tol) {
  auto v = scalar_values(m, window);
  if (!v) return nullptr;
  if (auto p = infer_polynomial(*v)) return *p;
  if (auto c = infer_character(*v, tol)) return *c;
  return nullptr;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const ValidationError*>(&e)) return "ValidationError";
  if (dynamic_cast<const AlgebraMismatch*>(&e)) return "AlgebraMismatch";
  if (dynamic_cast<const NotInSpan*>(&e)) return "NotInSpan";
  if (dynamic_cast<const WindowTooSmall*>(&e)) return "WindowTooSmall";
  if (dynamic_cast<const UnitNotFound*>(&e)) return "UnitNotFound";
  if (dynamic_cast<const ReconstructionMismatch*>(&e)) return "ReconstructionMismatch";
  if (dynamic_cast<const SingularMatrix*>(&e)) return "SingularMatrix";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "InvalidArgument";
  return "Error";
}

ordered_json skeleton(const std::string& command) {
  ordered_json r;
  r["command"] = command;
  r["model"] = nullptr;
  r["b_model"] = nullptr;
  r["scalar_mode"] = nullptr;
  r["seed"] = 0;
  r["verdict"] = "error";
  r["dimension"] = nullptr;
  r["history"] = ordered_json::array();
  r["factors"] = ordered_json::array();
  r["checks"] = ordered_json::array();
  r["result"] = nullptr;
  r["errors"] = ordered_json::array();
  r["notes"] = ordered_json::array();
  r["timing"] = nullptr;
  return r;
}

class Runner {
 public:
  Runner(const Scenario& s, const RunOptions& o, ordered_json& report) : s_(s), o_(o), r_(report) {
    if (o.tolerance) policy_.rank_tolerance = *o.tolerance;
    else if (s.params.contains("tolerance")) policy_.rank_tolerance = s.params.at("tolerance").get<double>();
  }

  int dispatch(const std::string& cmd) {
    if (cmd == "verify-axioms") return verify_axioms();
    if (cmd == "verify-invariance") return verify_invariance();
    if (cmd == "convolve") return convolve_cmd();
    if (cmd == "dual-unit") return dual_unit_cmd();
    if (cmd == "slice") return slice_cmd();
    if (cmd == "slice-dim") return slice_dim_cmd(false);
    if (cmd == "factor") return slice_dim_cmd(true);
    if (cmd == "almost-periodic") return almost_periodic_cmd();
    if (cmd == "check-nondegenerate") return nondegenerate_cmd();
    throw ValidationError("unknown command \"" + cmd + "\"");
  }

 private:
  std::size_t param_size(const std::string& key, std::size_t fallback) const {
    if (!s_.params.contains(key)) return fallback;
    const auto& v = s_.params.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
      throw ValidationError("params." + key + " must be a non-negative integer");
    return v.get<std::size_t>();
  }

  std::size_t level() const { return param_size("level", 0); }

  VerifyOptions verify_options() const {
    VerifyOptions v;
    v.level = level();
    v.max_probes = param_size("max_probes", v.max_probes);
    v.policy = policy_;
    if (o_.tolerance) v.tolerance = *o_.tolerance;
    else if (s_.params.contains("tolerance")) v.tolerance = s_.params.at("tolerance").get<double>();
    return v;
  }

  SliceOptions slice_options() const {
    SliceOptions so;
    so.budget = o_.window_budget.value_or(param_size("window_budget", so.budget));
    so.patience = o_.patience.value_or(param_size("patience", so.patience));
    so.policy = policy_;
    return so;
  }

  FactorOptions factor_options() const {
    FactorOptions fo;
    fo.policy = policy_;
    fo.seed = o_.seed;
    if (o_.tolerance) fo.tolerance = std::max(fo.tolerance, *o_.tolerance);
    fo.centralizer_pairs = param_size("centralizer_pairs", fo.centralizer_pairs);
    return fo;
  }

  std::vector<Element> elements_param(const std::string& key, std::size_t default_count) const {
    std::vector<Element> out;
    if (s_.params.contains(key)) {
      const auto& v = s_.params.at(key);
      if (v.is_string()) {
        out.push_back(s_.element(v.get<std::string>()));
      } else if (v.is_array()) {
        for (const auto& n : v) out.push_back(s_.element(n.get<std::string>()));
      } else {
        throw ValidationError("params." + key + " must name elements");
      }
      return out;
    }
    std::mt19937_64 rng(o_.seed);
    const auto window = s_.a.algebra->window(level());
    const auto count = param_size("samples", default_count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(random_element(s_.a.algebra, window, rng, s_.mode));
    r_["notes"].push_back(std::to_string(count) + " random elements on " + s_.a.algebra->window_description(level()) +
                          " (seed " + std::to_string(o_.seed) + ")");
    return out;
  }

  TensorMultiplier tensor_param() const {
    if (s_.params.contains("tensor")) return s_.tensor(s_.param_name("tensor"));
    if (s_.params.contains("multiplier")) return coproduct_of_multiplier(s_.require_dqg(), s_.multiplier(s_.param_name("multiplier")));
    throw ValidationError("params.tensor (or params.multiplier) is required");
  }

  int finish_checks(const std::vector<VerificationReport>& reports) {
    bool ok = true;
    bool relative = false;
    for (const auto& rep : reports)
      for (const auto& c : rep.checks) {
        r_["checks"].push_back(check_json(c));
        ok = ok && c.passed;
        relative = relative || c.window_relative;
      }
    r_["verdict"] = ok ? "pass" : "fail";
    if (relative) r_["notes"].push_back("window-relative checks hold only on the examined windows");
    if (!ok) {
      r_["errors"].push_back({{"type", "VerificationFailed"}, {"message", "at least one check failed"}});
      return 1;
    }
    return 0;
  }

  int verify_axioms() {
    const auto& d = s_.require_dqg();
    const auto opt = verify_options();
    const auto probes = elements_param("probes", 3);
    return finish_checks({verify_fusion(d, opt), verify_mhopf_axioms(d, opt), verify_coassociativity(d, probes, opt)});
  }

  int verify_invariance() {
    const auto& d = s_.require_dqg();
    const auto opt = verify_options();
    std::vector<VerificationReport> reps;
    for (const auto& e : elements_param("elements", 10)) reps.push_back(verify_left_invariance(d, e, opt));
    return finish_checks(reps);
  }

  int convolve_cmd() {
    const auto& d = s_.require_dqg();
    if (s_.params.value("table", false)) {
      const auto window = d.algebra()->window(level());
      ordered_json table = ordered_json::array();
      for (const auto& g : window)
        for (const auto& h : window) {
          const auto prod = convolve(ReducedFunctional::point_mass(d.haar(), g), ReducedFunctional::point_mass(d.haar(), h),
                                     d, policy_);
          table.push_back({{"left", index_json(g)}, {"right", index_json(h)}, {"product", functional_json(prod)}});
        }
      r_["result"] = {{"table", table}};
      r_["notes"].push_back("entries are (δ_g φ)⋆(δ_h φ) over " + d.algebra()->window_description(level()));
    } else {
      const auto left = s_.functional(s_.param_name("left"));
      const auto right = s_.functional(s_.param_name("right"));
      r_["result"] = {{"convolution", functional_json(convolve(left, right, d, policy_))}};
    }
    r_["verdict"] = "computed";
    return 0;
  }

  int dual_unit_cmd() {
    const auto& d = s_.require_dqg();
    r_["result"] = {{"unit", functional_json(dual_unit(d, level(), policy_))}};
    r_["verdict"] = "found";
    return 0;
  }

  int slice_cmd() {
    const auto y = tensor_param();
    const auto xi = s_.functional(s_.param_name("functional"));
    const auto m = slice(y, xi);
    const auto window = y.left()->window(level());
    r_["result"] = {{"slice", table_json(m, window)},
                    {"b_window", y.left()->window_description(level())},
                    {"window_relative", !y.left()->is_finite()}};
    r_["verdict"] = "computed";
    return 0;
  }

  void emit_slices(const SliceSpaceReport& rep) {
    r_["history"] = history_json(rep);
    r_["dimension"] = rep.final_dimension;
    if (rep.stabilized) {
      r_["notes"].push_back("a stabilized dimension is a heuristic certificate relative to the examined windows");
    } else {
      r_["errors"].push_back({{"type", "BudgetExceeded"},
                              {"message", "no stabilization within " + std::to_string(rep.history.size()) +
                                              " windows; not finite-dimensional at this budget"}});
    }
  }

  void emit_factorization(const Factorization& f, const AlgebraPtr& b, const AlgebraPtr& a) {
    const double tol = std::max(policy_.rank_tolerance, 1e-9) * 1e3;
    const bool relative = !(b->is_finite() && a->is_finite());
    for (std::size_t k = 0; k < f.x.size(); ++k) {
      ordered_json entry;
      entry["k"] = k + 1;
      entry["x"] = {{"rule", inferred_rule(f.x[k], f.b_window, tol)}, {"table", table_json(f.x[k], f.b_window)}};
      entry["y"] = {{"rule", inferred_rule(f.y[k], f.a_window, tol)}, {"table", table_json(f.y[k], f.a_window)}};
      entry["window_relative"] = relative;
      r_["factors"].push_back(std::move(entry));
    }
    r_["checks"].push_back(check_json(f.reconstruction));
    r_["checks"].push_back(check_json(f.double_centralizer));
  }

  int slice_dim_cmd(bool with_factor) {
    const auto y = tensor_param();
    const auto& d = s_.require_dqg();
    const auto rep = slice_space_dimension(y, d, slice_options());
    emit_slices(rep);
    if (!rep.stabilized) {
      r_["verdict"] = "budget exceeded";
      return 2;
    }
    r_["verdict"] = "stabilized";
    if (with_factor) {
      emit_factorization(factor(y, d, rep, factor_options()), y.left(), y.right());
      r_["verdict"] = "factored";
    }
    return 0;
  }

  int almost_periodic_cmd() {
    const auto& d = s_.require_dqg();
    const auto x = s_.multiplier(s_.param_name("multiplier"));
    const auto rep = is_almost_periodic(x, d, slice_options(), factor_options());
    emit_slices(rep.slices);
    r_["verdict"] = rep.verdict;
    if (rep.factorization) emit_factorization(*rep.factorization, d.algebra(), d.algebra());
    return rep.affirmative ? 0 : 2;
  }

  int nondegenerate_cmd() {
    const StructureConstants sc =
        s_.a.structure ? *s_.a.structure : StructureConstants::from_window(*s_.a.algebra, level());
    const bool ok = check_nondegenerate(sc, policy_);
    r_["verdict"] = ok ? "nondegenerate" : "degenerate";
    r_["dimension"] = sc.dim();
    r_["result"] = {{"window", s_.a.structure ? s_.a.description : s_.a.algebra->window_description(level())},
                    {"nondegenerate", ok}};
    return 0;
  }

  const Scenario& s_;
  const RunOptions& o_;
  ordered_json& r_;
  NumericPolicy policy_;
};

}  // namespace

RunResult run(const std::string& command, const Scenario& scenario, const RunOptions& options) {
  RunResult out;
  out.report = skeleton(command);
  auto& r = out.report;
  r["model"] = scenario.a.description;
  r["b_model"] = scenario.b.description;
  r["scalar_mode"] = std::string(to_string(scenario.mode));
  r["seed"] = options.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    Runner runner(scenario, options, r);
    out.exit_code = runner.dispatch(command);
  } catch (const std::exception& e) {
    r["verdict"] = "error";
    r["errors"].push_back({{"type", error_type(e)}, {"message", e.what()}});
    out.exit_code = 1;
  }
  if (options.timing)
    r["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  return out;
}

RunResult run_text(const std::string& command, std::string_view scenario_text, const RunOptions& options) {
  try {
    const Scenario s = parse_scenario(scenario_text);
    return run(command, s, options);
  } catch (const std::exception& e) {
    RunResult out;
    out.report = skeleton(command);
    out.report["seed"] = options.seed;
    out.report["errors"].push_back({{"type", error_type(e)}, {"message", e.what()}});
    out.exit_code = 1;
    return out;
  }
}

}  // namespace dqgm
