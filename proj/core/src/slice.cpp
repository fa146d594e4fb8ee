#include "dqg/slice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "dqg/errors.hpp"
#include "dqg/linalg.hpp"
#include "dqg/random.hpp"

namespace dqg {

Multiplier slice(const TensorMultiplier& y, const ReducedFunctional& xi) {
  require_same(y.right(), xi.algebra(), "slice");
  std::vector<std::pair<Index, DenseMatrix>> densities;
  for (const auto& alpha : xi.support()) densities.emplace_back(alpha, xi.block_density(alpha));
  const AlgebraPtr a_alg = y.right();
  auto fn = [y, densities, a_alg](const Index& beta) {
    const auto nb = y.left()->block_dim(beta);
    DenseMatrix acc(nb, nb);
    for (const auto& [alpha, d] : densities) {
      const auto na = a_alg->block_dim(alpha);
      acc += partial_trace_second(kron(DenseMatrix::identity(nb), d) * y.block(beta, alpha), nb, na);
    }
    return acc;
  };
  return Multiplier::from_function(y.left(), std::move(fn), "slice of " + y.describe());
}

Scalar evaluate_tensor_functional(const ReducedFunctional& zeta, const ReducedFunctional& xi,
                                  const TensorMultiplier& y) {
  require_same(y.left(), zeta.algebra(), "tensor functional (left)");
  require_same(y.right(), xi.algebra(), "tensor functional (right)");
  Scalar total;
  for (const auto& beta : zeta.support()) {
    const DenseMatrix dz = zeta.block_density(beta);
    for (const auto& alpha : xi.support()) total += (kron(dz, xi.block_density(alpha)) * y.block(beta, alpha)).trace();
  }
  return total;
}

std::vector<std::size_t> SliceSpaceReport::dimensions() const {
  std::vector<std::size_t> out;
  for (const auto& h : history) out.push_back(h.dimension);
  return out;
}

namespace {

Vector vectorize(const Multiplier& m, const std::vector<Index>& window) {
  Vector v;
  for (const auto& beta : window) {
    const DenseMatrix b = m.block(beta);
    v.insert(v.end(), b.entries().begin(), b.entries().end());
  }
  return v;
}

std::vector<ReducedFunctional> unit_functionals(const HaarPtr& haar, const std::vector<Index>& window) {
  std::vector<ReducedFunctional> out;
  for (const auto& alpha : window) {
    const auto n = haar->algebra()->block_dim(alpha);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.push_back(ReducedFunctional::matrix_unit(haar, alpha, i, j));
  }
  return out;
}

std::vector<Index> ring(const BlockAlgebra& alg, std::size_t level) {
  const auto inner = alg.window(level);
  const std::set<Index> in(inner.begin(), inner.end());
  std::vector<Index> out;
  for (auto& i : alg.window(level + 1))
    if (!in.count(i)) out.push_back(std::move(i));
  return out;
}

// λ_k on the blocks of A and the y_k solved from them, computed on demand.
class FactorState {
 public:
  FactorState(TensorMultiplier y, HaarPtr haar, std::vector<Index> b_window, std::vector<Vector> basis,
              NumericPolicy policy)
      : y_(std::move(y)), haar_(std::move(haar)), b_window_(std::move(b_window)), basis_(std::move(basis)),
        policy_(policy) {}

  std::size_t size() const { return basis_.size(); }

  // Λ_k with λ_k(x) = trace(Λ_k x) on block α.
  std::vector<DenseMatrix> lambdas(const Index& alpha) const {
    std::lock_guard lock(mutex_);
    return lambdas_locked(alpha);
  }

  DenseMatrix y_block(std::size_t k, const Index& alpha) const {
    std::lock_guard lock(mutex_);
    auto it = y_cache_.find(alpha);
    if (it == y_cache_.end()) {
      const auto lam = lambdas_locked(alpha);
      std::vector<DenseMatrix> ys;
      // λ_k(x) = φ(y_k x)
      for (const auto& l : lam) ys.push_back(riesz_block(*haar_, alpha, l, FunctionalSide::RightOfPhi, policy_));
      it = y_cache_.emplace(alpha, std::move(ys)).first;
    }
    return it->second.at(k);
  }

 private:
  std::vector<DenseMatrix> lambdas_locked(const Index& alpha) const {
    auto it = lambda_cache_.find(alpha);
    if (it != lambda_cache_.end()) return it->second;
    const auto n = haar_->algebra()->block_dim(alpha);
    std::vector<DenseMatrix> lam(basis_.size(), DenseMatrix(n, n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto m = slice(y_, ReducedFunctional::matrix_unit(haar_, alpha, i, j));
        const auto c = coordinates_in_span(basis_, vectorize(m, b_window_), policy_);
        if (!c)
          throw NotInSpan("slice by e_" + std::to_string(i) + std::to_string(j) + " of block " + alpha.to_string() +
                          " escapes the slice basis; expand the window and retry");
        for (std::size_t k = 0; k < basis_.size(); ++k) lam[k](j, i) = (*c)[k];
      }
    return lambda_cache_.emplace(alpha, std::move(lam)).first->second;
  }

  TensorMultiplier y_;
  HaarPtr haar_;
  std::vector<Index> b_window_;
  std::vector<Vector> basis_;
  NumericPolicy policy_;
  mutable std::mutex mutex_;
  mutable std::map<Index, std::vector<DenseMatrix>> lambda_cache_;
  mutable std::map<Index, std::vector<DenseMatrix>> y_cache_;
};

void compare(Check& check, const DenseMatrix& got, const DenseMatrix& want, double tol) {
  check.max_deviation = std::max(check.max_deviation, max_abs_diff(got, want));
  if (!approx_equal(got, want, tol)) check.passed = false;
}

}  // namespace

SliceSpaceReport slice_space_dimension(const TensorMultiplier& y, const DQGDescriptor& dqg,
                                       const SliceOptions& options) {
  require_same(y.right(), dqg.algebra(), "slice_space_dimension");
  if (options.budget == 0) throw std::invalid_argument("window budget must be positive");
  const auto& b_alg = *y.left();
  const auto& a_alg = *y.right();
  SliceSpaceReport report;
  for (std::size_t level = 0; level < options.budget; ++level) {
    const auto b_window = b_alg.window(level);
    const auto functionals = unit_functionals(dqg.haar(), a_alg.window(level));
    std::vector<Multiplier> slices;
    std::vector<Vector> vectors;
    for (const auto& xi : functionals) {
      slices.push_back(slice(y, xi));
      vectors.push_back(vectorize(slices.back(), b_window));
    }
    const DenseMatrix mat = from_columns(vectors);
    const auto cols = independent_columns(mat, options.policy);
    report.history.push_back(
        {level, b_alg.window_description(level), a_alg.window_description(level), functionals.size(), cols.size()});
    report.final_dimension = cols.size();
    report.final_level = level;
    report.b_window = b_window;
    report.basis.clear();
    report.basis_functionals.clear();
    for (auto c : cols) {
      report.basis.push_back(slices[c]);
      report.basis_functionals.push_back(functionals[c]);
    }
    const auto& h = report.history;
    if (h.size() > options.patience) {
      bool same = true;
      for (std::size_t k = h.size() - options.patience; k < h.size(); ++k)
        same = same && h[k].dimension == h[k - 1].dimension;
      if (same) {
        report.stabilized = true;
        return report;
      }
    }
  }
  report.budget_exceeded = true;
  return report;
}

Factorization factor(const TensorMultiplier& y, const DQGDescriptor& dqg, const SliceSpaceReport& report,
                     const FactorOptions& options) {
  require_same(y.right(), dqg.algebra(), "factor");
  if (!report.stabilized) throw std::invalid_argument("factor needs a stabilized slice-space report");
  const auto& b_alg = *y.left();
  const auto& a_alg = *y.right();
  const auto& haar = dqg.haar();

  Factorization f;
  f.level = report.final_level;
  f.b_window = report.b_window;
  f.a_window = a_alg.window(f.level);
  f.x = report.basis;

  std::vector<Vector> basis_vectors;
  bool exact = true;
  for (const auto& x : f.x) {
    basis_vectors.push_back(vectorize(x, f.b_window));
    for (const auto& s : basis_vectors.back()) exact = exact && s.is_exact();
  }
  const ScalarMode mode = exact ? ScalarMode::Exact : ScalarMode::Float;
  auto state = std::make_shared<FactorState>(y, haar, f.b_window, basis_vectors, options.policy);
  for (std::size_t k = 0; k < state->size(); ++k) {
    f.y.push_back(Multiplier::from_function(
        y.right(), [state, k](const Index& alpha) { return state->y_block(k, alpha); },
        "factor " + std::to_string(k + 1) + " of " + y.describe()));
  }

  for (const auto& alpha : f.a_window) {
    const auto lam = state->lambdas(alpha);
    const auto n = a_alg.block_dim(alpha);
    for (std::size_t k = 0; k < lam.size(); ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f.lambda.push_back({k, alpha, i, j, lam[k](j, i)});
  }

  // Reconstruction on the window and on the ring out to the next window.
  auto b_check = f.b_window;
  auto a_check = f.a_window;
  if (options.probe_ring) {
    for (auto& b : ring(b_alg, f.level)) b_check.push_back(std::move(b));
    for (auto& a : ring(a_alg, f.level)) a_check.push_back(std::move(a));
  }
  const bool window_relative = !(b_alg.is_finite() && a_alg.is_finite());
  f.reconstruction = {"reconstruction Σ x_k⊗y_k = Y", true, 0.0, window_relative, ""};
  std::map<Index, std::vector<DenseMatrix>> xb, yb;
  for (const auto& beta : b_check)
    for (const auto& x : f.x) xb[beta].push_back(x.block(beta));
  for (const auto& alpha : a_check)
    for (const auto& yk : f.y) yb[alpha].push_back(yk.block(alpha));
  for (const auto& beta : b_check)
    for (const auto& alpha : a_check) {
      const auto n = b_alg.block_dim(beta) * a_alg.block_dim(alpha);
      DenseMatrix sum(n, n);
      for (std::size_t k = 0; k < f.x.size(); ++k) sum += kron(xb[beta][k], yb[alpha][k]);
      compare(f.reconstruction, sum, y.block(beta, alpha), options.tolerance);
    }
  f.reconstruction.detail = std::to_string(b_check.size()) + " × " + std::to_string(a_check.size()) +
                            " block pairs (window " + a_alg.window_description(f.level) +
                            (options.probe_ring ? " plus the ring to the next window)" : ")");
  if (!f.reconstruction.passed)
    throw ReconstructionMismatch("max deviation " + std::to_string(f.reconstruction.max_deviation) + " on " +
                                 f.reconstruction.detail);

  // z_k(c) from (dφ)(z_k(c)) = λ_k(dσ(c)); then z_k(a1)a2 = a1(y_k a2).
  f.double_centralizer = {"double centralizer z_k(a1)a2 = a1 y_k(a2)", true, 0.0, window_relative, ""};
  std::mt19937_64 rng(options.seed);
  for (std::size_t t = 0; t < options.centralizer_pairs; ++t) {
    const Element a1 = random_element(y.right(), f.a_window, rng, mode);
    const Element a2 = random_element(y.right(), f.a_window, rng, mode);
    const Element s1 = haar->modular_apply(a1);
    for (std::size_t k = 0; k < f.y.size(); ++k) {
      Element z(y.right());
      for (const auto& [alpha, c] : s1.blocks()) {
        const DenseMatrix lam = state->lambdas(alpha)[k];
        z.set_block(alpha, riesz_block(*haar, alpha, c * lam, FunctionalSide::RightOfPhi, options.policy));
      }
      const Element lhs = z * a2;
      const Element rhs = a1 * multiplier_apply(f.y[k], a2, Side::Left);
      f.double_centralizer.max_deviation = std::max(f.double_centralizer.max_deviation, max_abs_diff(lhs, rhs));
      if (!approx_equal(lhs, rhs, options.tolerance)) f.double_centralizer.passed = false;
    }
  }
  f.double_centralizer.detail = std::to_string(options.centralizer_pairs) + " random pairs on " +
                                a_alg.window_description(f.level) + ", seed " + std::to_string(options.seed);
  if (!f.double_centralizer.passed)
    throw ReconstructionMismatch("double-centralizer law fails, max deviation " +
                                 std::to_string(f.double_centralizer.max_deviation));
  return f;
}

AlmostPeriodicReport is_almost_periodic(const Multiplier& x, const DQGDescriptor& dqg,
                                        const SliceOptions& slice_options, const FactorOptions& factor_options) {
  require_same(x.algebra(), dqg.algebra(), "is_almost_periodic");
  AlmostPeriodicReport out;
  const auto y = coproduct_of_multiplier(dqg, x);
  out.slices = slice_space_dimension(y, dqg, slice_options);
  if (!out.slices.stabilized) {
    out.verdict = "no finite certificate";
    return out;
  }
  out.factorization = factor(y, dqg, out.slices, factor_options);
  out.affirmative = true;
  out.verdict = "almost periodic";
  return out;
}

}  // namespace dqg
