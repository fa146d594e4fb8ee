#include "dqg/convolution.hpp"

#include "dqg/errors.hpp"
#include "dqg/linalg.hpp"

namespace dqg {

std::map<Index, DenseMatrix> convolution_density(const ReducedFunctional& xi1, const ReducedFunctional& xi2,
                                                 const DQGDescriptor& dqg) {
  require_same(dqg.algebra(), xi1.algebra(), "convolve (left)");
  require_same(dqg.algebra(), xi2.algebra(), "convolve (right)");
  std::map<Index, DenseMatrix> out;
  for (const auto& beta : xi1.support()) {
    const DenseMatrix d1 = xi1.block_density(beta);
    for (const auto& gamma : xi2.support()) {
      const DenseMatrix d2 = xi2.block_density(gamma);
      const DenseMatrix d12 = kron(d1, d2);
      for (const auto& ch : dqg.channels(beta, gamma)) {
        DenseMatrix m = ch.isometry.adjoint() * d12 * ch.isometry;
        auto it = out.find(ch.target);
        if (it == out.end()) out.emplace(ch.target, std::move(m));
        else it->second += m;
      }
    }
  }
  return out;
}

ReducedFunctional from_densities(HaarPtr haar, const std::map<Index, DenseMatrix>& densities, FunctionalSide side,
                                 const NumericPolicy& policy) {
  Element rep(haar->algebra());
  for (const auto& [alpha, d] : densities) {
    if (d.exactly_zero()) continue;
    rep.set_block(alpha, riesz_block(*haar, alpha, d, side, policy));
  }
  return {std::move(haar), std::move(rep), side};
}

ReducedFunctional convolve(const ReducedFunctional& xi1, const ReducedFunctional& xi2, const DQGDescriptor& dqg,
                           const NumericPolicy& policy) {
  return from_densities(dqg.haar(), convolution_density(xi1, xi2, dqg), FunctionalSide::LeftOfPhi, policy);
}

ReducedFunctional dual_unit(const DQGDescriptor& dqg, std::size_t level, const NumericPolicy& policy) {
  const auto& alg = dqg.algebra();
  const auto& haar = dqg.haar();
  const auto window = alg->window(level);

  std::vector<ReducedFunctional> basis;
  std::vector<std::pair<Index, std::pair<std::size_t, std::size_t>>> coords;
  for (const auto& a : window) {
    const auto n = alg->block_dim(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        basis.push_back(ReducedFunctional::matrix_unit(haar, a, i, j));
        coords.push_back({a, {i, j}});
      }
  }
  const std::size_t u = basis.size();
  // Row (side, ξ, x): Σ_k c_k (e_k φ ⋆ ξ)(x) = ξ(x), and likewise ξ ⋆ e_k φ.
  DenseMatrix system(2 * u * u, u);
  Vector rhs(2 * u * u);
  for (std::size_t s = 0; s < u; ++s) {
    for (std::size_t k = 0; k < u; ++k) {
      const auto left = convolution_density(basis[k], basis[s], dqg);
      const auto right = convolution_density(basis[s], basis[k], dqg);
      for (std::size_t t = 0; t < u; ++t) {
        const auto& [a, ij] = coords[t];
        // x = e_ij picks entry (j, i) of the density
        auto pick = [&](const std::map<Index, DenseMatrix>& m) {
          auto it = m.find(a);
          return it == m.end() ? Scalar(0) : it->second(ij.second, ij.first);
        };
        system(s * u + t, k) = pick(left);
        system(u * u + s * u + t, k) = pick(right);
      }
    }
    for (std::size_t t = 0; t < u; ++t) {
      const auto& [a, ij] = coords[t];
      const Scalar v = basis[s].evaluate(Element::matrix_unit(alg, a, ij.first, ij.second));
      rhs[s * u + t] = v;
      rhs[u * u + s * u + t] = v;
    }
  }
  auto sol = solve(system, rhs, policy);
  if (!sol) throw UnitNotFound("unit equations have no solution on window " + alg->window_description(level));
  // float solves leave round-off on blocks the unit does not touch
  double largest = 0.0;
  for (const auto& c : *sol) largest = std::max(largest, c.magnitude());
  Element rep(alg);
  for (std::size_t k = 0; k < u; ++k) {
    if (!(*sol)[k].is_exact() && (*sol)[k].magnitude() <= policy.rank_tolerance * largest) continue;
    const auto& [a, ij] = coords[k];
    rep += Element::matrix_unit(alg, a, ij.first, ij.second, (*sol)[k]);
  }
  ReducedFunctional unit(haar, std::move(rep), FunctionalSide::LeftOfPhi);
  const double tol = policy.span_tolerance;
  for (const auto& xi : basis) {
    if (!convolve(unit, xi, dqg, policy).same_functional(xi, tol) ||
        !convolve(xi, unit, dqg, policy).same_functional(xi, tol))
      throw UnitNotFound("solution of the unit equations fails the unit law on window " +
                         alg->window_description(level));
  }
  return unit;
}

}  // namespace dqg
