#pragma once

#include <cstddef>
#include <map>

#include "dqg/dqg.hpp"

namespace dqg {

/// Block densities M_α of ξ1⋆ξ2, i.e. (ξ1⊗ξ2)(δ(x)) = Σ_α trace(M_α x_α), with
/// M_α = Σ V†(D1_β ⊗ D2_γ)V over the channels (α, V) of supp ξ1 × supp ξ2.
std::map<Index, DenseMatrix> convolution_density(const ReducedFunctional& xi1, const ReducedFunctional& xi2,
                                                 const DQGDescriptor& dqg);

/// The element of Â with the given block densities (Riesz solve per block).
ReducedFunctional from_densities(HaarPtr haar, const std::map<Index, DenseMatrix>& densities,
                                 FunctionalSide side = FunctionalSide::LeftOfPhi, const NumericPolicy& policy = {});

/// (ξ1⋆ξ2)(a) = (ξ1⊗ξ2)(δ(a)), returned with a LeftOfPhi representative.
/// Throws AlgebraMismatch.
ReducedFunctional convolve(const ReducedFunctional& xi1, const ReducedFunctional& xi2, const DQGDescriptor& dqg,
                           const NumericPolicy& policy = {});

/// Unit of Â, solved from ε⋆ξ = ξ = ξ⋆ε over the matrix units of the window at
/// `level`, then verified. Throws UnitNotFound.
ReducedFunctional dual_unit(const DQGDescriptor& dqg, std::size_t level = 0, const NumericPolicy& policy = {});

}  // namespace dqg
