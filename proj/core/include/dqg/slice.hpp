#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dqg/dqg.hpp"
#include "dqg/verify.hpp"

namespace dqg {

/// Right slice (ι⊗ξ)(Y): the multiplier m of B with (ζ⊗ξ)(Y) = ζ(m) for every
/// reduced ζ on B. Block β is Σ_α tr_2((1⊗D_α)·Y_{βα}) over supp ξ. Lazy.
/// Throws AlgebraMismatch.
Multiplier slice(const TensorMultiplier& y, const ReducedFunctional& xi);

/// (ζ⊗ξ)(Y) = Σ trace((D^ζ_β ⊗ D^ξ_α)·Y_{βα}) over supp ζ × supp ξ.
Scalar evaluate_tensor_functional(const ReducedFunctional& zeta, const ReducedFunctional& xi,
                                  const TensorMultiplier& y);

struct SliceOptions {
  /// Number of windows evaluated before giving up.
  std::size_t budget = 6;
  /// Consecutive expansions with unchanged dimension needed to stop.
  std::size_t patience = 2;
  NumericPolicy policy{};
};

struct WindowRecord {
  std::size_t level = 0;
  std::string b_window;
  std::string a_window;
  std::size_t functionals = 0;
  std::size_t dimension = 0;
};

struct SliceSpaceReport {
  std::vector<WindowRecord> history;
  bool stabilized = false;
  bool budget_exceeded = false;
  /// Rank on the last window; a certificate only when stabilized.
  std::size_t final_dimension = 0;
  std::size_t final_level = 0;
  std::vector<Index> b_window;
  /// Independent slices on the last window and the functionals producing them.
  std::vector<Multiplier> basis;
  std::vector<ReducedFunctional> basis_functionals;

  std::vector<std::size_t> dimensions() const;
};

/// Rank of {(ι⊗e^α_ij φ)(Y)} restricted to B-windows, over nested windows.
/// A stabilized report is a heuristic certificate for finite dimension, not a proof.
SliceSpaceReport slice_space_dimension(const TensorMultiplier& y, const DQGDescriptor& dqg,
                                       const SliceOptions& options = {});

struct LambdaEntry {
  std::size_t k;
  Index alpha;
  std::size_t i, j;
  Scalar value;
};

struct FactorOptions {
  NumericPolicy policy{};
  /// Relative tolerance for float-mode verification.
  double tolerance = 1e-7;
  std::size_t centralizer_pairs = 50;
  std::uint64_t seed = 0;
  /// Also check reconstruction on the ring between this window and the next.
  bool probe_ring = true;
};

/// Y = Σ_k x_k⊗y_k with x_k slices of Y and y_k recovered from
/// λ_k(a) = φ(y_k a) block by block. The y_k are lazy: any block of A can be
/// evaluated, not only those of the window used to find the slice basis.
struct Factorization {
  std::vector<Multiplier> x;
  std::vector<Multiplier> y;
  std::vector<LambdaEntry> lambda;
  std::size_t level = 0;
  std::vector<Index> b_window;
  std::vector<Index> a_window;
  Check reconstruction;
  Check double_centralizer;
};

/// Throws NotInSpan (slice outside the basis; expand and retry) or
/// ReconstructionMismatch. Requires a stabilized report.
Factorization factor(const TensorMultiplier& y, const DQGDescriptor& dqg, const SliceSpaceReport& report,
                     const FactorOptions& options = {});

struct AlmostPeriodicReport {
  bool affirmative = false;
  std::string verdict;
  SliceSpaceReport slices;
  std::optional<Factorization> factorization;
};

/// δ(x) ∈ M(A)⊗M(A), decided through the slice space of δ(x).
AlmostPeriodicReport is_almost_periodic(const Multiplier& x, const DQGDescriptor& dqg,
                                        const SliceOptions& slice_options = {},
                                        const FactorOptions& factor_options = {});

}  // namespace dqg
