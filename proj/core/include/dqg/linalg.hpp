#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dqg/matrix.hpp"

namespace dqg {

/// Zero/rank decisions for floating-point matrices. Exact matrices ignore it.
struct NumericPolicy {
  enum class Reference { LargestSingularValue, LargestEntry };

  /// Singular values at or below tolerance·reference count as zero.
  double rank_tolerance = 1e-9;
  Reference reference = Reference::LargestSingularValue;
  /// Relative residual allowed when expressing a vector in a span.
  double span_tolerance = 1e-8;
};

std::size_t rank(const DenseMatrix& m, const NumericPolicy& policy = {});

/// Basis of the right null space; empty iff rank(m) == cols(m).
std::vector<Vector> kernel_basis(const DenseMatrix& m, const NumericPolicy& policy = {});

/// Unique coefficients c with Σ c_k·basis_k = target, or nullopt when the
/// target is outside the span. The basis must be linearly independent.
std::optional<Vector> coordinates_in_span(std::span<const Vector> basis, std::span<const Scalar> target,
                                          const NumericPolicy& policy = {});

/// Some x with a·x = b, or nullopt. Does not require full column rank.
std::optional<Vector> solve(const DenseMatrix& a, std::span<const Scalar> b, const NumericPolicy& policy = {});

/// Indices of a maximal linearly independent set of columns. Exact mode picks
/// the leftmost pivots.
std::vector<std::size_t> independent_columns(const DenseMatrix& m, const NumericPolicy& policy = {});

/// Throws SingularMatrix.
DenseMatrix inverse(const DenseMatrix& m, const NumericPolicy& policy = {});

/// Matrix whose k-th column is vectors[k]; all vectors must share a length.
DenseMatrix from_columns(std::span<const Vector> vectors);

}  // namespace dqg
