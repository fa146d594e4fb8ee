#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dqg/block_algebra.hpp"
#include "dqg/linalg.hpp"

namespace dqg {

/// Multiplication table of a finite-dimensional algebra in a fixed basis:
/// e_i·e_j = Σ_k c_ij^k e_k, stored sparsely.
class StructureConstants {
 public:
  using Term = std::pair<std::size_t, Scalar>;

  explicit StructureConstants(std::size_t dim);

  /// Matrix-unit basis of the given window of a block algebra.
  static StructureConstants from_window(const BlockAlgebra& algebra, std::size_t level);
  /// Product basis e_i⊗f_j, ordered i-major.
  static StructureConstants tensor(const StructureConstants& b, const StructureConstants& a);
  static StructureConstants zero_product(std::size_t dim) { return StructureConstants(dim); }

  std::size_t dim() const { return dim_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  void set_product(std::size_t i, std::size_t j, std::vector<Term> terms);

 private:
  std::size_t dim_;
  std::vector<std::vector<Term>> table_;
};

/// Nondegeneracy on a finite window: (a·A = 0 ⇒ a = 0) and (A·a = 0 ⇒ a = 0),
/// decided by the kernels of the two multiplication operators.
bool check_nondegenerate(const StructureConstants& algebra, const NumericPolicy& policy = {});

}  // namespace dqg
