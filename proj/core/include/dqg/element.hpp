#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "dqg/block_algebra.hpp"
#include "dqg/matrix.hpp"

namespace dqg {

/// Finitely supported element of a block algebra. Stored blocks are never
/// exactly zero.
class Element {
 public:
  explicit Element(AlgebraPtr algebra);

  /// c·e_ij in block `index`.
  static Element matrix_unit(AlgebraPtr algebra, const Index& index, std::size_t i, std::size_t j,
                             const Scalar& c = 1);
  /// c·I in block `index` (for 1×1 blocks: the point mass c·δ_index).
  static Element block_identity(AlgebraPtr algebra, const Index& index, const Scalar& c = 1);

  const AlgebraPtr& algebra() const { return algebra_; }

  /// Validates the block shape; an exactly zero matrix erases the block.
  void set_block(const Index& index, DenseMatrix m);
  void add_to_block(const Index& index, const DenseMatrix& m);

  /// Stored block, or the zero matrix of the right size.
  DenseMatrix block(const Index& index) const;
  const DenseMatrix* find_block(const Index& index) const;
  const std::map<Index, DenseMatrix>& blocks() const { return blocks_; }
  std::vector<Index> support() const;
  bool is_zero() const { return blocks_.empty(); }

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Scalar& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b);

 private:
  AlgebraPtr algebra_;
  std::map<Index, DenseMatrix> blocks_;
};

/// Block-wise product on the intersection of supports. Throws AlgebraMismatch.
Element element_multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return element_multiply(a, b); }

/// Sum of block identities over supp(a); satisfies e·a = a = a·e.
Element local_unit(const Element& a);

/// max entry-wise distance, treating absent blocks as zero.
double max_abs_diff(const Element& a, const Element& b);
/// Exact equality for exact data, relative tolerance otherwise.
bool approx_equal(const Element& a, const Element& b, double tol);

}  // namespace dqg
