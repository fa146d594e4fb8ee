#include "dqg/element.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dqg/errors.hpp"

namespace dqg {

Element::Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("element needs an algebra");
}

Element Element::matrix_unit(AlgebraPtr algebra, const Index& index, std::size_t i, std::size_t j,
                             const Scalar& c) {
  Element e(std::move(algebra));
  const auto n = e.algebra_->block_dim(index);
  if (i >= n || j >= n) throw std::out_of_range("matrix unit outside block");
  DenseMatrix m(n, n);
  m(i, j) = c;
  e.set_block(index, std::move(m));
  return e;
}

Element Element::block_identity(AlgebraPtr algebra, const Index& index, const Scalar& c) {
  Element e(std::move(algebra));
  e.set_block(index, DenseMatrix::identity(e.algebra_->block_dim(index)) * c);
  return e;
}

void Element::set_block(const Index& index, DenseMatrix m) {
  const auto n = algebra_->block_dim(index);
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("block " + index.to_string() + " must be " + std::to_string(n) + "x" +
                                std::to_string(n));
  if (m.exactly_zero()) {
    blocks_.erase(index);
  } else {
    blocks_[index] = std::move(m);
  }
}

void Element::add_to_block(const Index& index, const DenseMatrix& m) {
  auto it = blocks_.find(index);
  if (it == blocks_.end()) {
    set_block(index, m);
    return;
  }
  set_block(index, it->second + m);
}

DenseMatrix Element::block(const Index& index) const {
  auto it = blocks_.find(index);
  if (it != blocks_.end()) return it->second;
  const auto n = algebra_->block_dim(index);
  return DenseMatrix(n, n);
}

const DenseMatrix* Element::find_block(const Index& index) const {
  auto it = blocks_.find(index);
  return it == blocks_.end() ? nullptr : &it->second;
}

std::vector<Index> Element::support() const {
  std::vector<Index> s;
  s.reserve(blocks_.size());
  for (const auto& [i, _] : blocks_) s.push_back(i);
  return s;
}

Element& Element::operator+=(const Element& o) {
  require_same(algebra_, o.algebra_, "element +");
  for (const auto& [i, m] : o.blocks_) add_to_block(i, m);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same(algebra_, o.algebra_, "element -");
  for (const auto& [i, m] : o.blocks_) add_to_block(i, m * Scalar(-1));
  return *this;
}

Element& Element::operator*=(const Scalar& c) {
  if (c.exactly_zero()) {
    blocks_.clear();
    return *this;
  }
  for (auto& [_, m] : blocks_) m *= c;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  return a.algebra_.get() == b.algebra_.get() && a.blocks_ == b.blocks_;
}

Element element_multiply(const Element& a, const Element& b) {
  require_same(a.algebra(), b.algebra(), "element_multiply");
  Element out(a.algebra());
  for (const auto& [i, m] : a.blocks()) {
    if (const auto* n = b.find_block(i)) out.set_block(i, m * *n);
  }
  return out;
}

Element local_unit(const Element& a) {
  Element e(a.algebra());
  for (const auto& [i, _] : a.blocks()) e.set_block(i, DenseMatrix::identity(a.algebra()->block_dim(i)));
  return e;
}

double max_abs_diff(const Element& a, const Element& b) {
  require_same(a.algebra(), b.algebra(), "max_abs_diff");
  std::set<Index> keys;
  for (const auto& [i, _] : a.blocks()) keys.insert(i);
  for (const auto& [i, _] : b.blocks()) keys.insert(i);
  double m = 0.0;
  for (const auto& i : keys) m = std::max(m, max_abs_diff(a.block(i), b.block(i)));
  return m;
}

bool approx_equal(const Element& a, const Element& b, double tol) {
  require_same(a.algebra(), b.algebra(), "approx_equal");
  std::set<Index> keys;
  for (const auto& [i, _] : a.blocks()) keys.insert(i);
  for (const auto& [i, _] : b.blocks()) keys.insert(i);
  return std::all_of(keys.begin(), keys.end(),
                     [&](const Index& i) { return approx_equal(a.block(i), b.block(i), tol); });
}

}  // namespace dqg
