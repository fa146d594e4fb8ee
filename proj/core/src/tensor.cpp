#include "dqg/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dqg/errors.hpp"

namespace dqg {

TensorElement::TensorElement(AlgebraPtr left, AlgebraPtr right) : left_(std::move(left)), right_(std::move(right)) {
  if (!left_ || !right_) throw std::invalid_argument("tensor element needs both algebras");
}

TensorElement TensorElement::elementary(const Element& b, const Element& a) {
  TensorElement t(b.algebra(), a.algebra());
  for (const auto& [beta, mb] : b.blocks())
    for (const auto& [alpha, ma] : a.blocks()) t.set_block(beta, alpha, kron(mb, ma));
  return t;
}

std::size_t TensorElement::pair_dim(const Index& beta, const Index& alpha) const {
  return left_->block_dim(beta) * right_->block_dim(alpha);
}

void TensorElement::set_block(const Index& beta, const Index& alpha, DenseMatrix m) {
  const auto n = pair_dim(beta, alpha);
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("tensor block has wrong size");
  if (m.exactly_zero()) {
    blocks_.erase({beta, alpha});
  } else {
    blocks_[{beta, alpha}] = std::move(m);
  }
}

void TensorElement::add_to_block(const Index& beta, const Index& alpha, const DenseMatrix& m) {
  auto it = blocks_.find({beta, alpha});
  if (it == blocks_.end()) {
    set_block(beta, alpha, m);
  } else {
    set_block(beta, alpha, it->second + m);
  }
}

DenseMatrix TensorElement::block(const Index& beta, const Index& alpha) const {
  auto it = blocks_.find({beta, alpha});
  if (it != blocks_.end()) return it->second;
  const auto n = pair_dim(beta, alpha);
  return DenseMatrix(n, n);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_same(left_, o.left_, "tensor + (left)");
  require_same(right_, o.right_, "tensor + (right)");
  for (const auto& [k, m] : o.blocks_) add_to_block(k.first, k.second, m);
  return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c) {
  if (c.exactly_zero()) {
    blocks_.clear();
    return *this;
  }
  for (auto& [_, m] : blocks_) m *= c;
  return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.left_.get() == b.left_.get() && a.right_.get() == b.right_.get() && a.blocks_ == b.blocks_;
}

TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t) {
  require_same(s.left(), t.left(), "tensor_multiply (left)");
  require_same(s.right(), t.right(), "tensor_multiply (right)");
  TensorElement out(s.left(), s.right());
  for (const auto& [k, m] : s.blocks()) {
    auto it = t.blocks().find(k);
    if (it != t.blocks().end()) out.set_block(k.first, k.second, m * it->second);
  }
  return out;
}

bool approx_equal(const TensorElement& s, const TensorElement& t, double tol) {
  require_same(s.left(), t.left(), "approx_equal (left)");
  require_same(s.right(), t.right(), "approx_equal (right)");
  std::set<IndexPair> keys;
  for (const auto& [k, _] : s.blocks()) keys.insert(k);
  for (const auto& [k, _] : t.blocks()) keys.insert(k);
  return std::all_of(keys.begin(), keys.end(), [&](const IndexPair& k) {
    return approx_equal(s.block(k.first, k.second), t.block(k.first, k.second), tol);
  });
}

namespace {

class IdentityTensorRule final : public TensorRule {
 public:
  IdentityTensorRule(AlgebraPtr left, AlgebraPtr right) : left_(std::move(left)), right_(std::move(right)) {}
  DenseMatrix block(const Index& beta, const Index& alpha) const override {
    return DenseMatrix::identity(left_->block_dim(beta) * right_->block_dim(alpha));
  }
  std::string describe() const override { return "identity"; }

 private:
  AlgebraPtr left_;
  AlgebraPtr right_;
};

class ElementaryTensorRule final : public TensorRule {
 public:
  ElementaryTensorRule(Multiplier x, Multiplier y) : x_(std::move(x)), y_(std::move(y)) {}
  DenseMatrix block(const Index& beta, const Index& alpha) const override {
    return kron(x_.block(beta), y_.block(alpha));
  }
  std::string describe() const override { return "(" + x_.describe() + ")⊗(" + y_.describe() + ")"; }

 private:
  Multiplier x_;
  Multiplier y_;
};

class LinearCombinationTensorRule final : public TensorRule {
 public:
  LinearCombinationTensorRule(AlgebraPtr left, AlgebraPtr right,
                              std::vector<std::pair<Scalar, TensorMultiplier>> terms)
      : left_(std::move(left)), right_(std::move(right)), terms_(std::move(terms)) {}
  DenseMatrix block(const Index& beta, const Index& alpha) const override {
    const auto n = left_->block_dim(beta) * right_->block_dim(alpha);
    DenseMatrix acc(n, n);
    for (const auto& [c, y] : terms_) acc += y.block(beta, alpha) * c;
    return acc;
  }
  std::string describe() const override {
    std::string s;
    for (const auto& [c, y] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*[" + y.describe() + "]";
    }
    return s.empty() ? "0" : s;
  }

 private:
  AlgebraPtr left_;
  AlgebraPtr right_;
  std::vector<std::pair<Scalar, TensorMultiplier>> terms_;
};

class ProductTensorRule final : public TensorRule {
 public:
  ProductTensorRule(TensorMultiplier a, TensorMultiplier b) : a_(std::move(a)), b_(std::move(b)) {}
  DenseMatrix block(const Index& beta, const Index& alpha) const override {
    return a_.block(beta, alpha) * b_.block(beta, alpha);
  }
  std::string describe() const override { return "[" + a_.describe() + "]·[" + b_.describe() + "]"; }

 private:
  TensorMultiplier a_;
  TensorMultiplier b_;
};

class FunctionTensorRule final : public TensorRule {
 public:
  FunctionTensorRule(std::function<DenseMatrix(const Index&, const Index&)> fn, std::string description)
      : fn_(std::move(fn)), description_(std::move(description)) {}
  DenseMatrix block(const Index& beta, const Index& alpha) const override { return fn_(beta, alpha); }
  std::string describe() const override { return description_; }

 private:
  std::function<DenseMatrix(const Index&, const Index&)> fn_;
  std::string description_;
};

}  // namespace

TensorMultiplier::TensorMultiplier(AlgebraPtr left, AlgebraPtr right, std::shared_ptr<const TensorRule> rule)
    : left_(std::move(left)), right_(std::move(right)), rule_(std::move(rule)) {
  if (!left_ || !right_ || !rule_) throw std::invalid_argument("tensor multiplier needs algebras and a rule");
}

TensorMultiplier TensorMultiplier::identity(AlgebraPtr left, AlgebraPtr right) {
  auto rule = std::make_shared<IdentityTensorRule>(left, right);
  return {std::move(left), std::move(right), std::move(rule)};
}

TensorMultiplier TensorMultiplier::elementary(const Multiplier& x, const Multiplier& y) {
  return {x.algebra(), y.algebra(), std::make_shared<ElementaryTensorRule>(x, y)};
}

TensorMultiplier TensorMultiplier::linear_combination(AlgebraPtr left, AlgebraPtr right,
                                                      std::vector<std::pair<Scalar, TensorMultiplier>> terms) {
  for (const auto& [_, y] : terms) {
    require_same(left, y.left(), "tensor linear_combination (left)");
    require_same(right, y.right(), "tensor linear_combination (right)");
  }
  auto rule = std::make_shared<LinearCombinationTensorRule>(left, right, std::move(terms));
  return {std::move(left), std::move(right), std::move(rule)};
}

TensorMultiplier TensorMultiplier::sum_of_elementary(const std::vector<Multiplier>& x,
                                                     const std::vector<Multiplier>& y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("sum_of_elementary needs matching factor lists");
  std::vector<std::pair<Scalar, TensorMultiplier>> terms;
  for (std::size_t k = 0; k < x.size(); ++k) terms.emplace_back(Scalar(1), elementary(x[k], y[k]));
  return linear_combination(x.front().algebra(), y.front().algebra(), std::move(terms));
}

TensorMultiplier TensorMultiplier::product(const TensorMultiplier& y1, const TensorMultiplier& y2) {
  require_same(y1.left(), y2.left(), "tensor product (left)");
  require_same(y1.right(), y2.right(), "tensor product (right)");
  return {y1.left(), y1.right(), std::make_shared<ProductTensorRule>(y1, y2)};
}

TensorMultiplier TensorMultiplier::from_function(AlgebraPtr left, AlgebraPtr right,
                                                 std::function<DenseMatrix(const Index&, const Index&)> fn,
                                                 std::string description) {
  return {std::move(left), std::move(right), std::make_shared<FunctionTensorRule>(std::move(fn), std::move(description))};
}

DenseMatrix TensorMultiplier::block(const Index& beta, const Index& alpha) const {
  const auto n = left_->block_dim(beta) * right_->block_dim(alpha);
  DenseMatrix m = rule_->block(beta, alpha);
  if (m.rows() != n || m.cols() != n)
    throw std::logic_error("tensor rule produced a wrong-sized block at " + beta.to_string() + "," + alpha.to_string());
  return m;
}

TensorElement tensor_multiplier_apply(const TensorMultiplier& y, const TensorElement& t, Side side) {
  require_same(y.left(), t.left(), "tensor_multiplier_apply (left)");
  require_same(y.right(), t.right(), "tensor_multiplier_apply (right)");
  TensorElement out(t.left(), t.right());
  for (const auto& [k, m] : t.blocks()) {
    DenseMatrix yb = y.block(k.first, k.second);
    out.set_block(k.first, k.second, side == Side::Left ? yb * m : m * yb);
  }
  return out;
}

}  // namespace dqg
