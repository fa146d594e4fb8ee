#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dqg/multiplier.hpp"

namespace dqg {

using IndexPair = std::pair<Index, Index>;

/// Finite sum of elementary tensors b⊗a in B⊗A, stored per block pair
/// (β, α) as an (n_β·n_α)-square matrix in M_{n_β}⊗M_{n_α}.
class TensorElement {
 public:
  TensorElement(AlgebraPtr left, AlgebraPtr right);

  static TensorElement elementary(const Element& b, const Element& a);

  const AlgebraPtr& left() const { return left_; }
  const AlgebraPtr& right() const { return right_; }

  void set_block(const Index& beta, const Index& alpha, DenseMatrix m);
  void add_to_block(const Index& beta, const Index& alpha, const DenseMatrix& m);
  DenseMatrix block(const Index& beta, const Index& alpha) const;
  const std::map<IndexPair, DenseMatrix>& blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend bool operator==(const TensorElement& a, const TensorElement& b);

 private:
  std::size_t pair_dim(const Index& beta, const Index& alpha) const;

  AlgebraPtr left_;
  AlgebraPtr right_;
  std::map<IndexPair, DenseMatrix> blocks_;
};

TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t);
bool approx_equal(const TensorElement& s, const TensorElement& t, double tol);

class TensorRule {
 public:
  virtual ~TensorRule() = default;
  virtual DenseMatrix block(const Index& beta, const Index& alpha) const = 0;
  virtual std::string describe() const = 0;
};

/// A multiplier Y of B⊗A as a lazy map (β, α) ↦ Y_{βα} ∈ M_{n_β}⊗M_{n_α}.
class TensorMultiplier {
 public:
  TensorMultiplier(AlgebraPtr left, AlgebraPtr right, std::shared_ptr<const TensorRule> rule);

  static TensorMultiplier identity(AlgebraPtr left, AlgebraPtr right);
  /// x⊗y with block (β, α) ↦ x_β ⊗ y_α.
  static TensorMultiplier elementary(const Multiplier& x, const Multiplier& y);
  static TensorMultiplier linear_combination(AlgebraPtr left, AlgebraPtr right,
                                             std::vector<std::pair<Scalar, TensorMultiplier>> terms);
  /// Σ_k x_k⊗y_k.
  static TensorMultiplier sum_of_elementary(const std::vector<Multiplier>& x, const std::vector<Multiplier>& y);
  static TensorMultiplier product(const TensorMultiplier& y1, const TensorMultiplier& y2);
  static TensorMultiplier from_function(AlgebraPtr left, AlgebraPtr right,
                                        std::function<DenseMatrix(const Index&, const Index&)> fn,
                                        std::string description);

  const AlgebraPtr& left() const { return left_; }
  const AlgebraPtr& right() const { return right_; }
  DenseMatrix block(const Index& beta, const Index& alpha) const;
  std::string describe() const { return rule_->describe(); }

 private:
  AlgebraPtr left_;
  AlgebraPtr right_;
  std::shared_ptr<const TensorRule> rule_;
};

/// Y·t (Left) or t·Y (Right) over the finite support of t.
TensorElement tensor_multiplier_apply(const TensorMultiplier& y, const TensorElement& t, Side side);

}  // namespace dqg
