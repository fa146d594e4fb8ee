#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqg/element.hpp"

namespace dqg {

enum class Side { Left, Right };

/// Block rule of a multiplier: a total map index -> square matrix.
class MultiplierRule {
 public:
  virtual ~MultiplierRule() = default;
  virtual DenseMatrix block(const BlockAlgebra& algebra, const Index& index) const = 0;
  virtual std::string describe() const = 0;
};

/// A multiplier m ∈ M(A), i.e. a double centralizer (λ, ρ) with λ(a) = m·a
/// and ρ(a) = a·m, held as a lazily evaluated block rule.
class Multiplier {
 public:
  Multiplier(AlgebraPtr algebra, std::shared_ptr<const MultiplierRule> rule);

  static Multiplier identity(AlgebraPtr algebra);
  static Multiplier scalar(AlgebraPtr algebra, const Scalar& c);
  static Multiplier zero(AlgebraPtr algebra) { return scalar(std::move(algebra), 0); }
  /// n ↦ p(n)·I with p(n) = Σ coeffs[k]·n^k; integers or naturals only.
  static Multiplier polynomial(AlgebraPtr algebra, Vector coeffs);
  /// n ↦ ζ^n with ζ = exp(2πi·power/order). In exact mode the reduced order
  /// must divide 4; otherwise std::invalid_argument.
  static Multiplier character(AlgebraPtr algebra, long power, long order, ScalarMode mode);
  /// n ↦ exp(i·angle·n), float mode.
  static Multiplier character_angle(AlgebraPtr algebra, double angle);
  static Multiplier table(AlgebraPtr algebra, std::map<Index, DenseMatrix> blocks,
                          std::optional<Multiplier> fallback = std::nullopt);
  static Multiplier from_function(AlgebraPtr algebra, std::function<DenseMatrix(const Index&)> fn,
                                  std::string description);
  static Multiplier linear_combination(AlgebraPtr algebra, std::vector<std::pair<Scalar, Multiplier>> terms);
  /// Block-wise product m1_α·m2_α.
  static Multiplier product(const Multiplier& m1, const Multiplier& m2);

  const AlgebraPtr& algebra() const { return algebra_; }
  /// Validates membership and block shape.
  DenseMatrix block(const Index& index) const;
  std::string describe() const { return rule_->describe(); }
  const MultiplierRule& rule() const { return *rule_; }

  friend Multiplier operator+(const Multiplier& a, const Multiplier& b);
  friend Multiplier operator-(const Multiplier& a, const Multiplier& b);
  friend Multiplier operator*(const Scalar& c, const Multiplier& m);

 private:
  AlgebraPtr algebra_;
  std::shared_ptr<const MultiplierRule> rule_;
};

/// λ(a) = m·a (Left) or ρ(a) = a·m (Right), restricted to supp(a).
Element multiplier_apply(const Multiplier& m, const Element& a, Side side);

/// The canonical inclusion A ⊂ M(A): a's blocks on supp(a), zero elsewhere.
Multiplier embed_element(const Element& a);

/// Truncation of a multiplier to an element supported on the given indices.
Element restrict_to(const Multiplier& m, const std::vector<Index>& indices);

}  // namespace dqg
