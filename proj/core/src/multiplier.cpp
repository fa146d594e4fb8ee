#include "dqg/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dqg/errors.hpp"

namespace dqg {

namespace {

class ScalarRule final : public MultiplierRule {
 public:
  explicit ScalarRule(Scalar c) : c_(std::move(c)) {}
  DenseMatrix block(const BlockAlgebra& algebra, const Index& index) const override {
    return DenseMatrix::identity(algebra.block_dim(index)) * c_;
  }
  std::string describe() const override {
    if (c_ == Scalar(1)) return "identity";
    return "scalar(" + c_.to_string() + ")";
  }

 private:
  Scalar c_;
};

class PolynomialRule final : public MultiplierRule {
 public:
  explicit PolynomialRule(Vector coeffs) : coeffs_(std::move(coeffs)) {}
  DenseMatrix block(const BlockAlgebra& algebra, const Index& index) const override {
    const Scalar n(index.value());
    Scalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
    return DenseMatrix::identity(algebra.block_dim(index)) * acc;
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "polynomial[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? ", " : "") << coeffs_[k].to_string();
    os << "]";
    return os.str();
  }

 private:
  Vector coeffs_;
};

// ζ = exp(2πi·power/order); order | 4 keeps ζ in Q(i).
class ExactCharacterRule final : public MultiplierRule {
 public:
  ExactCharacterRule(long quarter_turns, long power, long order)
      : quarter_turns_(quarter_turns), power_(power), order_(order) {}
  DenseMatrix block(const BlockAlgebra& algebra, const Index& index) const override {
    static const Scalar kPowers[4] = {Scalar(1), Scalar::imaginary_unit(), Scalar(-1), -Scalar::imaginary_unit()};
    long e = static_cast<long>((quarter_turns_ * (index.value() % 4)) % 4);
    if (e < 0) e += 4;
    return DenseMatrix::identity(algebra.block_dim(index)) * kPowers[e];
  }
  std::string describe() const override {
    return "character(power=" + std::to_string(power_) + ", order=" + std::to_string(order_) + ")";
  }

 private:
  long quarter_turns_;
  long power_;
  long order_;
};

class FloatCharacterRule final : public MultiplierRule {
 public:
  FloatCharacterRule(double angle, std::string label) : angle_(angle), label_(std::move(label)) {}
  DenseMatrix block(const BlockAlgebra& algebra, const Index& index) const override {
    const double t = angle_ * static_cast<double>(index.value());
    return DenseMatrix::identity(algebra.block_dim(index)) * Scalar(std::complex<double>(std::cos(t), std::sin(t)));
  }
  std::string describe() const override { return label_; }

 private:
  double angle_;
  std::string label_;
};

class TableRule final : public MultiplierRule {
 public:
  TableRule(std::map<Index, DenseMatrix> blocks, std::optional<Multiplier> fallback)
      : blocks_(std::move(blocks)), fallback_(std::move(fallback)) {}
  DenseMatrix block(const BlockAlgebra& algebra, const Index& index) const override {
    auto it = blocks_.find(index);
    if (it != blocks_.end()) return it->second;
    if (fallback_) return fallback_->block(index);
    const auto n = algebra.block_dim(index);
    return DenseMatrix(n, n);
  }
  std::string describe() const override {
    return "table(" + std::to_string(blocks_.size()) + " blocks" +
           (fallback_ ? ", default " + fallback_->describe() : std::string(", default 0")) + ")";
  }

 private:
  std::map<Index, DenseMatrix> blocks_;
  std::optional<Multiplier> fallback_;
};

class FunctionRule final : public MultiplierRule {
 public:
  FunctionRule(std::function<DenseMatrix(const Index&)> fn, std::string description)
      : fn_(std::move(fn)), description_(std::move(description)) {}
  DenseMatrix block(const BlockAlgebra&, const Index& index) const override { return fn_(index); }
  std::string describe() const override { return description_; }

 private:
  std::function<DenseMatrix(const Index&)> fn_;
  std::string description_;
};

class LinearCombinationRule final : public MultiplierRule {
 public:
  explicit LinearCombinationRule(std::vector<std::pair<Scalar, Multiplier>> terms) : terms_(std::move(terms)) {}
  DenseMatrix block(const BlockAlgebra& algebra, const Index& index) const override {
    const auto n = algebra.block_dim(index);
    DenseMatrix acc(n, n);
    for (const auto& [c, m] : terms_) acc += m.block(index) * c;
    return acc;
  }
  std::string describe() const override {
    std::string s;
    for (const auto& [c, m] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")*" + m.describe();
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::vector<std::pair<Scalar, Multiplier>> terms_;
};

class ProductRule final : public MultiplierRule {
 public:
  ProductRule(Multiplier a, Multiplier b) : a_(std::move(a)), b_(std::move(b)) {}
  DenseMatrix block(const BlockAlgebra&, const Index& index) const override { return a_.block(index) * b_.block(index); }
  std::string describe() const override { return "(" + a_.describe() + ")·(" + b_.describe() + ")"; }

 private:
  Multiplier a_;
  Multiplier b_;
};

bool integer_indexed(const BlockAlgebra& a) {
  return a.model() == IndexModel::Integers || a.model() == IndexModel::Naturals;
}

}  // namespace

Multiplier::Multiplier(AlgebraPtr algebra, std::shared_ptr<const MultiplierRule> rule)
    : algebra_(std::move(algebra)), rule_(std::move(rule)) {
  if (!algebra_ || !rule_) throw std::invalid_argument("multiplier needs an algebra and a rule");
}

Multiplier Multiplier::identity(AlgebraPtr algebra) { return scalar(std::move(algebra), 1); }

Multiplier Multiplier::scalar(AlgebraPtr algebra, const Scalar& c) {
  return {std::move(algebra), std::make_shared<ScalarRule>(c)};
}

Multiplier Multiplier::polynomial(AlgebraPtr algebra, Vector coeffs) {
  if (!integer_indexed(*algebra))
    throw std::invalid_argument("polynomial rules need an integer- or natural-indexed algebra");
  return {std::move(algebra), std::make_shared<PolynomialRule>(std::move(coeffs))};
}

Multiplier Multiplier::character(AlgebraPtr algebra, long power, long order, ScalarMode mode) {
  if (!integer_indexed(*algebra)) throw std::invalid_argument("character rules need an integer-indexed algebra");
  if (order <= 0) throw std::invalid_argument("character order must be positive");
  const long g = std::gcd(power, order);
  const long reduced_order = order / g;
  if (mode == ScalarMode::Exact) {
    if (4 % reduced_order != 0)
      throw std::invalid_argument("character of order " + std::to_string(reduced_order) +
                                  " has irrational values; use float mode");
    // ζ = i^(4·power/order)
    const long quarter = (((power / g) * (4 / reduced_order)) % 4 + 4) % 4;
    return {std::move(algebra), std::make_shared<ExactCharacterRule>(quarter, power, order)};
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(power) / static_cast<double>(order);
  return {std::move(algebra),
          std::make_shared<FloatCharacterRule>(
              angle, "character(power=" + std::to_string(power) + ", order=" + std::to_string(order) + ")")};
}

Multiplier Multiplier::character_angle(AlgebraPtr algebra, double angle) {
  if (!integer_indexed(*algebra)) throw std::invalid_argument("character rules need an integer-indexed algebra");
  std::ostringstream os;
  os.precision(17);
  os << "character(angle=" << angle << ")";
  return {std::move(algebra), std::make_shared<FloatCharacterRule>(angle, os.str())};
}

Multiplier Multiplier::table(AlgebraPtr algebra, std::map<Index, DenseMatrix> blocks,
                             std::optional<Multiplier> fallback) {
  for (const auto& [i, m] : blocks) {
    const auto n = algebra->block_dim(i);
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("table block " + i.to_string() + " has wrong size");
  }
  if (fallback) require_same(algebra, fallback->algebra(), "table fallback");
  return {std::move(algebra), std::make_shared<TableRule>(std::move(blocks), std::move(fallback))};
}

Multiplier Multiplier::from_function(AlgebraPtr algebra, std::function<DenseMatrix(const Index&)> fn,
                                     std::string description) {
  return {std::move(algebra), std::make_shared<FunctionRule>(std::move(fn), std::move(description))};
}

Multiplier Multiplier::linear_combination(AlgebraPtr algebra, std::vector<std::pair<Scalar, Multiplier>> terms) {
  for (const auto& [_, m] : terms) require_same(algebra, m.algebra(), "linear_combination");
  return {std::move(algebra), std::make_shared<LinearCombinationRule>(std::move(terms))};
}

Multiplier Multiplier::product(const Multiplier& m1, const Multiplier& m2) {
  require_same(m1.algebra(), m2.algebra(), "multiplier product");
  return {m1.algebra(), std::make_shared<ProductRule>(m1, m2)};
}

DenseMatrix Multiplier::block(const Index& index) const {
  const auto n = algebra_->block_dim(index);
  DenseMatrix m = rule_->block(*algebra_, index);
  if (m.rows() != n || m.cols() != n)
    throw std::logic_error("rule " + rule_->describe() + " produced a wrong-sized block at " + index.to_string());
  return m;
}

Multiplier operator+(const Multiplier& a, const Multiplier& b) {
  return Multiplier::linear_combination(a.algebra(), {{Scalar(1), a}, {Scalar(1), b}});
}

Multiplier operator-(const Multiplier& a, const Multiplier& b) {
  return Multiplier::linear_combination(a.algebra(), {{Scalar(1), a}, {Scalar(-1), b}});
}

Multiplier operator*(const Scalar& c, const Multiplier& m) {
  return Multiplier::linear_combination(m.algebra(), {{c, m}});
}

Element multiplier_apply(const Multiplier& m, const Element& a, Side side) {
  require_same(m.algebra(), a.algebra(), "multiplier_apply");
  Element out(a.algebra());
  for (const auto& [i, block] : a.blocks()) {
    DenseMatrix mb = m.block(i);
    out.set_block(i, side == Side::Left ? mb * block : block * mb);
  }
  return out;
}

Multiplier embed_element(const Element& a) { return Multiplier::table(a.algebra(), a.blocks()); }

Element restrict_to(const Multiplier& m, const std::vector<Index>& indices) {
  Element out(m.algebra());
  for (const auto& i : indices) out.set_block(i, m.block(i));
  return out;
}

}  // namespace dqg
