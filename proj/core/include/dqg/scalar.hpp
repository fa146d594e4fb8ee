#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace dqg {

/// Which field a computation runs over.
enum class ScalarMode { Exact, Float };

std::string_view to_string(ScalarMode mode);

/// Element of Q(i): a pair of arbitrary-precision rationals.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// A scalar that is either exact (Gaussian rational) or floating complex.
///
/// Mixed arithmetic promotes the exact operand to floating point, so exact
/// integer literals can be used freely in float-mode code.
class Scalar {
 public:
  Scalar() : value_(GaussianRational{}) {}
  template <std::integral T>
  Scalar(T n) : value_(GaussianRational(mpq_class(static_cast<long>(n)))) {}
  Scalar(GaussianRational q) : value_(std::move(q)) {}
  Scalar(mpq_class q) : value_(GaussianRational(std::move(q))) {}
  Scalar(std::complex<double> z) : value_(z) {}

  static Scalar rational(long num, long den, long im_num = 0, long im_den = 1);
  static Scalar from_double(double x) { return Scalar(std::complex<double>(x, 0.0)); }
  static Scalar imaginary_unit() { return Scalar(GaussianRational(0, 1)); }

  /// Parses "3/2", "-1/2+3/4i", "i", "2.5", "1e-3-2i". Decimal input in
  /// exact mode is converted exactly; throws std::invalid_argument on junk.
  static Scalar parse(std::string_view text, ScalarMode mode);

  ScalarMode mode() const {
    return std::holds_alternative<GaussianRational>(value_) ? ScalarMode::Exact : ScalarMode::Float;
  }
  bool is_exact() const { return mode() == ScalarMode::Exact; }
  const GaussianRational& exact() const { return std::get<GaussianRational>(value_); }

  std::complex<double> to_complex() const;
  double magnitude() const { return std::abs(to_complex()); }
  /// Exact comparison against zero (float: the value is exactly 0.0).
  bool exactly_zero() const;
  Scalar conj() const;
  Scalar to_mode(ScalarMode mode) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);
  /// Exact equality in exact mode; bitwise-numeric equality otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  std::variant<GaussianRational, std::complex<double>> value_;
};

}  // namespace dqg
