#include "dqg/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace dqg {

std::string_view to_string(ScalarMode mode) {
  return mode == ScalarMode::Exact ? "exact" : "float";
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(norm) == 0) throw std::domain_error("division by zero scalar");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  mpq_class mag = abs(im_);
  if (mag != 1) imag = mag.get_str();
  imag += "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

Scalar Scalar::rational(long num, long den, long im_num, long im_den) {
  return Scalar(GaussianRational(mpq_class(num, den), mpq_class(im_num, im_den)));
}

namespace {

// One real number, exact or floating, from a trimmed token.
mpq_class parse_exact_real(std::string_view tok) {
  std::string s(tok);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.find('/') != std::string::npos) {
    mpq_class q;
    if (s.front() == '+') s.erase(0, 1);
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  }
  if (s.find_first_of("eE") != std::string::npos)
    throw std::invalid_argument("exponent notation is not exact: '" + s + "'");
  bool neg = false;
  size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') neg = s[pos++] == '-';
  std::string digits;
  mpz_class den = 1;
  bool seen_dot = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (seen_dot) den *= 10;
    } else {
      throw std::invalid_argument("bad number '" + s + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad number '" + s + "'");
  mpq_class q(mpz_class(digits, 10), den);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

double parse_float_real(std::string_view tok) {
  std::string s(tok);
  if (s.find('/') != std::string::npos) return parse_exact_real(s).get_d();
  size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
  return v;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, ScalarMode mode) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty scalar");

  // Split "re+imi" at the last sign that is not part of an exponent.
  std::string re_part = s, im_part;
  if (s.back() == 'i') {
    size_t split = std::string::npos;
    for (size_t k = s.size() - 1; k > 0; --k) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      re_part.clear();
      im_part = s.substr(0, s.size() - 1);
    } else {
      re_part = s.substr(0, split);
      im_part = s.substr(split, s.size() - split - 1);
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
  }

  if (mode == ScalarMode::Exact) {
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_exact_real(re_part);
    mpq_class im = im_part.empty() ? mpq_class(0) : parse_exact_real(im_part);
    return Scalar(GaussianRational(re, im));
  }
  double re = re_part.empty() ? 0.0 : parse_float_real(re_part);
  double im = im_part.empty() ? 0.0 : parse_float_real(im_part);
  return Scalar(std::complex<double>(re, im));
}

std::complex<double> Scalar::to_complex() const {
  if (auto* q = std::get_if<GaussianRational>(&value_)) return q->to_complex();
  return std::get<std::complex<double>>(value_);
}

bool Scalar::exactly_zero() const {
  if (auto* q = std::get_if<GaussianRational>(&value_)) return q->is_zero();
  return std::get<std::complex<double>>(value_) == std::complex<double>(0.0, 0.0);
}

Scalar Scalar::conj() const {
  if (auto* q = std::get_if<GaussianRational>(&value_)) return Scalar(q->conj());
  return Scalar(std::conj(std::get<std::complex<double>>(value_)));
}

Scalar Scalar::to_mode(ScalarMode mode) const {
  if (mode == ScalarMode::Float) return Scalar(to_complex());
  if (!is_exact()) throw std::invalid_argument("cannot convert a floating scalar to exact mode");
  return *this;
}

namespace {

template <class Op>
void combine(std::variant<GaussianRational, std::complex<double>>& lhs,
             const std::variant<GaussianRational, std::complex<double>>& rhs, Op op) {
  auto* a = std::get_if<GaussianRational>(&lhs);
  auto* b = std::get_if<GaussianRational>(&rhs);
  if (a && b) {
    op(*a, *b);
    return;
  }
  auto as_c = [](const auto& v) {
    if (auto* q = std::get_if<GaussianRational>(&v)) return q->to_complex();
    return std::get<std::complex<double>>(v);
  };
  std::complex<double> x = as_c(lhs);
  op(x, as_c(rhs));
  lhs = x;
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(value_, o.value_, [](auto& x, const auto& y) { x += y; });
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  combine(value_, o.value_, [](auto& x, const auto& y) { x -= y; });
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  combine(value_, o.value_, [](auto& x, const auto& y) { x *= y; });
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.exactly_zero()) throw std::domain_error("division by zero scalar");
  combine(value_, o.value_, [](auto& x, const auto& y) { x /= y; });
  return *this;
}

Scalar operator-(const Scalar& a) {
  if (auto* q = std::get_if<GaussianRational>(&a.value_)) return Scalar(-*q);
  return Scalar(-std::get<std::complex<double>>(a.value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_complex() == b.to_complex();
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<GaussianRational>(&value_)) return q->to_string();
  auto z = std::get<std::complex<double>>(value_);
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else if (z.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17gi", z.imag());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace dqg
