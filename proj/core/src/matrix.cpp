#include "dqg/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dqg {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, Vector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("entries length != rows*cols");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  DenseMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Scalar> d) {
  DenseMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

DenseMatrix DenseMatrix::column(std::span<const Scalar> v) {
  return DenseMatrix(v.size(), 1, Vector(v.begin(), v.end()));
}

bool DenseMatrix::is_exact() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_exact(); });
}

bool DenseMatrix::exactly_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.exactly_zero(); });
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& s : data_) m = std::max(m, s.magnitude());
  return m;
}

DenseMatrix DenseMatrix::to_mode(ScalarMode mode) const {
  DenseMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].to_mode(mode);
  return r;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
  return r;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Scalar DenseMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace of non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(const Scalar& c) {
  for (auto& s : data_) s *= c;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in *");
  if (a.rows_ * a.cols_ * b.cols_ > 512 && !(a.is_exact() && b.is_exact())) {
    // Float data: hand the product to Eigen.
    using M = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    M ea(a.rows_, a.cols_), eb(b.rows_, b.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) ea.data()[k] = a.data_[k].to_complex();
    for (std::size_t k = 0; k < b.data_.size(); ++k) eb.data()[k] = b.data_[k].to_complex();
    const M er = ea * eb;
    DenseMatrix r(a.rows_, b.cols_);
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = Scalar(er.data()[k]);
    return r;
  }
  DenseMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.exactly_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.exactly_zero()) r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string DenseMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << ']';
  }
  os << ']';
  return os.str();
}

DenseMatrix kron(const DenseMatrix& x, const DenseMatrix& y) {
  DenseMatrix r(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Scalar& xij = x(i, j);
      if (xij.exactly_zero()) continue;
      for (std::size_t k = 0; k < y.rows(); ++k)
        for (std::size_t l = 0; l < y.cols(); ++l) r(i * y.rows() + k, j * y.cols() + l) = xij * y(k, l);
    }
  return r;
}

DenseMatrix partial_trace_second(const DenseMatrix& m, std::size_t n, std::size_t k) {
  if (m.rows() != n * k || m.cols() != n * k) throw std::invalid_argument("partial trace shape");
  DenseMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < k; ++t) r(i, j) += m(i * k + t, j * k + t);
  return r;
}

DenseMatrix swap_matrix(std::size_t a, std::size_t b) {
  DenseMatrix s(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) s(j * a + i, i * b + j) = 1;
  return s;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("shape mismatch");
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) m = std::max(m, std::abs(ea[k].to_complex() - eb[k].to_complex()));
  return m;
}

bool approx_equal(const DenseMatrix& a, const DenseMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.is_exact() && b.is_exact()) return a == b;
  double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  return max_abs_diff(a, b) <= tol * scale;
}

}  // namespace dqg
