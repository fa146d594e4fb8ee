#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "dqg/scalar.hpp"

namespace dqg {

using Vector = std::vector<Scalar>;

/// Row-major dense matrix of Scalars.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, Vector entries);
  DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static DenseMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static DenseMatrix diagonal(std::span<const Scalar> d);
  /// Single column built from a vector.
  static DenseMatrix column(std::span<const Scalar> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Scalar> entries() const { return data_; }

  bool is_exact() const;
  /// True when every entry is exactly zero (no tolerance).
  bool exactly_zero() const;
  double max_abs() const;
  DenseMatrix to_mode(ScalarMode mode) const;

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;
  Scalar trace() const;

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(const Scalar& c);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const Scalar& c) { return a *= c; }
  friend DenseMatrix operator*(const Scalar& c, DenseMatrix a) { return a *= c; }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vector data_;
};

/// (X ⊗ Y)[(i,k),(j,l)] = X[i,j]·Y[k,l]; row index i·rows(Y)+k.
DenseMatrix kron(const DenseMatrix& x, const DenseMatrix& y);

/// (id ⊗ trace) of an (n·m)×(n·m) matrix, returning n×n.
DenseMatrix partial_trace_second(const DenseMatrix& m, std::size_t n, std::size_t k);

/// Permutation H_a ⊗ H_b → H_b ⊗ H_a as an (a·b)×(a·b) matrix.
DenseMatrix swap_matrix(std::size_t a, std::size_t b);

/// Exact equality when both are exact, otherwise max|a-b| <= tol·max(1, max|a|, max|b|).
bool approx_equal(const DenseMatrix& a, const DenseMatrix& b, double tol);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace dqg
