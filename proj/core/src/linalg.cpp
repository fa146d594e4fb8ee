#include "dqg/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <stdexcept>

#include "dqg/errors.hpp"

namespace dqg {

namespace {

using Grid = std::vector<std::vector<GaussianRational>>;

Grid to_grid(const DenseMatrix& m) {
  Grid g(m.rows(), std::vector<GaussianRational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).exact();
  return g;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Grid& g, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < g.size(); ++c) {
    std::size_t p = r;
    while (p < g.size() && g[p][c].is_zero()) ++p;
    if (p == g.size()) continue;
    std::swap(g[p], g[r]);
    GaussianRational inv = GaussianRational(1) / g[r][c];
    for (std::size_t j = c; j < g[r].size(); ++j)
      if (!g[r][j].is_zero()) g[r][j] *= inv;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i == r || g[i][c].is_zero()) continue;
      GaussianRational f = g[i][c];
      for (std::size_t j = c; j < g[i].size(); ++j)
        if (!g[r][j].is_zero()) g[i][j] -= f * g[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Fraction-free (Bareiss) elimination; each update is exact in Q(i).
std::size_t bareiss_rank(Grid g) {
  const std::size_t rows = g.size();
  const std::size_t cols = rows ? g[0].size() : 0;
  GaussianRational prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && g[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(g[p], g[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        GaussianRational v = g[r][c] * g[i][j] - g[i][c] * g[r][j];
        g[i][j] = v / prev;
      }
      g[i][c] = GaussianRational{};
    }
    prev = g[r][c];
    ++r;
  }
  return r;
}

Eigen::MatrixXcd to_eigen(const DenseMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_complex();
  return e;
}

struct FloatSvd {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd;
  std::size_t rank = 0;
  double threshold = 0.0;
};

FloatSvd float_svd(const DenseMatrix& m, const NumericPolicy& policy, unsigned options) {
  FloatSvd out;
  Eigen::MatrixXcd e = to_eigen(m);
  out.svd.compute(e, options);
  const auto& sv = out.svd.singularValues();
  double ref = 0.0;
  if (policy.reference == NumericPolicy::Reference::LargestSingularValue) {
    ref = sv.size() ? sv(0) : 0.0;
  } else {
    ref = m.max_abs();
  }
  out.threshold = policy.rank_tolerance * ref;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > out.threshold) ++out.rank;
  return out;
}

bool exact_inputs(const DenseMatrix& m) { return m.is_exact(); }

bool exact_inputs(const DenseMatrix& m, std::span<const Scalar> b) {
  return m.is_exact() && std::all_of(b.begin(), b.end(), [](const Scalar& s) { return s.is_exact(); });
}

}  // namespace

DenseMatrix from_columns(std::span<const Vector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  DenseMatrix m(n, vectors.size());
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != n) throw std::invalid_argument("vectors of unequal length");
    for (std::size_t i = 0; i < n; ++i) m(i, k) = vectors[k][i];
  }
  return m;
}

std::size_t rank(const DenseMatrix& m, const NumericPolicy& policy) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (exact_inputs(m)) return bareiss_rank(to_grid(m));
  return float_svd(m, policy, 0).rank;
}

std::vector<Vector> kernel_basis(const DenseMatrix& m, const NumericPolicy& policy) {
  const std::size_t cols = m.cols();
  std::vector<Vector> basis;
  if (cols == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t k = 0; k < cols; ++k) {
      Vector v(cols);
      v[k] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  if (exact_inputs(m)) {
    Grid g = to_grid(m);
    auto pivots = rref(g, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      Vector v(cols);
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = Scalar(-g[r][free]);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  auto s = float_svd(m, policy, Eigen::ComputeFullV);
  const auto& V = s.svd.matrixV();
  for (std::size_t k = s.rank; k < cols; ++k) {
    Vector v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = Scalar(V(i, k));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const DenseMatrix& a, std::span<const Scalar> b, const NumericPolicy& policy) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length");
  const std::size_t cols = a.cols();
  if (exact_inputs(a, b)) {
    Grid g = to_grid(a);
    for (std::size_t i = 0; i < g.size(); ++i) g[i].push_back(b[i].exact());
    auto pivots = rref(g, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vector x(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = Scalar(g[r][cols]);
    return x;
  }
  Eigen::VectorXcd rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i) = b[i].to_complex();
  Vector x(cols);
  if (cols == 0 || a.rows() == 0) {
    if (rhs.norm() > 0.0) return std::nullopt;
    for (auto& v : x) v = Scalar(std::complex<double>(0.0));
    return x;
  }
  auto s = float_svd(a, policy, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = s.svd.singularValues();
  Eigen::VectorXcd ub = s.svd.matrixU().adjoint() * rhs;
  for (Eigen::Index k = 0; k < sv.size(); ++k) ub(k) = sv(k) > s.threshold ? ub(k) / sv(k) : 0.0;
  Eigen::VectorXcd sol = s.svd.matrixV() * ub;
  Eigen::MatrixXcd ea = to_eigen(a);
  double residual = (ea * sol - rhs).norm();
  // Relative to the data, and never below the matrix scale: residue under
  // span_tolerance·σ_max is noise at the rank threshold.
  const double sv0 = sv.size() ? sv(0) : 0.0;
  double scale = std::max({rhs.norm(), sv0 * sol.norm(), sv0});
  if (residual > policy.span_tolerance * scale) return std::nullopt;
  for (std::size_t i = 0; i < cols; ++i) x[i] = Scalar(sol(i));
  return x;
}

std::optional<Vector> coordinates_in_span(std::span<const Vector> basis, std::span<const Scalar> target,
                                          const NumericPolicy& policy) {
  if (basis.empty()) {
    bool zero = std::all_of(target.begin(), target.end(), [&](const Scalar& s) {
      return s.is_exact() ? s.exactly_zero() : s.magnitude() <= policy.span_tolerance;
    });
    return zero ? std::optional<Vector>(Vector{}) : std::nullopt;
  }
  DenseMatrix m = from_columns(basis);
#ifndef NDEBUG
  if (rank(m, policy) != basis.size()) throw std::invalid_argument("coordinates_in_span: dependent basis");
#endif
  return solve(m, target, policy);
}

std::vector<std::size_t> independent_columns(const DenseMatrix& m, const NumericPolicy& policy) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  if (exact_inputs(m)) {
    Grid g = to_grid(m);
    return rref(g, m.cols());
  }
  std::size_t r = rank(m, policy);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(to_eigen(m));
  std::vector<std::size_t> cols;
  const auto& perm = qr.colsPermutation().indices();
  for (std::size_t k = 0; k < r; ++k) cols.push_back(static_cast<std::size_t>(perm(k)));
  std::sort(cols.begin(), cols.end());
  return cols;
}

DenseMatrix inverse(const DenseMatrix& m, const NumericPolicy& policy) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  if (exact_inputs(m)) {
    Grid g = to_grid(m);
    for (std::size_t i = 0; i < n; ++i) {
      g[i].resize(2 * n);
      g[i][n + i] = GaussianRational(1);
    }
    auto pivots = rref(g, n);
    if (pivots.size() != n) throw SingularMatrix("exact inverse");
    DenseMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = Scalar(g[i][n + j]);
    return inv;
  }
  if (rank(m, policy) != n) throw SingularMatrix("numerically singular");
  Eigen::MatrixXcd e = to_eigen(m).inverse();
  DenseMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = Scalar(e(i, j));
  return inv;
}

}  // namespace dqg
