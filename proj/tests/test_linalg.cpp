#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace dqg;
using testing::q;

TEST_CASE("scalar parsing and arithmetic") {
  CHECK(Scalar::parse("3/6", ScalarMode::Exact) == q(1, 2));
  CHECK(Scalar::parse("1/2-3/4i", ScalarMode::Exact) == Scalar::rational(1, 2, -3, 4));
  CHECK(Scalar::parse("-i", ScalarMode::Exact) == Scalar::rational(0, 1, -1, 1));
  CHECK(Scalar::parse("0.25", ScalarMode::Exact) == q(1, 4));
  CHECK(Scalar::parse("1e-3", ScalarMode::Float).to_complex().real() == doctest::Approx(1e-3));
  CHECK_THROWS_AS(Scalar::parse("", ScalarMode::Exact), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1/0", ScalarMode::Exact), std::invalid_argument);

  const Scalar i = Scalar::imaginary_unit();
  CHECK(i * i == q(-1));
  CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
  CHECK((q(2) / Scalar::rational(1, 1, 1, 1)) == Scalar::rational(1, 1, -1, 1));
  CHECK(q(5, 4).to_string() == "5/4");
  CHECK(Scalar::rational(0, 1, -2, 1).to_string() == "-2i");
  CHECK_THROWS(q(1) / q(0));
  CHECK_THROWS_AS(Scalar::from_double(0.5).to_mode(ScalarMode::Exact), std::invalid_argument);
}

TEST_CASE("rank on hand examples") {
  CHECK(rank(DenseMatrix::identity(2)) == 2);
  CHECK(rank(DenseMatrix::zero(3, 4)) == 0);
  const DenseMatrix m{{q(1), q(2)}, {q(2), q(4)}};
  CHECK(rank(m) == 1);
  CHECK(rank(m.to_mode(ScalarMode::Float)) == 1);
}

TEST_CASE("kernel basis on hand examples") {
  CHECK(kernel_basis(DenseMatrix::identity(3)).empty());
  CHECK(kernel_basis(DenseMatrix::zero(2, 2)).size() == 2);

  const DenseMatrix m{{q(1), q(2)}, {q(2), q(4)}};
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  // proportional to (2, -1)
  CHECK(k[0][0] * q(-1) == k[0][1] * q(2));
  CHECK(!k[0][0].exactly_zero());

  const auto kf = kernel_basis(m.to_mode(ScalarMode::Float));
  REQUIRE(kf.size() == 1);
  const auto z0 = kf[0][0].to_complex(), z1 = kf[0][1].to_complex();
  CHECK(std::abs(z0 + 2.0 * z1) < 1e-12);
}

TEST_CASE("coordinates in span") {
  const std::vector<Vector> e = {{q(1), q(0)}, {q(0), q(1)}};
  const auto c = coordinates_in_span(e, Vector{q(3), q(-2)});
  REQUIRE(c);
  CHECK((*c)[0] == q(3));
  CHECK((*c)[1] == q(-2));

  const std::vector<Vector> diag = {{q(1), q(1)}};
  const auto d = coordinates_in_span(diag, Vector{q(2), q(2)});
  REQUIRE(d);
  CHECK((*d)[0] == q(2));
  CHECK_FALSE(coordinates_in_span(diag, Vector{q(1), q(0)}));
}

TEST_CASE("solve, inverse and independent columns") {
  const DenseMatrix a{{q(2), q(1)}, {q(1), q(1)}};
  const auto x = solve(a, Vector{q(3), q(2)});
  REQUIRE(x);
  CHECK((*x)[0] == q(1));
  CHECK((*x)[1] == q(1));
  CHECK(inverse(a) * a == DenseMatrix::identity(2));
  CHECK_THROWS_AS(inverse(DenseMatrix{{q(1), q(2)}, {q(2), q(4)}}), SingularMatrix);

  const DenseMatrix cols{{q(1), q(2), q(0)}, {q(1), q(2), q(1)}};
  CHECK(independent_columns(cols) == std::vector<std::size_t>{0, 2});
  CHECK_FALSE(solve(DenseMatrix{{q(1)}, {q(1)}}, Vector{q(1), q(2)}));
}

TEST_CASE("float tolerance policy") {
  DenseMatrix m{{q(1), q(0)}, {q(0), q(0)}};
  DenseMatrix f = m.to_mode(ScalarMode::Float);
  f(1, 1) = Scalar::from_double(1e-12);
  CHECK(rank(f) == 1);
  NumericPolicy tight;
  tight.rank_tolerance = 1e-14;
  CHECK(rank(f, tight) == 2);
}

TEST_CASE("kron, partial trace and swap") {
  const DenseMatrix x{{q(1), q(2)}, {q(3), q(4)}};
  const DenseMatrix y{{q(0), q(1)}, {q(1), q(0)}};
  const DenseMatrix k = kron(x, y);
  CHECK(k(0, 1) == q(1));
  CHECK(k(2, 1) == q(3));
  CHECK(partial_trace_second(kron(x, DenseMatrix::identity(3)), 2, 3) == x * q(3));
  const DenseMatrix s = swap_matrix(2, 2);
  CHECK(s * kron(x, y) * s.adjoint() == kron(y, x));
}

TEST_CASE("property: rank plus nullity equals column count") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 25; ++t) {
    DenseMatrix m = random_matrix(6, 6, rng, ScalarMode::Exact);
    // force some dependencies
    if (t % 3 == 0)
      for (std::size_t r = 0; r < 6; ++r) m(r, 5) = m(r, 0) + m(r, 1);
    if (t % 4 == 0)
      for (std::size_t c = 0; c < 6; ++c) m(4, c) = m(2, c) * q(3);
    CHECK(rank(m) + kernel_basis(m).size() == 6);
    const DenseMatrix f = m.to_mode(ScalarMode::Float);
    CHECK(rank(f) + kernel_basis(f).size() == 6);
    CHECK(rank(f) == rank(m));
  }
}

TEST_CASE("property: rank is invariant under row and column permutation") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    DenseMatrix m = random_matrix(5, 6, rng, ScalarMode::Exact);
    for (std::size_t c = 0; c < 6; ++c) m(3, c) = m(0, c) - m(1, c);
    std::vector<std::size_t> rp(5), cp(6);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    DenseMatrix p(5, 6);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 6; ++c) p(r, c) = m(rp[r], cp[c]);
    CHECK(rank(p) == rank(m));
    CHECK(rank(p.to_mode(ScalarMode::Float)) == rank(m));
  }
}

TEST_CASE("property: span coordinates recombine to the target") {
  std::mt19937_64 rng(13);
  for (auto mode : {ScalarMode::Exact, ScalarMode::Float}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Vector> basis;
      for (int k = 0; k < 3; ++k) {
        const DenseMatrix v = random_matrix(6, 1, rng, mode);
        basis.emplace_back(v.entries().begin(), v.entries().end());
      }
      const DenseMatrix all = from_columns(basis);
      if (rank(all) < 3) continue;
      Vector coeffs = {random_scalar(rng, mode), random_scalar(rng, mode), random_scalar(rng, mode)};
      Vector target(6);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t k = 0; k < 3; ++k) target[i] += coeffs[k] * basis[k][i];
      const auto c = coordinates_in_span(basis, target);
      REQUIRE(c);
      Vector back(6);
      double err = 0, norm = 0;
      for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t k = 0; k < 3; ++k) back[i] += (*c)[k] * basis[k][i];
        err = std::max(err, (back[i] - target[i]).magnitude());
        norm = std::max(norm, target[i].magnitude());
      }
      if (mode == ScalarMode::Exact) {
        CHECK(back == target);
      } else {
        CHECK(err <= 1e-8 * std::max(1.0, norm));
      }
    }
  }
}
