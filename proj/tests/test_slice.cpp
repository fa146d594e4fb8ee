#include "support.hpp"

#include "dqg/errors.hpp"
#include "dqg/slice.hpp"

using namespace dqg;
using testing::point;
using testing::q;

namespace {

Multiplier random_rule(const AlgebraPtr& z, std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0:
      return Multiplier::polynomial(z, {random_scalar(rng, ScalarMode::Exact), random_scalar(rng, ScalarMode::Exact),
                                        random_scalar(rng, ScalarMode::Exact)});
    case 1:
      return random_scalar(rng, ScalarMode::Exact) * Multiplier::character(z, static_cast<long>(rng() % 4), 4, ScalarMode::Exact);
    case 2: {
      std::map<Index, DenseMatrix> t;
      for (int k = 0; k < 3; ++k)
        t[Index(static_cast<long>(rng() % 9) - 4)] = DenseMatrix{{random_scalar(rng, ScalarMode::Exact)}};
      return Multiplier::table(z, std::move(t), Multiplier::scalar(z, random_scalar(rng, ScalarMode::Exact)));
    }
    default:
      return embed_element(random_element(z, z->window(0), rng, ScalarMode::Exact));
  }
}

TensorMultiplier random_tensor(const DQGDescriptor& d, std::mt19937_64& rng, bool finite_rank = false) {
  const auto& z = d.algebra();
  if (!finite_rank && rng() % 3 == 0) return coproduct_of_multiplier(d, random_rule(z, rng));
  std::vector<Multiplier> xs, ys;
  const auto terms = 1 + rng() % 3;
  for (std::size_t k = 0; k < terms; ++k) {
    xs.push_back(random_rule(z, rng));
    ys.push_back(random_rule(z, rng));
  }
  return TensorMultiplier::sum_of_elementary(xs, ys);
}

// (ζ⊗ξ)(Y) for counting-measure duals and left representatives: Σ Y(β,α)·s_β·r_α.
Scalar pairing_oracle(const Element& s, const Element& r, const TensorMultiplier& y) {
  Scalar total;
  for (const auto& [beta, sb] : s.blocks())
    for (const auto& [alpha, ra] : r.blocks()) total += y.block(beta, alpha)(0, 0) * sb(0, 0) * ra(0, 0);
  return total;
}

}  // namespace

TEST_CASE("slice examples on the dual of Z") {
  const auto z = dual_of_group(GroupModel::integers());
  const auto& alg = z.algebra();
  const auto id = slice(TensorMultiplier::identity(alg, alg), ReducedFunctional::point_mass(z.haar(), Index(0)));
  for (const auto& i : alg->window(1)) CHECK(id.block(i) == DenseMatrix::identity(1));

  const auto y = coproduct_of_multiplier(z, Multiplier::polynomial(alg, {q(0), q(1)}));
  for (long k : {-2L, 0L, 3L}) {
    const auto m = slice(y, ReducedFunctional::point_mass(z.haar(), Index(k)));
    for (long g = -8; g <= 8; ++g) CHECK(m.block(Index(g))(0, 0) == q(g + k));
  }

  const auto x = Multiplier::polynomial(alg, {q(1), q(2)});
  const auto w = Multiplier::character(alg, 1, 4, ScalarMode::Exact);
  const ReducedFunctional xi(z.haar(), point(alg, 1, q(3)) + point(alg, 2));
  const auto s = slice(TensorMultiplier::elementary(x, w), xi);
  const Scalar c = xi.evaluate(w);
  for (long g = -4; g <= 4; ++g) CHECK(s.block(Index(g))(0, 0) == c * x.block(Index(g))(0, 0));
}

TEST_CASE("slice-space dimension on the dual of Z") {
  const auto z = dual_of_group(GroupModel::integers());
  const auto& alg = z.algebra();

  const auto chi = slice_space_dimension(coproduct_of_multiplier(z, Multiplier::character(alg, 1, 4, ScalarMode::Exact)), z);
  CHECK(chi.stabilized);
  CHECK(chi.final_dimension == 1);

  const auto n = slice_space_dimension(coproduct_of_multiplier(z, Multiplier::polynomial(alg, {q(0), q(1)})), z);
  CHECK(n.stabilized);
  CHECK(n.final_dimension == 2);
  CHECK(n.dimensions() == std::vector<std::size_t>{2, 2, 2});

  SliceOptions four;
  four.budget = 4;
  const auto d0 = slice_space_dimension(coproduct(z, point(alg, 0)), z, four);
  CHECK_FALSE(d0.stabilized);
  CHECK(d0.budget_exceeded);
  CHECK(d0.dimensions() == std::vector<std::size_t>{9, 17, 33, 65});
  CHECK_THROWS_AS(factor(coproduct(z, point(alg, 0)), z, d0), std::invalid_argument);
}

TEST_CASE("factorization of x(n) = n") {
  const auto z = dual_of_group(GroupModel::integers());
  const auto& alg = z.algebra();
  const auto y = coproduct_of_multiplier(z, Multiplier::polynomial(alg, {q(0), q(1)}));
  const auto rep = slice_space_dimension(y, z);
  const auto f = factor(y, z, rep);
  REQUIRE(f.x.size() == 2);
  CHECK(f.reconstruction.passed);
  CHECK(f.double_centralizer.passed);
  CHECK(f.reconstruction.window_relative);
  // Σ x_k(g)y_k(n) = g + n, also outside the checked windows
  for (long g : {-40L, 0L, 17L})
    for (long n : {-23L, 5L, 50L}) {
      Scalar s;
      for (std::size_t k = 0; k < 2; ++k) s += f.x[k].block(Index(g))(0, 0) * f.y[k].block(Index(n))(0, 0);
      CHECK(s == q(g + n));
    }
  // the x_k span {g, 1}
  std::vector<Vector> xs;
  for (const auto& x : f.x) {
    Vector v;
    for (long g = -3; g <= 3; ++g) v.push_back(x.block(Index(g))(0, 0));
    xs.push_back(v);
  }
  Vector ones(7, q(1)), lin;
  for (long g = -3; g <= 3; ++g) lin.push_back(q(g));
  CHECK(coordinates_in_span(xs, ones));
  CHECK(coordinates_in_span(xs, lin));
}

TEST_CASE("factorization of the order-4 character") {
  const auto z = dual_of_group(GroupModel::integers());
  const auto& alg = z.algebra();
  const auto chi = Multiplier::character(alg, 1, 4, ScalarMode::Exact);
  const auto r = is_almost_periodic(chi, z);
  CHECK(r.affirmative);
  CHECK(r.verdict == "almost periodic");
  REQUIRE(r.factorization);
  REQUIRE(r.factorization->y.size() == 1);
  // y_1 = c·ζ^n
  const auto& y1 = r.factorization->y[0];
  const Scalar c = y1.block(Index(0))(0, 0);
  for (long n = -9; n <= 9; ++n) CHECK(y1.block(Index(n))(0, 0) == c * chi.block(Index(n))(0, 0));
}

TEST_CASE("factorization of an elementary tensor recovers it up to scale") {
  const auto z = dual_of_group(GroupModel::integers());
  const auto& alg = z.algebra();
  const auto x = Multiplier::polynomial(alg, {q(2), q(0), q(1)});
  const auto w = Multiplier::table(alg, {{Index(0), DenseMatrix{{q(5)}}}}, Multiplier::polynomial(alg, {q(1), q(1)}));
  const auto y = TensorMultiplier::elementary(x, w);
  const auto rep = slice_space_dimension(y, z);
  REQUIRE(rep.final_dimension == 1);
  const auto f = factor(y, z, rep);
  const Scalar c = f.x[0].block(Index(0))(0, 0) / x.block(Index(0))(0, 0);
  for (long g = -5; g <= 5; ++g) {
    CHECK(f.x[0].block(Index(g))(0, 0) == c * x.block(Index(g))(0, 0));
    CHECK(f.y[0].block(Index(g))(0, 0) * c == w.block(Index(g))(0, 0));
  }
}

TEST_CASE("δ_0 has no finite certificate") {
  const auto z = dual_of_group(GroupModel::integers());
  SliceOptions o;
  o.budget = 3;
  const auto r = is_almost_periodic(embed_element(point(z.algebra(), 0)), z, o);
  CHECK_FALSE(r.affirmative);
  CHECK(r.verdict == "no finite certificate");
  CHECK_FALSE(r.factorization);
}

TEST_CASE("property: slice uniqueness against an independent pairing") {
  std::mt19937_64 rng(51);
  const auto z = dual_of_group(GroupModel::integers());
  const auto& alg = z.algebra();
  const auto pool = alg->window(0);
  for (int t = 0; t < 6; ++t) {
    const auto y = random_tensor(z, rng);
    const ReducedFunctional xi(z.haar(), random_element(alg, pool, rng, ScalarMode::Exact));
    const auto s = slice(y, xi);
    for (int k = 0; k < 5; ++k) {
      const ReducedFunctional zeta(z.haar(), random_element(alg, pool, rng, ScalarMode::Exact));
      const Scalar oracle = pairing_oracle(zeta.representative(), xi.representative(), y);
      CHECK(zeta.evaluate(s) == oracle);
      CHECK(evaluate_tensor_functional(zeta, xi, y) == oracle);
    }
  }
}

TEST_CASE("property: slices are linear in the functional") {
  std::mt19937_64 rng(52);
  const auto z = dual_of_group(GroupModel::integers());
  const auto& alg = z.algebra();
  for (int t = 0; t < 5; ++t) {
    const auto y = random_tensor(z, rng);
    const ReducedFunctional a(z.haar(), random_element(alg, alg->window(0), rng, ScalarMode::Exact));
    const ReducedFunctional b(z.haar(), random_element(alg, alg->window(0), rng, ScalarMode::Exact));
    const Scalar c1 = random_scalar(rng, ScalarMode::Exact), c2 = random_scalar(rng, ScalarMode::Exact);
    const auto lhs = slice(y, c1 * a + c2 * b);
    const auto sa = slice(y, a), sb = slice(y, b);
    for (const auto& g : alg->window(0)) CHECK(lhs.block(g) == sa.block(g) * c1 + sb.block(g) * c2);
  }
}

TEST_CASE("property: slice on non-tracial blocks matches the trace formula") {
  std::mt19937_64 rng(53);
  const auto m2 = testing::m2_haar();
  const auto& alg = m2->algebra();
  for (int t = 0; t < 5; ++t) {
    const Element xb = random_element(alg, {Index(0)}, rng, ScalarMode::Exact);
    const Element ya = random_element(alg, {Index(0)}, rng, ScalarMode::Exact);
    const auto y = TensorMultiplier::elementary(embed_element(xb), embed_element(ya));
    for (auto side : {FunctionalSide::LeftOfPhi, FunctionalSide::RightOfPhi}) {
      const ReducedFunctional xi(m2, random_element(alg, {Index(0)}, rng, ScalarMode::Exact), side);
      const ReducedFunctional zeta(m2, random_element(alg, {Index(0)}, rng, ScalarMode::Exact), side);
      CHECK(slice(y, xi).block(Index(0)) == xb.block(Index(0)) * xi(ya));
      CHECK(evaluate_tensor_functional(zeta, xi, y) == zeta(xb) * xi(ya));
    }
  }
}

TEST_CASE("property: forward direction and monotonicity") {
  std::mt19937_64 rng(54);
  const auto z = dual_of_group(GroupModel::integers());
  for (int t = 0; t < 4; ++t) {
    const auto y = random_tensor(z, rng, true);
    SliceOptions o;
    o.budget = 4;
    const auto rep = slice_space_dimension(y, z, o);
    const auto dims = rep.dimensions();
    for (std::size_t k = 1; k < dims.size(); ++k) CHECK(dims[k] >= dims[k - 1]);
    CHECK(rep.final_dimension <= 3);
    if (rep.stabilized) {
      const auto f = factor(y, z, rep);
      CHECK(f.reconstruction.passed);
      CHECK(f.double_centralizer.passed);
    }
  }
}

TEST_CASE("property: normalization independence") {
  const auto z = dual_of_group(GroupModel::integers());
  const auto& alg = z.algebra();
  const auto z7 = z.with_haar(z.haar()->rescaled(q(7)));
  const auto y = coproduct_of_multiplier(z, Multiplier::polynomial(alg, {q(1), q(-1), q(1)}));
  const auto r1 = slice_space_dimension(y, z);
  const auto r7 = slice_space_dimension(y, z7);
  CHECK(r1.dimensions() == r7.dimensions());
  const auto f1 = factor(y, z, r1);
  const auto f7 = factor(y, z7, r7);
  for (long g = -6; g <= 6; ++g)
    for (long n = -6; n <= 6; ++n) {
      Scalar s1, s7;
      for (std::size_t k = 0; k < f1.x.size(); ++k) s1 += f1.x[k].block(Index(g))(0, 0) * f1.y[k].block(Index(n))(0, 0);
      for (std::size_t k = 0; k < f7.x.size(); ++k) s7 += f7.x[k].block(Index(g))(0, 0) * f7.y[k].block(Index(n))(0, 0);
      CHECK(s1 == s7);
    }
}

TEST_CASE("SU(2) Casimir has a five-dimensional slice space") {
  const auto su = dual_of_su2(3);
  // j(j+1) = n/2 + n^2/4 with n = 2j
  const auto cas = Multiplier::from_function(
      su.algebra(),
      [](const Index& n) {
        const double j = static_cast<double>(n.value()) / 2.0;
        return DenseMatrix::identity(n.value() + 1) * Scalar::from_double(j * (j + 1));
      },
      "casimir");
  const auto r = is_almost_periodic(cas, su);
  CHECK(r.affirmative);
  CHECK(r.slices.final_dimension == 5);
  REQUIRE(r.factorization);
  CHECK(r.factorization->reconstruction.max_deviation <= 1e-7);
}
