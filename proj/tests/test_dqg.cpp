#include <algorithm>
#include <array>

#include "support.hpp"

#include "dqg/errors.hpp"
#include "dqg/verify.hpp"

using namespace dqg;
using testing::point;
using testing::q;

namespace {

// Permutations of {0,1,2} in lexicographic order and their composition, independent of GroupModel.
std::vector<std::array<int, 3>> s3_perms() {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

long s3_product(long g, long h) {
  const auto perms = s3_perms();
  std::array<int, 3> gh{};
  for (int x = 0; x < 3; ++x) gh[x] = perms[g][perms[h][x]];
  return std::find(perms.begin(), perms.end(), gh) - perms.begin();
}

double max_dev_from_identity(const DenseMatrix& m) {
  return max_abs_diff(m, DenseMatrix::identity(m.rows()));
}

}  // namespace

TEST_CASE("group models") {
  const auto s3 = GroupModel::symmetric_group_3();
  for (long g = 0; g < 6; ++g)
    for (long h = 0; h < 6; ++h) CHECK(s3.multiply(Index(g), Index(h)) == Index(s3_product(g, h)));
  CHECK(s3.identity() == Index(0));

  CHECK_THROWS_AS(GroupModel::finite_cayley({{0, 1}, {0, 1}}, 0, "bad"), std::invalid_argument);
  const auto c3 = GroupModel::cyclic(3);
  CHECK(c3.multiply(Index(2), Index(2)) == Index(1));
  CHECK(c3.inverse(Index(1)) == Index(2));

  const auto f2 = GroupModel::free_group(2);
  const Index a{1}, b{2}, a_inv{-1};
  CHECK(f2.multiply(a, a_inv) == f2.identity());
  CHECK(f2.multiply(f2.multiply(a, b), f2.inverse(b)) == a);

  const auto z2 = GroupModel::integer_pairs();
  CHECK(z2.multiply(Index{1, -2}, Index{3, 5}) == (Index{4, 3}));
}

TEST_CASE("coproduct on the dual of Z") {
  const auto z = dual_of_group(GroupModel::integers());
  const auto d5 = coproduct(z, point(z.algebra(), 5));
  for (long g = -6; g <= 6; ++g)
    for (long h = -6; h <= 6; ++h) CHECK(d5.block(Index(g), Index(h))(0, 0) == q(g + h == 5 ? 1 : 0));
  const auto zero = coproduct(z, Element(z.algebra()));
  CHECK(zero.block(Index(2), Index(3)).exactly_zero());
}

TEST_CASE("coproduct of multipliers on the dual of Z") {
  const auto z = dual_of_group(GroupModel::integers());
  const auto& alg = z.algebra();
  const auto n = coproduct_of_multiplier(z, Multiplier::polynomial(alg, {q(0), q(1)}));
  const auto chi = Multiplier::character(alg, 1, 4, ScalarMode::Exact);
  const auto dchi = coproduct_of_multiplier(z, chi);
  const auto id = coproduct_of_multiplier(z, Multiplier::identity(alg));
  const Scalar i = Scalar::imaginary_unit();
  auto ipow = [&](long k) {
    Scalar p(1);
    for (long t = 0; t < ((k % 4) + 4) % 4; ++t) p *= i;
    return p;
  };
  for (long g = -5; g <= 5; ++g)
    for (long h = -5; h <= 5; ++h) {
      CHECK(n.block(Index(g), Index(h))(0, 0) == q(g + h));
      CHECK(dchi.block(Index(g), Index(h))(0, 0) == ipow(g) * ipow(h));
      CHECK(id.block(Index(g), Index(h))(0, 0) == q(1));
    }
}

TEST_CASE("trivial group") {
  const auto t = dual_of_group(GroupModel::trivial());
  const auto d = coproduct(t, point(t.algebra(), 0));
  CHECK(d.block(Index(0), Index(0)) == DenseMatrix::identity(1));
  CHECK(verify_mhopf_axioms(t).passed());
  CHECK(dual_unit(t).same_functional(ReducedFunctional::point_mass(t.haar(), Index(0))));
}

TEST_CASE("S3 fusion and coassociativity pass exhaustively") {
  const auto s3 = dual_of_group(GroupModel::symmetric_group_3());
  const auto fusion = verify_fusion(s3);
  CHECK(fusion.passed());
  CHECK_FALSE(fusion.checks.front().window_relative);
  std::vector<Element> probes;
  for (long g = 0; g < 6; ++g) probes.push_back(point(s3.algebra(), g));
  CHECK(verify_coassociativity(s3, probes).passed());
}

TEST_CASE("Clebsch-Gordan data") {
  const auto cg = clebsch_gordan(1, 1);
  REQUIRE(cg.size() == 2);
  std::vector<std::int64_t> targets;
  DenseMatrix sum(4, 4);
  for (const auto& ch : cg) {
    targets.push_back(ch.target.value());
    sum += ch.isometry * ch.isometry.adjoint();
    CHECK(max_dev_from_identity(ch.isometry.adjoint() * ch.isometry) <= 1e-12);
  }
  std::sort(targets.begin(), targets.end());
  CHECK(targets == std::vector<std::int64_t>{0, 2});
  CHECK(max_dev_from_identity(sum) <= 1e-9);

  // singlet (|↑↓⟩ - |↓↑⟩)/√2 up to the fixed phase
  for (const auto& ch : cg)
    if (ch.target.value() == 0) {
      CHECK(std::abs(ch.isometry(1, 0).to_complex().real() - std::sqrt(0.5)) <= 1e-12);
      CHECK(std::abs(ch.isometry(2, 0).to_complex().real() + std::sqrt(0.5)) <= 1e-12);
    }

  for (std::int64_t b = 0; b <= 4; ++b) {
    const auto with_trivial = clebsch_gordan(b, 0);
    REQUIRE(with_trivial.size() == 1);
    CHECK(with_trivial[0].target.value() == b);
    CHECK(max_dev_from_identity(with_trivial[0].isometry) <= 1e-12);
  }

  for (std::int64_t j1 = 0; j1 <= 3; ++j1)
    for (std::int64_t j2 = 0; j2 <= 3; ++j2) {
      const auto n = static_cast<std::size_t>((j1 + 1) * (j2 + 1));
      DenseMatrix s(n, n);
      for (const auto& ch : clebsch_gordan(j1, j2)) s += ch.isometry * ch.isometry.adjoint();
      CHECK(max_dev_from_identity(s) <= 1e-9);
    }
}

TEST_CASE("SU(2) dual structure") {
  const auto su = dual_of_su2(3);
  const auto fusion = verify_fusion(su);
  CHECK(fusion.passed());
  for (const auto& c : fusion.checks) CHECK(c.max_deviation <= 1e-9);

  const auto a = Element::matrix_unit(su.algebra(), Index(1), 0, 0);
  const auto inv = verify_left_invariance(su, a);
  CHECK(inv.passed());
  for (const auto& c : inv.checks) CHECK(c.max_deviation <= 1e-8);
  const Scalar phi_a = (*su.haar())(a);
  for (long beta = 0; beta <= 2; ++beta) {
    const auto block = left_invariance_block(su, a, Index(beta));
    CHECK(max_abs_diff(block, DenseMatrix::identity(beta + 1) * phi_a) <= 1e-8);
  }

  // δ(1_0) only sees pairs (β, β)
  const auto d0 = coproduct(su, Element::block_identity(su.algebra(), Index(0)));
  for (long b = 0; b <= 3; ++b)
    for (long g = 0; g <= 3; ++g) {
      const double m = d0.block(Index(b), Index(g)).max_abs();
      if (b == g) CHECK(m > 0.1);
      else CHECK(m == 0.0);
    }
  CHECK(verify_coassociativity(su, {Element::matrix_unit(su.algebra(), Index(2), 0, 1)}).passed());
}

TEST_CASE("multiplier Hopf axioms") {
  const auto s3 = dual_of_group(GroupModel::symmetric_group_3());
  const auto r = verify_mhopf_axioms(s3);
  CHECK(r.passed());
  for (const auto& c : r.checks) CHECK_FALSE(c.window_relative);

  const auto z = dual_of_group(GroupModel::integers());
  const auto rz = verify_mhopf_axioms(z);
  CHECK(rz.passed());
  REQUIRE(rz.find("T1 surjective"));
  CHECK(rz.find("T1 surjective")->window_relative);

  const auto su = dual_of_su2(1);
  CHECK(verify_mhopf_axioms(su).passed());
  CHECK(verify_mhopf_axioms(z.flipped()).passed());
}

TEST_CASE("T1 on the dual of Z by hand") {
  // T1(δ_a⊗δ_b) = δ(δ_a)(1⊗δ_b) = δ_{a-b}⊗δ_b
  const auto z = dual_of_group(GroupModel::integers());
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const auto d = coproduct(z, point(z.algebra(), a));
      // 1⊗δ_b truncated to a window wide enough for the support
      TensorElement one_b(z.algebra(), z.algebra());
      for (long c = -10; c <= 10; ++c) one_b += TensorElement::elementary(point(z.algebra(), c), point(z.algebra(), b));
      const auto img = tensor_multiplier_apply(d, one_b, Side::Left);
      CHECK(img == TensorElement::elementary(point(z.algebra(), a - b), point(z.algebra(), b)));
    }
}

TEST_CASE("property: coproduct is multiplicative") {
  std::mt19937_64 rng(41);
  const auto s3 = dual_of_group(GroupModel::symmetric_group_3());
  const auto su = dual_of_su2(2);
  for (const auto* d : {&s3, &su}) {
    const auto mode = d == &su ? ScalarMode::Float : ScalarMode::Exact;
    const auto& alg = d->algebra();
    const auto pool = alg->window(0);
    for (int t = 0; t < 5; ++t) {
      const Element a = random_element(alg, pool, rng, mode);
      const Element b = random_element(alg, pool, rng, mode);
      const auto tensor = TensorElement::elementary(random_element(alg, pool, rng, mode), random_element(alg, pool, rng, mode));
      const auto lhs = tensor_multiplier_apply(coproduct(*d, a * b), tensor, Side::Left);
      const auto rhs = tensor_multiplier_apply(coproduct(*d, a), tensor_multiplier_apply(coproduct(*d, b), tensor, Side::Left), Side::Left);
      CHECK(approx_equal(lhs, rhs, 1e-10));
    }
  }
}

TEST_CASE("property: coproduct of an embedded element agrees with the coproduct") {
  std::mt19937_64 rng(42);
  const auto z = dual_of_group(GroupModel::integers());
  const auto su = dual_of_su2(2);
  for (const auto* d : {&z, &su}) {
    const auto mode = d == &su ? ScalarMode::Float : ScalarMode::Exact;
    const auto pool = d->algebra()->window(0);
    const Element a = random_element(d->algebra(), pool, rng, mode);
    const auto lhs = coproduct_of_multiplier(*d, embed_element(a));
    const auto rhs = coproduct(*d, a);
    for (const auto& b : pool)
      for (const auto& g : pool) CHECK(approx_equal(lhs.block(b, g), rhs.block(b, g), 1e-12));
  }
}

TEST_CASE("convolution on group duals") {
  const auto z = dual_of_group(GroupModel::integers());
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      const auto c = convolve(ReducedFunctional::point_mass(z.haar(), Index(a)),
                              ReducedFunctional::point_mass(z.haar(), Index(b)), z);
      CHECK(c.representative() == point(z.algebra(), a + b));
    }

  const auto s3 = dual_of_group(GroupModel::symmetric_group_3());
  for (long g = 0; g < 6; ++g)
    for (long h = 0; h < 6; ++h) {
      const auto c = convolve(ReducedFunctional::point_mass(s3.haar(), Index(g)),
                              ReducedFunctional::point_mass(s3.haar(), Index(h)), s3);
      CHECK(c.representative() == point(s3.algebra(), s3_product(g, h)));
    }

  const auto other = dual_of_group(GroupModel::cyclic(3));
  CHECK_THROWS_AS(convolve(ReducedFunctional::point_mass(z.haar(), Index(0)),
                           ReducedFunctional::point_mass(other.haar(), Index(0)), z),
                  AlgebraMismatch);
}

TEST_CASE("dual unit") {
  const auto z = dual_of_group(GroupModel::integers());
  CHECK(dual_unit(z).same_functional(ReducedFunctional::point_mass(z.haar(), Index(0))));
  const auto s3 = dual_of_group(GroupModel::symmetric_group_3());
  const auto u = dual_unit(s3);
  CHECK(u.same_functional(ReducedFunctional::point_mass(s3.haar(), Index(0))));
  for (long g = 0; g < 6; ++g) {
    const auto xi = ReducedFunctional::point_mass(s3.haar(), Index(g));
    CHECK(convolve(u, xi, s3).same_functional(xi));
    CHECK(convolve(xi, u, s3).same_functional(xi));
  }
  const auto su = dual_of_su2(3);
  const auto us = dual_unit(su);
  REQUIRE(us.representative().support().size() == 1);
  CHECK(us.representative().support()[0] == Index(0));
}

TEST_CASE("property: convolution is associative") {
  std::mt19937_64 rng(43);
  const auto s3 = dual_of_group(GroupModel::symmetric_group_3());
  const auto su = dual_of_su2(2);
  for (const auto* d : {&s3, &su}) {
    const auto mode = d == &su ? ScalarMode::Float : ScalarMode::Exact;
    const auto pool = d->algebra()->window(0);
    for (int t = 0; t < 4; ++t) {
      const ReducedFunctional a(d->haar(), random_element(d->algebra(), pool, rng, mode, 2));
      const ReducedFunctional b(d->haar(), random_element(d->algebra(), pool, rng, mode, 2));
      const ReducedFunctional c(d->haar(), random_element(d->algebra(), pool, rng, mode, 2));
      const auto lhs = convolve(convolve(a, b, *d), c, *d);
      const auto rhs = convolve(a, convolve(b, c, *d), *d);
      for (int k = 0; k < 5; ++k) {
        const Element x = random_element(d->algebra(), d->algebra()->window(1), rng, mode);
        const auto diff = (lhs(x) - rhs(x)).magnitude();
        CHECK(diff <= 1e-9 * std::max(1.0, lhs(x).magnitude()));
      }
    }
  }
}

TEST_CASE("property: Â is an ideal, checked by direct evaluation") {
  std::mt19937_64 rng(44);
  const auto s3 = dual_of_group(GroupModel::symmetric_group_3());
  const auto& alg = s3.algebra();
  const auto pool = alg->window(0);
  for (int t = 0; t < 5; ++t) {
    WindowFunctional f(alg, {pool.begin(), pool.end()});
    for (const auto& i : pool) f.set_density(i, random_matrix(1, 1, rng, ScalarMode::Exact));
    const auto gamma = bimodule_act(random_element(alg, pool, rng, ScalarMode::Exact), f,
                                    random_element(alg, pool, rng, ScalarMode::Exact), s3.haar());
    const ReducedFunctional xi(s3.haar(), random_element(alg, pool, rng, ScalarMode::Exact));
    const auto gx = convolve(gamma, xi, s3);
    const auto xg = convolve(xi, gamma, s3);
    // (γ⋆ξ)(δ_k) = Σ_{gh=k} γ(δ_g)ξ(δ_h)
    for (long k = 0; k < 6; ++k) {
      Scalar want_gx, want_xg;
      for (long g = 0; g < 6; ++g)
        for (long h = 0; h < 6; ++h)
          if (s3_product(g, h) == k) {
            want_gx += gamma(point(alg, g)) * xi(point(alg, h));
            want_xg += xi(point(alg, g)) * gamma(point(alg, h));
          }
      CHECK(gx(point(alg, k)) == want_gx);
      CHECK(xg(point(alg, k)) == want_xg);
    }
  }
}

TEST_CASE("property: convolution on Â is nondegenerate on windows") {
  const auto s3 = dual_of_group(GroupModel::symmetric_group_3());
  std::mt19937_64 rng(45);
  const auto pool = s3.algebra()->window(0);
  for (int t = 0; t < 5; ++t) {
    const ReducedFunctional xi(s3.haar(), random_element(s3.algebra(), pool, rng, ScalarMode::Exact));
    if (xi.representative().is_zero()) continue;
    bool some_nonzero = false;
    for (long g = 0; g < 6 && !some_nonzero; ++g)
      some_nonzero = !convolve(xi, ReducedFunctional::point_mass(s3.haar(), Index(g)), s3).representative().is_zero();
    CHECK(some_nonzero);
  }
}
