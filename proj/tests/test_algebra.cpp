#include "support.hpp"

#include "dqg/errors.hpp"
#include "dqg/nondegenerate.hpp"

using namespace dqg;
using testing::point;
using testing::q;

TEST_CASE("windows are nested and inside the index model") {
  const auto z = BlockAlgebra::integers();
  CHECK(z->window(0).size() == 9);
  CHECK(z->window(1).size() == 17);
  CHECK(z->window_description(2) == "[-16,16]");
  const auto z2 = BlockAlgebra::integer_pairs();
  CHECK(z2->window(0).size() == 25);
  const auto f2 = BlockAlgebra::group_words(2, "F2");
  CHECK(f2->window(0).size() == 5);
  CHECK(f2->window(1).size() == 17);
  const auto su = BlockAlgebra::spin_ladder(5);
  CHECK(su->window(0).size() == 4);
  CHECK(su->window(1).size() == 6);
  CHECK(su->block_dim(Index(3)) == 4);

  for (const auto& alg : {z, z2, f2, su}) {
    for (std::size_t level = 0; level < 2; ++level) {
      const auto inner = alg->window(level);
      const auto outer = alg->window(level + 1);
      for (const auto& i : inner) {
        CHECK(alg->contains(i));
        CHECK(std::find(outer.begin(), outer.end(), i) != outer.end());
      }
    }
  }
  CHECK_THROWS_AS(su->block_dim(Index(-1)), std::out_of_range);
}

TEST_CASE("element products") {
  const auto z = BlockAlgebra::integers();
  CHECK((point(z, 1) * point(z, 2)).is_zero());
  CHECK(point(z, 3) * point(z, 3) == point(z, 3));

  const auto m2 = BlockAlgebra::finite({2}, "M2");
  CHECK(Element::matrix_unit(m2, Index(0), 0, 1) * Element::matrix_unit(m2, Index(0), 1, 0) ==
        Element::matrix_unit(m2, Index(0), 0, 0));

  Element e(z);
  e.set_block(Index(4), DenseMatrix{{q(0)}});
  CHECK(e.is_zero());
  CHECK_THROWS(e.set_block(Index(4), DenseMatrix::identity(2)));
  CHECK_THROWS_AS(point(z, 0) * point(m2, 0), AlgebraMismatch);
}

TEST_CASE("multiplier application") {
  const auto z = BlockAlgebra::integers();
  const auto n = Multiplier::polynomial(z, {q(0), q(1)});
  CHECK(multiplier_apply(Multiplier::identity(z), point(z, 7), Side::Left) == point(z, 7));
  CHECK(multiplier_apply(n, point(z, 5), Side::Left) == point(z, 5, q(5)));
  CHECK(multiplier_apply(n, point(z, 5), Side::Right) == point(z, 5, q(5)));

  const auto m2 = BlockAlgebra::finite({2}, "M2");
  const auto e12 = Multiplier::table(m2, {{Index(0), DenseMatrix::unit(2, 0, 1)}});
  const auto e21 = Element::matrix_unit(m2, Index(0), 1, 0);
  CHECK(multiplier_apply(e12, e21, Side::Left) == Element::matrix_unit(m2, Index(0), 0, 0));
  CHECK(multiplier_apply(e12, e21, Side::Right) == Element::matrix_unit(m2, Index(0), 1, 1));
}

TEST_CASE("multiplier rules") {
  const auto z = BlockAlgebra::integers();
  const auto chi = Multiplier::character(z, 1, 4, ScalarMode::Exact);
  CHECK(chi.block(Index(1))(0, 0) == Scalar::imaginary_unit());
  CHECK(chi.block(Index(-1))(0, 0) == q(0) - Scalar::imaginary_unit());
  CHECK(chi.block(Index(6))(0, 0) == q(-1));
  CHECK_THROWS_AS(Multiplier::character(z, 1, 3, ScalarMode::Exact), std::invalid_argument);
  const auto chi3 = Multiplier::character(z, 1, 3, ScalarMode::Float);
  CHECK(std::abs(chi3.block(Index(3))(0, 0).to_complex() - 1.0) < 1e-12);

  const auto p = Multiplier::polynomial(z, {q(1), q(0), q(1, 2)});
  CHECK(p.block(Index(-4))(0, 0) == q(9));

  const auto t = Multiplier::table(z, {{Index(2), DenseMatrix{{q(7)}}}}, Multiplier::scalar(z, q(-1)));
  CHECK(t.block(Index(2))(0, 0) == q(7));
  CHECK(t.block(Index(3))(0, 0) == q(-1));

  const auto sum = q(2) * p - Multiplier::identity(z);
  CHECK(sum.block(Index(2))(0, 0) == q(5));
  CHECK(Multiplier::product(p, p).block(Index(2))(0, 0) == q(9));

  const auto su = BlockAlgebra::spin_ladder(3);
  CHECK_THROWS(Multiplier::polynomial(BlockAlgebra::finite({2}, "M2"), {q(1)}));
  CHECK(Multiplier::identity(su).block(Index(2)) == DenseMatrix::identity(3));
}

TEST_CASE("embedding and local units") {
  const auto z = BlockAlgebra::integers();
  CHECK(embed_element(Element(z)).block(Index(3)).exactly_zero());
  const auto d0 = embed_element(point(z, 0));
  CHECK(d0.block(Index(0))(0, 0) == q(1));
  CHECK(d0.block(Index(1))(0, 0) == q(0));

  const auto m2 = BlockAlgebra::finite({2}, "M2");
  const auto e11 = embed_element(Element::matrix_unit(m2, Index(0), 0, 0));
  CHECK(e11.block(Index(0)) == DenseMatrix::unit(2, 0, 0));

  CHECK(local_unit(point(z, 3) + point(z, -1, q(5))) == point(z, 3) + point(z, -1));
  CHECK(local_unit(Element::matrix_unit(m2, Index(0), 0, 1)) == Element::block_identity(m2, Index(0)));
  CHECK(local_unit(Element(z)).is_zero());
}

TEST_CASE("tensor multiplier application") {
  const auto z = BlockAlgebra::integers();
  const auto id = TensorMultiplier::identity(z, z);
  const auto t = TensorElement::elementary(point(z, 2), point(z, 3));
  CHECK(tensor_multiplier_apply(id, t, Side::Left) == t);

  const auto sum = TensorMultiplier::from_function(
      z, z, [](const Index& g, const Index& n) { return DenseMatrix{{q(g.value() + n.value())}}; }, "g+n");
  TensorElement five = t;
  five *= q(5);
  CHECK(tensor_multiplier_apply(sum, t, Side::Left) == five);
}

TEST_CASE("nondegeneracy") {
  CHECK(check_nondegenerate(StructureConstants::from_window(*BlockAlgebra::finite({2, 1}, "M2+C"), 0)));
  CHECK_FALSE(check_nondegenerate(StructureConstants::zero_product(1)));
  const auto s3 = GroupModel::symmetric_group_3().make_algebra();
  CHECK(check_nondegenerate(StructureConstants::from_window(*s3, 0)));
  CHECK(check_nondegenerate(StructureConstants::from_window(*BlockAlgebra::integers(), 0)));

  // C[x]/(x^2): x annihilates the span of x
  StructureConstants nil(2);
  nil.set_product(0, 0, {{0, q(1)}});
  nil.set_product(0, 1, {{1, q(1)}});
  nil.set_product(1, 0, {{1, q(1)}});
  CHECK(check_nondegenerate(nil));
  StructureConstants only_x(1);
  CHECK_FALSE(check_nondegenerate(only_x));
}

namespace {

std::vector<Multiplier> sample_multipliers(const AlgebraPtr& z) {
  return {Multiplier::identity(z),
          Multiplier::scalar(z, q(-3, 2)),
          Multiplier::polynomial(z, {q(1), q(-2), q(1, 3)}),
          Multiplier::character(z, 3, 4, ScalarMode::Exact),
          Multiplier::table(z, {{Index(1), DenseMatrix{{q(4)}}}}, Multiplier::polynomial(z, {q(0), q(1)})),
          embed_element(point(z, 2, q(3)) + point(z, -1))};
}

}  // namespace

TEST_CASE("property: double-centralizer law for constructed multipliers") {
  std::mt19937_64 rng(21);
  const auto z = BlockAlgebra::integers();
  const auto pool = z->window(0);
  for (const auto& m : sample_multipliers(z)) {
    for (int t = 0; t < 10; ++t) {
      const Element a = random_element(z, pool, rng, ScalarMode::Exact);
      const Element b = random_element(z, pool, rng, ScalarMode::Exact);
      CHECK(multiplier_apply(m, a, Side::Right) * b == a * multiplier_apply(m, b, Side::Left));
    }
  }
  // non-commutative blocks
  const auto mats = BlockAlgebra::finite({2, 3}, "M2+M3");
  const auto pool2 = mats->window(0);
  for (int t = 0; t < 10; ++t) {
    const Element g = random_element(mats, pool2, rng, ScalarMode::Exact);
    const auto m = embed_element(g);
    const Element a = random_element(mats, pool2, rng, ScalarMode::Exact);
    const Element b = random_element(mats, pool2, rng, ScalarMode::Exact);
    CHECK(multiplier_apply(m, a, Side::Right) * b == a * multiplier_apply(m, b, Side::Left));
  }
}

TEST_CASE("property: embedding is a homomorphism") {
  std::mt19937_64 rng(22);
  const auto mats = BlockAlgebra::finite({2, 3}, "M2+M3");
  const auto pool = mats->window(0);
  for (int t = 0; t < 10; ++t) {
    const Element a = random_element(mats, pool, rng, ScalarMode::Exact);
    const Element b = random_element(mats, pool, rng, ScalarMode::Exact);
    const Element c = random_element(mats, pool, rng, ScalarMode::Exact);
    const auto ab = embed_element(a * b);
    CHECK(multiplier_apply(ab, c, Side::Left) ==
          multiplier_apply(embed_element(a), multiplier_apply(embed_element(b), c, Side::Left), Side::Left));
  }
}

TEST_CASE("property: local unit acts trivially") {
  std::mt19937_64 rng(23);
  const auto mats = BlockAlgebra::finite({2, 1, 3}, "M2+C+M3");
  for (int t = 0; t < 10; ++t) {
    const Element a = random_element(mats, mats->window(0), rng, ScalarMode::Exact);
    CHECK(local_unit(a) * a == a);
    CHECK(a * local_unit(a) == a);
  }
}

TEST_CASE("property: elementary tensor multipliers act component-wise") {
  std::mt19937_64 rng(24);
  const auto z = BlockAlgebra::integers();
  const auto mats = BlockAlgebra::finite({2, 3}, "M2+M3");
  const auto x = Multiplier::polynomial(z, {q(1), q(1)});
  const auto y = embed_element(random_element(mats, mats->window(0), rng, ScalarMode::Exact));
  const auto xy = TensorMultiplier::elementary(x, y);
  for (int t = 0; t < 10; ++t) {
    const Element b = random_element(z, z->window(0), rng, ScalarMode::Exact);
    const Element a = random_element(mats, mats->window(0), rng, ScalarMode::Exact);
    const auto tensor = TensorElement::elementary(b, a);
    for (auto side : {Side::Left, Side::Right})
      CHECK(tensor_multiplier_apply(xy, tensor, side) ==
            TensorElement::elementary(multiplier_apply(x, b, side), multiplier_apply(y, a, side)));
  }
}
