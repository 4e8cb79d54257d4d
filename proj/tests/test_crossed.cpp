#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <initializer_list>
#include <vector>

#include "isg/crossed.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/galgebra.hpp"
#include "isg/induction.hpp"
#include "isg/linalg.hpp"
#include "isg/partial_perm.hpp"
#include "isg/semigroup.hpp"

using namespace isg;

namespace {

SubISG sub_of(const ISG& g, std::initializer_list<PartialPerm> gens) {
  std::vector<int> idx;
  for (const auto& p : gens) idx.push_back(g.index_of(p));
  return SubISG::from_indices(g, idx);
}

SubISG idempotent_sub(const ISG& g) {
  std::vector<int> idx = g.idempotents();
  return SubISG::from_indices(g, idx);
}

GAlgebra conj_group_algebra(SubISG h) {
  const ISG& loc = h.local;
  const int n = loc.size();
  StarAlgebra a;
  a.dim = n;
  for (int i = 0; i < n; ++i) a.labels.push_back("u_" + loc.elem(i).str());
  a.mult.assign(n, std::vector<Vec>(n, vec_zero(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.mult[i][j] = vec_unit(n, loc.mul(i, j));
  a.invol = Mat(n, n);
  for (int i = 0; i < n; ++i) a.invol.at(loc.inv(i), i) = QC(1);
  std::vector<Mat> act;
  for (int x = 0; x < n; ++x) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      m.at(loc.mul(loc.mul(x, i), loc.inv(x)), i) = QC(1);
    act.push_back(std::move(m));
  }
  return GAlgebra::make(std::move(a), std::move(h), std::move(act));
}

void expect_sound(const CrossedAlg& c) {
  CHECK(c.universal.check_axioms().empty());
  CHECK(c.alg.check_axioms().empty());
  for (const Vec& gen : c.relation_gens)
    CHECK(vec_is_zero(c.project.apply(gen)));
}

void expect_invariant(const BlockDecomposition& b) {
  int squares = 0;
  for (int s : b.blocks) squares += s * s;
  CHECK(squares + b.radical_dim == b.dim);
}

}  // namespace

TEST_CASE("covariance of the scalars over the two element chain") {
  const ISG par = fixtures::chain2();
  const SubISG whole = SubISG::whole(par);
  const GAlgebra a = trivial_algebra(whole);

  const CrossedAlg uni = covariance_algebra(a, CrossedVariant::universal);
  expect_sound(uni);
  REQUIRE(uni.dim() == 2);
  CHECK(uni.slot_elem == std::vector<int>{0, 1});

  SUBCASE("idempotents split the algebra by hand") {
    const Vec d1 = uni.alg.basis_vec(0);
    const Vec de = uni.alg.basis_vec(1);
    CHECK(uni.alg.mul_vec(de, de) == de);
    const Vec p = vec_sub(d1, de);
    CHECK(uni.alg.mul_vec(p, p) == p);
    CHECK(vec_is_zero(uni.alg.mul_vec(de, p)));
    CHECK(vec_is_zero(uni.alg.mul_vec(p, de)));
  }

  SUBCASE("block data agrees with the split") {
    const BlockDecomposition b = semisimple_blocks(uni.alg);
    expect_invariant(b);
    CHECK(b.radical_dim == 0);
    CHECK(b.blocks == std::vector<int>{1, 1});
    CHECK(b.star_positive);
  }

  SUBCASE("the compatible quotient is a single point") {
    const CrossedAlg sieb = covariance_algebra(a, CrossedVariant::sieben);
    expect_sound(sieb);
    CHECK_FALSE(sieb.relation_gens.empty());
    CHECK(sieb.dim() == 1);
    const BlockDecomposition b = semisimple_blocks(sieb.alg);
    expect_invariant(b);
    CHECK(b.blocks == std::vector<int>{1});
  }
}

TEST_CASE("group covariance recovers the group algebra") {
  const ISG par = fixtures::z2();
  const SubISG whole = SubISG::whole(par);

  SUBCASE("scalar coefficients") {
    const GAlgebra a = trivial_algebra(whole);
    const CrossedAlg uni = covariance_algebra(a, CrossedVariant::universal);
    const CrossedAlg sieb = covariance_algebra(a, CrossedVariant::sieben);
    expect_sound(uni);
    expect_sound(sieb);
    CHECK(uni.dim() == 2);
    CHECK(sieb.relation_gens.empty());
    CHECK(sieb.dim() == 2);
    CHECK(sieb.alg.mult == uni.alg.mult);
    CHECK(sieb.alg.invol == uni.alg.invol);
    const BlockDecomposition b = semisimple_blocks(sieb.alg);
    expect_invariant(b);
    CHECK(b.blocks == std::vector<int>{1, 1});
  }

  SUBCASE("function coefficients give a full matrix block") {
    const GAlgebra a = c0_algebra(par);
    for (const auto variant :
         {CrossedVariant::universal, CrossedVariant::sieben}) {
      const CrossedAlg c = covariance_algebra(a, variant);
      expect_sound(c);
      CHECK(c.dim() == 4);
      const BlockDecomposition b = semisimple_blocks(c.alg);
      expect_invariant(b);
      CHECK(b.radical_dim == 0);
      CHECK(b.blocks == std::vector<int>{2});
      CHECK(b.star_positive);
    }
  }
}

TEST_CASE("semilattice covariance collapses to a point") {
  const ISG par = fixtures::sym_inv(2);
  const SubISG esub = idempotent_sub(par);
  const GAlgebra a = trivial_algebra(esub);

  const CrossedAlg uni = covariance_algebra(a, CrossedVariant::universal);
  expect_sound(uni);
  CHECK(uni.dim() == 4);
  const BlockDecomposition bu = semisimple_blocks(uni.alg);
  expect_invariant(bu);
  CHECK(bu.blocks == std::vector<int>{1, 1, 1, 1});

  const CrossedAlg sieb = covariance_algebra(a, CrossedVariant::sieben);
  expect_sound(sieb);
  CHECK(sieb.dim() == 1);
  const BlockDecomposition bs = semisimple_blocks(sieb.alg);
  expect_invariant(bs);
  CHECK(bs.blocks == std::vector<int>{1});
}

TEST_CASE("block data of plain algebras") {
  SUBCASE("two points") {
    const BlockDecomposition b =
        semisimple_blocks(StarAlgebra::function_algebra({"x", "y"}));
    expect_invariant(b);
    CHECK(b.radical_dim == 0);
    CHECK(b.blocks == std::vector<int>{1, 1});
    CHECK(b.k0_rank() == 2);
    CHECK(b.star_positive);
  }

  SUBCASE("one full matrix block") {
    const BlockDecomposition b = semisimple_blocks(StarAlgebra::full_matrix(2));
    expect_invariant(b);
    CHECK(b.radical_dim == 0);
    CHECK(b.blocks == std::vector<int>{2});
    CHECK(b.k0_rank() == 1);
    CHECK(b.star_positive);
  }

  SUBCASE("a mixed sum") {
    const BlockDecomposition b = semisimple_blocks(direct_sum_star(
        StarAlgebra::full_matrix(2), StarAlgebra::function_algebra({"p"})));
    expect_invariant(b);
    CHECK(b.blocks == std::vector<int>{1, 2});
    CHECK(b.k0_rank() == 2);
  }

  SUBCASE("a nilpotent line is all radical") {
    StarAlgebra n;
    n.dim = 1;
    n.labels = {"n"};
    n.mult.assign(1, std::vector<Vec>(1, vec_zero(1)));
    n.invol = Mat::identity(1);
    REQUIRE(n.check_axioms().empty());
    const BlockDecomposition b = semisimple_blocks(n);
    expect_invariant(b);
    CHECK(b.radical_dim == 1);
    CHECK(b.blocks.empty());
    CHECK(b.k0_rank() == 0);
  }
}

TEST_CASE("degeneracy is reported after the retries are spent") {
  const StarAlgebra s =
      direct_sum_star(StarAlgebra::full_matrix(2), StarAlgebra::full_matrix(2));
  try {
    semisimple_blocks(s, 7, 1e3);
    FAIL("an unusable tolerance went unnoticed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NumericalDegeneracy);
  }
}

TEST_CASE("imprimitivity on the classical fixtures") {
  const ISG par = fixtures::z2();
  const SubISG whole = SubISG::whole(par);

  SUBCASE("trivial subgroup") {
    const SubISG h = SubISG::from_indices(par, {0});
    const GAlgebra a = trivial_algebra(h);
    const ImprimitivityReport rep = imprimitivity_check(a, whole);
    CHECK(rep.counts_match);
    CHECK(rep.induced_side.blocks == std::vector<int>{2});
    CHECK(rep.base_side.blocks == std::vector<int>{1});
  }

  SUBCASE("whole group") {
    const GAlgebra a = trivial_algebra(whole);
    const ImprimitivityReport rep = imprimitivity_check(a, whole);
    CHECK(rep.counts_match);
    CHECK(rep.induced_side.blocks == std::vector<int>{1, 1});
    CHECK(rep.base_side.blocks == std::vector<int>{1, 1});
  }
}

TEST_CASE("imprimitivity on the chain") {
  const ISG par = fixtures::chain2();
  const SubISG whole = SubISG::whole(par);
  const SubISG h = sub_of(par, {PartialPerm::empty_map(1)});
  const GAlgebra a = trivial_algebra(h);
  const ImprimitivityReport rep = imprimitivity_check(a, whole);
  CHECK(rep.counts_match);
  CHECK(rep.induced_side.blocks == std::vector<int>{1});
  CHECK(rep.base_side.blocks == std::vector<int>{1});
}

TEST_CASE("imprimitivity across the degree two monoid") {
  const ISG par = fixtures::sym_inv(2);
  const SubISG whole = SubISG::whole(par);

  SUBCASE("idempotent subsemigroup") {
    const GAlgebra a = trivial_algebra(idempotent_sub(par));
    const ImprimitivityReport rep = imprimitivity_check(a, whole);
    CHECK(rep.counts_match);
    CHECK(rep.base_side.k0_rank() == 1);
    CHECK(rep.induced_side.k0_rank() == 1);
  }

  SUBCASE("group of units with its group algebra") {
    const SubISG h =
        sub_of(par, {PartialPerm(2, {1, 2}), PartialPerm(2, {2, 1})});
    const GAlgebra a = conj_group_algebra(h);
    const ImprimitivityReport rep = imprimitivity_check(a, whole);
    CHECK(rep.counts_match);
    CHECK(rep.base_side.blocks == std::vector<int>{1, 1, 1, 1});
    CHECK(rep.induced_side.blocks == std::vector<int>{1, 1, 1, 1});
  }

  SUBCASE("partial identity chain") {
    const SubISG h =
        sub_of(par, {PartialPerm::empty_map(2), PartialPerm(2, {1, 0})});
    const GAlgebra a = trivial_algebra(h);
    const ImprimitivityReport rep = imprimitivity_check(a, whole);
    CHECK(rep.counts_match);
    CHECK(rep.base_side.k0_rank() == 1);
    CHECK(rep.induced_side.k0_rank() == 1);
  }
}

TEST_CASE("transversal rotation leaves the counts alone") {
  const ISG par = fixtures::sym_inv(2);
  const SubISG whole = SubISG::whole(par);
  const SubISG h =
      sub_of(par, {PartialPerm(2, {1, 2}), PartialPerm(2, {2, 1})});
  const GAlgebra a = conj_group_algebra(h);

  const CosetTable plain = coset_table(whole, h);
  const CosetTable turned = rotate_transversal(plain, 1);
  const IndAlgebra i1 = induce(a, whole, &plain);
  const IndAlgebra i2 = induce(a, whole, &turned);
  const CrossedAlg c1 = covariance_algebra(i1.algebra, CrossedVariant::sieben);
  const CrossedAlg c2 = covariance_algebra(i2.algebra, CrossedVariant::sieben);
  const BlockDecomposition b1 = semisimple_blocks(c1.alg);
  const BlockDecomposition b2 = semisimple_blocks(c2.alg);
  CHECK(b1.k0_rank() == b2.k0_rank());
  CHECK(b1.blocks == b2.blocks);
}

TEST_CASE("fibered coefficients keep the span bound") {
  const ISG par = fixtures::sym_inv(2);
  const GAlgebra a = epsilon_algebra(par);

  const CrossedAlg uni = covariance_algebra(a, CrossedVariant::universal);
  expect_sound(uni);
  CHECK(uni.dim() == 17);
  CHECK(uni.dim() <= a.dim() * par.size());

  const CrossedAlg sieb = covariance_algebra(a, CrossedVariant::sieben);
  expect_sound(sieb);
  CHECK(sieb.dim() <= uni.dim());
  const BlockDecomposition b = semisimple_blocks(sieb.alg);
  expect_invariant(b);
}
