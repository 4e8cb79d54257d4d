#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/galgebra.hpp"
#include "isg/hilbert.hpp"
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

// Inner product evaluated from the defining sum over elements with a given
// range, independent of the stored table.
Vec inner_by_sum(const ISG& g, const ProjLattice& lat, const Vec& xi,
                 const Vec& eta) {
  Vec out = vec_zero(lat.size());
  for (int x = 0; x < g.size(); ++x) {
    const int p = lat.position_of_ambient(g.range_proj(x));
    out[p] += xi[x].conj() * eta[x];
  }
  return out;
}

// Action matrix evaluated from the pointwise rule (h xi)(m) = xi(h* m)
// gated by hh* >= mm*, independent of the closed form used by the builder.
Mat action_by_definition(const ISG& g, int h) {
  Mat a(g.size(), g.size());
  const int hi = g.inv(h);
  for (int x = 0; x < g.size(); ++x)
    for (int m = 0; m < g.size(); ++m)
      if (g.leq(g.range_proj(m), g.range_proj(h)) && g.mul(hi, m) == x)
        a.at(m, x) = QC(1);
  return a;
}

}  // namespace

TEST_CASE("square summable functions on the degree two monoid") {
  const ISG par = fixtures::sym_inv(2);
  const HModule m = build_l2(par);

  CHECK(m.rank() == 7);
  CHECK(m.lattice.size() == 4);

  SUBCASE("basis pairings sit at the range point") {
    for (int i = 0; i < m.rank(); ++i)
      for (int j = 0; j < m.rank(); ++j) {
        Vec want = vec_zero(m.lattice.size());
        if (i == j) want[m.range_at[i]] = QC(1);
        CHECK(m.inner[i][j] == want);
      }
  }

  SUBCASE("the table agrees with the defining sum") {
    Vec xi = vec_zero(7);
    Vec eta = vec_zero(7);
    xi[0] = QC(1);
    xi[3] = QC(2, 3);
    xi[6] = QC::i();
    eta[0] = QC(-1);
    eta[3] = QC(5);
    eta[4] = QC(1, 2);
    CHECK(module_inner(m, xi, eta) == inner_by_sum(par, m.lattice, xi, eta));
    CHECK(module_inner(m, xi, xi) == inner_by_sum(par, m.lattice, xi, xi));
  }

  SUBCASE("the action matches the pointwise rule") {
    for (int h = 0; h < par.size(); ++h)
      CHECK(m.action[h] == action_by_definition(par, h));
  }

  SUBCASE("the action agrees with the function algebra on the elements") {
    const GAlgebra c0 = c0_algebra(par);
    for (int h = 0; h < par.size(); ++h) CHECK(m.action[h] == c0.action[h]);
  }

  SUBCASE("structural audit passes and the pairings span everything") {
    const ModuleReport rep = check_module(m);
    CHECK(rep.ok());
    CHECK(rep.full);
  }

  SUBCASE("norms and coefficient multiplication") {
    for (int x = 0; x < 7; ++x)
      CHECK(module_norm_sq(m, m.action[0].col(x)) == mpq_class(1));
    Vec two = vec_zero(7);
    two[3] = QC(2);
    CHECK(module_norm_sq(m, two) == mpq_class(4));
    Vec split = vec_zero(7);
    split[3] = QC(1);
    split[4] = QC(1);
    CHECK(module_norm_sq(m, split) == mpq_class(1));
    Vec same = vec_zero(7);
    same[0] = QC(1);
    same[2] = QC(1);
    CHECK(module_norm_sq(m, same) == mpq_class(2));

    Vec point = vec_zero(m.lattice.size());
    point[m.range_at[3]] = QC(1);
    Vec kept = module_coeff(m, vec_unit(7, 3), point);
    CHECK(kept == vec_unit(7, 3));
    for (int i = 0; i < 7; ++i)
      if (m.range_at[i] != m.range_at[3])
        CHECK(vec_is_zero(module_coeff(m, vec_unit(7, i), point)));
  }

  SUBCASE("the action never increases the norm") {
    for (int h = 0; h < 7; ++h)
      for (int x = 0; x < 7; ++x) {
        Vec moved = m.action[h].col(x);
        CHECK(module_norm_sq(m, moved) <= mpq_class(1));
      }
    Vec mix = vec_zero(7);
    mix[0] = QC(3);
    mix[1] = QC::i();
    mix[5] = QC(1, 7);
    const mpq_class before = module_norm_sq(m, mix);
    for (int h = 0; h < 7; ++h)
      CHECK(module_norm_sq(m, m.action[h].apply(mix)) <= before);
  }
}

TEST_CASE("translation bijections hold on the fixtures") {
  {
    const ISG g = fixtures::chain2();
    CHECK(check_translation_bijections(g).empty());
  }
  {
    const ISG g = fixtures::z2();
    CHECK(check_translation_bijections(g).empty());
  }
  {
    const ISG g = fixtures::sym_inv(2);
    CHECK(check_translation_bijections(g).empty());
  }
  {
    const ISG g = fixtures::sym_inv(3);
    CHECK(check_translation_bijections(g).empty());
  }
}

TEST_CASE("moving a point function matches conjugation of its point") {
  const ISG par = fixtures::sym_inv(2);
  const HModule m = build_l2(par);
  const int a = par.index_of(PartialPerm(2, {2, 0}));
  const int e1 = par.index_of(PartialPerm(2, {1, 0}));
  const int e2 = par.index_of(PartialPerm(2, {0, 2}));

  Vec f = vec_zero(m.lattice.size());
  f[m.lattice.position_of_ambient(e1)] = QC(1);
  Vec want = vec_zero(m.lattice.size());
  want[m.lattice.position_of_ambient(e2)] = QC(1);
  CHECK(coeff_action(m, a, f) == want);
  CHECK(coeff_action(m, par.inv(a), want) == f);
  CHECK(vec_is_zero(coeff_action(m, a, want)));
}

TEST_CASE("the degree three base module checks out") {
  const ISG par = fixtures::sym_inv(3);
  const HModule m = build_l2(par);
  CHECK(m.rank() == 34);
  const ModuleReport rep = check_module(m);
  CHECK(rep.ok());
  CHECK(rep.full);
}

TEST_CASE("class module over a genuine subgroup") {
  const ISG par = fixtures::sym_inv(2);
  const SubISG whole = SubISG::whole(par);
  const SubISG h =
      sub_of(par, {PartialPerm(2, {1, 2}), PartialPerm(2, {2, 1})});
  const HModule m = build_l2_cosets(whole, h);

  CHECK(m.rank() == 1);
  Vec want = vec_zero(m.lattice.size());
  want[m.range_at[0]] = QC(1);
  CHECK(m.inner[0][0] == want);
  const ModuleReport rep = check_module(m);
  CHECK(rep.ok());
  CHECK_FALSE(rep.full);

  SUBCASE("its compacts are a line and the classes fill them") {
    const DiagonalEmbed d = diagonal_embedding(whole, h);
    CHECK(d.ok());
    CHECK(d.compacts.algebra.dim() == 1);
    CHECK(rank(d.map) == 1);
  }

  SUBCASE("the summed class vector is orthogonal to the rest upstairs") {
    const HModule l2 = build_l2(par);
    const CosetTable t = coset_table(whole, h);
    Vec cls = vec_zero(7);
    for (int member : t.classes[0]) cls[member] = QC(1);
    Vec self = module_inner(l2, cls, cls);
    Vec expect = vec_zero(l2.lattice.size());
    expect[l2.lattice.position_of_ambient(par.range_proj(t.transversal[0]))] =
        QC(2);
    CHECK(self == expect);
    for (int x = 0; x < 7; ++x)
      if (!t.contains(x)) CHECK(vec_is_zero(module_inner(l2, cls, vec_unit(7, x))));
  }
}

TEST_CASE("class module over the idempotent subgroup is the base module") {
  const ISG par = fixtures::sym_inv(2);
  const SubISG whole = SubISG::whole(par);
  const HModule base = build_l2(par);
  const HModule classes = build_l2_cosets(whole, idempotent_sub(par));

  REQUIRE(classes.rank() == base.rank());
  CHECK(classes.range_at == base.range_at);
  for (int k = 0; k < par.size(); ++k)
    CHECK(classes.action[k] == base.action[k]);
  CHECK(classes.inner == base.inner);
}

TEST_CASE("a three class module over the partial identity subgroup") {
  const ISG par = fixtures::sym_inv(2);
  const SubISG whole = SubISG::whole(par);
  const SubISG h =
      sub_of(par, {PartialPerm::empty_map(2), PartialPerm(2, {1, 0})});
  const HModule m = build_l2_cosets(whole, h);
  CHECK(m.rank() == 3);
  CHECK(check_module(m).ok());

  const DiagonalEmbed d = diagonal_embedding(whole, h);
  CHECK(d.ok());
  CHECK(d.compacts.algebra.dim() == 3);
  CHECK(rank(d.map) == 3);
}

TEST_CASE("compact operators on the degree two monoid") {
  const ISG par = fixtures::sym_inv(2);
  const HModule m = build_l2(par);
  const Compacts k = compact_operators(m);

  CHECK(k.algebra.dim() == 13);
  CHECK(k.algebra.alg.check_axioms().empty());
  CHECK(validate_action(k.algebra).ok());
  CHECK(k.algebra.is_fibered());
  for (int p = 0; p < m.lattice.size(); ++p) {
    const int d = static_cast<int>(k.blocks[p].size());
    CHECK(k.algebra.fiber_dim(p) == d * d);
  }

  SUBCASE("conjugation moves rank one operators with the vectors") {
    const int e1 = par.index_of(PartialPerm(2, {1, 0}));
    const int id = par.index_of(PartialPerm(2, {1, 2}));
    const int pos_e1 = m.lattice.position_of_ambient(e1);
    const int pos_id = m.lattice.position_of_ambient(id);

    const auto& blk_e1 = k.blocks[pos_e1];
    const int i_e1 = static_cast<int>(
        std::find(blk_e1.begin(), blk_e1.end(), e1) - blk_e1.begin());
    const int s_e1 = k.index(pos_e1, i_e1, i_e1);
    CHECK(k.algebra.action[e1].col(s_e1) == vec_unit(k.algebra.dim(), s_e1));

    const auto& blk_id = k.blocks[pos_id];
    const int i_id = static_cast<int>(
        std::find(blk_id.begin(), blk_id.end(), id) - blk_id.begin());
    const int s_id = k.index(pos_id, i_id, i_id);
    CHECK(vec_is_zero(k.algebra.action[e1].col(s_id)));
    CHECK(k.algebra.action[id].col(s_id) == vec_unit(k.algebra.dim(), s_id));
  }
}

TEST_CASE("diagonal embedding of all the point masses") {
  const ISG par = fixtures::sym_inv(2);
  const SubISG whole = SubISG::whole(par);
  const DiagonalEmbed d = diagonal_embedding(whole, idempotent_sub(par));
  CHECK(d.ok());
  CHECK(d.classes.dim() == 7);
  CHECK(d.compacts.algebra.dim() == 13);
  CHECK(rank(d.map) == 7);
}

TEST_CASE("balanced tensor with the base module") {
  const ISG par = fixtures::sym_inv(2);
  const HModule m = build_l2(par);
  const TensorModule t = l2_tensor(m);

  CHECK(t.module.rank() == 13);
  const ModuleReport rep = check_module(t.module);
  CHECK(rep.ok());
  CHECK(rep.full);

  SUBCASE("slots pair each element with its fiber") {
    for (int s = 0; s < t.module.rank(); ++s) {
      const int x = t.first[s];
      const int b = t.second[s];
      CHECK(par.range_proj(x) == par.range_proj(b));
      CHECK(t.slot[x][b] == s);
    }
  }
}

TEST_CASE("comparison operator for the identity is the identity") {
  const ISG par = fixtures::sym_inv(2);
  const HModule m = build_l2(par);
  const MingoReport rep = mingo_v(m, m, Mat::identity(7));
  CHECK(rep.ok());
  CHECK(rep.v == Mat::identity(rep.t1.module.rank()));
}

TEST_CASE("comparison operator for a sign flip on the chain") {
  const ISG par = fixtures::chain2();
  const HModule m = build_l2(par);
  REQUIRE(m.rank() == 2);
  const int bottom = m.range_at[0] ==
                             m.lattice.position_of_ambient(
                                 par.index_of(PartialPerm::empty_map(1)))
                         ? 0
                         : 1;
  Mat u = Mat::identity(2);
  u.at(bottom, bottom) = QC(-1);

  const MingoReport rep = mingo_v(m, m, u);
  CHECK(rep.ok());
  REQUIRE(rep.t1.module.rank() == 2);
  Mat want = Mat::identity(2);
  for (int s = 0; s < 2; ++s)
    if (rep.t1.second[s] == bottom) want.at(s, s) = QC(-1);
  CHECK(rep.v == want);
}

TEST_CASE("comparison operator for a global phase") {
  const ISG par = fixtures::sym_inv(2);
  const HModule m = build_l2(par);
  const Mat u = Mat::identity(7).scale(QC::i());
  const MingoReport rep = mingo_v(m, m, u);
  CHECK(rep.ok());
  CHECK(rep.v == Mat::identity(rep.t1.module.rank()).scale(QC::i()));
}

TEST_CASE("unitarity preconditions are enforced") {
  const ISG par = fixtures::sym_inv(2);
  const HModule m = build_l2(par);

  SUBCASE("mixing fibers") {
    Mat u = Mat::identity(7);
    const int id = par.index_of(PartialPerm(2, {1, 2}));
    const int a = par.index_of(PartialPerm(2, {2, 0}));
    u.at(id, id) = QC(0);
    u.at(a, a) = QC(0);
    u.at(id, a) = QC(1);
    u.at(a, id) = QC(1);
    try {
      mingo_v(m, m, u);
      FAIL("fiber mixing was accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotUnitary);
    }
  }

  SUBCASE("scaling breaks the pairing") {
    const Mat u = Mat::identity(7).scale(QC(2));
    CHECK_THROWS_AS(mingo_v(m, m, u), Error);
  }

  SUBCASE("a singular matrix is rejected") {
    const Mat u(7, 7);
    try {
      mingo_v(m, m, u);
      FAIL("the zero matrix was accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotUnitary);
    }
  }

  SUBCASE("different acting semigroups are rejected") {
    const ISG other = fixtures::chain2();
    const HModule n = build_l2(other);
    CHECK_THROWS_AS(mingo_v(m, n, Mat(2, 7)), Error);
  }
}

TEST_CASE("structural audit flags corrupted tables") {
  const ISG par = fixtures::sym_inv(2);

  SUBCASE("a pairing off the range point") {
    HModule m = build_l2(par);
    m.inner[0][1][m.range_at[0]] = QC(1);
    CHECK_FALSE(check_module(m).ok());
  }

  SUBCASE("a negative self pairing") {
    HModule m = build_l2(par);
    m.inner[2][2][m.range_at[2]] = QC(-1);
    CHECK_FALSE(check_module(m).ok());
    CHECK_THROWS_AS(module_norm_sq(m, vec_unit(7, 2)), Error);
  }

  SUBCASE("an action column out of place") {
    HModule m = build_l2(par);
    std::swap(m.action[1], m.action[2]);
    CHECK_FALSE(check_module(m).ok());
  }
}

TEST_CASE("tensor construction rejects fiber drift") {
  const ISG par = fixtures::chain2();
  HModule m = build_l2(par);
  const int id = 0;
  const int e = 1;
  REQUIRE(par.is_idempotent(e));
  m.action[id] = Mat(2, 2);
  m.action[id].at(id, id) = QC(1);
  m.action[id].at(id, e) = QC(1);
  CHECK_THROWS_AS(l2_tensor(m), Error);
}
