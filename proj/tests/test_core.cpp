#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <set>

#include "isg/error.hpp"
#include "isg/linalg.hpp"
#include "isg/partial_perm.hpp"
#include "isg/rational.hpp"
#include "isg/semigroup.hpp"
#include "support/oracles.hpp"

using namespace isg;

TEST_CASE("gaussian rational arithmetic") {
  QC a(1, 2);        // 1/2
  QC b = QC(1) + QC::i() * QC(3);  // 1 + 3i
  CHECK(a + a == QC(1));
  CHECK(b * b.conj() == QC(10));
  CHECK(b.abs2() == mpq_class(10));
  CHECK(b * b.inv() == QC(1));
  CHECK((QC(0) - b).str() == "-1-3i");
  CHECK(QC(3, 6) == QC(1, 2));
  CHECK(!QC::i().is_real());
  CHECK(QC(0).is_zero());
}

TEST_CASE("matrix product and inverse") {
  Mat m(2, 2);
  m.at(0, 0) = QC(1);
  m.at(0, 1) = QC(2);
  m.at(1, 0) = QC(3);
  m.at(1, 1) = QC(4);
  Mat id = Mat::identity(2);
  CHECK(m.mul(id) == m);
  auto mi = inverse(m);
  REQUIRE(mi.has_value());
  CHECK(m.mul(*mi) == id);
  CHECK(rank(m) == 2);

  Mat sing(2, 2);
  sing.at(0, 0) = QC(1);
  sing.at(0, 1) = QC(2);
  sing.at(1, 0) = QC(2);
  sing.at(1, 1) = QC(4);
  CHECK(rank(sing) == 1);
  CHECK(!inverse(sing).has_value());
  auto ns = nullspace(sing);
  REQUIRE(ns.size() == 1);
  CHECK(vec_is_zero(sing.apply(ns[0])) );
}

TEST_CASE("echelon basis membership and coordinates") {
  EchelonBasis basis(3);
  Vec v1 = {QC(1), QC(1), QC(0)};
  Vec v2 = {QC(0), QC(1), QC(1)};
  Vec dep = {QC(1), QC(2), QC(1)};  // v1 + v2
  CHECK(basis.insert(v1));
  CHECK(basis.insert(v2));
  CHECK(!basis.insert(dep));
  CHECK(basis.dim() == 2);
  CHECK(basis.contains(dep));
  auto c = basis.coords(dep);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == QC(1));
  CHECK((*c)[1] == QC(1));
  Vec outside = {QC(1), QC(0), QC(0)};
  CHECK(!basis.contains(outside));
  CHECK(!basis.coords(outside).has_value());
}

TEST_CASE("partial permutation basics") {
  PartialPerm f(2, {2, 0});  // 1 -> 2
  PartialPerm g(2, {0, 1});  // 2 -> 1
  // Right factor acts first: (f after g)(2) = f(g(2)) = f(1) = 2.
  PartialPerm fg = f.compose(g);
  CHECK(fg.image(2) == 2);
  CHECK(fg.image(1) == 0);
  PartialPerm gf = g.compose(f);
  CHECK(gf.image(1) == 1);
  CHECK(gf.image(2) == 0);
  CHECK(fg.is_idempotent());
  CHECK(f.inverse() == g);
  CHECK(f.str() == "[2,-]");
  CHECK_THROWS_AS(PartialPerm(2, {1, 1}), Error);
  CHECK_THROWS_AS(PartialPerm(2, {3, 0}), Error);
  CHECK_THROWS_AS(f.compose(PartialPerm(3, {1, 2, 3})), Error);
}

TEST_CASE("element order puts undefined points last") {
  PartialPerm id1(1, {1});
  PartialPerm empty1(1, {0});
  CHECK(id1 < empty1);
  std::set<PartialPerm> s = {empty1, id1};
  CHECK(s.begin()->str() == "[1]");
}

TEST_CASE("symmetric inverse monoid sizes match direct enumeration") {
  // Degree 1: the identity and the empty map.
  auto i1 = ISG::close(1, {PartialPerm::identity(1)});
  CHECK(i1.size() == 1);  // identity alone is already closed
  auto i1full = ISG::close(1, {PartialPerm::identity(1), PartialPerm::empty_map(1)});
  CHECK(i1full.size() == 2);
  CHECK(oracles::all_partial_injections(1).size() == 2);

  // Degree 2, generated by the swap and a rank-one restriction.
  auto i2 = ISG::close(2, {PartialPerm(2, {2, 1}), PartialPerm(2, {1, 0})});
  CHECK(i2.size() == 7);
  CHECK(i2.idempotents().size() == 4);
  auto enum2 = oracles::all_partial_injections(2);
  REQUIRE(enum2.size() == 7);
  for (int i = 0; i < i2.size(); ++i) CHECK(i2.elem(i) == enum2[i]);

  // Degree 3, generated by a 3-cycle, a transposition, and a restriction.
  auto i3 = ISG::close(3, {PartialPerm(3, {2, 3, 1}), PartialPerm(3, {2, 1, 3}),
                           PartialPerm(3, {1, 2, 0})});
  CHECK(i3.size() == 34);
  auto enum3 = oracles::all_partial_injections(3);
  REQUIRE(enum3.size() == 34);
  for (int i = 0; i < i3.size(); ++i) CHECK(i3.elem(i) == enum3[i]);
  CHECK(i3.table_associative());
}

TEST_CASE("closure guards degree and size") {
  CHECK_THROWS_AS(ISG::close(2, {PartialPerm(3, {1, 2, 3})}), Error);
  try {
    ISG::close(3, {PartialPerm(3, {2, 3, 1}), PartialPerm(3, {2, 1, 3}),
                   PartialPerm(3, {1, 2, 0})},
               10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClosureTooLarge);
  }
}

TEST_CASE("natural order agrees with pointwise extension") {
  auto i3 = ISG::close(3, {PartialPerm(3, {2, 3, 1}), PartialPerm(3, {2, 1, 3}),
                           PartialPerm(3, {1, 2, 0})});
  for (int i = 0; i < i3.size(); ++i) {
    for (int j = 0; j < i3.size(); ++j) {
      CHECK(i3.leq(i, j) == oracles::extends(i3.elem(i), i3.elem(j)));
    }
  }
}

TEST_CASE("zero element detection") {
  auto i2 = ISG::close(2, {PartialPerm(2, {2, 1}), PartialPerm(2, {1, 0})});
  auto z = i2.zero();
  REQUIRE(z.has_value());
  CHECK(i2.elem(*z) == PartialPerm::empty_map(2));

  // A nontrivial group of total permutations has no absorbing element.
  auto c2 = ISG::close(2, {PartialPerm(2, {2, 1})});
  CHECK(!c2.zero().has_value());
}

TEST_CASE("minimal idempotent group") {
  auto c2 = ISG::close(2, {PartialPerm(2, {2, 1})});
  auto g = minimal_idempotent_group(c2);
  CHECK(g.is_group);
  CHECK(g.members.size() == 2);
  CHECK(c2.is_idempotent(g.e0));

  auto i2 = ISG::close(2, {PartialPerm(2, {2, 1}), PartialPerm(2, {1, 0})});
  auto gi = minimal_idempotent_group(i2);
  CHECK(gi.is_group);
  CHECK(gi.members.size() == 1);
  CHECK(i2.elem(gi.e0) == PartialPerm::empty_map(2));
}

TEST_CASE("sub-semigroup extraction and failure witness") {
  auto i2 = ISG::close(2, {PartialPerm(2, {2, 1}), PartialPerm(2, {1, 0})});
  std::vector<int> idem = i2.idempotents();
  auto sub = SubISG::from_indices(i2, idem);
  CHECK(sub.size() == 4);
  for (int i = 0; i < sub.size(); ++i) {
    CHECK(sub.from_parent[sub.to_parent[i]] == i);
    CHECK(i2.elem(sub.to_parent[i]) == sub.local.elem(i));
  }

  const int swap_idx = i2.index_of(PartialPerm(2, {2, 1}));
  REQUIRE(swap_idx >= 0);
  CHECK(!subsemigroup_check(i2, {swap_idx}).ok());
  CHECK_THROWS_AS(SubISG::from_indices(i2, {swap_idx}), Error);

  auto whole = SubISG::whole(i2);
  CHECK(whole.size() == i2.size());
}

TEST_CASE("semigroup document parsing") {
  auto in = parse_semigroup_text(
      R"({"degree": 2, "generators": [[2, 1], [1, null]]})");
  CHECK(in.degree == 2);
  REQUIRE(in.generators.size() == 2);
  CHECK(in.generators[1].image(2) == 0);

  auto round = parse_semigroup_text(semigroup_input_to_text(in));
  CHECK(round.degree == in.degree);
  CHECK(round.generators == in.generators);

  CHECK_THROWS_AS(parse_semigroup_text("nonsense"), Error);
  CHECK_THROWS_AS(parse_semigroup_text(R"({"degree": 2})"), Error);
  CHECK_THROWS_AS(
      parse_semigroup_text(R"({"degree": 2, "generators": [[5, 1]]})"), Error);
}

TEST_CASE("table cache round trip") {
  SemigroupInput in;
  in.degree = 2;
  in.generators = {PartialPerm(2, {2, 1}), PartialPerm(2, {1, 0})};
  auto g = ISG::close(in.degree, in.generators);

  const std::string path = "cache_test.json";
  save_table_cache(g, in, path);
  auto loaded = load_table_cache(in, path);
  REQUIRE(loaded.has_value());
  CHECK(loaded->size() == g.size());
  for (int i = 0; i < g.size(); ++i) CHECK(loaded->elem(i) == g.elem(i));

  SemigroupInput other = in;
  other.generators.pop_back();
  CHECK(!load_table_cache(other, path).has_value());
  CHECK(generator_hash(in) != generator_hash(other));
  std::remove(path.c_str());
}
