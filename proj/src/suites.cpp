#include "isg/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "isg/crossed.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/galgebra.hpp"
#include "isg/generators.hpp"
#include "isg/hilbert.hpp"
#include "isg/induction.hpp"
#include "isg/lattice.hpp"
#include "isg/linalg.hpp"
#include "isg/semigroup.hpp"

namespace isg {
namespace {

void note(std::vector<CheckResult>& out, std::string name, bool pass,
          std::string witness = "") {
  out.push_back(CheckResult{std::move(name), pass, std::move(witness)});
}

SubISG sub_by_elems(const ISG& g, const std::vector<PartialPerm>& elems) {
  std::vector<int> idx;
  idx.reserve(elems.size());
  for (const auto& p : elems) idx.push_back(g.index_of(p));
  return SubISG::closure_of(g, idx);
}

SubISG idem_sub(const ISG& g) {
  return SubISG::from_indices(g, g.idempotents());
}

// ------------------------------------------------------------------
// leading-coefficient calculus
// ------------------------------------------------------------------

// All laws of the lattice calculus on one semigroup: the atom/idempotent
// pairing, head, product and domination laws of the leading coefficient,
// and the conjugation laws.  `exhaustive` switches the pair loops from
// sampling to full enumeration; fixtures use it, random instances scale
// their sampling by size.
void sigma_instance(const ISG& g, SplitMix64& rng, bool exhaustive,
                    std::vector<CheckResult>& out) {
  int bi = -1, bj = -1, bk = -1;
  const bool assoc = g.table_associative(&bi, &bj, &bk);
  note(out, "table associativity", assoc,
       assoc ? "" : "at (" + std::to_string(bi) + "," + std::to_string(bj) +
                        "," + std::to_string(bk) + ")");

  ProjLattice l = ProjLattice::full(g);
  const int ne = l.size();
  const std::vector<TProj> atoms = all_atoms(l);

  {
    bool pass = static_cast<int>(atoms.size()) == ne;
    std::string w = pass ? "" : "atom count differs from member count";
    for (int e = 0; pass && e < ne; ++e) {
      if (atoms[e].is_zero() || sigma(atoms[e]) != e) {
        pass = false;
        w = "atom at " + l.label(e);
      }
    }
    for (int e = 0; pass && e < ne; ++e) {
      const AtomWord word = canonical_atom_word(l, e);
      if (word.e0 != e ||
          !(word_to_atoms(l, word.e0, word.negatives) == atoms[e])) {
        pass = false;
        w = "canonical word at " + l.label(e);
      }
    }
    for (int e = 0; pass && e < ne; ++e) {
      for (int f = e + 1; pass && f < ne; ++f) {
        if (!atoms[e].meet(atoms[f]).is_zero()) {
          pass = false;
          w = "atoms " + l.label(e) + ", " + l.label(f) + " overlap";
        }
      }
    }
    note(out, "atoms pair with the idempotents", pass, w);
  }

  std::vector<TProj> downs;
  downs.reserve(ne);
  for (int e = 0; e < ne; ++e) downs.push_back(word_to_atoms(l, e, {}));

  {
    bool pass = true;
    std::string w;
    for (int e = 0; pass && e < ne; ++e) {
      if (downs[e].is_zero() || sigma(downs[e]) != e) {
        pass = false;
        w = l.label(e);
      }
    }
    note(out, "head of a down set", pass, w);
  }

  // Two pools: `words` holds only values of words e0 * prod (1 - f_i),
  // where the head laws live; `pool` adds joins of atoms, where only the
  // lattice-morphism laws hold.
  std::vector<TProj> words = atoms;
  words.insert(words.end(), downs.begin(), downs.end());
  for (int t = 0; t < 6; ++t) {
    const int e0 = rng.below(ne);
    std::vector<int> negs;
    for (int k = rng.below(3); k > 0; --k) negs.push_back(rng.below(ne));
    const TProj w = word_to_atoms(l, e0, negs);
    if (!w.is_zero()) words.push_back(w);
  }
  const int nw = static_cast<int>(words.size());

  std::vector<TProj> pool = words;
  for (int t = 0; t < 6 && ne > 1; ++t) {
    pool.push_back(atoms[rng.below(ne)].join(atoms[rng.below(ne)]));
  }
  const int np = static_cast<int>(pool.size());

  {
    bool pass = true;
    std::string w;
    const bool full_pairs = exhaustive || nw <= 40;
    const int samples = full_pairs ? nw * nw : 240;
    for (int t = 0; pass && t < samples; ++t) {
      const int pi = full_pairs ? t / nw : rng.below(nw);
      const int qi = full_pairs ? t % nw : rng.below(nw);
      const TProj pq = words[pi].meet(words[qi]);
      if (pq.is_zero()) continue;
      if (sigma(pq) != l.meet(sigma(words[pi]), sigma(words[qi]))) {
        pass = false;
        w = words[pi].str() + " * " + words[qi].str();
      }
    }
    note(out, "product law of the leading coefficient", pass, w);
  }

  // p <= down(f) iff sigma(p) <= f; when nothing dominates p at all,
  // sigma must refuse instead of inventing a head
  {
    bool pass = true;
    std::string w;
    for (int pi = 0; pass && pi < np; ++pi) {
      bool dominated = false;
      for (int f = 0; f < ne && !dominated; ++f) {
        dominated = pool[pi].leq(downs[f]);
      }
      if (!dominated) {
        bool refused = false;
        try {
          sigma(pool[pi]);
        } catch (const Error& e) {
          refused = e.code() == ErrorCode::NoLeadingCoefficient;
        }
        if (!refused) {
          pass = false;
          w = pool[pi].str() + " has no head yet sigma answered";
        }
        continue;
      }
      const int s = sigma(pool[pi]);
      for (int f = 0; pass && f < ne; ++f) {
        if (pool[pi].leq(downs[f]) != l.leq(s, f)) {
          pass = false;
          w = pool[pi].str() + " against " + l.label(f);
        }
      }
    }
    note(out, "domination through the leading coefficient", pass, w);
  }

  // conjugation laws, one sweep per element
  {
    bool join_ok = true, meet_ok = true, order_ok = true, head_ok = true;
    std::string wj, wm, wo, wh;
    const int n = g.size();
    for (int x = 0; x < n; ++x) {
      std::vector<TProj> img;
      img.reserve(ne);
      for (int a = 0; a < ne; ++a) {
        img.push_back(conjugate_projection(x, atoms[a]));
      }

      const bool full_atoms = exhaustive || ne <= 16;
      const int jn = full_atoms ? ne * ne : 120;
      for (int t = 0; join_ok && t < jn; ++t) {
        const int a = full_atoms ? t / ne : rng.below(ne);
        const int b = full_atoms ? t % ne : rng.below(ne);
        const TProj lhs = conjugate_projection(x, atoms[a].join(atoms[b]));
        if (!(lhs == img[a].join(img[b]))) {
          join_ok = false;
          wj = "element " + g.elem(x).str();
        }
      }

      const int mn = exhaustive || np <= 20 ? np * np : 48;
      const bool full_pool = exhaustive || np <= 20;
      for (int t = 0; (meet_ok || order_ok) && t < mn; ++t) {
        const int pi = full_pool ? t / np : rng.below(np);
        const int qi = full_pool ? t % np : rng.below(np);
        const TProj cp = conjugate_projection(x, pool[pi]);
        const TProj cq = conjugate_projection(x, pool[qi]);
        if (meet_ok &&
            !(conjugate_projection(x, pool[pi].meet(pool[qi])) ==
              cp.meet(cq))) {
          meet_ok = false;
          wm = "element " + g.elem(x).str();
        }
        if (order_ok && pool[pi].leq(pool[qi]) && !cp.leq(cq)) {
          order_ok = false;
          wo = "element " + g.elem(x).str();
        }
      }

      const int hn = exhaustive || nw <= 20 ? nw : 12;
      for (int t = 0; head_ok && t < hn; ++t) {
        const int pi = exhaustive || nw <= 20 ? t : rng.below(nw);
        const TProj cp = conjugate_projection(x, words[pi]);
        if (cp.is_zero()) continue;
        const int expect =
            g.mul(g.mul(x, l.members[sigma(words[pi])]), g.inv(x));
        if (l.members[sigma(cp)] != expect) {
          head_ok = false;
          wh = "element " + g.elem(x).str();
        }
      }
    }
    note(out, "conjugation preserves joins", join_ok, wj);
    note(out, "conjugation preserves products", meet_ok, wm);
    note(out, "conjugation preserves the order", order_ok, wo);
    note(out, "conjugation moves the leading coefficient", head_ok, wh);
  }

  {
    bool pass = true;
    std::string w;
    for (int h = 0; pass && h < ne; ++h) {
      for (int a = 0; pass && a < ne; ++a) {
        const TProj q = conjugate_projection(l.members[h], atoms[a]);
        const bool below = l.leq(a, h);
        if ((below && !(q == atoms[a])) || (!below && !q.is_zero())) {
          pass = false;
          w = "member " + l.label(h) + ", atom " + l.label(a);
        }
      }
    }
    note(out, "conjugation by a member cuts below it", pass, w);
  }

  {
    bool pass = true;
    std::string w;
    const int n = g.size();
    const int samples = exhaustive && n <= 12 ? n * n * ne : 36;
    for (int t = 0; pass && t < samples; ++t) {
      int x, y, a;
      if (exhaustive && n <= 12) {
        x = t / (n * ne);
        y = (t / ne) % n;
        a = t % ne;
      } else {
        x = rng.below(n);
        y = rng.below(n);
        a = rng.below(ne);
      }
      const TProj lhs = conjugate_projection(x, conjugate_projection(y, atoms[a]));
      if (!(lhs == conjugate_projection(g.mul(x, y), atoms[a]))) {
        pass = false;
        w = g.elem(x).str() + " after " + g.elem(y).str();
      }
    }
    note(out, "conjugation composes along the product", pass, w);
  }
}

// ------------------------------------------------------------------
// pair model of the coset space
// ------------------------------------------------------------------

void delta_instance(const ISG& par, const SubISG& h,
                    std::vector<CheckResult>& out) {
  const SubISG whole = SubISG::whole(par);
  const DeltaBijection d = delta_bijection(whole, h);

  note(out, "pair correspondence verified", d.report.ok(),
       d.report.ok() ? "" : d.report.violations.front());
  note(out, "pair and member counts agree",
       d.report.pair_count == d.report.member_count &&
           d.report.member_count ==
               static_cast<int>(d.cosets.members.size()));

  const int nm = static_cast<int>(d.cosets.members.size());
  {
    bool pass = true;
    std::string w;
    for (int mi = 0; pass && mi < nm; ++mi) {
      const int pt = d.to_point[mi];
      if (pt < 0 || d.to_member[pt] != d.cosets.members[mi]) {
        pass = false;
        w = "member " + par.elem(d.cosets.members[mi]).str();
      }
    }
    note(out, "round trips are mutually inverse", pass, w);
  }

  // the two partitions match under the correspondence
  {
    bool pass = true;
    std::string w;
    std::vector<int> to_coset_class(d.point_classes.size(), -1);
    for (int mi = 0; pass && mi < nm; ++mi) {
      const int mc = d.cosets.class_of[d.cosets.members[mi]];
      const int pc = d.point_class_of[d.to_point[mi]];
      if (to_coset_class[pc] == -1) {
        to_coset_class[pc] = mc;
      } else if (to_coset_class[pc] != mc) {
        pass = false;
        w = "member " + par.elem(d.cosets.members[mi]).str();
      }
    }
    std::vector<char> hit(d.cosets.class_count(), 0);
    for (int pc = 0; pass && pc < static_cast<int>(to_coset_class.size());
         ++pc) {
      if (to_coset_class[pc] < 0 || hit[to_coset_class[pc]]) {
        pass = false;
        w = "class fusion";
      } else {
        hit[to_coset_class[pc]] = 1;
      }
    }
    note(out, "class partitions correspond", pass, w);
  }

  // gated left translation stays inside the members and is constant on
  // classes, so the correspondence carries the action
  {
    bool pass = true;
    std::string w;
    std::vector<int> pos_of(par.size(), -1);
    for (int mi = 0; mi < nm; ++mi) pos_of[d.cosets.members[mi]] = mi;
    std::vector<std::vector<int>> target(
        d.cosets.class_count(), std::vector<int>(par.size(), -2));
    for (int mi = 0; pass && mi < nm; ++mi) {
      const int m = d.cosets.members[mi];
      const int mm = par.range_proj(m);
      for (int k = 0; pass && k < par.size(); ++k) {
        if (!par.leq(mm, par.domain_proj(k))) continue;
        const int km = par.mul(k, m);
        if (pos_of[km] < 0) {
          pass = false;
          w = "translate of " + par.elem(m).str() + " by " +
              par.elem(k).str() + " leaves the members";
          break;
        }
        const int tc = d.cosets.class_of[km];
        int& slot = target[d.cosets.class_of[m]][k];
        if (slot == -2) {
          slot = tc;
        } else if (slot != tc) {
          pass = false;
          w = "translation splits the class of " + par.elem(m).str();
        }
      }
    }
    note(out, "translation respects the classes", pass, w);
  }
}

// ------------------------------------------------------------------
// induction
// ------------------------------------------------------------------

void induction_instance(const ISG& par, const SubISG& h, const GAlgebra& d,
                        SplitMix64& rng, std::vector<CheckResult>& out) {
  const SubISG whole = SubISG::whole(par);
  const IndAlgebra ind = induce(d, whole);

  {
    const ActionReport rep = validate_action(ind.algebra);
    note(out, "induced action is valid", rep.ok(),
         rep.ok() ? "" : rep.violations.front());
  }
  {
    const auto bad = check_translation_constraint(ind);
    note(out, "translation law holds", bad.empty(),
         bad.empty() ? "" : bad.front());
  }
  {
    int total = 0;
    for (std::size_t c = 0; c < ind.cosets.transversal.size(); ++c) {
      const int rep = ind.cosets.transversal[c];
      const int dom = par.mul(par.inv(rep), rep);
      const int pos = ind.base->lattice.position_of_ambient(dom);
      if (pos >= 0) total += ind.base->fiber_dim(pos);
    }
    std::ostringstream w;
    w << "expected " << total << ", built " << ind.algebra.dim();
    note(out, "dimension equals the fiber sum over the transversal",
         total == ind.algebra.dim(), w.str());
  }

  const CosetTable turned =
      rotate_transversal(coset_table(whole, h), 1 + rng.below(3));
  const IndAlgebra ind2 = induce(d, whole, &turned);
  {
    const bool same_dim = ind2.algebra.dim() == ind.algebra.dim();
    const bool valid = validate_action(ind2.algebra).ok();
    const bool law = check_translation_constraint(ind2).empty();
    note(out, "rotated transversal builds the same shape",
         same_dim && valid && law);
  }
  {
    const UnitIota u1 = unit_iota(d, whole);
    const UnitIota u2 = unit_iota(d, whole, &turned);
    note(out, "unit verdict survives rotation",
         u1.ok() && u2.ok() && u1.injective && u2.injective,
         u1.ok() ? (u2.ok() ? "" : u2.violations.front())
                 : u1.violations.front());
  }
  {
    const GAlgebra b = random_galgebra(rng, whole, 3);
    const MuIso m1 = mu_iso(b, h);
    const MuIso m2 = mu_iso(b, h, &turned);
    note(out, "class comparison verdict survives rotation",
         m1.report.ok() && m2.report.ok(),
         m1.report.ok()
             ? (m2.report.ok() ? "" : m2.report.violations.front())
             : m1.report.violations.front());
    const TauIso t1 = tau_iso(d, b, whole);
    const TauIso t2 = tau_iso(d, b, whole, &turned);
    note(out, "tensor comparison verdict survives rotation",
         t1.report.ok() && t2.report.ok(),
         t1.report.ok()
             ? (t2.report.ok() ? "" : t2.report.violations.front())
             : t1.report.violations.front());
  }
}

// ------------------------------------------------------------------
// fibered restriction
// ------------------------------------------------------------------

void restriction_instance(const SubISG& h, const GAlgebra& a,
                          std::vector<CheckResult>& out) {
  const Restriction r = fibered_restriction(a, h);
  {
    const ActionReport rep = validate_action(r.algebra);
    note(out, "restricted action is valid", rep.ok(),
         rep.ok() ? "" : rep.violations.front());
  }
  {
    int total = 0;
    for (int e : h.local.idempotents()) {
      const int pos = a.lattice.position_of_ambient(h.to_parent[e]);
      if (pos >= 0) total += a.fiber_dim(pos);
    }
    note(out, "dimension is the fiber sum over the subgroup idempotents",
         total == r.algebra.dim());
  }
  {
    const RouteReport rep = restriction_route_report(a, h);
    note(out, "tensor route rebuilds the restriction", rep.ok(),
         rep.ok() ? "" : rep.violations.front());
  }
  {
    const FiberedModel fm = fibered_model(a);
    note(out, "input is certified fibered", fm.fibered);
  }
}

// ------------------------------------------------------------------
// the two comparison maps
// ------------------------------------------------------------------

void mutau_instance(const ISG& par, const SubISG& h, const GAlgebra& a,
                    const GAlgebra& b, std::vector<CheckResult>& out) {
  const SubISG whole = SubISG::whole(par);
  {
    const MuIso m = mu_iso(b, h);
    note(out, "class comparison is an equivariant isomorphism",
         m.report.ok() && m.report.bijective,
         m.report.ok() ? "" : m.report.violations.front());
  }
  {
    const TauIso t = tau_iso(a, b, whole);
    note(out, "tensor comparison is an equivariant isomorphism",
         t.report.ok() && t.report.bijective,
         t.report.ok() ? "" : t.report.violations.front());
  }
  {
    const FiberedModel fm = fibered_model(b);
    note(out, "coefficient algebra is certified fibered", fm.fibered);
  }
}

// ------------------------------------------------------------------
// adjunction triangles
// ------------------------------------------------------------------

void adjunction_instance(const ISG& par, const GAlgebra& a, const GAlgebra& b,
                         std::vector<CheckResult>& out) {
  const SubISG whole = SubISG::whole(par);
  const TriangleReport tr = triangle_identities(a, b, whole);
  note(out, "unit composite has the closed form", tr.unit_form);
  note(out, "first cycle collapses onto the induced algebra", tr.cutdown_u);
  note(out, "counit composite has the closed form", tr.counit_form);
  note(out, "second cycle collapses onto the restriction", tr.cutdown_v);
  if (!tr.ok()) {
    note(out, "triangle witnesses", false, tr.violations.front());
  }
}

// ------------------------------------------------------------------
// square-summable modules
// ------------------------------------------------------------------

void l2_instance(const ISG& par, SplitMix64& rng,
                 std::vector<CheckResult>& out) {
  {
    const auto bad = check_translation_bijections(par);
    note(out, "translation bijections hold", bad.empty(),
         bad.empty() ? "" : bad.front());
  }

  const SubISG whole = SubISG::whole(par);
  const HModule m = build_l2(whole);
  const ModuleReport rep = check_module(m);
  note(out, "module audit passes", rep.ok(),
       rep.ok() ? "" : rep.violations.front());
  note(out, "module is full", rep.full);

  {
    bool pass = true;
    std::string w;
    const int n = m.rank();
    const int L = m.lattice.size();
    for (int i = 0; pass && i < n; ++i) {
      for (int j = 0; pass && j < n; ++j) {
        Vec expect = vec_zero(L);
        if (i == j) expect[m.range_at[i]] = QC(1);
        if (m.inner[i][j] != expect) {
          pass = false;
          w = m.labels[i] + " with " + m.labels[j];
        }
      }
    }
    note(out, "point masses are orthonormal over their ranges", pass, w);
  }

  {
    bool pass = true;
    std::string w;
    const int n = m.rank();
    for (int k = 0; pass && k < whole.size(); ++k) {
      for (int x = 0; pass && x < n; ++x) {
        const Vec moved = m.action[k].col(x);
        if (module_norm_sq(m, moved) > module_norm_sq(m, vec_unit(n, x))) {
          pass = false;
          w = "element " + par.elem(k).str() + " on " + m.labels[x];
        }
      }
      for (int t = 0; pass && t < 4; ++t) {
        Vec v = vec_zero(n);
        for (int picks = 0; picks < 4; ++picks) {
          v[rng.below(n)] += QC(mpq_class(static_cast<long>(rng.below(5)) - 2),
                                mpq_class(static_cast<long>(rng.below(5)) - 2));
        }
        if (module_norm_sq(m, m.action[k].apply(v)) >
            module_norm_sq(m, v)) {
          pass = false;
          w = "element " + par.elem(k).str() + " on a combination";
        }
      }
    }
    note(out, "translation never grows the norm", pass, w);
  }
}

// ------------------------------------------------------------------
// module comparison operators
// ------------------------------------------------------------------

void mingo_instance(const ISG& par, const SubISG& h, SplitMix64& rng,
                    std::vector<CheckResult>& out) {
  const SubISG whole = SubISG::whole(par);
  const HModule e1 = build_l2(whole);
  const HModule e2 = build_l2(whole);
  const Mat u = random_module_unitary(rng, e1);

  {
    const MingoReport rep = mingo_v(e1, e2, u);
    note(out, "comparison operator is equivariant and isometric", rep.ok(),
         rep.ok() ? "" : rep.violations.front());
  }
  {
    Mat broken = u;
    for (int r = 0; r < broken.rows; ++r) {
      broken.at(r, 0) = broken.at(r, 0) * QC(2);
    }
    bool rejected = false;
    try {
      mingo_v(e1, e2, broken);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::NotUnitary;
    }
    note(out, "a stretched map is rejected as non-unitary", rejected);
  }

  {
    const HModule classes = build_l2_cosets(whole, h);
    const ModuleReport rep = check_module(classes);
    note(out, "class module audit passes", rep.ok(),
         rep.ok() ? "" : rep.violations.front());
    const DiagonalEmbed d = diagonal_embedding(whole, h);
    note(out, "diagonal embedding lands in the compacts", d.ok(),
         d.ok() ? "" : d.violations.front());
  }
}

// ------------------------------------------------------------------
// imprimitivity
// ------------------------------------------------------------------

void imprimitivity_instance(const ISG& par, const GAlgebra& a,
                            std::uint64_t seed, double tol,
                            std::vector<CheckResult>& out) {
  const SubISG whole = SubISG::whole(par);
  {
    const ActionReport rep = validate_action(a);
    note(out, "coefficient action is valid", rep.ok(),
         rep.ok() ? "" : rep.violations.front());
  }
  const auto started = std::chrono::steady_clock::now();
  const ImprimitivityReport rep = imprimitivity_check(a, whole, seed, tol);
  const auto elapsed = std::chrono::steady_clock::now() - started;

  std::ostringstream w;
  w << "induced side " << rep.induced_side.k0_rank() << " blocks, base side "
    << rep.base_side.k0_rank();
  note(out, "block counts agree across the equivalence", rep.counts_match,
       rep.counts_match ? "" : w.str());
  note(out, "decomposition stays inside the time budget",
       elapsed < std::chrono::seconds(5));
}

// ------------------------------------------------------------------
// fixtures per suite
// ------------------------------------------------------------------

void sigma_fixtures(SplitMix64& rng, std::vector<CheckResult>& out) {
  const struct {
    const char* name;
    ISG g;
  } fx[] = {
      {"two element chain", fixtures::chain2()},
      {"order two group", fixtures::z2()},
      {"degree two monoid", fixtures::sym_inv(2)},
      {"degree three monoid", fixtures::sym_inv(3)},
  };
  for (const auto& f : fx) {
    std::vector<CheckResult> local;
    sigma_instance(f.g, rng, true, local);
    for (auto& c : local) {
      c.name = std::string("fixture ") + f.name + ": " + c.name;
      out.push_back(std::move(c));
    }
  }
}

void delta_fixtures(std::vector<CheckResult>& out) {
  auto push = [&out](const char* name, const ISG& par, const SubISG& h) {
    std::vector<CheckResult> local;
    delta_instance(par, h, local);
    for (auto& c : local) {
      c.name = std::string("fixture ") + name + ": " + c.name;
      out.push_back(std::move(c));
    }
  };
  {
    const ISG par = fixtures::chain2();
    push("chain over its bottom", par,
         sub_by_elems(par, {PartialPerm::empty_map(1)}));
  }
  {
    const ISG par = fixtures::sym_inv(2);
    push("degree two over its idempotents", par, idem_sub(par));
    push("degree two over its unit group", par,
         sub_by_elems(par, {PartialPerm(2, {1, 2}), PartialPerm(2, {2, 1})}));
  }
  {
    const ISG par = fixtures::sym_inv(3);
    push("degree three over its idempotents", par, idem_sub(par));
  }
}

void l2_fixtures(SplitMix64& rng, std::vector<CheckResult>& out) {
  const struct {
    const char* name;
    ISG g;
  } fx[] = {
      {"two element chain", fixtures::chain2()},
      {"order two group", fixtures::z2()},
      {"degree two monoid", fixtures::sym_inv(2)},
      {"degree three monoid", fixtures::sym_inv(3)},
  };
  for (const auto& f : fx) {
    std::vector<CheckResult> local;
    l2_instance(f.g, rng, local);
    for (auto& c : local) {
      c.name = std::string("fixture ") + f.name + ": " + c.name;
      out.push_back(std::move(c));
    }
  }
}

void imprimitivity_fixtures(double tol, std::vector<CheckResult>& out) {
  struct Expect {
    const char* name;
    int count;
  };
  auto push = [&out, tol](const char* name, const ISG& par, const SubISG& h,
                          const GAlgebra& a, int want) {
    std::vector<CheckResult> local;
    imprimitivity_instance(par, a, 1, tol, local);
    const SubISG whole = SubISG::whole(par);
    const ImprimitivityReport rep = imprimitivity_check(a, whole, 1, tol);
    std::ostringstream w;
    w << "expected " << want << ", induced " << rep.induced_side.k0_rank()
      << ", base " << rep.base_side.k0_rank();
    note(local, "pinned block count", rep.counts_match &&
                                          rep.base_side.k0_rank() == want,
         w.str());
    for (auto& c : local) {
      c.name = std::string("fixture ") + name + ": " + c.name;
      out.push_back(std::move(c));
    }
    (void)h;
  };

  {
    const ISG par = fixtures::z2();
    const SubISG h = SubISG::from_indices(par, {0});
    push("group over its identity", par, h, trivial_algebra(h), 1);
    const SubISG w = SubISG::whole(par);
    push("group over itself", par, w, trivial_algebra(w), 2);
  }
  {
    const ISG par = fixtures::chain2();
    const SubISG h = sub_by_elems(par, {PartialPerm::empty_map(1)});
    push("chain over its bottom", par, h, trivial_algebra(h), 1);
  }
  {
    const ISG par = fixtures::sym_inv(2);
    const SubISG e = idem_sub(par);
    push("monoid over its idempotents", par, e, trivial_algebra(e), 1);
    const SubISG u =
        sub_by_elems(par, {PartialPerm(2, {1, 2}), PartialPerm(2, {2, 1})});
    push("monoid over its unit group", par, u, c0_algebra(u), 1);
  }
}

// ------------------------------------------------------------------
// trial pool
// ------------------------------------------------------------------

constexpr std::uint64_t kCorePoolSalt = 0x636f72652d706f6full;

std::uint64_t name_salt(const std::string& suite) {
  if (suite == "sigma" || suite == "delta") return kCorePoolSalt;
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : suite) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

using TrialBody = std::function<void(SplitMix64&, std::vector<CheckResult>&)>;

std::vector<CheckResult> run_trials(const std::string& label, int trials,
                                    std::uint64_t seed, std::uint64_t salt,
                                    int* failed, const TrialBody& body) {
  std::vector<std::uint64_t> trial_seed(trials);
  SplitMix64 src(seed ^ salt);
  for (int i = 0; i < trials; ++i) trial_seed[i] = src.next();

  std::vector<std::vector<CheckResult>> per(trials);
  std::atomic<int> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const int i = cursor.fetch_add(1);
      if (i >= trials) return;
      std::vector<CheckResult> local;
      try {
        SplitMix64 rng(trial_seed[i]);
        body(rng, local);
      } catch (const Error& e) {
        local.push_back(CheckResult{
            "completes", false,
            std::string(error_code_name(e.code())) + ": " + e.what()});
      } catch (const std::exception& e) {
        local.push_back(CheckResult{"completes", false, e.what()});
      }
      per[i] = std::move(local);
    }
  };
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned nw = std::min(8u, std::max(1u, hw));
  std::vector<std::thread> pool;
  pool.reserve(nw);
  for (unsigned t = 0; t < nw; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Passing trials compress to one line; failing trials keep their
  // witnesses, capped so a systematic failure stays readable.
  std::vector<CheckResult> out;
  *failed = 0;
  for (int i = 0; i < trials; ++i) {
    const bool ok = std::all_of(per[i].begin(), per[i].end(),
                                [](const CheckResult& c) { return c.pass; });
    const std::string prefix = label + " trial " + std::to_string(i);
    if (ok) {
      out.push_back(CheckResult{
          prefix, true, std::to_string(per[i].size()) + " checks"});
      continue;
    }
    ++*failed;
    int kept = 0;
    for (auto& c : per[i]) {
      if (c.pass || kept >= 8) continue;
      ++kept;
      out.push_back(CheckResult{prefix + ": " + c.name, false,
                                std::move(c.witness)});
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "sigma",      "delta", "induction", "restriction",   "mu-tau",
      "adjunction", "l2",    "mingo",     "imprimitivity",
  };
  return names;
}

bool is_suite(const std::string& name) {
  const auto& all = suite_names();
  return std::find(all.begin(), all.end(), name) != all.end();
}

int default_trials(const std::string& suite) {
  if (suite == "sigma" || suite == "delta") return 200;
  if (suite == "l2" || suite == "mingo") return 60;
  if (suite == "imprimitivity") return 50;
  return 100;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
  SuiteResult result;
  result.suite = name;
  const int trials = cfg.trials > 0 ? cfg.trials : default_trials(name);
  result.trials = trials;
  SplitMix64 fixture_rng(cfg.seed ^ 0x66697874ull);

  TrialBody body;
  if (name == "sigma") {
    sigma_fixtures(fixture_rng, result.checks);
    body = [&cfg](SplitMix64& rng, std::vector<CheckResult>& out) {
      const ISG g = random_isg(rng, cfg.degree, cfg.cap);
      sigma_instance(g, rng, false, out);
    };
  } else if (name == "delta") {
    delta_fixtures(result.checks);
    body = [&cfg](SplitMix64& rng, std::vector<CheckResult>& out) {
      const ISG g = random_isg(rng, cfg.degree, cfg.cap);
      const SubISG h = random_sub(rng, g);
      delta_instance(g, h, out);
    };
  } else if (name == "induction") {
    body = [&cfg](SplitMix64& rng, std::vector<CheckResult>& out) {
      const ISG g = random_isg(rng, cfg.degree, std::min(cfg.cap, 16));
      const SubISG h = random_sub(rng, g);
      const GAlgebra d = random_galgebra(rng, h, 3);
      induction_instance(g, h, d, rng, out);
    };
  } else if (name == "restriction") {
    body = [&cfg](SplitMix64& rng, std::vector<CheckResult>& out) {
      const ISG g = random_isg(rng, cfg.degree, std::min(cfg.cap, 20));
      const SubISG h = random_sub(rng, g);
      const SubISG whole = SubISG::whole(g);
      const GAlgebra a = random_galgebra(rng, whole, 5);
      restriction_instance(h, a, out);
    };
  } else if (name == "mu-tau") {
    body = [&cfg](SplitMix64& rng, std::vector<CheckResult>& out) {
      const ISG g = random_isg(rng, cfg.degree, std::min(cfg.cap, 14));
      const SubISG h = random_sub(rng, g);
      const SubISG whole = SubISG::whole(g);
      const GAlgebra b = random_galgebra(rng, whole, 5);
      const GAlgebra a = random_galgebra(rng, h, 3);
      mutau_instance(g, h, a, b, out);
    };
  } else if (name == "adjunction") {
    {
      // pinned configurations: acting semigroups consisting only of
      // idempotents, where both cycles have the fully explicit form,
      // plus a subgroup case
      auto pinned = [&result](const char* name, const ISG& par,
                              const GAlgebra& a, const GAlgebra& b) {
        std::vector<CheckResult> local;
        adjunction_instance(par, a, b, local);
        for (auto& c : local) {
          c.name = std::string("fixture ") + name + ": " + c.name;
          result.checks.push_back(std::move(c));
        }
      };
      const ISG chain = fixtures::chain2();
      const SubISG hc = sub_by_elems(chain, {PartialPerm::empty_map(1)});
      pinned("chain", chain, trivial_algebra(hc), epsilon_algebra(chain));
      const std::vector<PartialPerm> idems = {
          PartialPerm(2, {1, 2}), PartialPerm(2, {1, 0}),
          PartialPerm(2, {0, 2}), PartialPerm::empty_map(2)};
      const ISG sl = ISG::close(2, idems);
      const SubISG hs = sub_by_elems(sl, {PartialPerm::empty_map(2)});
      pinned("semilattice functions", sl, trivial_algebra(hs),
             c0_algebra(sl));
      pinned("semilattice characters", sl, epsilon_algebra(idem_sub(sl)),
             epsilon_algebra(sl));
      const ISG par = fixtures::sym_inv(2);
      const SubISG units =
          sub_by_elems(par, {PartialPerm(2, {1, 2}), PartialPerm(2, {2, 1})});
      pinned("unit subgroup", par, trivial_algebra(units),
             epsilon_algebra(par));
    }
    body = [&cfg](SplitMix64& rng, std::vector<CheckResult>& out) {
      const ISG g = random_isg(rng, cfg.degree, std::min(cfg.cap, 14));
      const SubISG h = random_sub(rng, g);
      const SubISG whole = SubISG::whole(g);
      const GAlgebra a = random_galgebra(rng, h, 3);
      const GAlgebra b = random_galgebra(rng, whole, 4);
      adjunction_instance(g, a, b, out);
    };
  } else if (name == "l2") {
    l2_fixtures(fixture_rng, result.checks);
    body = [&cfg](SplitMix64& rng, std::vector<CheckResult>& out) {
      const ISG g = random_isg(rng, cfg.degree, std::min(cfg.cap, 34));
      l2_instance(g, rng, out);
    };
  } else if (name == "mingo") {
    body = [&cfg](SplitMix64& rng, std::vector<CheckResult>& out) {
      const ISG g = random_isg(rng, cfg.degree, std::min(cfg.cap, 14));
      const SubISG h = random_sub(rng, g);
      mingo_instance(g, h, rng, out);
    };
  } else if (name == "imprimitivity") {
    imprimitivity_fixtures(cfg.tol, result.checks);
    body = [&cfg](SplitMix64& rng, std::vector<CheckResult>& out) {
      const ISG g = random_isg(rng, cfg.degree, std::min(cfg.cap, 12));
      const SubISG h = random_sub(rng, g);
      const GAlgebra a = random_galgebra(rng, h, 2);
      imprimitivity_instance(g, a, rng.next(), cfg.tol, out);
    };
  } else {
    throw Error(ErrorCode::ParseError, "unknown suite: " + name);
  }

  auto trial_checks = run_trials(name, trials, cfg.seed, name_salt(name),
                                 &result.failed_trials, body);
  for (auto& c : trial_checks) result.checks.push_back(std::move(c));
  result.pass = std::all_of(result.checks.begin(), result.checks.end(),
                            [](const CheckResult& c) { return c.pass; });
  return result;
}

std::vector<SuiteResult> run_many(const std::string& name,
                                  const RunConfig& cfg) {
  std::vector<SuiteResult> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(run_suite(s, cfg));
    return out;
  }
  out.push_back(run_suite(name, cfg));
  return out;
}

}  // namespace isg
