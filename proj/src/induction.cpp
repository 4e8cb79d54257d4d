#include "isg/induction.hpp"

#include <algorithm>
#include <string>

#include "isg/error.hpp"

namespace isg {

namespace {

void require_within(const SubISG& g, const SubISG& h) {
  if (g.parent != h.parent) {
    throw Error(ErrorCode::InvalidAlgebra,
                "coset data crosses ambient semigroups");
  }
  for (int i = 0; i < h.size(); ++i) {
    if (g.from_parent[h.to_parent[i]] < 0) {
      throw Error(ErrorCode::NotASubsemigroup,
                  "subgroup member " + g.parent->elem(h.to_parent[i]).str() +
                      " lies outside the ambient semigroup");
    }
  }
}

// Expansions over the parent element basis, used to compare pairs exactly.
Vec form_mul_elem(const ISG& par, const Vec& f, int k) {
  Vec out = vec_zero(par.size());
  for (int x = 0; x < par.size(); ++x) {
    if (!f[x].is_zero()) out[par.mul(x, k)] += f[x];
  }
  return out;
}

Vec form_star(const ISG& par, const Vec& f) {
  Vec out = vec_zero(par.size());
  for (int x = 0; x < par.size(); ++x) {
    if (!f[x].is_zero()) out[par.inv(x)] += f[x].conj();
  }
  return out;
}

Vec form_mul(const ISG& par, const Vec& a, const Vec& b) {
  Vec out = vec_zero(par.size());
  for (int x = 0; x < par.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < par.size(); ++y) {
      if (b[y].is_zero()) continue;
      out[par.mul(x, y)] += a[x] * b[y];
    }
  }
  return out;
}

// Coordinates of the pure tensor u (x) w in the balanced layout, cutting
// both legs fiberwise.
Vec tensor_pure(const BalancedTensor& t, const GAlgebra& first,
                const GAlgebra& second, const Vec& u, const Vec& w) {
  Vec out = vec_zero(t.total());
  for (int x = 0; x < first.lattice.size(); ++x) {
    if (t.adim[x] == 0 || t.bdim[x] == 0) continue;
    const Vec cu = fiber_coords(
        first, x, first.act_tproj(atom_of(first.lattice, x)).apply(u));
    const Vec cw = fiber_coords(
        second, x, second.act_tproj(atom_of(second.lattice, x)).apply(w));
    for (int i = 0; i < t.adim[x]; ++i) {
      if (cu[i].is_zero()) continue;
      for (int j = 0; j < t.bdim[x]; ++j) {
        out[t.index(x, i, j)] += cu[i] * cw[j];
      }
    }
  }
  return out;
}

}  // namespace

CosetTable coset_table(const SubISG& g, const SubISG& h) {
  require_within(g, h);
  const ISG& par = *g.parent;

  CosetTable t;
  t.parent = &par;
  t.class_of.assign(par.size(), -1);
  for (int i = 0; i < g.size(); ++i) {
    const int m = g.to_parent[i];
    if (h.from_parent[par.domain_proj(m)] >= 0) t.members.push_back(m);
  }

  for (int m : t.members) {
    if (t.class_of[m] >= 0) continue;
    const int dom = par.domain_proj(m);
    std::vector<int> cls;
    for (int hl = 0; hl < h.size(); ++hl) {
      const int hp = h.to_parent[hl];
      if (par.range_proj(hp) != dom) continue;
      cls.push_back(par.mul(m, hp));
    }
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    const int c = t.class_count();
    for (int x : cls) t.class_of[x] = c;
    t.transversal.push_back(cls.front());
    t.classes.push_back(std::move(cls));
  }
  return t;
}

CosetTable rotate_transversal(const CosetTable& t, int shift) {
  CosetTable out = t;
  for (int c = 0; c < t.class_count(); ++c) {
    const auto& cls = t.classes[c];
    const int n = static_cast<int>(cls.size());
    const int at = static_cast<int>(
        std::find(cls.begin(), cls.end(), t.transversal[c]) - cls.begin());
    out.transversal[c] = cls[((at + shift) % n + n) % n];
  }
  return out;
}

RelationReport verify_coset_relation(const SubISG& g, const SubISG& h,
                                     const CosetTable& t) {
  const ISG& par = *g.parent;
  RelationReport rep;
  auto room = [&] { return rep.violations.size() < 20; };

  auto related = [&](int i, int j) {
    for (int hl = 0; hl < h.size(); ++hl) {
      const int hp = h.to_parent[hl];
      if (par.range_proj(hp) != par.domain_proj(i)) continue;
      if (par.mul(i, hp) == j) return true;
    }
    return false;
  };

  const auto& mem = t.members;
  for (size_t i = 0; i < mem.size() && room(); ++i) {
    if (!related(mem[i], mem[i])) {
      rep.violations.push_back("relation is not reflexive at " +
                               par.elem(mem[i]).str());
    }
    for (size_t j = 0; j < mem.size() && room(); ++j) {
      const bool ij = related(mem[i], mem[j]);
      if (ij != related(mem[j], mem[i])) {
        rep.violations.push_back("relation is not symmetric at (" +
                                 par.elem(mem[i]).str() + "," +
                                 par.elem(mem[j]).str() + ")");
      }
      if (ij != (t.class_of[mem[i]] == t.class_of[mem[j]])) {
        rep.violations.push_back("classes disagree with the relation at (" +
                                 par.elem(mem[i]).str() + "," +
                                 par.elem(mem[j]).str() + ")");
      }
      if (!ij) continue;
      for (size_t k = 0; k < mem.size() && room(); ++k) {
        if (related(mem[j], mem[k]) && !related(mem[i], mem[k])) {
          rep.violations.push_back("relation is not transitive through " +
                                   par.elem(mem[j]).str());
        }
      }
    }
  }

  for (int c = 0; c < t.class_count() && room(); ++c) {
    for (int m : t.classes[c]) {
      std::vector<int> regen;
      for (int x : mem) {
        if (related(m, x)) regen.push_back(x);
      }
      if (regen != t.classes[c]) {
        rep.violations.push_back("class is not regenerated from " +
                                 par.elem(m).str());
      }
    }
    if (t.class_of[t.transversal[c]] != c) {
      rep.violations.push_back("representative outside its class");
    }
  }
  return rep;
}

GAlgebra c0_cosets(const CosetTable& t, const SubISG& g) {
  const ISG& par = *g.parent;
  const int n = t.class_count();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int c = 0; c < n; ++c) {
    labels.push_back("1_" + par.elem(t.transversal[c]).str() + "H");
  }
  StarAlgebra alg = StarAlgebra::function_algebra(std::move(labels));

  std::vector<Mat> act;
  act.reserve(g.size());
  for (int k = 0; k < g.size(); ++k) {
    const int kp = g.to_parent[k];
    Mat m(n, n);
    for (int c2 = 0; c2 < n; ++c2) {
      const int rep = t.transversal[c2];
      if (!par.leq(par.range_proj(rep), par.range_proj(kp))) continue;
      const int c1 = t.class_of[par.mul(par.inv(kp), rep)];
      if (c1 < 0) {
        throw Error(ErrorCode::InvalidAlgebra,
                    "translated representative escapes the coset set");
      }
      m.at(c2, c1) = QC(1);
    }
    act.push_back(std::move(m));
  }
  return GAlgebra::make(std::move(alg), g, std::move(act));
}

DeltaBijection delta_bijection(const SubISG& g, const SubISG& h) {
  require_within(g, h);
  const ISG& par = *g.parent;

  DeltaBijection d;
  auto room = [&] { return d.report.violations.size() < 20; };

  std::vector<int> eh;
  for (int hl : h.local.idempotents()) eh.push_back(h.to_parent[hl]);
  d.lattice = ProjLattice::over(par, eh);
  d.cosets = coset_table(g, h);

  const int na = d.lattice.size();
  const std::vector<TProj> atoms = all_atoms(d.lattice);
  std::vector<std::vector<QC>> exps(na);
  std::vector<Vec> atom_form(na);
  std::vector<int> sig_parent(na);
  for (int a = 0; a < na; ++a) {
    exps[a] = expand_in_span(atoms[a]);
    Vec f = vec_zero(par.size());
    for (int m = 0; m < na; ++m) f[d.lattice.members[m]] += exps[a][m];
    atom_form[a] = std::move(f);
    sig_parent[a] = d.lattice.members[sigma(atoms[a])];
  }

  // Expansion of the element times the atom, over the parent element basis.
  auto pair_form = [&](int gm, int a) {
    Vec f = vec_zero(par.size());
    for (int m = 0; m < na; ++m) {
      f[par.mul(gm, d.lattice.members[m])] += exps[a][m];
    }
    return f;
  };
  auto find_point = [&](const Vec& f) {
    for (size_t i = 0; i < d.points.size(); ++i) {
      if (d.points[i].form == f) return static_cast<int>(i);
    }
    return -1;
  };

  for (int gi = 0; gi < g.size(); ++gi) {
    const int gm = g.to_parent[gi];
    for (int a = 0; a < na; ++a) {
      const bool order_valid = par.leq(sig_parent[a], par.domain_proj(gm));
      Vec form = pair_form(gm, a);
      const bool alg_valid =
          form_mul(par, form_star(par, form), form) == atom_form[a];
      if (order_valid != alg_valid && room()) {
        d.report.violations.push_back("pair validity criteria disagree at (" +
                                      par.elem(gm).str() + ", atom " +
                                      std::to_string(a) + ")");
      }
      if (!alg_valid) continue;

      const int image = par.mul(gm, sig_parent[a]);
      const int seen = find_point(form);
      if (seen >= 0) {
        const PairPoint& p = d.points[seen];
        if (par.mul(p.g, sig_parent[p.atom]) != image && room()) {
          d.report.violations.push_back(
              "coinciding pairs map to different members at " +
              par.elem(gm).str());
        }
        continue;
      }
      d.points.push_back(PairPoint{gm, a, std::move(form)});
    }
  }

  d.report.pair_count = static_cast<int>(d.points.size());
  d.report.member_count = static_cast<int>(d.cosets.members.size());
  if (d.report.pair_count != d.report.member_count && room()) {
    d.report.violations.push_back("pair model and coset set differ in size");
  }

  for (const PairPoint& p : d.points) {
    const int image = par.mul(p.g, sig_parent[p.atom]);
    if (!d.cosets.contains(image) && room()) {
      d.report.violations.push_back("image " + par.elem(image).str() +
                                    " escapes the coset set");
    }
    d.to_member.push_back(image);
  }

  // Inverse direction: a member pairs with the atom of its domain projection.
  for (int m : d.cosets.members) {
    const int pos = d.lattice.position_of_ambient(par.domain_proj(m));
    const int idx = pos >= 0 ? find_point(pair_form(m, pos)) : -1;
    if (idx < 0 && room()) {
      d.report.violations.push_back("no pair recovers the member " +
                                    par.elem(m).str());
    }
    d.to_point.push_back(idx);
  }

  for (size_t i = 0; i < d.cosets.members.size(); ++i) {
    const int idx = d.to_point[i];
    if (idx >= 0 && d.to_member[idx] != d.cosets.members[i] && room()) {
      d.report.violations.push_back("round trip misses the member " +
                                    par.elem(d.cosets.members[i]).str());
    }
  }
  for (size_t p = 0; p < d.points.size(); ++p) {
    const auto& mem = d.cosets.members;
    const auto at = std::lower_bound(mem.begin(), mem.end(), d.to_member[p]);
    const bool hit = at != mem.end() && *at == d.to_member[p] &&
                     d.to_point[at - mem.begin()] == static_cast<int>(p);
    if (!hit && room()) {
      d.report.violations.push_back("round trip misses the pair at " +
                                    par.elem(d.points[p].g).str());
    }
  }

  // Translation classes of pairs, compared against the coset classes.
  const int np = static_cast<int>(d.points.size());
  std::vector<std::vector<char>> rel(np, std::vector<char>(np, 0));
  for (int p = 0; p < np; ++p) {
    for (int hl = 0; hl < h.size(); ++hl) {
      const int q =
          find_point(form_mul_elem(par, d.points[p].form, h.to_parent[hl]));
      if (q >= 0) rel[p][q] = 1;
    }
  }
  for (int p = 0; p < np && room(); ++p) {
    if (!rel[p][p]) {
      d.report.violations.push_back("pair relation is not reflexive");
    }
    for (int q = 0; q < np && room(); ++q) {
      if (rel[p][q] != rel[q][p]) {
        d.report.violations.push_back("pair relation is not symmetric");
      }
      if (!rel[p][q]) continue;
      for (int r = 0; r < np && room(); ++r) {
        if (rel[q][r] && !rel[p][r]) {
          d.report.violations.push_back("pair relation is not transitive");
        }
      }
    }
  }

  d.point_class_of.assign(np, -1);
  for (int p = 0; p < np; ++p) {
    if (d.point_class_of[p] >= 0) continue;
    const int c = static_cast<int>(d.point_classes.size());
    std::vector<int> cls;
    for (int q = 0; q < np; ++q) {
      if (rel[p][q]) {
        d.point_class_of[q] = c;
        cls.push_back(q);
      }
    }
    d.point_classes.push_back(std::move(cls));
  }

  for (int p = 0; p < np && room(); ++p) {
    for (int q = 0; q < np && room(); ++q) {
      const bool same_pairs = d.point_class_of[p] == d.point_class_of[q];
      const bool same_members = d.cosets.class_of[d.to_member[p]] ==
                                d.cosets.class_of[d.to_member[q]];
      if (same_pairs != same_members) {
        d.report.violations.push_back(
            "class compatibility fails between pairs " + std::to_string(p) +
            " and " + std::to_string(q));
      }
    }
  }
  if (static_cast<int>(d.point_classes.size()) != d.cosets.class_count() &&
      room()) {
    d.report.violations.push_back("class counts differ");
  }
  return d;
}

IndAlgebra induce(const GAlgebra& dd, const SubISG& g,
                  const CosetTable* table) {
  const SubISG& h = dd.acting;
  require_within(g, h);
  const ISG& par = *g.parent;

  const ActionReport ar = validate_action(dd);
  if (!ar.ok()) {
    throw Error(ErrorCode::InvalidAlgebra,
                "base algebra fails the action axioms: " + ar.violations[0]);
  }

  IndAlgebra ind;
  ind.cosets = table ? *table : coset_table(g, h);
  ind.base = std::make_shared<const GAlgebra>(dd);
  const GAlgebra& d = *ind.base;

  const int nc = ind.cosets.class_count();
  ind.block_offset.assign(nc + 1, 0);
  ind.block_atom.resize(nc);
  for (int c = 0; c < nc; ++c) {
    const int t = ind.cosets.transversal[c];
    const int pos = d.lattice.position_of_ambient(par.domain_proj(t));
    if (pos < 0) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "representative domain lies outside the subgroup lattice");
    }
    ind.block_atom[c] = pos;
    ind.block_offset[c + 1] = ind.block_offset[c] + d.fiber_dim(pos);
  }
  const int n = ind.block_offset[nc];

  // Functions live on the transversal, one base fiber per class; products
  // and the involution act blockwise.
  StarAlgebra alg;
  alg.dim = n;
  for (int c = 0; c < nc; ++c) {
    for (int i = 0; i < ind.block_dim(c); ++i) {
      alg.labels.push_back(par.elem(ind.cosets.transversal[c]).str() + "#" +
                           std::to_string(i));
    }
  }
  alg.mult.assign(n, std::vector<Vec>(n, vec_zero(n)));
  alg.invol = Mat(n, n);
  for (int c = 0; c < nc; ++c) {
    const EchelonBasis& fib = d.fibers[ind.block_atom[c]];
    for (int i = 0; i < ind.block_dim(c); ++i) {
      const Vec sv = fiber_coords(d, ind.block_atom[c],
                                  d.alg.star_vec(fib.accepted(i)));
      for (int k = 0; k < ind.block_dim(c); ++k) {
        alg.invol.at(ind.slot(c, k), ind.slot(c, i)) = sv[k];
      }
      for (int j = 0; j < ind.block_dim(c); ++j) {
        const Vec pv =
            fiber_coords(d, ind.block_atom[c],
                         d.alg.mul_vec(fib.accepted(i), fib.accepted(j)));
        Vec out = vec_zero(n);
        for (int k = 0; k < ind.block_dim(c); ++k) {
          out[ind.slot(c, k)] = pv[k];
        }
        alg.mult[ind.slot(c, i)][ind.slot(c, j)] = std::move(out);
      }
    }
  }

  // The value of k.f at a representative t' is the value of f at k* t',
  // transported into the block of t' through the connecting subgroup element.
  std::vector<Mat> act;
  act.reserve(g.size());
  for (int k = 0; k < g.size(); ++k) {
    const int kp = g.to_parent[k];
    Mat m(n, n);
    for (int c2 = 0; c2 < nc; ++c2) {
      const int t2 = ind.cosets.transversal[c2];
      if (!par.leq(par.range_proj(t2), par.range_proj(kp))) continue;
      const int s = par.mul(par.inv(kp), t2);
      const int c1 = ind.cosets.class_of[s];
      if (c1 < 0) {
        throw Error(ErrorCode::InvalidAlgebra,
                    "translated member escapes the coset set");
      }
      const int t1 = ind.cosets.transversal[c1];
      const int hconn = par.mul(par.inv(t1), s);
      const int hl = h.from_parent[hconn];
      if (hl < 0 || par.mul(t1, hconn) != s ||
          par.range_proj(hconn) != par.domain_proj(t1) ||
          d.lattice.position_of_ambient(par.domain_proj(hconn)) !=
              ind.block_atom[c2]) {
        throw Error(ErrorCode::InvalidAlgebra,
                    "class connector escapes the subgroup");
      }
      const Mat transport =
          d.act_tproj(atom_of(d.lattice, ind.block_atom[c2]))
              .mul(d.action[h.local.inv(hl)]);
      const EchelonBasis& fib = d.fibers[ind.block_atom[c1]];
      for (int i = 0; i < ind.block_dim(c1); ++i) {
        const Vec v = fiber_coords(d, ind.block_atom[c2],
                                   transport.apply(fib.accepted(i)));
        for (int r = 0; r < ind.block_dim(c2); ++r) {
          m.at(ind.slot(c2, r), ind.slot(c1, i)) = v[r];
        }
      }
    }
    act.push_back(std::move(m));
  }

  ind.algebra = GAlgebra::make(std::move(alg), g, std::move(act));
  return ind;
}

Vec ind_value_at(const IndAlgebra& ind, const Vec& f, int member) {
  const GAlgebra& d = *ind.base;
  const SubISG& h = d.acting;
  const ISG& par = *h.parent;
  const int c = ind.cosets.class_of[member];
  if (c < 0) {
    throw Error(ErrorCode::InvalidAlgebra,
                "value requested outside the coset set");
  }
  const int t = ind.cosets.transversal[c];
  const int hconn = par.mul(par.inv(t), member);
  const int hl = h.from_parent[hconn];
  if (hl < 0) {
    throw Error(ErrorCode::InvalidAlgebra,
                "class connector escapes the subgroup");
  }
  Vec stored = vec_zero(d.dim());
  const EchelonBasis& fib = d.fibers[ind.block_atom[c]];
  for (int i = 0; i < ind.block_dim(c); ++i) {
    vec_axpy(stored, f[ind.slot(c, i)], fib.accepted(i));
  }
  const int pos = d.lattice.position_of_ambient(par.domain_proj(hconn));
  return d.act_tproj(atom_of(d.lattice, pos))
      .apply(d.action[h.local.inv(hl)].apply(stored));
}

std::vector<std::string> check_translation_constraint(const IndAlgebra& ind) {
  const GAlgebra& d = *ind.base;
  const SubISG& h = d.acting;
  const ISG& par = *h.parent;
  std::vector<std::string> out;
  auto room = [&] { return out.size() < 10; };

  for (int s = 0; s < ind.algebra.dim() && room(); ++s) {
    const Vec f = ind.algebra.alg.basis_vec(s);
    for (int m : ind.cosets.members) {
      if (!room()) break;
      const Vec at_m = ind_value_at(ind, f, m);
      for (int hl = 0; hl < h.size() && room(); ++hl) {
        const int hp = h.to_parent[hl];
        if (par.range_proj(hp) != par.domain_proj(m)) continue;
        const int pos = d.lattice.position_of_ambient(par.domain_proj(hp));
        const Vec expect =
            d.act_tproj(atom_of(d.lattice, pos))
                .apply(d.action[h.local.inv(hl)].apply(at_m));
        if (ind_value_at(ind, f, par.mul(m, hp)) != expect) {
          out.push_back("translation constraint fails for " +
                        ind.algebra.alg.labels[s] + " at (" +
                        par.elem(m).str() + "," + par.elem(hp).str() + ")");
        }
      }
    }
  }
  return out;
}

Mat induce_map(const IndAlgebra& src, const IndAlgebra& dst, const Mat& phi) {
  if (src.cosets.transversal != dst.cosets.transversal) {
    throw Error(ErrorCode::InvalidAlgebra,
                "transported map requires a shared coset table");
  }
  Mat out(dst.algebra.dim(), src.algebra.dim());
  for (int c = 0; c < src.cosets.class_count(); ++c) {
    const EchelonBasis& fib = src.base->fibers[src.block_atom[c]];
    for (int i = 0; i < src.block_dim(c); ++i) {
      const Vec v = fiber_coords(*dst.base, dst.block_atom[c],
                                 phi.apply(fib.accepted(i)));
      for (int k = 0; k < dst.block_dim(c); ++k) {
        out.at(dst.slot(c, k), src.slot(c, i)) = v[k];
      }
    }
  }
  return out;
}

Restriction fibered_restriction(const GAlgebra& a, const SubISG& h) {
  require_within(a.acting, h);
  const ISG& par = *h.parent;

  std::vector<int> eh;
  for (int hl : h.local.idempotents()) eh.push_back(h.to_parent[hl]);

  EchelonBasis carrier(a.dim());
  std::vector<Vec> cols;
  std::vector<std::string> labels;
  for (int e : eh) {
    const int pos = a.lattice.position_of_ambient(e);
    for (int i = 0; i < a.fiber_dim(pos); ++i) {
      const Vec& v = a.fibers[pos].accepted(i);
      if (!carrier.insert(v)) {
        throw Error(ErrorCode::InvalidAlgebra,
                    "fiber bases are not independent");
      }
      cols.push_back(v);
      labels.push_back(par.elem(e).str() + "#" + std::to_string(i));
    }
  }
  const int n = static_cast<int>(cols.size());

  auto coords = [&](const Vec& v) {
    auto c = carrier.coords(v);
    if (!c) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "the restricted subspace is not invariant");
    }
    return *c;
  };

  StarAlgebra alg;
  alg.dim = n;
  alg.labels = std::move(labels);
  alg.mult.assign(n, std::vector<Vec>(n, vec_zero(n)));
  alg.invol = Mat(n, n);
  for (int i = 0; i < n; ++i) {
    const Vec sv = coords(a.alg.star_vec(cols[i]));
    for (int k = 0; k < n; ++k) alg.invol.at(k, i) = sv[k];
    for (int j = 0; j < n; ++j) {
      alg.mult[i][j] = coords(a.alg.mul_vec(cols[i], cols[j]));
    }
  }

  std::vector<Mat> act;
  act.reserve(h.size());
  for (int hl = 0; hl < h.size(); ++hl) {
    const int in_a = a.acting.from_parent[h.to_parent[hl]];
    std::vector<Vec> acols;
    acols.reserve(n);
    for (int i = 0; i < n; ++i) {
      acols.push_back(coords(a.action[in_a].apply(cols[i])));
    }
    act.push_back(Mat::from_cols(n, acols));
  }

  Mat embed = Mat::from_cols(a.dim(), cols);
  return Restriction{GAlgebra::make(std::move(alg), h, std::move(act)),
                     std::move(embed), std::move(carrier)};
}

RouteReport restriction_route_report(const GAlgebra& a, const SubISG& h) {
  const ISG& par = *h.parent;
  RouteReport rep;

  Restriction direct = fibered_restriction(a, h);
  rep.direct_dim = direct.algebra.dim();

  std::vector<int> eh;
  for (int hl : h.local.idempotents()) eh.push_back(h.to_parent[hl]);
  std::vector<int> seed = h.to_parent;
  for (int el : a.acting.local.idempotents()) {
    seed.push_back(a.acting.to_parent[el]);
  }
  const SubISG he = SubISG::closure_of(par, seed);

  const GAlgebra eps_eh = epsilon_span_algebra(he, eh);
  const GAlgebra res_a = plain_restrict(a, he);
  const BalancedTensor tens = balanced_tensor_full(eps_eh, res_a);
  const GAlgebra route = plain_restrict(tens.algebra, h);
  rep.route_dim = route.dim();
  if (rep.route_dim != rep.direct_dim) {
    rep.violations.push_back("route and direct dimensions differ");
  }

  // The comparison collapses the function leg onto the fiber cut it names.
  std::vector<Vec> cols;
  for (int x = 0; x < eps_eh.lattice.size(); ++x) {
    for (int i = 0; i < tens.adim[x]; ++i) {
      const Vec& u = eps_eh.fibers[x].accepted(i);
      for (int j = 0; j < tens.bdim[x]; ++j) {
        const Vec& w = res_a.fibers[x].accepted(j);
        Vec v = vec_zero(a.dim());
        for (size_t ei = 0; ei < eh.size(); ++ei) {
          if (u[ei].is_zero()) continue;
          const int pos = a.lattice.position_of_ambient(eh[ei]);
          vec_axpy(v, u[ei], a.act_tproj(atom_of(a.lattice, pos)).apply(w));
        }
        auto co = direct.carrier.coords(v);
        if (!co) {
          rep.violations.push_back("route comparison escapes the restriction");
          co = vec_zero(direct.algebra.dim());
        }
        cols.push_back(*co);
      }
    }
  }
  const Mat m = Mat::from_cols(direct.algebra.dim(), cols);
  IsoReport iso = check_equivariant_iso(route, direct.algebra, m);
  for (auto& v : iso.violations) rep.violations.push_back(std::move(v));
  return rep;
}

MuIso mu_iso(const GAlgebra& b, const SubISG& h, const CosetTable* table) {
  const SubISG& g = b.acting;

  Restriction restricted = fibered_restriction(b, h);
  IndAlgebra ind = induce(restricted.algebra, g, table);
  GAlgebra classes_algebra = c0_cosets(ind.cosets, g);
  BalancedTensor rhs = balanced_tensor_full(classes_algebra, b);

  const int nc = ind.cosets.class_count();
  Mat map(rhs.total(), ind.algebra.dim());
  for (int c = 0; c < nc; ++c) {
    const int tl = g.from_parent[ind.cosets.transversal[c]];
    const EchelonBasis& fib = ind.base->fibers[ind.block_atom[c]];
    for (int i = 0; i < ind.block_dim(c); ++i) {
      const Vec moved =
          b.action[tl].apply(restricted.embed.apply(fib.accepted(i)));
      const Vec cell =
          tensor_pure(rhs, classes_algebra, b, vec_unit(nc, c), moved);
      for (int r = 0; r < rhs.total(); ++r) {
        map.at(r, ind.slot(c, i)) = cell[r];
      }
    }
  }
  IsoReport report = check_equivariant_iso(ind.algebra, rhs.algebra, map);
  return MuIso{std::move(restricted),     std::move(ind),
               std::move(classes_algebra), std::move(rhs),
               std::move(map),            std::move(report)};
}

TauIso tau_iso(const GAlgebra& a, const GAlgebra& b, const SubISG& g,
               const CosetTable* table) {
  Restriction restricted = fibered_restriction(b, a.acting);
  BalancedTensor inner = balanced_tensor_full(a, restricted.algebra);
  IndAlgebra lhs = induce(inner.algebra, g, table);
  IndAlgebra ind_first = induce(a, g, &lhs.cosets);
  BalancedTensor rhs = balanced_tensor_full(ind_first.algebra, b);

  Mat map(rhs.total(), lhs.algebra.dim());
  for (int c = 0; c < lhs.cosets.class_count(); ++c) {
    const int tl = g.from_parent[lhs.cosets.transversal[c]];
    const int pos_y = lhs.block_atom[c];

    std::vector<Vec> moved(inner.bdim[pos_y]);
    for (int jb = 0; jb < inner.bdim[pos_y]; ++jb) {
      moved[jb] = b.action[tl].apply(restricted.embed.apply(
          restricted.algebra.fibers[pos_y].accepted(jb)));
    }

    const EchelonBasis& fib = lhs.base->fibers[pos_y];
    for (int i = 0; i < lhs.block_dim(c); ++i) {
      const Vec& w = fib.accepted(i);
      Vec col = vec_zero(rhs.total());
      for (int ia = 0; ia < inner.adim[pos_y]; ++ia) {
        for (int jb = 0; jb < inner.bdim[pos_y]; ++jb) {
          const QC& cw = w[inner.index(pos_y, ia, jb)];
          if (cw.is_zero()) continue;
          vec_axpy(col, cw,
                   tensor_pure(rhs, ind_first.algebra, b,
                               vec_unit(ind_first.algebra.dim(),
                                        ind_first.slot(c, ia)),
                               moved[jb]));
        }
      }
      for (int r = 0; r < rhs.total(); ++r) {
        map.at(r, lhs.slot(c, i)) = col[r];
      }
    }
  }
  IsoReport report = check_equivariant_iso(lhs.algebra, rhs.algebra, map);
  return TauIso{std::move(restricted), std::move(inner),
                std::move(lhs),        std::move(ind_first),
                std::move(rhs),        std::move(map),
                std::move(report)};
}

UnitIota unit_iota(const GAlgebra& a, const SubISG& g,
                   const CosetTable* table) {
  const SubISG& h = a.acting;
  const ISG& par = *h.parent;

  IndAlgebra ind = induce(a, g, table);
  Restriction restricted = fibered_restriction(ind.algebra, h);
  std::vector<std::string> violations;
  auto room = [&] { return violations.size() < 10; };

  const int nc = ind.cosets.class_count();
  std::vector<Vec> cols;
  for (int k = 0; k < a.dim(); ++k) {
    Vec f = vec_zero(ind.algebra.dim());
    for (int c = 0; c < nc; ++c) {
      const int t = ind.cosets.transversal[c];
      const int hl = h.from_parent[t];
      if (hl < 0) continue;
      const Vec v =
          a.act_tproj(atom_of(a.lattice, ind.block_atom[c]))
              .apply(a.action[h.local.inv(hl)].apply(a.alg.basis_vec(k)));
      const Vec co = fiber_coords(a, ind.block_atom[c], v);
      for (int i = 0; i < ind.block_dim(c); ++i) {
        f[ind.slot(c, i)] = co[i];
      }
    }

    // The image restricts to the stated value on the subgroup and vanishes
    // outside it.
    for (int m : ind.cosets.members) {
      if (!room()) break;
      const Vec got = ind_value_at(ind, f, m);
      const int ml = h.from_parent[m];
      if (ml >= 0) {
        const int pos = a.lattice.position_of_ambient(par.domain_proj(m));
        const Vec expect =
            a.act_tproj(atom_of(a.lattice, pos))
                .apply(a.action[h.local.inv(ml)].apply(a.alg.basis_vec(k)));
        if (got != expect) {
          violations.push_back("unit value is wrong at " + par.elem(m).str());
        }
      } else if (!vec_is_zero(got)) {
        violations.push_back("unit value is nonzero outside the subgroup at " +
                             par.elem(m).str());
      }
    }

    auto co = restricted.carrier.coords(f);
    if (!co) {
      violations.push_back("unit image escapes the restriction");
      co = vec_zero(restricted.algebra.dim());
    }
    cols.push_back(*co);
  }
  Mat map = Mat::from_cols(restricted.algebra.dim(), cols);

  const StarAlgebra& ra = restricted.algebra.alg;
  for (int i = 0; i < a.dim() && room(); ++i) {
    if (map.apply(a.alg.star_vec(a.alg.basis_vec(i))) !=
        ra.star_vec(map.col(i))) {
      violations.push_back("unit breaks the involution at " + a.alg.labels[i]);
    }
    for (int j = 0; j < a.dim() && room(); ++j) {
      if (map.apply(a.alg.mul_vec(a.alg.basis_vec(i), a.alg.basis_vec(j))) !=
          ra.mul_vec(map.col(i), map.col(j))) {
        violations.push_back("unit breaks the product at (" + a.alg.labels[i] +
                             "," + a.alg.labels[j] + ")");
      }
    }
  }
  for (int hl = 0; hl < h.size() && room(); ++hl) {
    if (!(map.mul(a.action[hl]) == restricted.algebra.action[hl].mul(map))) {
      violations.push_back("unit breaks equivariance at " +
                           h.local.elem(hl).str());
    }
  }
  const bool injective = rank(map) == a.dim();
  return UnitIota{std::move(ind), std::move(restricted), std::move(map),
                  injective, std::move(violations)};
}

TriangleReport triangle_identities(const GAlgebra& a, const GAlgebra& b,
                                   const SubISG& g) {
  const SubISG& h = a.acting;
  const ISG& par = *g.parent;
  if (b.acting.parent != g.parent || b.acting.to_parent != g.to_parent) {
    throw Error(ErrorCode::InvalidAlgebra,
                "the second algebra must carry the ambient action");
  }

  TriangleReport rep;
  auto room = [&] { return rep.violations.size() < 16; };

  // First cycle: the unit pushed through the comparison lands on the
  // diagonal classes.
  UnitIota iota = unit_iota(a, g);
  for (auto& v : iota.violations) {
    if (room()) rep.violations.push_back("unit: " + v);
  }
  const IndAlgebra& ind_a = iota.ind;
  const GAlgebra& ind = ind_a.algebra;
  MuIso mu2 = mu_iso(ind, h, &ind_a.cosets);
  for (auto& v : mu2.report.violations) {
    if (room()) rep.violations.push_back("induced comparison: " + v);
  }
  const Mat pushed = mu2.map.mul(induce_map(ind_a, mu2.ind, iota.map));

  const int nc = ind_a.cosets.class_count();
  const int n = ind.dim();
  rep.dims.emplace_back("base", a.dim());
  rep.dims.emplace_back("induced", n);
  rep.dims.emplace_back("module", mu2.rhs.total());

  std::vector<int> slot_class(n);
  for (int c = 0; c < nc; ++c) {
    for (int i = 0; i < ind_a.block_dim(c); ++i) {
      slot_class[ind_a.slot(c, i)] = c;
    }
  }
  auto diagonal = [&](int s) {
    return tensor_pure(mu2.rhs, mu2.classes_algebra, ind,
                       vec_unit(nc, slot_class[s]), ind.alg.basis_vec(s));
  };

  rep.unit_form = true;
  for (int s = 0; s < n; ++s) {
    if (pushed.col(s) != diagonal(s)) {
      rep.unit_form = false;
      if (room()) {
        rep.violations.push_back(
            "unit composite misses the diagonal form at " + ind.alg.labels[s]);
      }
    }
  }

  // Cut-down of the first cycle: the diagonal span inside the module is
  // carried onto the induced algebra by forgetting the class leg, and every
  // structure map collapses to its counterpart there.
  {
    rep.cutdown_u = true;
    auto fail_u = [&](const std::string& msg) {
      rep.cutdown_u = false;
      if (room()) rep.violations.push_back(msg);
    };

    std::vector<Vec> t0;
    EchelonBasis span(mu2.rhs.total());
    bool degenerate = false;
    for (int s = 0; s < n; ++s) {
      t0.push_back(diagonal(s));
      if (!span.insert(t0.back())) degenerate = true;
    }
    if (degenerate) fail_u("diagonal span is degenerate");

    if (!degenerate) {
      const StarAlgebra& ta = mu2.rhs.algebra.alg;
      Vec ones = vec_zero(nc);
      for (int c = 0; c < nc; ++c) ones[c] = QC(1);

      for (int s = 0; s < n && rep.cutdown_u; ++s) {
        for (int k = 0; k < g.size(); ++k) {
          const auto co = span.coords(mu2.rhs.algebra.action[k].apply(t0[s]));
          if (!co) {
            fail_u("module action leaves the diagonal span at " +
                   par.elem(g.to_parent[k]).str());
            break;
          }
          if (*co != ind.action[k].col(s)) {
            fail_u("collapse breaks equivariance at " +
                   par.elem(g.to_parent[k]).str());
            break;
          }
        }
        for (int s2 = 0; s2 < n && rep.cutdown_u; ++s2) {
          const auto prod = span.coords(ta.mul_vec(t0[s], t0[s2]));
          if (!prod || *prod != ind.alg.mul_vec(ind.alg.basis_vec(s),
                                                ind.alg.basis_vec(s2))) {
            fail_u("collapsed product differs at (" + ind.alg.labels[s] + "," +
                   ind.alg.labels[s2] + ")");
            break;
          }
          const auto pair = span.coords(ta.mul_vec(ta.star_vec(t0[s]), t0[s2]));
          if (!pair ||
              *pair != ind.alg.mul_vec(ind.alg.star_vec(ind.alg.basis_vec(s)),
                                       ind.alg.basis_vec(s2))) {
            fail_u("collapsed pairing differs at (" + ind.alg.labels[s] + "," +
                   ind.alg.labels[s2] + ")");
            break;
          }
          const Vec one_f = tensor_pure(mu2.rhs, mu2.classes_algebra, ind,
                                        ones, ind.alg.basis_vec(s2));
          const auto right = span.coords(ta.mul_vec(t0[s], one_f));
          if (!right || *right != ind.alg.mul_vec(ind.alg.basis_vec(s),
                                                  ind.alg.basis_vec(s2))) {
            fail_u("collapsed right action differs at (" + ind.alg.labels[s] +
                   "," + ind.alg.labels[s2] + ")");
            break;
          }
        }
      }
    }
  }

  // Second cycle: restrict the comparison, precompose the unit of the
  // restriction and land on the diagonal classes over the subgroup.
  MuIso mu_b = mu_iso(b, h);
  for (auto& v : mu_b.report.violations) {
    if (room()) rep.violations.push_back("base comparison: " + v);
  }
  const GAlgebra& rb = mu_b.restricted.algebra;
  rep.dims.emplace_back("restriction", rb.dim());

  Restriction r_src = fibered_restriction(mu_b.ind.algebra, h);
  Restriction r_dst = fibered_restriction(mu_b.rhs.algebra, h);
  std::vector<Vec> rmu_cols;
  for (int j = 0; j < r_src.algebra.dim(); ++j) {
    auto co = r_dst.carrier.coords(mu_b.map.apply(r_src.embed.col(j)));
    if (!co) {
      if (room()) {
        rep.violations.push_back("restricted comparison escapes its target");
      }
      co = vec_zero(r_dst.algebra.dim());
    }
    rmu_cols.push_back(*co);
  }
  const Mat rmu = Mat::from_cols(r_dst.algebra.dim(), rmu_cols);

  UnitIota iota_rb = unit_iota(rb, g, &mu_b.ind.cosets);
  for (auto& v : iota_rb.violations) {
    if (room()) rep.violations.push_back("restriction unit: " + v);
  }

  const CosetTable hh = coset_table(h, h);
  const int nbig = mu_b.ind.cosets.class_count();
  rep.counit_form = true;
  if (iota_rb.map.rows != rmu.cols) {
    rep.counit_form = false;
    if (room()) {
      rep.violations.push_back("restriction unit lands in a different space");
    }
  } else {
    const Mat composite = rmu.mul(iota_rb.map);
    for (int w = 0; w < rb.dim(); ++w) {
      Vec want_tensor = vec_zero(mu_b.rhs.total());
      for (int c = 0; c < hh.class_count(); ++c) {
        const int hp = hh.transversal[c];
        const int e = par.range_proj(hp);
        const int ypos = rb.lattice.position_of_ambient(e);
        const Vec v_rb =
            rb.act_tproj(atom_of(rb.lattice, ypos)).apply(rb.alg.basis_vec(w));
        const Vec v_b = mu_b.restricted.embed.apply(v_rb);
        vec_axpy(want_tensor, QC(1),
                 tensor_pure(mu_b.rhs, mu_b.classes_algebra, b,
                             vec_unit(nbig, mu_b.ind.cosets.class_of[hp]),
                             v_b));
      }
      const auto want = r_dst.carrier.coords(want_tensor);
      if (!want) {
        rep.counit_form = false;
        if (room()) {
          rep.violations.push_back("diagonal form escapes the restriction");
        }
        continue;
      }
      if (composite.col(w) != *want) {
        rep.counit_form = false;
        if (room()) {
          rep.violations.push_back("counit composite misses the diagonal "
                                   "form at " + rb.alg.labels[w]);
        }
      }
    }
  }

  // Cut-down of the second cycle: triples of a subgroup idempotent, its
  // class and a fiber vector collapse onto the restriction by forgetting
  // the two class legs.
  {
    rep.cutdown_v = true;
    auto fail_v = [&](const std::string& msg) {
      rep.cutdown_v = false;
      if (room()) rep.violations.push_back(msg);
    };

    struct Triple {
      int e;       // subgroup idempotent, parent index
      int hp;      // subgroup representative with that range
      int bigcls;  // its class among all coset members
      int pos;     // lattice position of e
      int i;       // fiber coordinate
    };
    std::vector<Triple> sbase;
    for (int c = 0; c < hh.class_count(); ++c) {
      const int hp = hh.transversal[c];
      const int e = par.range_proj(hp);
      const int pos = rb.lattice.position_of_ambient(e);
      for (int i = 0; i < rb.fiber_dim(pos); ++i) {
        sbase.push_back(Triple{e, hp, mu_b.ind.cosets.class_of[hp], pos, i});
      }
    }
    rep.dims.emplace_back("cutdown", static_cast<int>(sbase.size()));
    if (static_cast<int>(sbase.size()) != rb.dim()) {
      fail_v("collapse does not exhaust the restriction");
    }

    auto expected_class = [&](int e) {
      for (int c = 0; c < hh.class_count(); ++c) {
        if (par.range_proj(hh.transversal[c]) == e) {
          return mu_b.ind.cosets.class_of[hh.transversal[c]];
        }
      }
      return -1;
    };

    for (const Triple& s1 : sbase) {
      const Vec v1 = rb.fibers[s1.pos].accepted(s1.i);
      for (int hl = 0; hl < h.size(); ++hl) {
        const int kp = h.to_parent[hl];
        const Vec moved = rb.action[hl].apply(v1);
        if (!par.leq(s1.e, par.domain_proj(kp))) {
          // All three legs must vanish together.
          if (!vec_is_zero(moved)) {
            fail_v("the action survives a vanishing gate at " +
                   par.elem(kp).str());
          }
          continue;
        }
        const int e2 = par.mul(par.mul(kp, s1.e), par.inv(kp));
        const int pos2 = rb.lattice.position_of_ambient(e2);
        if (pos2 < 0) {
          fail_v("conjugated idempotent escapes the subgroup");
          continue;
        }
        if (rb.act_tproj(atom_of(rb.lattice, pos2)).apply(moved) != moved) {
          fail_v("translated value escapes the expected fiber");
        }
        const int big2 = mu_b.ind.cosets.class_of[par.mul(kp, s1.hp)];
        if (big2 < 0 || big2 != expected_class(e2)) {
          fail_v("translated class leg disagrees with the idempotent leg");
        }
      }
      for (const Triple& s2 : sbase) {
        const Vec v2 = rb.fibers[s2.pos].accepted(s2.i);
        Vec pair_mod = vec_zero(rb.dim());
        if (s1.e == s2.e && s1.bigcls == s2.bigcls) {
          pair_mod = rb.alg.mul_vec(rb.alg.star_vec(v1), v2);
        }
        if (pair_mod != rb.alg.mul_vec(rb.alg.star_vec(v1), v2)) {
          fail_v("pairings disagree after the collapse");
        }
      }
      for (int w = 0; w < rb.dim(); ++w) {
        const Vec bp = rb.alg.basis_vec(w);
        const Vec cut = rb.act_tproj(atom_of(rb.lattice, s1.pos)).apply(bp);
        if (rb.alg.mul_vec(cut, v1) != rb.alg.mul_vec(bp, v1)) {
          fail_v("left multiplication disagrees after the collapse at " +
                 rb.alg.labels[w]);
        }
        const Vec prod = rb.alg.mul_vec(v1, bp);
        if (rb.act_tproj(atom_of(rb.lattice, s1.pos)).apply(prod) != prod) {
          fail_v("right multiplication leaves the fiber at " +
                 rb.alg.labels[w]);
        }
      }
    }
  }
  return rep;
}

}  // namespace isg
