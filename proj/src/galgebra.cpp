#include "isg/galgebra.hpp"

#include <sstream>

#include "isg/error.hpp"

namespace isg {

namespace {

std::vector<int> parent_idempotents(const SubISG& h) {
  std::vector<int> out;
  out.reserve(h.local.idempotents().size());
  for (int e : h.local.idempotents()) out.push_back(h.to_parent[e]);
  return out;
}

}  // namespace

GAlgebra GAlgebra::make(StarAlgebra a, SubISG h, std::vector<Mat> act) {
  if (static_cast<int>(act.size()) != h.local.size()) {
    throw Error(ErrorCode::InvalidAlgebra,
                "one action matrix per semigroup element expected");
  }
  for (const auto& m : act) {
    if (m.rows != a.dim || m.cols != a.dim) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "action matrix shape does not match the algebra dimension");
    }
  }
  GAlgebra g;
  g.lattice = ProjLattice::over(*h.parent, parent_idempotents(h));
  g.alg = std::move(a);
  g.acting = std::move(h);
  g.action = std::move(act);
  for (int pos = 0; pos < g.lattice.size(); ++pos) {
    Mat pe = g.act_tproj(atom_of(g.lattice, pos));
    EchelonBasis basis(g.alg.dim);
    for (int i = 0; i < g.alg.dim; ++i) basis.insert(pe.col(i));
    g.fibers.push_back(std::move(basis));
  }
  return g;
}

Mat GAlgebra::act_tproj(const TProj& p) const {
  if (p.host != &lattice) {
    throw Error(ErrorCode::InvalidAlgebra,
                "projection lives over a different semilattice");
  }
  auto coeff = expand_in_span(p);
  Mat out(alg.dim, alg.dim);
  for (int pos = 0; pos < lattice.size(); ++pos) {
    if (coeff[pos].is_zero()) continue;
    const int local = acting.from_parent[lattice.members[pos]];
    out = out.add(action[local].scale(coeff[pos]));
  }
  return out;
}

int GAlgebra::lattice_pos(int local_idem) const {
  return lattice.position[acting.to_parent[local_idem]];
}

int GAlgebra::total_fiber_dim() const {
  int total = 0;
  for (const auto& f : fibers) total += f.dim();
  return total;
}

std::optional<std::vector<Vec>> GAlgebra::fiber_components(const Vec& v) const {
  std::vector<Vec> parts;
  parts.reserve(fibers.size());
  Vec rest = v;
  for (int pos = 0; pos < lattice.size(); ++pos) {
    Mat pe = act_tproj(atom_of(lattice, pos));
    Vec comp = pe.apply(v);
    parts.push_back(comp);
    rest = vec_sub(rest, comp);
  }
  if (!vec_is_zero(rest)) return std::nullopt;
  return parts;
}

ActionReport validate_action(const GAlgebra& a) {
  ActionReport rep;
  const std::size_t cap = 12;
  auto room = [&] { return rep.violations.size() < cap; };

  for (auto& s : a.alg.check_axioms()) rep.violations.push_back(s);

  const ISG& h = a.group();
  const int d = a.alg.dim;

  for (int g1 = 0; g1 < h.size() && room(); ++g1) {
    for (int g2 = 0; g2 < h.size() && room(); ++g2) {
      if (!(a.action[g1].mul(a.action[g2]) == a.action[h.mul(g1, g2)])) {
        rep.violations.push_back("composition fails at (" + h.elem(g1).str() +
                                 "," + h.elem(g2).str() + ")");
      }
    }
  }

  for (int g = 0; g < h.size() && room(); ++g) {
    const Mat& m = a.action[g];
    for (int i = 0; i < d && room(); ++i) {
      Vec gi = m.col(i);
      Vec gistar = a.alg.star_vec(a.alg.basis_vec(i));
      if (!(m.apply(gistar) == a.alg.star_vec(gi))) {
        rep.violations.push_back("involution not preserved by " +
                                 h.elem(g).str() + " at " + a.alg.labels[i]);
      }
      for (int j = 0; j < d && room(); ++j) {
        Vec lhs = m.apply(a.alg.mult[i][j]);
        Vec rhs = a.alg.mul_vec(gi, m.col(j));
        if (lhs != rhs) {
          rep.violations.push_back("multiplicativity fails for " +
                                   h.elem(g).str() + " at (" +
                                   a.alg.labels[i] + "," + a.alg.labels[j] +
                                   ")");
        }
      }
    }
  }

  for (int e : h.idempotents()) {
    if (!room()) break;
    const Mat& m = a.action[e];
    for (int i = 0; i < d && room(); ++i) {
      Vec ei = m.col(i);
      for (int j = 0; j < d && room(); ++j) {
        Vec lhs = a.alg.mul_vec(ei, a.alg.basis_vec(j));
        Vec rhs = a.alg.mul_vec(a.alg.basis_vec(i), m.col(j));
        if (lhs != rhs) {
          rep.violations.push_back("central multiplier axiom fails for " +
                                   h.elem(e).str() + " at (" +
                                   a.alg.labels[i] + "," + a.alg.labels[j] +
                                   ")");
        }
      }
    }
  }
  return rep;
}

GAlgebra epsilon_algebra(SubISG h) {
  const ISG& local = h.local;
  const auto& idem = local.idempotents();
  const int n = static_cast<int>(idem.size());
  std::vector<std::string> labels;
  std::vector<int> pos_of(local.size(), -1);
  for (int x = 0; x < n; ++x) {
    labels.push_back("1_" + local.elem(idem[x]).str());
    pos_of[idem[x]] = x;
  }
  StarAlgebra alg = StarAlgebra::function_algebra(std::move(labels));

  std::vector<Mat> act;
  act.reserve(local.size());
  for (int g = 0; g < local.size(); ++g) {
    Mat m(n, n);
    const int dom = local.domain_proj(g);
    for (int x = 0; x < n; ++x) {
      if (!local.leq(idem[x], dom)) continue;
      const int moved = local.mul(local.mul(g, idem[x]), local.inv(g));
      m.at(pos_of[moved], x) = QC(1);
    }
    act.push_back(std::move(m));
  }
  return GAlgebra::make(std::move(alg), std::move(h), std::move(act));
}

GAlgebra epsilon_algebra(const ISG& g) { return epsilon_algebra(SubISG::whole(g)); }

GAlgebra c0_algebra(SubISG h) {
  const ISG& local = h.local;
  const int n = local.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int x = 0; x < n; ++x) labels.push_back("1_" + local.elem(x).str());
  StarAlgebra alg = StarAlgebra::function_algebra(std::move(labels));

  std::vector<Mat> act;
  act.reserve(n);
  for (int k = 0; k < n; ++k) {
    Mat m(n, n);
    const int dom = local.domain_proj(k);
    for (int x = 0; x < n; ++x) {
      if (!local.leq(local.range_proj(x), dom)) continue;
      m.at(local.mul(k, x), x) = QC(1);
    }
    act.push_back(std::move(m));
  }
  return GAlgebra::make(std::move(alg), std::move(h), std::move(act));
}

GAlgebra c0_algebra(const ISG& g) { return c0_algebra(SubISG::whole(g)); }

GAlgebra trivial_algebra(SubISG h) {
  StarAlgebra alg = StarAlgebra::complex_line();
  std::vector<Mat> act(h.local.size(), Mat::identity(1));
  return GAlgebra::make(std::move(alg), std::move(h), std::move(act));
}

GAlgebra epsilon_span_algebra(SubISG acting, std::vector<int> idem_indices) {
  const ISG& par = *acting.parent;
  std::sort(idem_indices.begin(), idem_indices.end());
  idem_indices.erase(std::unique(idem_indices.begin(), idem_indices.end()),
                     idem_indices.end());
  const int n = static_cast<int>(idem_indices.size());

  std::vector<std::string> labels;
  std::vector<int> pos_of(par.size(), -1);
  for (int x = 0; x < n; ++x) {
    if (!par.is_idempotent(idem_indices[x])) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "spanning set contains the non-idempotent " +
                      par.elem(idem_indices[x]).str());
    }
    labels.push_back("1_" + par.elem(idem_indices[x]).str());
    pos_of[idem_indices[x]] = x;
  }
  StarAlgebra alg = StarAlgebra::function_algebra(std::move(labels));

  std::vector<Mat> act;
  act.reserve(acting.local.size());
  for (int s = 0; s < acting.local.size(); ++s) {
    const int sp = acting.to_parent[s];
    const int dom = par.domain_proj(sp);
    Mat m(n, n);
    for (int x = 0; x < n; ++x) {
      if (!par.leq(idem_indices[x], dom)) continue;
      const int moved =
          par.mul(par.mul(sp, idem_indices[x]), par.inv(sp));
      if (pos_of[moved] < 0) {
        throw Error(ErrorCode::InvalidAlgebra,
                    "conjugation by " + par.elem(sp).str() +
                        " moves " + par.elem(idem_indices[x]).str() +
                        " outside the spanning set");
      }
      m.at(pos_of[moved], x) = QC(1);
    }
    act.push_back(std::move(m));
  }
  return GAlgebra::make(std::move(alg), std::move(acting), std::move(act));
}

GAlgebra plain_restrict(const GAlgebra& a, SubISG s) {
  if (s.parent != a.acting.parent) {
    throw Error(ErrorCode::InvalidAlgebra,
                "restriction target lives in a different ambient semigroup");
  }
  std::vector<Mat> act;
  act.reserve(s.local.size());
  for (int k = 0; k < s.local.size(); ++k) {
    const int in_a = a.acting.from_parent[s.to_parent[k]];
    if (in_a < 0) {
      throw Error(ErrorCode::InvalidAlgebra,
                  "restriction target is not contained in the acting "
                  "semigroup");
    }
    act.push_back(a.action[in_a]);
  }
  return GAlgebra::make(a.alg, std::move(s), std::move(act));
}

namespace {

// Shared layout of fiberwise tensor bases: one block per lattice position,
// of size dimA_e * dimB_e.
struct TensorLayout {
  std::vector<int> offset;
  int total = 0;

  TensorLayout(const GAlgebra& a, const GAlgebra& b) {
    offset.resize(a.lattice.size() + 1, 0);
    for (int e = 0; e < a.lattice.size(); ++e) {
      offset[e + 1] = offset[e] + a.fiber_dim(e) * b.fiber_dim(e);
    }
    total = offset.back();
  }

  int index(const GAlgebra& b, int e, int i, int j) const {
    return offset[e] + i * b.fiber_dim(e) + j;
  }
};

void require_same_acting(const GAlgebra& a, const GAlgebra& b) {
  if (a.acting.parent != b.acting.parent ||
      a.acting.to_parent != b.acting.to_parent) {
    throw Error(ErrorCode::InvalidAlgebra,
                "tensor factors carry different acting semigroups");
  }
}

}  // namespace

Vec fiber_coords(const GAlgebra& a, int e, const Vec& v) {
  auto c = a.fibers[e].coords(v);
  if (!c) {
    throw Error(ErrorCode::InvalidAlgebra,
                "vector does not lie in the expected fiber");
  }
  return *c;
}

BalancedTensor balanced_tensor_full(const GAlgebra& a, const GAlgebra& b) {
  require_same_acting(a, b);
  const TensorLayout lay(a, b);

  StarAlgebra t;
  t.dim = lay.total;
  for (int e = 0; e < a.lattice.size(); ++e) {
    for (int i = 0; i < a.fiber_dim(e); ++i) {
      for (int j = 0; j < b.fiber_dim(e); ++j) {
        std::ostringstream os;
        os << a.lattice.label(e) << ":" << i << "(x)" << j;
        t.labels.push_back(os.str());
      }
    }
  }

  // Multiply within a fiber and translate back to fiber coordinates.
  t.mult.assign(t.dim, std::vector<Vec>(t.dim, vec_zero(t.dim)));
  for (int e = 0; e < a.lattice.size(); ++e) {
    const int da = a.fiber_dim(e);
    const int db = b.fiber_dim(e);
    for (int i1 = 0; i1 < da; ++i1) {
      for (int i2 = 0; i2 < da; ++i2) {
        Vec pa = fiber_coords(a, e, a.alg.mul_vec(a.fibers[e].accepted(i1),
                                                   a.fibers[e].accepted(i2)));
        for (int j1 = 0; j1 < db; ++j1) {
          for (int j2 = 0; j2 < db; ++j2) {
            Vec pb = fiber_coords(b, e, b.alg.mul_vec(b.fibers[e].accepted(j1),
                                                       b.fibers[e].accepted(j2)));
            Vec out = vec_zero(t.dim);
            for (int x = 0; x < da; ++x) {
              if (pa[x].is_zero()) continue;
              for (int y = 0; y < db; ++y) {
                if (pb[y].is_zero()) continue;
                out[lay.index(b, e, x, y)] = pa[x] * pb[y];
              }
            }
            t.mult[lay.index(b, e, i1, j1)][lay.index(b, e, i2, j2)] =
                std::move(out);
          }
        }
      }
    }
  }

  t.invol = Mat(t.dim, t.dim);
  for (int e = 0; e < a.lattice.size(); ++e) {
    for (int i = 0; i < a.fiber_dim(e); ++i) {
      Vec sa = fiber_coords(a, e, a.alg.star_vec(a.fibers[e].accepted(i)));
      for (int j = 0; j < b.fiber_dim(e); ++j) {
        Vec sb = fiber_coords(b, e, b.alg.star_vec(b.fibers[e].accepted(j)));
        for (int x = 0; x < a.fiber_dim(e); ++x) {
          for (int y = 0; y < b.fiber_dim(e); ++y) {
            t.invol.at(lay.index(b, e, x, y), lay.index(b, e, i, j)) =
                sa[x] * sb[y];
          }
        }
      }
    }
  }

  const ISG& h = a.group();
  std::vector<Mat> act;
  act.reserve(h.size());
  for (int g = 0; g < h.size(); ++g) {
    Mat m(t.dim, t.dim);
    const int dom = h.domain_proj(g);
    for (int e = 0; e < a.lattice.size(); ++e) {
      const int e_local = a.acting.from_parent[a.lattice.members[e]];
      if (!h.leq(e_local, dom)) continue;  // the action kills this fiber
      const int moved = h.mul(h.mul(g, e_local), h.inv(g));
      const int e2 = a.lattice.position[a.acting.to_parent[moved]];
      for (int i = 0; i < a.fiber_dim(e); ++i) {
        Vec ga = fiber_coords(a, e2, a.action[g].apply(a.fibers[e].accepted(i)));
        for (int j = 0; j < b.fiber_dim(e); ++j) {
          Vec gb =
              fiber_coords(b, e2, b.action[g].apply(b.fibers[e].accepted(j)));
          for (int x = 0; x < a.fiber_dim(e2); ++x) {
            if (ga[x].is_zero()) continue;
            for (int y = 0; y < b.fiber_dim(e2); ++y) {
              if (gb[y].is_zero()) continue;
              m.at(lay.index(b, e2, x, y), lay.index(b, e, i, j)) =
                  ga[x] * gb[y];
            }
          }
        }
      }
    }
    act.push_back(std::move(m));
  }

  BalancedTensor out;
  out.algebra = GAlgebra::make(std::move(t), a.acting, std::move(act));
  out.offset = lay.offset;
  out.adim.resize(a.lattice.size());
  out.bdim.resize(a.lattice.size());
  for (int e = 0; e < a.lattice.size(); ++e) {
    out.adim[e] = a.fiber_dim(e);
    out.bdim[e] = b.fiber_dim(e);
  }
  return out;
}

GAlgebra balanced_tensor(const GAlgebra& a, const GAlgebra& b) {
  return balanced_tensor_full(a, b).algebra;
}

IsoReport check_equivariant_iso(const GAlgebra& lhs, const GAlgebra& rhs,
                                const Mat& m) {
  require_same_acting(lhs, rhs);
  IsoReport rep;
  rep.lhs_dim = lhs.dim();
  rep.rhs_dim = rhs.dim();
  if (m.rows != rhs.dim() || m.cols != lhs.dim()) {
    rep.violations.push_back("map has the wrong shape");
    return rep;
  }
  rep.bijective = (m.rows == m.cols) && inverse(m).has_value();
  if (!rep.bijective) rep.violations.push_back("map is not bijective");

  auto room = [&] { return rep.violations.size() < 10; };
  for (int i = 0; i < lhs.dim() && room(); ++i) {
    Vec mi = m.col(i);
    if (m.apply(lhs.alg.star_vec(lhs.alg.basis_vec(i))) !=
        rhs.alg.star_vec(mi)) {
      rep.violations.push_back("involution mismatch at " + lhs.alg.labels[i]);
    }
    for (int j = 0; j < lhs.dim() && room(); ++j) {
      Vec prod = m.apply(lhs.alg.mul_vec(lhs.alg.basis_vec(i),
                                         lhs.alg.basis_vec(j)));
      if (prod != rhs.alg.mul_vec(mi, m.col(j))) {
        rep.violations.push_back("product mismatch at (" + lhs.alg.labels[i] +
                                 "," + lhs.alg.labels[j] + ")");
      }
    }
  }
  for (int k = 0; k < lhs.group().size() && room(); ++k) {
    if (!(m.mul(lhs.action[k]) == rhs.action[k].mul(m))) {
      rep.violations.push_back("action mismatch at " +
                               lhs.group().elem(k).str());
    }
  }
  return rep;
}

FiberedModel fibered_model(const GAlgebra& a) {
  const GAlgebra eps = epsilon_algebra(a.acting);
  FiberedModel out{balanced_tensor(eps, a), Mat(), false};

  // The epsilon factor has one-dimensional fibers, so the model basis at
  // position e is 1_e tensored with the fiber basis of the input; the
  // comparison map simply forgets the 1_e leg.
  std::vector<Vec> cols;
  for (int e = 0; e < a.lattice.size(); ++e) {
    for (int i = 0; i < eps.fiber_dim(e); ++i) {
      for (int j = 0; j < a.fiber_dim(e); ++j) {
        cols.push_back(a.fibers[e].accepted(j));
      }
    }
  }
  out.comparison = Mat::from_cols(a.dim(), cols);
  out.fibered = (out.model.dim() == a.dim()) &&
                rank(out.comparison) == a.dim();
  return out;
}

}  // namespace isg
