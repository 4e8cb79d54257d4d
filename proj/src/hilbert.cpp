#include "isg/hilbert.hpp"

#include <algorithm>
#include <utility>

#include "isg/error.hpp"

namespace isg {

namespace {

std::vector<int> parent_idempotents(const SubISG& h) {
  std::vector<int> out;
  out.reserve(h.local.idempotents().size());
  for (int e : h.local.idempotents()) out.push_back(h.to_parent[e]);
  return out;
}

int range_pos(const HModule& m, int x_local) {
  const ISG& par = *m.acting.parent;
  int pos = m.lattice.position_of_ambient(
      par.range_proj(m.acting.to_parent[x_local]));
  if (pos < 0)
    throw Error(ErrorCode::InvalidAlgebra,
                "range projection escapes the coefficient lattice");
  return pos;
}

std::vector<std::pair<int, QC>> nonzeros(const Vec& v) {
  std::vector<std::pair<int, QC>> out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

}  // namespace

Vec module_inner(const HModule& m, const Vec& x, const Vec& y) {
  if (static_cast<int>(x.size()) != m.rank() ||
      static_cast<int>(y.size()) != m.rank())
    throw Error(ErrorCode::InvalidAlgebra, "module vector has the wrong rank");
  Vec out = vec_zero(m.lattice.size());
  const auto xs = nonzeros(x);
  const auto ys = nonzeros(y);
  for (const auto& [i, xi] : xs)
    for (const auto& [j, yj] : ys) vec_axpy(out, xi.conj() * yj, m.inner[i][j]);
  return out;
}

Vec module_coeff(const HModule& m, const Vec& x, const Vec& f) {
  if (static_cast<int>(x.size()) != m.rank() ||
      static_cast<int>(f.size()) != m.lattice.size())
    throw Error(ErrorCode::InvalidAlgebra, "module vector has the wrong rank");
  Vec out = vec_zero(m.rank());
  for (int i = 0; i < m.rank(); ++i) out[i] = x[i] * f[m.range_at[i]];
  return out;
}

Vec coeff_action(const HModule& m, int k_local, const Vec& f) {
  const ISG& par = *m.acting.parent;
  const int kp = m.acting.to_parent[k_local];
  const int kr = par.range_proj(kp);
  const int ki = par.inv(kp);
  Vec out = vec_zero(m.lattice.size());
  for (int p = 0; p < m.lattice.size(); ++p) {
    const int e = m.lattice.members[p];
    if (!par.leq(e, kr)) continue;
    const int moved = par.mul(par.mul(ki, e), kp);
    const int q = m.lattice.position_of_ambient(moved);
    if (q < 0)
      throw Error(ErrorCode::InvalidAlgebra,
                  "conjugated idempotent escapes the coefficient lattice");
    out[p] = f[q];
  }
  return out;
}

mpq_class module_norm_sq(const HModule& m, const Vec& x) {
  const Vec v = module_inner(m, x, x);
  mpq_class best(0);
  for (const QC& q : v) {
    if (!q.is_real() || sgn(q.re) < 0)
      throw Error(ErrorCode::InvalidAlgebra,
                  "self pairing is not a nonnegative function");
    if (q.re > best) best = q.re;
  }
  return best;
}

ModuleReport check_module(const HModule& m) {
  ModuleReport rep;
  auto note = [&](const std::string& s) {
    if (rep.violations.size() < 40) rep.violations.push_back(s);
  };
  const ISG& loc = m.acting.local;
  const int n = loc.size();
  const int r = m.rank();
  const int L = m.lattice.size();

  if (static_cast<int>(m.action.size()) != n ||
      static_cast<int>(m.range_at.size()) != r ||
      static_cast<int>(m.inner.size()) != r) {
    note("table sizes do not match the rank and the acting semigroup");
    return rep;
  }
  for (int k = 0; k < n; ++k)
    if (m.action[k].rows != r || m.action[k].cols != r) {
      note("action matrix has the wrong shape");
      return rep;
    }
  for (int i = 0; i < r; ++i) {
    if (m.range_at[i] < 0 || m.range_at[i] >= L) {
      note("basis range outside the lattice");
      return rep;
    }
    if (static_cast<int>(m.inner[i].size()) != r) {
      note("inner product table has the wrong shape");
      return rep;
    }
    for (int j = 0; j < r; ++j)
      if (static_cast<int>(m.inner[i][j].size()) != L) {
        note("inner product value has the wrong length");
        return rep;
      }
  }

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Vec& v = m.inner[i][j];
      for (int p = 0; p < L; ++p) {
        if (!v[p].is_zero() &&
            (m.range_at[i] != m.range_at[j] || p != m.range_at[i]))
          note("pairing of " + m.labels[i] + " and " + m.labels[j] +
               " strays from the common range point");
        if (m.inner[j][i][p] != v[p].conj())
          note("pairing of " + m.labels[i] + " and " + m.labels[j] +
               " is not hermitian");
      }
    }

  for (int p = 0; p < L; ++p) {
    std::vector<int> fib;
    for (int i = 0; i < r; ++i)
      if (m.range_at[i] == p) fib.push_back(i);
    const int d = static_cast<int>(fib.size());
    std::vector<Vec> gram(d, vec_zero(d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) gram[a][b] = m.inner[fib[a]][fib[b]][p];
    bool pd = true;
    for (int t = 0; t < d && pd; ++t) {
      const QC piv = gram[t][t];
      if (!piv.is_real() || sgn(piv.re) <= 0) {
        pd = false;
        break;
      }
      for (int a = t + 1; a < d; ++a)
        for (int b = t + 1; b < d; ++b)
          gram[a][b] -= gram[a][t] * gram[t][b] / piv;
    }
    if (!pd)
      note("Gram matrix over " + m.acting.parent->elem(m.lattice.members[p]).str() +
           " is not positive definite");
  }

  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const int kl = loc.mul(k, l);
      for (int x = 0; x < r; ++x) {
        Vec out = vec_zero(r);
        for (const auto& [row, c] : nonzeros(m.action[l].col(x)))
          vec_axpy(out, c, m.action[k].col(row));
        if (out != m.action[kl].col(x))
          note("action of " + loc.elem(k).str() + " after " +
               loc.elem(l).str() + " differs from their product");
      }
    }

  for (int k = 0; k < n; ++k)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const Vec lhs =
            module_inner(m, m.action[k].col(i), m.action[k].col(j));
        const Vec rhs = coeff_action(m, k, m.inner[i][j]);
        if (lhs != rhs)
          note("pairing of translates of " + m.labels[i] + " and " +
               m.labels[j] + " under " + loc.elem(k).str() +
               " misses the moved pairing");
      }

  EchelonBasis span(L);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) span.insert(m.inner[i][j]);
  rep.full = span.dim() == L;
  return rep;
}

HModule build_l2(SubISG g) {
  HModule m;
  m.acting = std::move(g);
  m.lattice =
      ProjLattice::over(*m.acting.parent, parent_idempotents(m.acting));
  const ISG& loc = m.acting.local;
  const int r = loc.size();
  for (int x = 0; x < r; ++x) {
    m.labels.push_back("d_" + loc.elem(x).str());
    m.range_at.push_back(range_pos(m, x));
  }
  for (int k = 0; k < r; ++k) {
    Mat a(r, r);
    for (int x = 0; x < r; ++x)
      if (loc.leq(loc.range_proj(x), loc.domain_proj(k)))
        a.at(loc.mul(k, x), x) = QC(1);
    m.action.push_back(std::move(a));
  }
  m.inner.assign(r, std::vector<Vec>(r, vec_zero(m.lattice.size())));
  for (int i = 0; i < r; ++i) m.inner[i][i][m.range_at[i]] = QC(1);
  return m;
}

HModule build_l2(const ISG& g) { return build_l2(SubISG::whole(g)); }

HModule build_l2_cosets(const SubISG& g, const SubISG& h,
                        const CosetTable* table) {
  const CosetTable t = table ? *table : coset_table(g, h);
  if (t.parent != g.parent)
    throw Error(ErrorCode::InvalidAlgebra,
                "coset table built over a different semigroup");
  const ISG& par = *g.parent;
  HModule m;
  m.acting = g;
  m.lattice = ProjLattice::over(par, parent_idempotents(g));
  const int nc = t.class_count();
  for (int c = 0; c < nc; ++c) {
    const int rep = t.transversal[c];
    m.labels.push_back("d_" + par.elem(rep).str() + "H");
    const int pos = m.lattice.position_of_ambient(par.range_proj(rep));
    if (pos < 0)
      throw Error(ErrorCode::InvalidAlgebra,
                  "class range escapes the coefficient lattice");
    m.range_at.push_back(pos);
  }
  for (int k = 0; k < g.local.size(); ++k) {
    const int kp = g.to_parent[k];
    Mat a(nc, nc);
    for (int c = 0; c < nc; ++c) {
      const int rep = t.transversal[c];
      if (par.leq(par.range_proj(rep), par.domain_proj(kp)))
        a.at(t.class_of[par.mul(kp, rep)], c) = QC(1);
    }
    m.action.push_back(std::move(a));
  }
  m.inner.assign(nc, std::vector<Vec>(nc, vec_zero(m.lattice.size())));
  for (int c = 0; c < nc; ++c) m.inner[c][c][m.range_at[c]] = QC(1);
  return m;
}

std::vector<std::string> check_translation_bijections(const ISG& g) {
  std::vector<std::string> out;
  auto note = [&](const std::string& s) {
    if (out.size() < 40) out.push_back(s);
  };
  const int n = g.size();
  auto run = [&](int h, bool dominated, bool left) {
    const int hi = g.inv(h);
    const int src = left ? g.domain_proj(h) : g.range_proj(h);
    const int dst = left ? g.range_proj(h) : g.domain_proj(h);
    const std::string side = left ? "left" : "right";
    std::vector<int> image;
    std::vector<int> target;
    for (int x = 0; x < n; ++x) {
      const int key = left ? g.range_proj(x) : g.domain_proj(x);
      if (dominated ? g.leq(key, dst) : key == dst) target.push_back(x);
      if (!(dominated ? g.leq(key, src) : key == src)) continue;
      const int y = left ? g.mul(h, x) : g.mul(x, h);
      const int ykey = left ? g.range_proj(y) : g.domain_proj(y);
      if (!(dominated ? g.leq(ykey, dst) : ykey == dst))
        note(side + " translation by " + g.elem(h).str() +
             " leaves the target set");
      if ((left ? g.mul(hi, y) : g.mul(y, hi)) != x)
        note(side + " translation by " + g.elem(h).str() +
             " is not undone by the inverse");
      image.push_back(y);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
      note(side + " translation by " + g.elem(h).str() + " is not injective");
    if (image != target)
      note(side + " translation by " + g.elem(h).str() +
           " is not onto its target");
  };
  for (int h = 0; h < n; ++h) {
    run(h, false, true);
    run(h, true, true);
    run(h, false, false);
    run(h, true, false);
  }
  return out;
}

int Compacts::index(int pos, int i, int j) const {
  return offset[pos] + i * static_cast<int>(blocks[pos].size()) + j;
}

Compacts compact_operators(const HModule& m) {
  const int L = m.lattice.size();
  Compacts k;
  k.blocks.assign(L, {});
  for (int i = 0; i < m.rank(); ++i) k.blocks[m.range_at[i]].push_back(i);
  k.offset.assign(L, 0);
  int dim = 0;
  for (int p = 0; p < L; ++p) {
    k.offset[p] = dim;
    const int d = static_cast<int>(k.blocks[p].size());
    dim += d * d;
  }

  StarAlgebra alg;
  alg.dim = dim;
  alg.labels.assign(dim, "");
  alg.mult.assign(dim, std::vector<Vec>(dim, vec_zero(dim)));
  alg.invol = Mat(dim, dim);
  for (int p = 0; p < L; ++p) {
    const int d = static_cast<int>(k.blocks[p].size());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const int s = k.index(p, i, j);
        alg.labels[s] = "theta[" + m.labels[k.blocks[p][i]] + "," +
                        m.labels[k.blocks[p][j]] + "]";
        alg.invol.at(k.index(p, j, i), s) = QC(1);
        for (int l = 0; l < d; ++l)
          alg.mult[s][k.index(p, j, l)] = vec_unit(dim, k.index(p, i, l));
      }
  }

  const ISG& loc = m.acting.local;
  std::vector<Mat> act;
  for (int kk = 0; kk < loc.size(); ++kk) {
    const Mat& fwd = m.action[kk];
    const Mat& bwd = m.action[loc.inv(kk)];
    Mat a(dim, dim);
    for (int p = 0; p < L; ++p) {
      const int d = static_cast<int>(k.blocks[p].size());
      for (int i = 0; i < d; ++i) {
        const Vec u = fwd.col(k.blocks[p][i]);
        for (int j = 0; j < d; ++j) {
          const int bj = k.blocks[p][j];
          const int s = k.index(p, i, j);
          for (int q = 0; q < L; ++q) {
            const int dq = static_cast<int>(k.blocks[q].size());
            for (int i2 = 0; i2 < dq; ++i2)
              for (int j2 = 0; j2 < dq; ++j2) {
                const QC val =
                    u[k.blocks[q][i2]] * bwd.at(bj, k.blocks[q][j2]);
                if (!val.is_zero()) a.at(k.index(q, i2, j2), s) = val;
              }
          }
        }
      }
    }
    act.push_back(std::move(a));
  }
  k.algebra = GAlgebra::make(std::move(alg), m.acting, std::move(act));
  return k;
}

DiagonalEmbed diagonal_embedding(const SubISG& g, const SubISG& h,
                                 const CosetTable* table) {
  const CosetTable t = table ? *table : coset_table(g, h);
  DiagonalEmbed d;
  d.module = build_l2_cosets(g, h, &t);
  d.classes = c0_cosets(t, g);
  d.compacts = compact_operators(d.module);
  auto note = [&](const std::string& s) {
    if (d.violations.size() < 40) d.violations.push_back(s);
  };
  const int nc = t.class_count();
  const StarAlgebra& ka = d.compacts.algebra.alg;
  d.map = Mat(ka.dim, nc);
  for (int c = 0; c < nc; ++c) {
    const auto& blk = d.compacts.blocks[d.module.range_at[c]];
    const int i = static_cast<int>(
        std::find(blk.begin(), blk.end(), c) - blk.begin());
    d.map.at(d.compacts.index(d.module.range_at[c], i, i), c) = QC(1);
  }

  for (int c = 0; c < nc; ++c) {
    if (ka.star_vec(d.map.col(c)) != d.map.col(c))
      note("image of class " + std::to_string(c) + " is not self adjoint");
    for (int c2 = 0; c2 < nc; ++c2) {
      const Vec prod = ka.mul_vec(d.map.col(c), d.map.col(c2));
      const Vec want = c == c2 ? d.map.col(c) : vec_zero(ka.dim);
      if (prod != want)
        note("images of classes " + std::to_string(c) + " and " +
             std::to_string(c2) + " do not multiply as point functions");
    }
  }
  if (const auto unit = ka.find_unit()) {
    Vec total = vec_zero(ka.dim);
    for (int c = 0; c < nc; ++c) vec_axpy(total, QC(1), d.map.col(c));
    if (total != *unit) note("class images do not sum to the unit");
  } else {
    note("operator algebra has no unit");
  }
  for (int k = 0; k < g.local.size(); ++k)
    if (d.compacts.algebra.action[k].mul(d.map) !=
        d.map.mul(d.classes.action[k]))
      note("embedding is not equivariant at " + g.local.elem(k).str());
  return d;
}

TensorModule l2_tensor(const HModule& e) {
  const SubISG& g = e.acting;
  const ISG& loc = g.local;
  const int n = loc.size();
  TensorModule t;
  t.module.acting = g;
  t.module.lattice = ProjLattice::over(*g.parent, parent_idempotents(g));
  t.slot.assign(n, std::vector<int>(e.rank(), -1));
  for (int x = 0; x < n; ++x) {
    const int p = range_pos(t.module, x);
    for (int b = 0; b < e.rank(); ++b) {
      if (e.lattice.members[e.range_at[b]] != t.module.lattice.members[p])
        continue;
      t.slot[x][b] = static_cast<int>(t.first.size());
      t.first.push_back(x);
      t.second.push_back(b);
      t.module.labels.push_back("d_" + loc.elem(x).str() + "(x)" +
                                e.labels[b]);
      t.module.range_at.push_back(p);
    }
  }
  const int R = t.module.rank();
  for (int k = 0; k < n; ++k) {
    Mat a(R, R);
    for (int s = 0; s < R; ++s) {
      const int x = t.first[s];
      const int b = t.second[s];
      if (!loc.leq(loc.range_proj(x), loc.domain_proj(k))) continue;
      const int y = loc.mul(k, x);
      const Vec w = e.action[k].col(b);
      for (int b2 = 0; b2 < e.rank(); ++b2) {
        if (w[b2].is_zero()) continue;
        const int row = t.slot[y][b2];
        if (row < 0)
          throw Error(ErrorCode::InvalidAlgebra,
                      "tensor action leaves the fiber grid");
        a.at(row, s) = w[b2];
      }
    }
    t.module.action.push_back(std::move(a));
  }
  t.module.inner.assign(
      R, std::vector<Vec>(R, vec_zero(t.module.lattice.size())));
  for (int s = 0; s < R; ++s)
    for (int s2 = 0; s2 < R; ++s2)
      if (t.first[s] == t.first[s2])
        t.module.inner[s][s2] = e.inner[t.second[s]][t.second[s2]];
  return t;
}

MingoReport mingo_v(const HModule& e1, const HModule& e2, const Mat& u) {
  if (e1.acting.parent != e2.acting.parent ||
      e1.acting.to_parent != e2.acting.to_parent)
    throw Error(ErrorCode::InvalidAlgebra,
                "modules act under different semigroups");
  if (u.rows != e2.rank() || u.cols != e1.rank())
    throw Error(ErrorCode::NotUnitary,
                "comparison matrix has the wrong shape");
  for (int y = 0; y < u.rows; ++y)
    for (int x = 0; x < u.cols; ++x)
      if (!u.at(y, x).is_zero() &&
          e2.lattice.members[e2.range_at[y]] !=
              e1.lattice.members[e1.range_at[x]])
        throw Error(ErrorCode::NotUnitary, "comparison matrix mixes fibers");
  if (e1.rank() != e2.rank() || rank(u) != e1.rank())
    throw Error(ErrorCode::NotUnitary, "comparison matrix is not bijective");
  for (int i = 0; i < e1.rank(); ++i)
    for (int j = 0; j < e1.rank(); ++j)
      if (module_inner(e2, u.col(i), u.col(j)) != e1.inner[i][j])
        throw Error(ErrorCode::NotUnitary,
                    "comparison matrix does not preserve inner products");

  MingoReport rep;
  rep.t1 = l2_tensor(e1);
  rep.t2 = l2_tensor(e2);
  auto note = [&](const std::string& s) {
    if (rep.violations.size() < 40) rep.violations.push_back(s);
  };
  const ISG& loc = e1.acting.local;
  const int R = rep.t1.module.rank();
  if (rep.t2.module.rank() != R)
    throw Error(ErrorCode::InvalidAlgebra, "tensor ranks disagree");
  rep.v = Mat(R, R);
  for (int s = 0; s < R; ++s) {
    const int x = rep.t1.first[s];
    const Vec w = e2.action[x].apply(
        u.apply(e1.action[loc.inv(x)].col(rep.t1.second[s])));
    for (int y2 = 0; y2 < e2.rank(); ++y2) {
      if (w[y2].is_zero()) continue;
      const int row = rep.t2.slot[x][y2];
      if (row < 0)
        throw Error(ErrorCode::InvalidAlgebra,
                    "comparison output leaves the fiber grid");
      rep.v.at(row, s) = w[y2];
    }
  }
  for (int k = 0; k < loc.size(); ++k)
    if (rep.t2.module.action[k].mul(rep.v) !=
        rep.v.mul(rep.t1.module.action[k]))
      note("comparison operator is not equivariant at " + loc.elem(k).str());
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j)
      if (module_inner(rep.t2.module, rep.v.col(i), rep.v.col(j)) !=
          rep.t1.module.inner[i][j])
        note("comparison operator moves the pairing of slots " +
             std::to_string(i) + " and " + std::to_string(j));
  return rep;
}

}  // namespace isg
