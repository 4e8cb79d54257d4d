#include "isg/crossed.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "isg/error.hpp"
#include "isg/induction.hpp"
#include "isg/rng.hpp"

namespace isg {

namespace {

struct Quotient {
  StarAlgebra alg;
  Mat project;
};

// Quotient by the two sided *-ideal spanned by the closure of gens.  The
// projection is read off the inverse of a mixed basis, ideal columns first.
Quotient quotient_by_ideal(const StarAlgebra& a, const std::vector<Vec>& gens) {
  const int n = a.dim;
  EchelonBasis w(n);
  std::vector<Vec> work;
  auto feed = [&](const Vec& v) {
    if (w.insert(v)) work.push_back(v);
  };
  for (const Vec& g : gens) {
    feed(g);
    feed(a.star_vec(g));
  }
  for (size_t at = 0; at < work.size(); ++at) {
    const Vec cur = work[at];
    for (int b = 0; b < n; ++b) {
      feed(a.mul_vec(a.basis_vec(b), cur));
      feed(a.mul_vec(cur, a.basis_vec(b)));
    }
  }

  EchelonBasis span(n);
  for (int i = 0; i < w.dim(); ++i) span.insert(w.accepted(i));
  std::vector<int> comp;
  for (int i = 0; i < n; ++i)
    if (span.insert(vec_unit(n, i))) comp.push_back(i);
  const int q = static_cast<int>(comp.size());

  Mat mix(n, n);
  for (int j = 0; j < w.dim(); ++j)
    for (int r = 0; r < n; ++r) mix.at(r, j) = w.accepted(j)[r];
  for (int j = 0; j < q; ++j) mix.at(comp[j], w.dim() + j) = QC(1);
  const auto inv = inverse(mix);
  if (!inv)
    throw Error(ErrorCode::InvalidAlgebra, "ideal complement is degenerate");

  Quotient out;
  out.project = Mat(q, n);
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < n; ++c) out.project.at(r, c) = inv->at(w.dim() + r, c);

  out.alg.dim = q;
  for (int j = 0; j < q; ++j) out.alg.labels.push_back(a.labels[comp[j]]);
  out.alg.mult.assign(q, std::vector<Vec>(q, vec_zero(q)));
  out.alg.invol = Mat(q, q);
  for (int i = 0; i < q; ++i) {
    const Vec st = out.project.apply(a.star_vec(a.basis_vec(comp[i])));
    for (int r = 0; r < q; ++r) out.alg.invol.at(r, i) = st[r];
    for (int j = 0; j < q; ++j)
      out.alg.mult[i][j] = out.project.apply(
          a.mul_vec(a.basis_vec(comp[i]), a.basis_vec(comp[j])));
  }
  return out;
}

QC trace_product(const Mat& x, const Mat& y) {
  QC out;
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < x.cols; ++c) out += x.at(r, c) * y.at(c, r);
  return out;
}

}  // namespace

CrossedAlg covariance_algebra(const GAlgebra& a, CrossedVariant variant) {
  const ISG& loc = a.acting.local;
  const int n = loc.size();
  const int d = a.dim();
  CrossedAlg out;
  out.variant = variant;

  std::vector<int> offset(n, 0);
  std::vector<EchelonBasis> images;
  images.reserve(n);
  StarAlgebra u;
  int total = 0;
  for (int g = 0; g < n; ++g) {
    offset[g] = total;
    images.emplace_back(d);
    const Mat& dom = a.action[loc.range_proj(g)];
    for (int i = 0; i < d; ++i) {
      Vec col = dom.col(i);
      if (vec_is_zero(col)) continue;
      if (images[g].insert(col)) {
        out.slot_elem.push_back(g);
        out.slot_coeff.push_back(std::move(col));
        u.labels.push_back(a.alg.labels[i] + ".d_" + loc.elem(g).str());
        ++total;
      }
    }
  }
  u.dim = total;
  u.mult.assign(total, std::vector<Vec>(total, vec_zero(total)));
  u.invol = Mat(total, total);

  auto scatter = [&](int block, const Vec& coeff) {
    Vec v = vec_zero(total);
    if (vec_is_zero(coeff)) return v;
    const auto c = images[block].coords(coeff);
    if (!c)
      throw Error(ErrorCode::InvalidAlgebra,
                  "covariance coefficient escapes its block");
    for (int i = 0; i < static_cast<int>(c->size()); ++i)
      v[offset[block] + i] = (*c)[i];
    return v;
  };

  for (int s = 0; s < total; ++s) {
    const int g = out.slot_elem[s];
    const Vec st =
        a.action[loc.inv(g)].apply(a.alg.star_vec(out.slot_coeff[s]));
    const Vec stv = scatter(loc.inv(g), st);
    for (int r = 0; r < total; ++r) u.invol.at(r, s) = stv[r];
    for (int t = 0; t < total; ++t) {
      const Vec w = a.alg.mul_vec(out.slot_coeff[s],
                                  a.action[g].apply(out.slot_coeff[t]));
      u.mult[s][t] = scatter(loc.mul(g, out.slot_elem[t]), w);
    }
  }
  out.universal = std::move(u);

  if (variant == CrossedVariant::universal) {
    out.alg = out.universal;
    out.project = Mat::identity(total);
    return out;
  }

  for (int e : loc.idempotents())
    for (int g = 0; g < n; ++g) {
      const int eg = loc.mul(e, g);
      for (int i = 0; i < d; ++i) {
        const Vec lhs = a.action[loc.range_proj(g)].apply(
            a.action[e].apply(a.alg.basis_vec(i)));
        const Vec rhs = a.action[loc.range_proj(eg)].apply(a.alg.basis_vec(i));
        Vec gen = scatter(g, lhs);
        vec_axpy(gen, QC(-1), scatter(eg, rhs));
        if (!vec_is_zero(gen)) out.relation_gens.push_back(std::move(gen));
      }
    }
  Quotient quo = quotient_by_ideal(out.universal, out.relation_gens);
  out.alg = std::move(quo.alg);
  out.project = std::move(quo.project);
  return out;
}

BlockDecomposition semisimple_blocks(const StarAlgebra& a, uint64_t seed,
                                     double tol, int retries) {
  BlockDecomposition out;
  out.dim = a.dim;
  out.seed = seed;
  const int n = a.dim;
  if (n == 0) {
    out.star_positive = true;
    return out;
  }

  std::vector<Mat> lmats;
  lmats.reserve(n);
  for (int i = 0; i < n; ++i) lmats.push_back(a.left_mult(a.basis_vec(i)));
  Mat form(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      form.at(i, j) = trace_product(lmats[i], lmats[j]);
  const std::vector<Vec> rad = nullspace(form);
  out.radical_dim = static_cast<int>(rad.size());

  const Quotient quo = quotient_by_ideal(a, rad);
  const StarAlgebra& s = quo.alg;
  const int m = s.dim;
  if (static_cast<int>(rad.size()) != n - m)
    throw Error(ErrorCode::InvalidAlgebra,
                "radical span is not an ideal of the right size");
  if (m == 0) {
    out.star_positive = true;
    return out;
  }

  Mat stacked(m * m, m);
  std::vector<Mat> ls;
  ls.reserve(m);
  for (int b = 0; b < m; ++b) {
    ls.push_back(s.left_mult(s.basis_vec(b)));
    const Mat diff = ls.back().sub(s.right_mult(s.basis_vec(b)));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) stacked.at(b * m + r, c) = diff.at(r, c);
  }
  const std::vector<Vec> center = nullspace(stacked);
  const int k = static_cast<int>(center.size());

  {
    Vec traces = vec_zero(m);
    for (int i = 0; i < m; ++i)
      for (int r = 0; r < m; ++r) traces[i] += ls[i].at(r, r);
    Eigen::MatrixXcd gram(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const Vec prod = s.mul_vec(s.star_vec(s.basis_vec(i)), s.basis_vec(j));
        QC val;
        for (int c = 0; c < m; ++c) val += prod[c] * traces[c];
        gram(i, j) = val.to_complex();
      }
    const Eigen::MatrixXcd herm = (gram + gram.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    double scale = 1.0;
    for (int i = 0; i < m; ++i) scale = std::max(scale, std::abs(es.eigenvalues()[i]));
    out.star_positive = es.eigenvalues().minCoeff() > -tol * scale;
  }

  bool commutative = true;
  for (int i = 0; i < m && commutative; ++i)
    for (int j = i + 1; j < m; ++j)
      if (s.mult[i][j] != s.mult[j][i]) {
        commutative = false;
        break;
      }
  if (commutative) {
    if (k != m)
      throw Error(ErrorCode::InvalidAlgebra,
                  "commutative quotient with a smaller center");
    out.blocks.assign(m, 1);
    return out;
  }

  std::vector<Vec> herm_basis;
  for (const Vec& z : center) {
    const Vec zs = s.star_vec(z);
    herm_basis.push_back(vec_add(z, zs));
    herm_basis.push_back(vec_scale(QC::i(), vec_sub(z, zs)));
  }

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    Vec c = vec_zero(m);
    for (const Vec& h : herm_basis)
      vec_axpy(c, QC(static_cast<long>(rng.below(20001) - 10000)), h);
    if (vec_is_zero(c)) continue;

    const Mat lc = s.left_mult(c);
    Eigen::MatrixXcd mat(m, m);
    for (int r = 0; r < m; ++r)
      for (int cc = 0; cc < m; ++cc) mat(r, cc) = lc.at(r, cc).to_complex();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(mat, false);
    if (es.info() != Eigen::Success) continue;

    double scale = 1.0;
    for (int i = 0; i < m; ++i)
      scale = std::max(scale, std::abs(es.eigenvalues()[i]));
    std::vector<std::complex<double>> centers;
    std::vector<int> counts;
    for (int i = 0; i < m; ++i) {
      const std::complex<double> ev = es.eigenvalues()[i];
      bool placed = false;
      for (size_t j = 0; j < centers.size(); ++j)
        if (std::abs(centers[j] - ev) <= tol * scale) {
          ++counts[j];
          placed = true;
          break;
        }
      if (!placed) {
        centers.push_back(ev);
        counts.push_back(1);
      }
    }

    bool good = static_cast<int>(centers.size()) == k;
    for (size_t i = 0; i < centers.size() && good; ++i)
      for (size_t j = i + 1; j < centers.size(); ++j)
        if (std::abs(centers[i] - centers[j]) < 10.0 * tol * scale) {
          good = false;
          break;
        }
    std::vector<int> sizes;
    int covered = 0;
    for (size_t j = 0; j < counts.size() && good; ++j) {
      const int side =
          static_cast<int>(std::lround(std::sqrt(double(counts[j]))));
      if (side * side != counts[j]) {
        good = false;
        break;
      }
      sizes.push_back(side);
      covered += counts[j];
    }
    if (!good || covered != m) continue;
    std::sort(sizes.begin(), sizes.end());
    out.blocks = std::move(sizes);
    return out;
  }
  throw Error(ErrorCode::NumericalDegeneracy,
              "central spectrum stayed clustered through every retry");
}

ImprimitivityReport imprimitivity_check(const GAlgebra& a, const SubISG& g,
                                        uint64_t seed, double tol) {
  ImprimitivityReport rep;
  const IndAlgebra ind = induce(a, g);
  const CrossedAlg up = covariance_algebra(ind.algebra, CrossedVariant::sieben);
  const CrossedAlg down = covariance_algebra(a, CrossedVariant::sieben);
  rep.induced_side = semisimple_blocks(up.alg, seed, tol);
  rep.base_side = semisimple_blocks(down.alg, seed, tol);
  rep.counts_match = rep.induced_side.k0_rank() == rep.base_side.k0_rank();
  return rep;
}

}  // namespace isg
