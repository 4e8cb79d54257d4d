#include "isg/generators.hpp"

#include <utility>
#include <vector>

#include "isg/error.hpp"

namespace isg {

PartialPerm random_partial_perm(SplitMix64& rng, int degree) {
  std::vector<int> img(degree, 0);
  std::vector<char> used(degree + 1, 0);
  for (int p = 0; p < degree; ++p) {
    if (rng.below(2) == 0) continue;
    std::vector<int> open;
    for (int t = 1; t <= degree; ++t) {
      if (!used[t]) open.push_back(t);
    }
    if (open.empty()) break;
    const int t = open[rng.below(static_cast<int>(open.size()))];
    img[p] = t;
    used[t] = 1;
  }
  return PartialPerm(degree, img);
}

ISG random_isg(SplitMix64& rng, int max_degree, int size_cap) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int d = 1 + rng.below(max_degree);
    const int count = 1 + rng.below(3);
    std::vector<PartialPerm> gens;
    gens.reserve(count);
    for (int i = 0; i < count; ++i) {
      gens.push_back(random_partial_perm(rng, d));
    }
    try {
      return ISG::close(d, gens, size_cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ClosureTooLarge) throw;
    }
  }
  return ISG::close(1, {PartialPerm::identity(1)}, size_cap);
}

SubISG random_sub(SplitMix64& rng, const ISG& g) {
  const int count = 1 + rng.below(2);
  std::vector<int> seed;
  seed.reserve(count);
  for (int i = 0; i < count; ++i) {
    seed.push_back(rng.below(g.size()));
  }
  return SubISG::closure_of(g, seed);
}

Mat random_invertible(SplitMix64& rng, int n) {
  Mat t = Mat::identity(n);
  if (n <= 1) return t;
  const QC phases[4] = {QC(1), QC(-1), QC::i(), -QC::i()};
  for (int step = 0; step < 2 * n; ++step) {
    const int kind = rng.below(3);
    const int r = rng.below(n);
    int s = rng.below(n - 1);
    if (s >= r) ++s;
    if (kind == 0) {
      for (int c = 0; c < n; ++c) std::swap(t.at(r, c), t.at(s, c));
    } else if (kind == 1) {
      const QC& ph = phases[rng.below(4)];
      for (int c = 0; c < n; ++c) t.at(r, c) = t.at(r, c) * ph;
    } else {
      const QC f(static_cast<long>(rng.below(5)) - 2);
      for (int c = 0; c < n; ++c) t.at(r, c) += f * t.at(s, c);
    }
  }
  return t;
}

GAlgebra scramble_galgebra(SplitMix64& rng, const GAlgebra& a) {
  const int n = a.dim();
  const Mat t = random_invertible(rng, n);
  const auto tinv = inverse(t);
  if (!tinv) {
    throw Error(ErrorCode::InvalidAlgebra, "coordinate change lost its inverse");
  }

  StarAlgebra s;
  s.dim = n;
  s.labels = a.alg.labels;
  s.mult.assign(n, std::vector<Vec>(n, vec_zero(n)));
  std::vector<Vec> old_basis;
  old_basis.reserve(n);
  for (int i = 0; i < n; ++i) old_basis.push_back(tinv->col(i));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s.mult[i][j] = t.apply(a.alg.mul_vec(old_basis[i], old_basis[j]));
    }
  }
  s.invol = t.mul(a.alg.invol).mul(tinv->conj_entries());

  std::vector<Mat> act;
  act.reserve(a.action.size());
  for (const Mat& m : a.action) act.push_back(t.mul(m).mul(*tinv));
  return GAlgebra::make(std::move(s), a.acting, std::move(act));
}

GAlgebra random_galgebra(SplitMix64& rng, const SubISG& h, int max_dim) {
  std::vector<int> menu{0};
  if (h.size() <= max_dim) menu.push_back(1);
  const int esize = static_cast<int>(h.local.idempotents().size());
  if (esize <= max_dim) menu.push_back(2);
  const int pick = menu[rng.below(static_cast<int>(menu.size()))];

  GAlgebra base = [&]() {
    switch (pick) {
      case 1:
        return c0_algebra(h);
      case 2:
        return epsilon_algebra(h);
      default:
        return trivial_algebra(h);
    }
  }();
  if (base.dim() > 1 && rng.below(2) == 1) {
    return scramble_galgebra(rng, base);
  }
  return base;
}

Mat random_module_unitary(SplitMix64& rng, const HModule& m) {
  const int n = m.rank();
  Mat u = Mat::identity(n);
  std::vector<std::vector<int>> fiber(m.lattice.size());
  for (int s = 0; s < n; ++s) fiber[m.range_at[s]].push_back(s);

  const QC phases[4] = {QC(1), QC(-1), QC::i(), -QC::i()};
  const QC c35 = QC(3) * QC(5).inv();
  const QC c45 = QC(4) * QC(5).inv();

  for (const auto& f : fiber) {
    if (f.empty()) continue;
    const int sz = static_cast<int>(f.size());
    const int moves = 2 + sz;
    for (int mv = 0; mv < moves; ++mv) {
      const int kind = rng.below(3);
      const int i = f[rng.below(sz)];
      if (kind == 0 || sz < 2) {
        const QC& ph = phases[rng.below(4)];
        for (int r = 0; r < n; ++r) u.at(r, i) = u.at(r, i) * ph;
        continue;
      }
      int jx = rng.below(sz - 1);
      if (f[jx] == i) jx = sz - 1;
      const int j = f[jx];
      if (kind == 1) {
        for (int r = 0; r < n; ++r) std::swap(u.at(r, i), u.at(r, j));
      } else {
        for (int r = 0; r < n; ++r) {
          const QC ci = u.at(r, i), cj = u.at(r, j);
          u.at(r, i) = c35 * ci + c45 * cj;
          u.at(r, j) = c35 * cj - c45 * ci;
        }
      }
    }
  }
  return u;
}

}  // namespace isg
