#include "isg/star_algebra.hpp"

#include <sstream>

#include "isg/error.hpp"

namespace isg {

StarAlgebra StarAlgebra::zero_algebra() {
  StarAlgebra a;
  a.dim = 0;
  a.invol = Mat(0, 0);
  return a;
}

StarAlgebra StarAlgebra::complex_line() {
  StarAlgebra a;
  a.dim = 1;
  a.labels = {"1"};
  a.mult = {{Vec{QC(1)}}};
  a.invol = Mat::identity(1);
  return a;
}

StarAlgebra StarAlgebra::full_matrix(int n) {
  StarAlgebra a;
  a.dim = n * n;
  a.mult.assign(a.dim, std::vector<Vec>(a.dim));
  a.invol = Mat(a.dim, a.dim);
  auto idx = [n](int r, int c) { return r * n + c; };
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::ostringstream os;
      os << "E" << r + 1 << c + 1;
      a.labels.push_back(os.str());
      a.invol.at(idx(c, r), idx(r, c)) = QC(1);
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
          Vec v = vec_zero(a.dim);
          if (c == s) v[idx(r, t)] = QC(1);
          a.mult[idx(r, c)][idx(s, t)] = std::move(v);
        }
      }
    }
  }
  return a;
}

StarAlgebra StarAlgebra::function_algebra(std::vector<std::string> point_labels) {
  StarAlgebra a;
  a.dim = static_cast<int>(point_labels.size());
  a.labels = std::move(point_labels);
  a.mult.assign(a.dim, std::vector<Vec>(a.dim));
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      Vec v = vec_zero(a.dim);
      if (i == j) v[i] = QC(1);
      a.mult[i][j] = std::move(v);
    }
  }
  a.invol = Mat::identity(a.dim);
  return a;
}

Vec StarAlgebra::mul_vec(const Vec& x, const Vec& y) const {
  Vec out = vec_zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      vec_axpy(out, x[i] * y[j], mult[i][j]);
    }
  }
  return out;
}

Vec StarAlgebra::star_vec(const Vec& x) const { return invol.apply(vec_conj(x)); }

Mat StarAlgebra::left_mult(const Vec& x) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = mul_vec(x, basis_vec(j));
    for (int i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Mat StarAlgebra::right_mult(const Vec& x) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = mul_vec(basis_vec(j), x);
    for (int i = 0; i < dim; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::optional<Vec> StarAlgebra::find_unit() const {
  if (dim == 0) return Vec{};
  // Stack the conditions u * b_j = b_j and b_j * u = b_j over all j into
  // one linear system in the coordinates of u.
  Mat sys(2 * dim * dim, dim);
  Vec rhs = vec_zero(2 * dim * dim);
  for (int j = 0; j < dim; ++j) {
    for (int l = 0; l < dim; ++l) {
      const Vec& lv = mult[l][j];
      const Vec& rv = mult[j][l];
      for (int i = 0; i < dim; ++i) {
        sys.at(j * dim + i, l) = lv[i];
        sys.at(dim * dim + j * dim + i, l) = rv[i];
      }
    }
    rhs[j * dim + j] = QC(1);
    rhs[dim * dim + j * dim + j] = QC(1);
  }
  return solve(sys, rhs);
}

std::vector<std::string> StarAlgebra::check_axioms() const {
  std::vector<std::string> bad;
  const std::size_t cap = 5;

  for (int i = 0; i < dim && bad.size() < cap; ++i) {
    for (int j = 0; j < dim && bad.size() < cap; ++j) {
      const Vec& ij = mult[i][j];
      for (int k = 0; k < dim && bad.size() < cap; ++k) {
        Vec lhs = vec_zero(dim);
        for (int l = 0; l < dim; ++l) {
          if (!ij[l].is_zero()) vec_axpy(lhs, ij[l], mult[l][k]);
        }
        Vec rhs = vec_zero(dim);
        const Vec& jk = mult[j][k];
        for (int l = 0; l < dim; ++l) {
          if (!jk[l].is_zero()) vec_axpy(rhs, jk[l], mult[i][l]);
        }
        if (lhs != rhs) {
          bad.push_back("associativity fails at (" + labels[i] + "," +
                        labels[j] + "," + labels[k] + ")");
        }
      }
    }
  }

  Mat twice = invol.mul(invol.conj_entries());
  if (!(twice == Mat::identity(dim))) {
    bad.push_back("involution applied twice is not the identity");
  }
  for (int i = 0; i < dim && bad.size() < cap + 5; ++i) {
    for (int j = 0; j < dim && bad.size() < cap + 5; ++j) {
      Vec lhs = star_vec(mult[i][j]);
      Vec rhs = mul_vec(star_vec(basis_vec(j)), star_vec(basis_vec(i)));
      if (lhs != rhs) {
        bad.push_back("involution is not anti-multiplicative at (" +
                      labels[i] + "," + labels[j] + ")");
      }
    }
  }
  return bad;
}

StarAlgebra direct_sum_star(const StarAlgebra& a, const StarAlgebra& b) {
  StarAlgebra s;
  s.dim = a.dim + b.dim;
  for (const auto& l : a.labels) s.labels.push_back("L:" + l);
  for (const auto& l : b.labels) s.labels.push_back("R:" + l);
  s.mult.assign(s.dim, std::vector<Vec>(s.dim, vec_zero(s.dim)));
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      for (int k = 0; k < a.dim; ++k) s.mult[i][j][k] = a.mult[i][j][k];
    }
  }
  for (int i = 0; i < b.dim; ++i) {
    for (int j = 0; j < b.dim; ++j) {
      for (int k = 0; k < b.dim; ++k) {
        s.mult[a.dim + i][a.dim + j][a.dim + k] = b.mult[i][j][k];
      }
    }
  }
  s.invol = Mat(s.dim, s.dim);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) s.invol.at(i, j) = a.invol.at(i, j);
  }
  for (int i = 0; i < b.dim; ++i) {
    for (int j = 0; j < b.dim; ++j) {
      s.invol.at(a.dim + i, a.dim + j) = b.invol.at(i, j);
    }
  }
  return s;
}

StarAlgebra tensor_star(const StarAlgebra& a, const StarAlgebra& b) {
  StarAlgebra t;
  t.dim = a.dim * b.dim;
  auto idx = [&](int i, int j) { return i * b.dim + j; };
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < b.dim; ++j) {
      t.labels.push_back(a.labels[i] + "(x)" + b.labels[j]);
    }
  }
  t.mult.assign(t.dim, std::vector<Vec>(t.dim));
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < b.dim; ++j) {
      for (int k = 0; k < a.dim; ++k) {
        for (int l = 0; l < b.dim; ++l) {
          Vec v = vec_zero(t.dim);
          const Vec& av = a.mult[i][k];
          const Vec& bv = b.mult[j][l];
          for (int x = 0; x < a.dim; ++x) {
            if (av[x].is_zero()) continue;
            for (int y = 0; y < b.dim; ++y) {
              if (bv[y].is_zero()) continue;
              v[idx(x, y)] = av[x] * bv[y];
            }
          }
          t.mult[idx(i, j)][idx(k, l)] = std::move(v);
        }
      }
    }
  }
  t.invol = Mat(t.dim, t.dim);
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < b.dim; ++j) {
      for (int x = 0; x < a.dim; ++x) {
        for (int y = 0; y < b.dim; ++y) {
          t.invol.at(idx(x, y), idx(i, j)) = a.invol.at(x, i) * b.invol.at(y, j);
        }
      }
    }
  }
  return t;
}

}  // namespace isg
