#include "isg/linalg.hpp"

#include <cassert>

namespace isg {

Vec vec_zero(int n) { return Vec(static_cast<size_t>(n)); }

Vec vec_unit(int n, int k) {
  Vec v(static_cast<size_t>(n));
  v[k] = QC(1);
  return v;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const QC& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void vec_axpy(Vec& acc, const QC& c, const Vec& v) {
  if (acc.size() < v.size()) acc.resize(v.size());
  if (c.is_zero()) return;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += c * v[i];
  }
}

Vec vec_conj(const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = x.conj();
  return r;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = QC(1);
  return m;
}

Mat Mat::from_cols(int rows, const std::vector<Vec>& cols) {
  Mat m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols; ++j) {
    assert(static_cast<int>(cols[j].size()) == rows);
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Vec Mat::apply(const Vec& v) const {
  assert(static_cast<int>(v.size()) == cols);
  Vec r(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    QC acc;
    const QC* row = &a[static_cast<size_t>(i) * cols];
    for (int j = 0; j < cols; ++j) {
      if (!row[j].is_zero() && !v[j].is_zero()) acc += row[j] * v[j];
    }
    r[i] = acc;
  }
  return r;
}

Mat Mat::mul(const Mat& o) const {
  assert(cols == o.rows);
  Mat r(rows, o.cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const QC& x = at(i, k);
      if (x.is_zero()) continue;
      const QC* orow = &o.a[static_cast<size_t>(k) * o.cols];
      QC* rrow = &r.a[static_cast<size_t>(i) * o.cols];
      for (int j = 0; j < o.cols; ++j) {
        if (!orow[j].is_zero()) rrow[j] += x * orow[j];
      }
    }
  }
  return r;
}

Mat Mat::add(const Mat& o) const {
  assert(rows == o.rows && cols == o.cols);
  Mat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

Mat Mat::sub(const Mat& o) const {
  assert(rows == o.rows && cols == o.cols);
  Mat r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

Mat Mat::scale(const QC& c) const {
  Mat r = *this;
  for (auto& x : r.a) x *= c;
  return r;
}

Mat Mat::conj_transpose() const {
  Mat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

Mat Mat::conj_entries() const {
  Mat r = *this;
  for (auto& x : r.a) x = x.conj();
  return r;
}

Vec Mat::col(int j) const {
  Vec v(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Vec EchelonBasis::reduce(Vec& v) const {
  Vec coeff(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Row& row = rows_[r];
    if (row.pivot >= static_cast<int>(v.size())) continue;
    QC f = v[row.pivot];
    if (f.is_zero()) continue;
    coeff[r] = f;
    for (int j = 0; j < n_; ++j) {
      if (!row.v[j].is_zero()) v[j] -= f * row.v[j];
    }
  }
  return coeff;
}

bool EchelonBasis::insert(const Vec& vin) {
  assert(static_cast<int>(vin.size()) == n_);
  Vec v = vin;
  Vec coeff = reduce(v);

  int pivot = -1;
  for (int j = 0; j < n_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;

  // combo of the new row over accepted vectors (including vin itself).
  Vec combo(accepted_.size() + 1);
  combo.back() = QC(1);
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (!coeff[r].is_zero()) {
      for (size_t i = 0; i < rows_[r].combo.size(); ++i)
        combo[i] -= coeff[r] * rows_[r].combo[i];
    }
  }

  QC lead = v[pivot];
  QC inv = lead.inv();
  for (auto& x : v) x *= inv;
  for (auto& x : combo) x *= inv;

  // Back-eliminate the new pivot from existing rows.
  for (auto& row : rows_) {
    QC f = row.v[pivot];
    if (f.is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (!v[j].is_zero()) row.v[j] -= f * v[j];
    }
    row.combo.resize(combo.size());
    for (size_t i = 0; i < combo.size(); ++i) {
      if (!combo[i].is_zero()) row.combo[i] -= f * combo[i];
    }
  }

  accepted_.push_back(vin);
  Row nr{std::move(v), std::move(combo), pivot};
  auto it = rows_.begin();
  while (it != rows_.end() && it->pivot < pivot) ++it;
  rows_.insert(it, std::move(nr));
  return true;
}

Vec EchelonBasis::residual(const Vec& vin) const {
  Vec v = vin;
  reduce(v);
  return v;
}

std::optional<Vec> EchelonBasis::coords(const Vec& vin) const {
  Vec v = vin;
  Vec coeff = reduce(v);
  if (!vec_is_zero(v)) return std::nullopt;
  Vec out(accepted_.size());
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (coeff[r].is_zero()) continue;
    for (size_t i = 0; i < rows_[r].combo.size(); ++i)
      out[i] += coeff[r] * rows_[r].combo[i];
  }
  return out;
}

int rank(const Mat& m) {
  EchelonBasis eb(m.rows);
  for (int j = 0; j < m.cols; ++j) eb.insert(m.col(j));
  return eb.dim();
}

std::vector<Vec> nullspace(const Mat& a) {
  EchelonBasis eb(a.rows);
  std::vector<int> kept;  // original column index of each accepted column
  std::vector<Vec> out;
  for (int j = 0; j < a.cols; ++j) {
    Vec c = a.col(j);
    if (eb.insert(c)) {
      kept.push_back(j);
    } else {
      Vec coeff = *eb.coords(c);
      Vec x(static_cast<size_t>(a.cols));
      for (size_t i = 0; i < coeff.size(); ++i) x[kept[i]] = coeff[i];
      x[j] = QC(-1);
      out.push_back(std::move(x));
    }
  }
  return out;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  EchelonBasis eb(a.rows);
  std::vector<int> kept;
  for (int j = 0; j < a.cols; ++j) {
    if (eb.insert(a.col(j))) kept.push_back(j);
  }
  auto coeff = eb.coords(b);
  if (!coeff) return std::nullopt;
  Vec x(static_cast<size_t>(a.cols));
  for (size_t i = 0; i < coeff->size(); ++i) x[kept[i]] = (*coeff)[i];
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows != a.cols) return std::nullopt;
  EchelonBasis eb(a.rows);
  for (int j = 0; j < a.cols; ++j) {
    if (!eb.insert(a.col(j))) return std::nullopt;
  }
  Mat inv(a.rows, a.cols);
  for (int k = 0; k < a.rows; ++k) {
    auto c = eb.coords(vec_unit(a.rows, k));
    if (!c) return std::nullopt;
    for (int i = 0; i < a.rows; ++i) inv.at(i, k) = (*c)[i];
  }
  return inv;
}

}  // namespace isg
