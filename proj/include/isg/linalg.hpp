#ifndef ISG_LINALG_HPP
#define ISG_LINALG_HPP

#include <optional>
#include <vector>

#include "isg/rational.hpp"

namespace isg {

using Vec = std::vector<QC>;

Vec vec_zero(int n);
Vec vec_unit(int n, int k);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const QC& c, const Vec& v);
void vec_axpy(Vec& acc, const QC& c, const Vec& v);  // acc += c*v
Vec vec_conj(const Vec& v);

// Dense row-major matrix over QC.  Products skip zero entries of the left
// factor, so permutation-like matrices multiply in roughly quadratic time.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<QC> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  QC& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const QC& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }

  static Mat identity(int n);
  static Mat from_cols(int rows, const std::vector<Vec>& cols);

  Vec apply(const Vec& v) const;
  Mat mul(const Mat& o) const;
  Mat add(const Mat& o) const;
  Mat sub(const Mat& o) const;
  Mat scale(const QC& c) const;
  Mat conj_transpose() const;
  Mat conj_entries() const;
  Vec col(int j) const;
  bool is_zero() const;

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

// Row-reduced span with bookkeeping: every accepted vector is remembered, and
// coordinates of later vectors are expressed over the accepted ones.  This is
// the single primitive behind rank, membership, fiber bases, quotients and
// ideal spans.
class EchelonBasis {
 public:
  explicit EchelonBasis(int ambient) : n_(ambient) {}

  // Returns true and keeps v if it enlarges the span.
  bool insert(const Vec& v);

  // Residual of v after reduction against the span.
  Vec residual(const Vec& v) const;

  bool contains(const Vec& v) const { return vec_is_zero(residual(v)); }

  // Coefficients of v over the accepted vectors, if v lies in the span.
  std::optional<Vec> coords(const Vec& v) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const Vec& accepted(int i) const { return accepted_[i]; }
  const std::vector<Vec>& accepted_all() const { return accepted_; }

 private:
  struct Row {
    Vec v;      // reduced vector, unit pivot
    Vec combo;  // v as a combination of accepted vectors
    int pivot;
  };

  int n_;
  std::vector<Row> rows_;       // sorted by pivot
  std::vector<Vec> accepted_;   // original accepted vectors

  // Reduces v in place; returns coefficients over rows_ in row order.
  Vec reduce(Vec& v) const;
};

int rank(const Mat& m);

// Basis of {x : Ax = 0}, deterministic.
std::vector<Vec> nullspace(const Mat& a);

// One solution of Ax = b if consistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

std::optional<Mat> inverse(const Mat& a);

}  // namespace isg

#endif
