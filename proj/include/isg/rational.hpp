#ifndef ISG_RATIONAL_HPP
#define ISG_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

namespace isg {

// Scalar used throughout the exact layer: a complex number whose real and
// imaginary parts are arbitrary-precision rationals.  All structural
// computations (structure constants, action matrices, rank decisions) stay
// in this type; conversion to double happens only at the spectral layer.
struct QC {
  mpq_class re;
  mpq_class im;

  QC() : re(0), im(0) {}
  QC(long r) : re(r), im(0) {}
  QC(long num, long den) : re(mpq_class(num, den)), im(0) { re.canonicalize(); }
  QC(const mpq_class& r) : re(r), im(0) {}
  QC(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static QC i() { return QC(mpq_class(0), mpq_class(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  QC conj() const { return QC(re, -im); }

  // |z|^2 as an exact rational.
  mpq_class abs2() const { return re * re + im * im; }

  QC inv() const {
    mpq_class d = abs2();
    return QC(re / d, -im / d);
  }

  std::complex<double> to_complex() const {
    return {re.get_d(), im.get_d()};
  }

  std::string str() const;

  QC& operator+=(const QC& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  QC& operator-=(const QC& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  QC& operator*=(const QC& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  QC& operator/=(const QC& o) { return *this *= o.inv(); }

  friend QC operator+(QC a, const QC& b) { return a += b; }
  friend QC operator-(QC a, const QC& b) { return a -= b; }
  friend QC operator*(QC a, const QC& b) { return a *= b; }
  friend QC operator/(QC a, const QC& b) { return a /= b; }
  friend QC operator-(const QC& a) { return QC(-a.re, -a.im); }

  friend bool operator==(const QC& a, const QC& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const QC& a, const QC& b) { return !(a == b); }
};

}  // namespace isg

#endif
