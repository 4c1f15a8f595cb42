#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qpslab {

/// Exact complex scalar a + b·i with a, b arbitrary-precision rationals.
///
/// Every sample point used by the verification suites has real entries, so
/// the arithmetic takes a real fast path whenever both operands have a zero
/// imaginary part.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(long num, long den);
  explicit GaussRational(mpq_class re, mpq_class im = 0);

  /// Parses "p/q" (or "p") for each part; throws std::invalid_argument.
  static GaussRational parse(std::string_view re, std::string_view im = "0");

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational inverse() const;
  double magnitude() const;
  std::complex<double> to_complex() const;

  std::string real_string() const { return re_.get_str(); }
  std::string imag_string() const { return im_.get_str(); }
  /// "p/q" or "p/q+r/si" for display.
  std::string to_string() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) {
    GaussRational r;
    r.re_ = -a.re_;
    r.im_ = -a.im_;
    return r;
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& x);

}  // namespace qpslab
