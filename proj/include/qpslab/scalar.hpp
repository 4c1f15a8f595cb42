#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <type_traits>

#include "qpslab/rational.hpp"

namespace qpslab {

using Exact = GaussRational;
using Float = std::complex<double>;

/// Relative cutoff used by every float-backend comparison and rank decision.
double float_tolerance();
void set_float_tolerance(double tol);

/// First-order dual number value + deriv·ε with ε² = 0.
template <class T>
struct Dual {
  T v{};
  T d{};

  Dual() = default;
  Dual(long x) : v(x), d(0) {}  // NOLINT(google-explicit-constructor)
  Dual(T value) : v(std::move(value)), d(0) {}  // NOLINT(google-explicit-constructor)
  Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}

  Dual& operator+=(const Dual& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    d = v * o.d + d * o.v;
    v *= o.v;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    const T inv = T(1) / o.v;
    d = (d - v * inv * o.d) * inv;
    v *= inv;
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
  friend Dual operator-(const Dual& a) { return Dual(-a.v, -a.d); }
  friend bool operator==(const Dual& a, const Dual& b) { return a.v == b.v && a.d == b.d; }
};

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Exact> {
  static constexpr bool exact = true;
  static bool is_zero(const Exact& x) { return x.is_zero(); }
  /// Pivot preference: any nonzero value is acceptable in exact elimination.
  static double pivot_weight(const Exact& x) { return x.is_zero() ? 0.0 : 1.0; }
  static double magnitude(const Exact& x) { return x.magnitude(); }
};

template <>
struct scalar_traits<Float> {
  static constexpr bool exact = false;
  static bool is_zero(const Float& x) { return std::abs(x) <= float_tolerance(); }
  static double pivot_weight(const Float& x) { return std::abs(x); }
  static double magnitude(const Float& x) { return std::abs(x); }
};

template <class T>
struct scalar_traits<Dual<T>> {
  static constexpr bool exact = scalar_traits<T>::exact;
  static bool is_zero(const Dual<T>& x) {
    return scalar_traits<T>::is_zero(x.v) && scalar_traits<T>::is_zero(x.d);
  }
  static double pivot_weight(const Dual<T>& x) { return scalar_traits<T>::pivot_weight(x.v); }
  static double magnitude(const Dual<T>& x) { return scalar_traits<T>::magnitude(x.v); }
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <class T>
bool is_zero(const T& x) {
  return scalar_traits<T>::is_zero(x);
}

/// Tolerant equality for floats (relative to max(1,|a|,|b|)), exact otherwise.
template <class T>
bool approx_equal(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    const double scale = std::max({1.0, scalar_traits<T>::magnitude(a), scalar_traits<T>::magnitude(b)});
    return scalar_traits<T>::magnitude(a - b) <= float_tolerance() * scale;
  }
}

/// Embeds an exact constant into scalar type S (duals get zero derivative).
template <class S>
S from_exact(const Exact& x) {
  if constexpr (std::is_same_v<S, Exact>) {
    return x;
  } else if constexpr (std::is_same_v<S, Float>) {
    return x.to_complex();
  } else {
    using Inner = decltype(S{}.v);
    return S(from_exact<Inner>(x));
  }
}

/// Embeds a scalar of type T into S, where S is T wrapped in zero or more
/// dual-number layers.
template <class S, class T>
S lift_scalar(const T& x) {
  if constexpr (std::is_same_v<S, T>) {
    return x;
  } else {
    using Inner = decltype(S{}.v);
    return S(lift_scalar<Inner>(x));
  }
}

/// Peels duals: value part at every nesting level.
template <class S>
auto base_value(const S& x) {
  if constexpr (std::is_same_v<S, Exact> || std::is_same_v<S, Float>) {
    return x;
  } else {
    return base_value(x.v);
  }
}

/// Human-readable value (duals show their value part).
template <class S>
std::string to_display(const S& x) {
  if constexpr (std::is_same_v<S, Exact>) {
    return x.to_string();
  } else if constexpr (std::is_same_v<S, Float>) {
    std::ostringstream os;
    os.precision(17);
    os << x.real();
    if (x.imag() != 0.0) os << (x.imag() < 0 ? "" : "+") << x.imag() << "i";
    return os.str();
  } else {
    return to_display(x.v);
  }
}

}  // namespace qpslab
