#pragma once

#include <cmath>
#include <type_traits>

// Template definitions for group.hpp.

namespace qpslab {

template <class S>
Vec<S> GroupContext::coords(const Mat<S>& x) const {
  if (static_cast<int>(x.rows()) != n_ || static_cast<int>(x.cols()) != n_)
    throw std::invalid_argument("algebra element has wrong size");
  Vec<S> c;
  c.reserve(dim_g());
  if (family_ == Family::GL) {
    for (int k = 0; k < n_; ++k) c.push_back(x(k, k));
  } else {
    S partial(0);
    for (int k = 0; k + 1 < n_; ++k) {
      partial += x(k, k);
      c.push_back(partial);
    }
  }
  for (const auto& [i, j] : offdiag_index_) c.push_back(x(i, j));
  return c;
}

template <class S>
Mat<S> GroupContext::from_coords(const Vec<S>& c) const {
  if (c.size() != dim_g()) throw std::invalid_argument("coordinate vector has wrong length");
  Mat<S> x(n_, n_);
  if (family_ == Family::GL) {
    for (int k = 0; k < n_; ++k) x(k, k) = c[k];
  } else {
    for (int k = 0; k + 1 < n_; ++k) {
      x(k, k) += c[k];
      x(k + 1, k + 1) -= c[k];
    }
  }
  for (std::size_t s = 0; s < offdiag_index_.size(); ++s) {
    const auto [i, j] = offdiag_index_[s];
    x(i, j) = c[t_.end + s];
  }
  return x;
}

template <class S>
Vec<S> GroupContext::coords_in(const Mat<S>& x, BasisRange r) const {
  const Vec<S> full = coords(x);
  return Vec<S>(full.begin() + r.begin, full.begin() + r.end);
}

template <class S>
Mat<S> GroupContext::from_coords_in(const Vec<S>& c, BasisRange r) const {
  if (c.size() != r.size()) throw std::invalid_argument("subalgebra coordinate length mismatch");
  Vec<S> full(dim_g(), S(0));
  for (std::size_t k = 0; k < c.size(); ++k) full[r.begin + k] = c[k];
  return from_coords(full);
}

template <class T>
bool GroupContext::in_algebra(const Mat<T>& x) const {
  if (static_cast<int>(x.rows()) != n_ || static_cast<int>(x.cols()) != n_) return false;
  if (family_ == Family::SL) return is_zero(trace(x));
  return true;
}

template <class T>
bool GroupContext::in_group(const Mat<T>& g) const {
  if (static_cast<int>(g.rows()) != n_ || static_cast<int>(g.cols()) != n_) return false;
  const T det = determinant(g);
  if constexpr (std::is_same_v<T, Float>) {
    if (family_ == Family::SL) {
      double scale = 1;
      for (const auto& x : g.data()) scale = std::max(scale, std::abs(x));
      return std::abs(det - T(1)) <= float_tolerance() * std::pow(scale, n_);
    }
  }
  if (family_ == Family::SL) return approx_equal(det, T(1));
  return !is_zero(det);
}

template <class T>
bool GroupContext::in_borel(const Mat<T>& b) const {
  if (!in_group(b)) return false;
  for (int i = 1; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!is_zero(b(i, j))) return false;
  return true;
}

template <class T>
GroupElement<T>::GroupElement(const GroupContext& c, Mat<T> mat) : ctx(&c), m(std::move(mat)) {
  if (!c.in_group(m)) throw std::invalid_argument("matrix is not an element of " + c.name());
}

template <class T>
AlgebraElement<T>::AlgebraElement(const GroupContext& c, Mat<T> mat) : ctx(&c), m(std::move(mat)) {
  if (!c.in_algebra(m)) throw std::invalid_argument("matrix is not in the Lie algebra of " + c.name());
}

template <class T>
std::pair<GroupElement<T>, GroupElement<T>> borel_decompose(const GroupElement<T>& b) {
  const GroupContext& ctx = *b.ctx;
  if (!ctx.in_borel(b.m)) throw std::invalid_argument("borel_decompose: input is not in B");
  const std::size_t n = b.m.rows();
  Mat<T> t(n, n);
  Vec<T> inv_diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = b.m(i, i);
    inv_diag[i] = T(1) / b.m(i, i);
  }
  Mat<T> u = Mat<T>::diagonal(inv_diag) * b.m;
  return {GroupElement<T>(ctx, std::move(t)), GroupElement<T>(ctx, std::move(u))};
}

template <class T>
Vec<T> characteristic_coefficients(const Mat<T>& g) {
  const std::size_t n = g.rows();
  // Faddeev–LeVerrier: coefficient c[k] of λ^k in det(λ − g).
  Vec<T> c(n + 1, T(0));
  c[n] = T(1);
  Mat<T> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = g * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -trace(g * m) / T(static_cast<long>(k));
  }
  return c;
}

template <class T>
Vec<T> chevalley(const GroupContext& ctx, const Mat<T>& g) {
  const std::size_t n = g.rows();
  const Vec<T> c = characteristic_coefficients(g);
  const std::size_t count = ctx.family() == Family::SL ? n - 1 : n;
  Vec<T> e;
  e.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) e.push_back((k % 2 == 0) ? c[n - k] : -c[n - k]);
  return e;
}

}  // namespace qpslab
