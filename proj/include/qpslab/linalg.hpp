#pragma once

#include <cstddef>
#include <vector>

#include "qpslab/matrix.hpp"

namespace qpslab {

/// Reduced row echelon form with the list of pivot columns (exact scalars).
template <class T>
struct Echelon {
  Mat<T> reduced;
  std::vector<std::size_t> pivots;
};

template <class T>
Echelon<T> row_reduce(Mat<T> a) {
  static_assert(is_exact_v<T>, "row_reduce is the exact path; floats go through the SVD");
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = a.rows();
    for (std::size_t r = row; r < a.rows(); ++r)
      if (!is_zero(a(r, c))) {
        p = r;
        break;
      }
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const T inv = T(1) / a(row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, c))) continue;
      const T f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

// Float backend: singular-value based rank and null space (Eigen JacobiSVD).
std::size_t svd_rank(const Mat<Float>& m);
Mat<Float> svd_kernel_basis(const Mat<Float>& m);
Mat<Float> svd_range_basis(const Mat<Float>& m);

/// Rank over the scalar field: exact elimination or singular values above
/// tolerance × the largest one.
template <class T>
std::size_t rank(const Mat<T>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if constexpr (is_exact_v<T>) {
    return row_reduce(m).pivots.size();
  } else {
    return svd_rank(m);
  }
}

/// Linearly independent spanning set of the column space (columns of the
/// result). Exact: the pivot columns of m itself.
template <class T>
Mat<T> column_basis(const Mat<T>& m) {
  if (m.cols() == 0) return Mat<T>(m.rows(), 0);
  if constexpr (is_exact_v<T>) {
    const auto ech = row_reduce(m);
    Mat<T> b(m.rows(), ech.pivots.size());
    for (std::size_t k = 0; k < ech.pivots.size(); ++k)
      for (std::size_t i = 0; i < m.rows(); ++i) b(i, k) = m(i, ech.pivots[k]);
    return b;
  } else {
    return svd_range_basis(m);
  }
}

/// A finite-dimensional subspace of scalar^ambient stored by a basis whose
/// columns are linearly independent.
template <class T>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(ambient, 0) {}

  /// Span of the columns of `generators` (dependent columns are dropped).
  static Subspace span(const Mat<T>& generators) {
    Subspace s(generators.rows());
    s.basis_ = column_basis(generators);
    return s;
  }
  static Subspace span(std::size_t ambient, const std::vector<Vec<T>>& vectors) {
    return span(Mat<T>::from_columns(ambient, vectors));
  }
  static Subspace full(std::size_t ambient) { return span(Mat<T>::identity(ambient)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Mat<T>& basis() const { return basis_; }
  Vec<T> vector(std::size_t k) const { return basis_.col(k); }

  bool contains(const Vec<T>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
    if (dim() == 0) return is_zero_vec(v);
    return rank(hstack(basis_, Mat<T>::column(v))) == dim();
  }
  bool contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    if (o.dim() == 0) return true;
    return rank(hstack(basis_, o.basis_)) == dim();
  }

 private:
  std::size_t ambient_;
  Mat<T> basis_;
};

template <class T>
Subspace<T> kernel(const Mat<T>& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace<T>::full(n);
  if constexpr (is_exact_v<T>) {
    const auto ech = row_reduce(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<Vec<T>> vecs;
    for (std::size_t free = 0; free < n; ++free) {
      if (is_pivot[free]) continue;
      Vec<T> v(n, T(0));
      v[free] = T(1);
      for (std::size_t k = 0; k < ech.pivots.size(); ++k) v[ech.pivots[k]] = -ech.reduced(k, free);
      vecs.push_back(std::move(v));
    }
    return Subspace<T>::span(n, vecs);
  } else {
    return Subspace<T>::span(svd_kernel_basis(m));
  }
}

template <class T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient dimension mismatch");
  return Subspace<T>::span(hstack(a.basis(), b.basis()));
}

template <class T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace<T>(a.ambient_dim());
  // A·c = B·d  ⇔  [A | −B](c,d) = 0; the intersection is A·c over that kernel.
  const auto k = kernel(hstack(a.basis(), -b.basis()));
  if (k.dim() == 0) return Subspace<T>(a.ambient_dim());
  return Subspace<T>::span(a.basis() * k.basis().block(0, 0, a.dim(), k.dim()));
}

/// Mutual containment by rank tests.
template <class T>
bool equal(const Subspace<T>& a, const Subspace<T>& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  if (a.dim() != b.dim()) return false;
  return a.contains(b);
}

/// {v : vᵀ·P·s = 0 for all s ∈ S}; P must be nondegenerate.
template <class T>
Subspace<T> annihilator(const Subspace<T>& s, const Mat<T>& pairing) {
  if (!pairing.square() || pairing.rows() != s.ambient_dim())
    throw std::invalid_argument("annihilator: pairing shape mismatch");
  if (rank(pairing) != pairing.rows()) throw std::invalid_argument("annihilator: degenerate pairing");
  if (s.dim() == 0) return Subspace<T>::full(s.ambient_dim());
  return kernel((pairing * s.basis()).transpose());
}

/// Unique-or-absent solution of A·x = b. Returns false when inconsistent.
template <class T>
bool solve_particular(const Mat<T>& a, const Vec<T>& b, Vec<T>& x) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  if constexpr (is_exact_v<T>) {
    const auto ech = row_reduce(hstack(a, Mat<T>::column(b)));
    x.assign(a.cols(), T(0));
    for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
      if (ech.pivots[k] == a.cols()) return false;
      x[ech.pivots[k]] = ech.reduced(k, a.cols());
    }
    return true;
  } else {
    // Least squares through the normal equations on the range basis.
    const auto k = kernel(hstack(a, Mat<T>::column(b)));
    for (std::size_t j = 0; j < k.dim(); ++j) {
      const T last = k.basis()(a.cols(), j);
      if (!is_zero(last)) {
        x.assign(a.cols(), T(0));
        for (std::size_t i = 0; i < a.cols(); ++i) x[i] = -k.basis()(i, j) / last;
        return true;
      }
    }
    return false;
  }
}

}  // namespace qpslab
