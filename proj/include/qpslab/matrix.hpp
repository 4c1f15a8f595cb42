#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpslab/scalar.hpp"

namespace qpslab {

template <class T>
using Vec = std::vector<T>;

/// Dense row-major matrix over a scalar type.
template <class T>
class Mat {
 public:
  using value_type = T;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
  }
  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Mat column(const Vec<T>& v) { return Mat(v.size(), 1, v); }
  static Mat diagonal(const Vec<T>& v) {
    Mat m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
    return m;
  }
  /// Columns given as vectors of equal length.
  static Mat from_columns(std::size_t rows, const std::vector<Vec<T>>& cols) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Vec<T> col(std::size_t j) const {
    Vec<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  Vec<T> row(std::size_t i) const {
    return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!qpslab::is_zero(x)) return false;
    return true;
  }

  Mat& operator+=(const Mat& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Mat operator*(Mat a, const T& s) { return a *= s; }
  friend Mat operator*(const T& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (qpslab::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Vec<T> operator*(const Mat& a, const Vec<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec<T> r(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
    return r;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
T trace(const Mat<T>& m) {
  T s(0);
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) s += m(i, i);
  return s;
}

/// Σ_ij a_ij b_ji without forming the product.
template <class T>
T trace_of_product(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw std::invalid_argument("trace product shape");
  T s(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, i);
  return s;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot length mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vec<T> scaled(Vec<T> a, const T& s) {
  for (auto& x : a) x *= s;
  return a;
}

template <class T>
bool is_zero_vec(const Vec<T>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class T>
bool approx_equal(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    if (!approx_equal(a.data()[k], b.data()[k])) return false;
  return true;
}

template <class T>
bool approx_equal(const Vec<T>& a, const Vec<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!approx_equal(a[k], b[k])) return false;
  return true;
}

template <class T>
Mat<T> hstack(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Mat<T> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class T>
Mat<T> vstack(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Mat<T> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

/// Gauss–Jordan inverse; the pivot in each column is the entry with the
/// largest pivot_weight (any nonzero entry for exact scalars).
template <class T>
Mat<T> inverse(const Mat<T>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat<T> a = m;
  Mat<T> inv = Mat<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    double best_w = 0.0;
    for (std::size_t r = c; r < n; ++r) {
      const double w = scalar_traits<T>::pivot_weight(a(r, c));
      if (w > best_w) {
        best_w = w;
        best = r;
        if constexpr (is_exact_v<T>) break;
      }
    }
    if (best == n || (!is_exact_v<T> && best_w <= float_tolerance()))
      throw std::domain_error("matrix is singular");
    if (best != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(best, j), a(c, j));
        std::swap(inv(best, j), inv(c, j));
      }
    const T p = T(1) / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= p;
      inv(c, j) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a(r, c))) continue;
      const T f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class T>
T determinant(const Mat<T>& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Mat<T> a = m;
  T det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    double best_w = 0.0;
    for (std::size_t r = c; r < n; ++r) {
      const double w = scalar_traits<T>::pivot_weight(a(r, c));
      if (w > best_w) {
        best_w = w;
        best = r;
        if constexpr (is_exact_v<T>) break;
      }
    }
    if (best == n) return T(0);
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(best, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const T p = T(1) / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(a(r, c))) continue;
      const T f = a(r, c) * p;
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Entrywise cast through from_exact (exact → any scalar).
template <class S>
Mat<S> cast_matrix(const Mat<Exact>& m) {
  std::vector<S> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.push_back(from_exact<S>(x));
  return Mat<S>(m.rows(), m.cols(), std::move(d));
}

template <class S>
Vec<S> cast_vector(const Vec<Exact>& v) {
  Vec<S> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(from_exact<S>(x));
  return r;
}

template <class S, class T>
Mat<S> lift_matrix(const Mat<T>& m) {
  if constexpr (std::is_same_v<S, T>) {
    return m;
  } else {
    std::vector<S> d;
    d.reserve(m.data().size());
    for (const auto& x : m.data()) d.push_back(lift_scalar<S>(x));
    return Mat<S>(m.rows(), m.cols(), std::move(d));
  }
}

/// Value and first-order parts of a dual matrix.
template <class T>
Mat<T> value_part(const Mat<Dual<T>>& m) {
  std::vector<T> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.push_back(x.v);
  return Mat<T>(m.rows(), m.cols(), std::move(d));
}

template <class T>
Mat<T> deriv_part(const Mat<Dual<T>>& m) {
  std::vector<T> d;
  d.reserve(m.data().size());
  for (const auto& x : m.data()) d.push_back(x.d);
  return Mat<T>(m.rows(), m.cols(), std::move(d));
}

template <class T>
Mat<Dual<T>> make_dual(const Mat<T>& value, const Mat<T>& deriv) {
  if (value.rows() != deriv.rows() || value.cols() != deriv.cols())
    throw std::invalid_argument("dual matrix shape mismatch");
  std::vector<Dual<T>> d;
  d.reserve(value.data().size());
  for (std::size_t k = 0; k < value.data().size(); ++k) d.emplace_back(value.data()[k], deriv.data()[k]);
  return Mat<Dual<T>>(value.rows(), value.cols(), std::move(d));
}

template <class T>
Mat<Dual<T>> lift_dual(const Mat<T>& value) {
  return make_dual(value, Mat<T>(value.rows(), value.cols()));
}

}  // namespace qpslab
