#pragma once

#include <string>
#include <vector>

#include "qpslab/group.hpp"

namespace qpslab {

/// Left-trivialized tangent algebra of a factor: G → g, B → b, T → t, and
/// Unipotent → u (also used for the translates tU, whose left-trivialized
/// tangent space is u).
enum class FactorKind { Group, Borel, Torus, Unipotent };

template <class T>
using Point = std::vector<Mat<T>>;

/// Product of matrix subgroups of G. Tangent vectors are concatenated
/// coordinate vectors of the left-trivialized algebra elements; covectors are
/// coordinate vectors in the dual basis.
class ProductSpace {
 public:
  ProductSpace(const GroupContext& ctx, std::vector<FactorKind> factors);

  const GroupContext& ctx() const { return *ctx_; }
  std::size_t factor_count() const { return factors_.size(); }
  FactorKind factor(std::size_t k) const { return factors_.at(k); }
  BasisRange algebra(std::size_t k) const;
  std::size_t offset(std::size_t k) const { return offsets_.at(k); }
  std::size_t factor_dim(std::size_t k) const { return algebra(k).size(); }
  std::size_t dim() const { return dim_; }
  std::string name() const;

  /// Per-factor algebra elements of a tangent coordinate vector.
  template <class S>
  std::vector<Mat<S>> split(const Vec<S>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("tangent coordinate length mismatch on " + name());
    std::vector<Mat<S>> out;
    out.reserve(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      Vec<S> part(x.begin() + offsets_[k], x.begin() + offsets_[k] + factor_dim(k));
      out.push_back(ctx_->from_coords_in(part, algebra(k)));
    }
    return out;
  }

  template <class S>
  Vec<S> join(const std::vector<Mat<S>>& elems) const {
    if (elems.size() != factors_.size()) throw std::invalid_argument("factor count mismatch on " + name());
    Vec<S> out;
    out.reserve(dim_);
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      const Vec<S> c = ctx_->coords_in(elems[k], algebra(k));
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }

  /// True iff each element lies in the corresponding factor algebra.
  template <class S>
  bool in_tangent(const std::vector<Mat<S>>& elems) const {
    if (elems.size() != factors_.size()) return false;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      if (!ctx_->in_algebra(elems[k])) return false;
      const auto back = ctx_->from_coords_in(ctx_->coords_in(elems[k], algebra(k)), algebra(k));
      if (!approx_equal(back, elems[k])) return false;
    }
    return true;
  }

  /// Factorwise Lie bracket of tangent coordinates.
  template <class S>
  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    const auto xs = split(x);
    const auto ys = split(y);
    std::vector<Mat<S>> out;
    out.reserve(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) out.push_back(lie::bracket(xs[k], ys[k]));
    return join(out);
  }

  template <class T>
  Vec<T> unit(std::size_t i) const {
    Vec<T> e(dim_, T(0));
    e.at(i) = T(1);
    return e;
  }

 private:
  const GroupContext* ctx_;
  std::vector<FactorKind> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
};

/// The curve t ↦ p·(I + t·x) as a point over dual numbers.
template <class T>
Point<Dual<T>> curve(const ProductSpace& space, const Point<T>& p, const Vec<T>& x) {
  const auto xs = space.split(x);
  if (p.size() != xs.size()) throw std::invalid_argument("point has wrong factor count");
  Point<Dual<T>> out;
  out.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out.push_back(make_dual(p[k], p[k] * xs[k]));
  return out;
}

template <class T>
Point<Dual<T>> lift_point(const Point<T>& p) {
  Point<Dual<T>> out;
  out.reserve(p.size());
  for (const auto& m : p) out.push_back(lift_dual(m));
  return out;
}

template <class S>
Point<S> cast_point(const Point<Exact>& p) {
  Point<S> out;
  for (const auto& m : p) out.push_back(cast_matrix<S>(m));
  return out;
}

}  // namespace qpslab
