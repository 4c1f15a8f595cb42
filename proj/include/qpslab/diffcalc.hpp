#pragma once

#include <string>
#include <utility>

#include "qpslab/space.hpp"

namespace qpslab {

// Infinitesimal parts of values computed over dual numbers.
template <class T>
T deriv_of(const Dual<T>& x) {
  return x.d;
}
template <class T>
Vec<T> deriv_of(const Vec<Dual<T>>& v) {
  Vec<T> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.d);
  return out;
}
template <class T>
Mat<T> deriv_of(const Mat<Dual<T>>& m) {
  return deriv_part(m);
}
template <class A, class B>
auto deriv_of(const std::pair<A, B>& p) {
  return std::make_pair(deriv_of(p.first), deriv_of(p.second));
}

/// A map between product spaces; `eval` is a generic callable
/// Point<S> → Point<S> for every scalar type S used here.
template <class F>
struct PointedMap {
  std::string name;
  ProductSpace domain;
  ProductSpace codomain;
  F eval;

  template <class S>
  Point<S> operator()(const Point<S>& p) const {
    return eval(p);
  }
};

template <class F>
PointedMap<F> make_map(std::string name, ProductSpace domain, ProductSpace codomain, F eval) {
  return {std::move(name), std::move(domain), std::move(codomain), std::move(eval)};
}

/// Left-trivialized df_p(x): evaluate f along p·(I + t·x) over dual numbers.
template <class F, class T>
Vec<T> differential(const PointedMap<F>& f, const Point<T>& p, const Vec<T>& x) {
  const Point<Dual<T>> image = f.eval(curve(f.domain, p, x));
  std::vector<Mat<T>> out;
  out.reserve(image.size());
  for (const auto& m : image) out.push_back(inverse(value_part(m)) * deriv_part(m));
  if (!f.codomain.in_tangent(out))
    throw std::domain_error("differential of " + f.name + " leaves the codomain tangent space");
  return f.codomain.join(out);
}

/// Same with the direction given as algebra elements, validated against the
/// tangent space of the domain.
template <class F, class T>
Vec<T> differential(const PointedMap<F>& f, const Point<T>& p, const std::vector<Mat<T>>& x) {
  if (!f.domain.in_tangent(x))
    throw std::invalid_argument("direction is not tangent to " + f.domain.name());
  return differential(f, p, f.domain.join(x));
}

/// Matrix of df_p in tangent coordinates (codomain dim × domain dim).
template <class F, class T>
Mat<T> jacobian(const PointedMap<F>& f, const Point<T>& p) {
  const std::size_t n = f.domain.dim();
  Mat<T> j(f.codomain.dim(), n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vec<T> col = differential(f, p, f.domain.template unit<T>(c));
    for (std::size_t r = 0; r < col.size(); ++r) j(r, c) = col[r];
  }
  return j;
}

/// Derivative of any point-dependent quantity g along the left-trivialized
/// direction x at p.
template <class G, class T>
auto directional(const ProductSpace& space, const G& g, const Point<T>& p, const Vec<T>& x) {
  return deriv_of(g(curve(space, p, x)));
}

/// [X,Y] of vector fields given by left-trivialized coordinate maps.
template <class FX, class FY, class T>
Vec<T> lie_bracket(const ProductSpace& space, const FX& X, const FY& Y, const Point<T>& p) {
  const Vec<T> x = X(p);
  const Vec<T> y = Y(p);
  return directional(space, Y, p, x) - directional(space, X, p, y) + space.bracket(x, y);
}

/// The field p ↦ [X,Y](p), itself usable at any scalar type.
template <class FX, class FY>
auto bracket_field(const ProductSpace& space, FX X, FY Y) {
  return [space, X, Y](const auto& p) { return lie_bracket(space, X, Y, p); };
}

/// L_Xβ in dual-basis coordinates.
template <class FX, class FB, class T>
Vec<T> lie_derivative_covector(const ProductSpace& space, const FX& X, const FB& beta,
                               const Point<T>& p) {
  const Vec<T> x = X(p);
  const Vec<T> b = beta(p);
  Vec<T> out = directional(space, beta, p, x);
  for (std::size_t j = 0; j < space.dim(); ++j) {
    const Vec<T> e = space.template unit<T>(j);
    // [X, e_j] = −D_{e_j}x + [x, e_j]
    const Vec<T> commutator = space.bracket(x, e) - directional(space, X, p, e);
    out[j] -= dot(b, commutator);
  }
  return out;
}

/// dα(u, v) for constant-coordinate u, v at p.
template <class FA, class T>
T d_one_form(const ProductSpace& space, const FA& alpha, const Point<T>& p, const Vec<T>& u,
             const Vec<T>& v) {
  return dot(directional(space, alpha, p, u), v) - dot(directional(space, alpha, p, v), u) -
         dot(alpha(p), space.bracket(u, v));
}

/// ι_Y dα in dual-basis coordinates.
template <class FA, class T>
Vec<T> contract_d_one_form(const ProductSpace& space, const FA& alpha, const Point<T>& p,
                           const Vec<T>& y) {
  Vec<T> out(space.dim(), T(0));
  for (std::size_t j = 0; j < space.dim(); ++j)
    out[j] = d_one_form(space, alpha, p, y, space.template unit<T>(j));
  return out;
}

/// dω(x,y,z) for a family p ↦ W(p) of 2-form matrices, ω(u,v) = uᵀWv.
template <class FW, class T>
T d_two_form(const ProductSpace& space, const FW& omega, const Point<T>& p, const Vec<T>& x,
             const Vec<T>& y, const Vec<T>& z) {
  const Mat<T> w = omega(p);
  auto form = [](const Mat<T>& m, const Vec<T>& u, const Vec<T>& v) { return dot(u, m * v); };
  T out = form(directional(space, omega, p, x), y, z) + form(directional(space, omega, p, y), z, x) +
          form(directional(space, omega, p, z), x, y);
  out -= form(w, space.bracket(x, y), z);
  out -= form(w, space.bracket(y, z), x);
  out -= form(w, space.bracket(z, x), y);
  return out;
}

/// Sum of the Cartan 3-forms over the Group factors of a product space.
template <class T>
T cartan_eta_on(const ProductSpace& space, const Vec<T>& x, const Vec<T>& y, const Vec<T>& z) {
  const auto xs = space.split(x);
  const auto ys = space.split(y);
  const auto zs = space.split(z);
  T out(0);
  for (std::size_t k = 0; k < space.factor_count(); ++k)
    if (space.factor(k) == FactorKind::Group) out += lie::cartan_eta(space.ctx(), xs[k], ys[k], zs[k]);
  return out;
}

/// (f*η)(x,y,z) = η(df x, df y, df z) with η the Cartan form on the codomain.
template <class F, class T>
T pullback_eta(const PointedMap<F>& f, const Point<T>& p, const Vec<T>& x, const Vec<T>& y,
               const Vec<T>& z) {
  return cartan_eta_on(f.codomain, differential(f, p, x), differential(f, p, y), differential(f, p, z));
}

}  // namespace qpslab
