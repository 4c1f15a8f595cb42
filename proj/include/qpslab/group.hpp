#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpslab/linalg.hpp"

namespace qpslab {

enum class Family { SL, GL };

/// Negative-control switches. Each one breaks a single frozen convention so
/// the suites can demonstrate they are not vacuous.
struct TestHooks {
  bool sigma_half = false;      // σ(ξ) = ξ + Ad_{g⁻¹}ξ (loses the ½)
  bool sigma_sign = false;      // σ(ξ) = ½(ξ − Ad_{g⁻¹}ξ)
  bool omega_sign = false;      // double 2-form negated
  bool dorfman_eta = false;     // twist term dropped from the Dorfman bracket
  bool any() const { return sigma_half || sigma_sign || omega_sign || dorfman_eta; }
};

/// Half-open index range into the basis of g.
struct BasisRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
};

/// The matrix group SL_n or GL_n with the invariant form (x,y) = c·tr(xy),
/// its standard Borel data, and a fixed basis of g ordered as
/// [t | u | u⁻] so that b = [t | u] is a prefix.
class GroupContext {
 public:
  GroupContext(Family family, int n, Exact form_scale = Exact(1), TestHooks hooks = {});

  /// "sl2", "sl3", "gl2", ... (n in 2..4).
  static GroupContext from_name(std::string_view name, TestHooks hooks = {});

  Family family() const { return family_; }
  int n() const { return n_; }
  std::string name() const;
  const Exact& form_scale() const { return form_scale_; }
  const TestHooks& hooks() const { return hooks_; }

  std::size_t dim_g() const { return basis_.size(); }
  std::size_t dim_b() const { return b_.size(); }
  std::size_t dim_u() const { return u_.size(); }
  std::size_t rank() const { return t_.size(); }

  BasisRange g_range() const { return {0, dim_g()}; }
  BasisRange b_range() const { return b_; }
  BasisRange t_range() const { return t_; }
  BasisRange u_range() const { return u_; }
  BasisRange u_minus_range() const { return {u_.end, dim_g()}; }

  const std::vector<Mat<Exact>>& basis() const { return basis_; }
  const Mat<Exact>& basis_element(std::size_t k) const { return basis_.at(k); }

  /// Gram matrix (e_i, e_j) and its inverse.
  const Mat<Exact>& metric() const { return metric_; }
  const Mat<Exact>& metric_inverse() const { return metric_inv_; }

  /// Coordinates of x ∈ g in the basis (x is assumed to lie in g).
  template <class S>
  Vec<S> coords(const Mat<S>& x) const;
  template <class S>
  Mat<S> from_coords(const Vec<S>& c) const;
  /// Coordinates restricted to a subalgebra range (entries outside are dropped).
  template <class S>
  Vec<S> coords_in(const Mat<S>& x, BasisRange r) const;
  template <class S>
  Mat<S> from_coords_in(const Vec<S>& c, BasisRange r) const;

  template <class S>
  S form(const Mat<S>& x, const Mat<S>& y) const {
    return from_exact<S>(form_scale_) * trace_of_product(x, y);
  }

  /// Metric coordinates of a covector (algebra element a with α(X) = (a, θX))
  /// converted to dual-basis coordinates α(e_j).
  template <class S>
  Vec<S> metric_to_dual(const Mat<S>& a) const {
    Vec<S> out;
    out.reserve(dim_g());
    for (const auto& e : basis_) out.push_back(form(a, cast_matrix<S>(e)));
    return out;
  }

  template <class T>
  bool in_algebra(const Mat<T>& x) const;
  template <class T>
  bool in_group(const Mat<T>& g) const;
  template <class T>
  bool in_borel(const Mat<T>& b) const;

 private:
  Family family_;
  int n_;
  Exact form_scale_;
  TestHooks hooks_;
  BasisRange t_, u_, b_;
  std::vector<Mat<Exact>> basis_;
  std::vector<std::pair<std::size_t, std::size_t>> offdiag_index_;  // (i,j) for u and u⁻ slots
  Mat<Exact> metric_;
  Mat<Exact> metric_inv_;
};

// ---------------------------------------------------------------------------
// Matrix-level operations; templated so they also run over dual numbers.

namespace lie {

template <class S>
Mat<S> bracket(const Mat<S>& x, const Mat<S>& y) {
  return x * y - y * x;
}

/// Ad_g x = g x g⁻¹.
template <class S>
Mat<S> adjoint(const Mat<S>& g, const Mat<S>& x) {
  return g * x * inverse(g);
}

/// Ad_{g⁻¹} x = g⁻¹ x g.
template <class S>
Mat<S> adjoint_inv(const Mat<S>& g, const Mat<S>& x) {
  return inverse(g) * x * g;
}

/// Left-trivialized metric coordinates of σ(ξ) = ½(ξ^R + ξ^L)^∨ at g.
template <class S>
Mat<S> sigma(const GroupContext& ctx, const Mat<S>& g, const Mat<S>& xi) {
  const Mat<S> right = adjoint_inv(g, xi);
  if (ctx.hooks().sigma_half) return xi + right;
  const S half = from_exact<S>(Exact(1, 2));
  if (ctx.hooks().sigma_sign) return (xi - right) * half;
  return (xi + right) * half;
}

/// σ^∨ at g on a covector with metric coordinates a: the adjoint of σ.
template <class S>
Mat<S> sigma_adjoint(const GroupContext& ctx, const Mat<S>& g, const Mat<S>& a) {
  const Mat<S> moved = adjoint(g, a);
  if (ctx.hooks().sigma_half) return a + moved;
  const S half = from_exact<S>(Exact(1, 2));
  if (ctx.hooks().sigma_sign) return (a - moved) * half;
  return (a + moved) * half;
}

/// Left-trivialized conjugation field ρ(ξ) = ξ^L − ξ^R at g.
template <class S>
Mat<S> conj_field(const Mat<S>& g, const Mat<S>& xi) {
  return xi - adjoint_inv(g, xi);
}

/// Cartan 3-form on left-trivialized vectors: η(x,y,z) = ½(x,[y,z]).
template <class S>
S cartan_eta(const GroupContext& ctx, const Mat<S>& x, const Mat<S>& y, const Mat<S>& z) {
  return from_exact<S>(Exact(1, 2)) * ctx.form(x, bracket(y, z));
}

}  // namespace lie

/// Scale of the Cartan 3-form relative to (x,[y,z]) under the evaluation
/// convention used throughout (see docs/conventions.md).
inline Exact cartan_eta_scale() { return Exact(1, 2); }

// ---------------------------------------------------------------------------
// Strongly typed surface.

template <class T>
struct GroupElement {
  const GroupContext* ctx = nullptr;
  Mat<T> m;
  GroupElement() = default;
  GroupElement(const GroupContext& c, Mat<T> mat);  // validates membership
};

template <class T>
struct AlgebraElement {
  const GroupContext* ctx = nullptr;
  Mat<T> m;
  AlgebraElement() = default;
  AlgebraElement(const GroupContext& c, Mat<T> mat);  // validates membership
};

/// Tangent vector base·coord (left trivialization).
template <class T>
struct TangentVec {
  GroupElement<T> base;
  AlgebraElement<T> coord;
};

/// Covector α with α(X) = (coord, θ(X)).
template <class T>
struct Covector {
  GroupElement<T> base;
  AlgebraElement<T> coord;
};

template <class T>
AlgebraElement<T> ad(const AlgebraElement<T>& x, const AlgebraElement<T>& y) {
  return {*x.ctx, lie::bracket(x.m, y.m)};
}

template <class T>
AlgebraElement<T> Ad(const GroupElement<T>& g, const AlgebraElement<T>& x) {
  return {*x.ctx, lie::adjoint(g.m, x.m)};
}

template <class T>
Covector<T> sigma(const GroupElement<T>& g, const AlgebraElement<T>& xi) {
  return {g, AlgebraElement<T>(*g.ctx, lie::sigma(*g.ctx, g.m, xi.m))};
}

template <class T>
AlgebraElement<T> sigma_adjoint(const Covector<T>& alpha) {
  return {*alpha.base.ctx, lie::sigma_adjoint(*alpha.base.ctx, alpha.base.m, alpha.coord.m)};
}

template <class T>
TangentVec<T> conj_field(const GroupElement<T>& g, const AlgebraElement<T>& xi) {
  return {g, AlgebraElement<T>(*g.ctx, lie::conj_field(g.m, xi.m))};
}

/// ρ^∨: the unique ζ with (ζ, ξ) = (v, ρ(ξ)) for every ξ, obtained by solving
/// the Gram system in the basis of g.
template <class T>
AlgebraElement<T> rho_adjoint(const TangentVec<T>& v) {
  const GroupContext& ctx = *v.base.ctx;
  Vec<T> rhs;
  rhs.reserve(ctx.dim_g());
  for (const auto& e : ctx.basis())
    rhs.push_back(ctx.form(v.coord.m, lie::conj_field(v.base.m, cast_matrix<T>(e))));
  const Vec<T> z = cast_matrix<T>(ctx.metric_inverse()) * rhs;
  return {ctx, ctx.from_coords(z)};
}

/// b = t·u with t diagonal and u unit upper triangular.
template <class T>
std::pair<GroupElement<T>, GroupElement<T>> borel_decompose(const GroupElement<T>& b);

/// Nonconstant characteristic-polynomial invariants e_1..e_{n-1} (SL) or
/// e_1..e_n (GL): the computable model of the Chevalley map G → T/W.
template <class T>
Vec<T> chevalley(const GroupContext& ctx, const Mat<T>& g);
/// Coefficients c[0..n] of det(λ − g), c[n] = 1.
template <class T>
Vec<T> characteristic_coefficients(const Mat<T>& g);

/// χ ∈ ∧³g: components χ^{ijk} = η(e^i, e^j, e^k) for the metric-dual basis.
std::vector<Exact> chi_components(const GroupContext& ctx);
/// χ(α, β, γ) for covectors given in dual-basis coordinates.
Exact chi_pairing(const GroupContext& ctx, const Vec<Exact>& a, const Vec<Exact>& b,
                  const Vec<Exact>& c);

/// Permutation matrices of S_n; for SL odd permutations have their first
/// column negated so that every representative has determinant 1.
struct WeylGroup {
  std::vector<std::vector<int>> permutations;
  std::vector<Mat<Exact>> representatives;
  std::size_t order() const { return permutations.size(); }
  /// Index of the element whose permutation is w, or order() if absent.
  std::size_t find(const std::vector<int>& w) const;
};

WeylGroup weyl_group(const GroupContext& ctx);
/// Permutation underlying a monomial matrix; empty if m is not monomial.
std::vector<int> monomial_permutation(const Mat<Exact>& m);

}  // namespace qpslab

#include "qpslab/group_impl.hpp"
