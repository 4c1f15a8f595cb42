#pragma once

#include <string>
#include <utility>

#include "qpslab/diffcalc.hpp"

namespace qpslab {

/// Subspace of T ⊕ T* at a point, coordinates (tangent | covector) with the
/// tangent block first; covectors in dual-basis coordinates.
template <class T>
struct DiracFiber {
  Point<T> base;
  std::size_t d = 0;
  Subspace<T> space;

  DiracFiber() = default;
  DiracFiber(Point<T> b, std::size_t tangent_dim, Subspace<T> s)
      : base(std::move(b)), d(tangent_dim), space(std::move(s)) {
    if (space.ambient_dim() != 2 * d) throw std::invalid_argument("Dirac fiber ambient must be 2d");
  }
  std::size_t dim() const { return space.dim(); }
};

template <class T>
struct TwoFormFiber {
  Point<T> base;
  Mat<T> w;  // w(i,j) = ω(e_i, e_j)
};

template <class T>
struct BivectorFiber {
  Point<T> base;
  Mat<T> p;  // p(i,j) = π(e^i, e^j); π^#α = p·α
};

template <class T>
bool is_skew(const Mat<T>& m) {
  return m.square() && approx_equal(m.transpose(), -m);
}

/// ⟨(x,α),(y,β)⟩ = α(y) + β(x) on concatenated coordinates.
template <class T>
T pairing(std::size_t d, const Vec<T>& e1, const Vec<T>& e2) {
  if (e1.size() != 2 * d || e2.size() != 2 * d) throw std::invalid_argument("pairing: length mismatch");
  T s(0);
  for (std::size_t i = 0; i < d; ++i) s += e1[d + i] * e2[i] + e2[d + i] * e1[i];
  return s;
}

/// Same pairing with covectors given by metric coordinates: (a,y) + (b,x).
template <class T>
T pairing(const GroupContext& ctx, const Mat<T>& x, const Mat<T>& a, const Mat<T>& y, const Mat<T>& b) {
  return ctx.form(a, y) + ctx.form(b, x);
}

/// Matrix of the pairing on T ⊕ T*.
template <class T>
Mat<T> pairing_matrix(std::size_t d) {
  Mat<T> m(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, d + i) = T(1);
    m(d + i, i) = T(1);
  }
  return m;
}

struct LagrangianVerdict {
  bool ok = false;
  std::string witness;
  explicit operator bool() const { return ok; }
};

template <class T>
LagrangianVerdict is_lagrangian(const DiracFiber<T>& f) {
  const Mat<T>& b = f.space.basis();
  const Mat<T> gram = b.transpose() * pairing_matrix<T>(f.d) * b;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = i; j < gram.cols(); ++j)
      if (!is_zero(gram(i, j)))
        return {false, "basis vectors " + std::to_string(i) + "," + std::to_string(j) + " pair to " +
                           to_display(gram(i, j))};
  if (f.dim() != f.d) return {false, "dimension " + std::to_string(f.dim()) + " != " + std::to_string(f.d)};
  return {true, ""};
}

/// L_ω = {(x, ω^♭x)} with ω^♭(x) = ω(·, x), i.e. coordinates W·x.
template <class T>
DiracFiber<T> graph_two_form(const TwoFormFiber<T>& omega) {
  if (!is_skew(omega.w)) throw std::invalid_argument("graph_two_form: form is not skew");
  const std::size_t d = omega.w.rows();
  return {omega.base, d, Subspace<T>::span(vstack(Mat<T>::identity(d), omega.w))};
}

/// L_π = {(π^#α, α)}.
template <class T>
DiracFiber<T> graph_bivector(const BivectorFiber<T>& pi) {
  if (!is_skew(pi.p)) throw std::invalid_argument("graph_bivector: bivector is not skew");
  const std::size_t d = pi.p.rows();
  return {pi.base, d, Subspace<T>::span(vstack(pi.p, Mat<T>::identity(d)))};
}

template <class T>
Mat<T> tangent_block(const DiracFiber<T>& f) {
  return f.space.basis().block(0, 0, f.d, f.dim());
}
template <class T>
Mat<T> covector_block(const DiracFiber<T>& f) {
  return f.space.basis().block(f.d, 0, f.d, f.dim());
}

template <class T>
Subspace<T> tangent_projection(const DiracFiber<T>& f) {
  return Subspace<T>::span(tangent_block(f));
}

template <class T>
bool fiber_equal(const DiracFiber<T>& a, const DiracFiber<T>& b) {
  return a.d == b.d && equal(a.space, b.space);
}

/// f^*L = {(X, Jᵀα) : (JX, α) ∈ L} for the Jacobian J of f at the base.
template <class T>
DiracFiber<T> pullback(const DiracFiber<T>& target, const Mat<T>& jac, Point<T> base) {
  const std::size_t dn = target.d;
  const std::size_t dm = jac.cols();
  if (jac.rows() != dn) throw std::invalid_argument("pullback: Jacobian shape mismatch");
  // Unknowns (X, c): J·X − L_tan·c = 0.
  const auto k = kernel(hstack(jac, -tangent_block(target)));
  Mat<T> gens(2 * dm, k.dim());
  const Mat<T> lcov = covector_block(target);
  for (std::size_t j = 0; j < k.dim(); ++j) {
    const Vec<T> v = k.vector(j);
    const Vec<T> c(v.begin() + dm, v.end());
    const Vec<T> alpha = jac.transpose() * (lcov * c);
    for (std::size_t i = 0; i < dm; ++i) {
      gens(i, j) = v[i];
      gens(dm + i, j) = alpha[i];
    }
  }
  return {std::move(base), dm, Subspace<T>::span(gens)};
}

/// f_*L = {(JX, α) : (X, Jᵀα) ∈ L}.
template <class T>
DiracFiber<T> pushforward(const DiracFiber<T>& source, const Mat<T>& jac, Point<T> base) {
  const std::size_t dm = source.d;
  const std::size_t dn = jac.rows();
  if (jac.cols() != dm) throw std::invalid_argument("pushforward: Jacobian shape mismatch");
  // Unknowns (c, α): L_cov·c − Jᵀ·α = 0.
  const std::size_t m = source.dim();
  const auto k = kernel(hstack(covector_block(source), -jac.transpose()));
  Mat<T> gens(2 * dn, k.dim());
  const Mat<T> ltan = tangent_block(source);
  for (std::size_t j = 0; j < k.dim(); ++j) {
    const Vec<T> v = k.vector(j);
    const Vec<T> c(v.begin(), v.begin() + m);
    const Vec<T> x = jac * (ltan * c);
    for (std::size_t i = 0; i < dn; ++i) {
      gens(i, j) = x[i];
      gens(dn + i, j) = v[m + i];
    }
  }
  return {std::move(base), dn, Subspace<T>::span(gens)};
}

template <class F, class T>
DiracFiber<T> pullback(const DiracFiber<T>& target, const PointedMap<F>& f, const Point<T>& p) {
  return pullback(target, jacobian(f, p), p);
}

template <class F, class T>
DiracFiber<T> pushforward(const DiracFiber<T>& source, const PointedMap<F>& f, const Point<T>& p) {
  return pushforward(source, jacobian(f, p), f.eval(p));
}

/// Cartan–Dirac fiber at g: span of (ρ(ξ), σ(ξ)) over the basis of g.
template <class T>
DiracFiber<T> cartan_dirac(const GroupContext& ctx, const Mat<T>& g) {
  const std::size_t d = ctx.dim_g();
  Mat<T> gens(2 * d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Mat<T> xi = cast_matrix<T>(ctx.basis_element(j));
    const Vec<T> rho = ctx.coords(lie::conj_field(g, xi));
    const Vec<T> sig = ctx.metric_to_dual(lie::sigma(ctx, g, xi));
    for (std::size_t i = 0; i < d; ++i) {
      gens(i, j) = rho[i];
      gens(d + i, j) = sig[i];
    }
  }
  return {Point<T>{g}, d, Subspace<T>::span(gens)};
}

/// The Cartan–Dirac section e_ξ = (ρ(ξ), σ(ξ)) as a generic callable.
template <class T>
auto cartan_dirac_section(const GroupContext& ctx, const Vec<T>& xi_coords) {
  return [&ctx, xi_coords](const auto& p) {
    using S = typename std::decay_t<decltype(p[0])>::value_type;
    Vec<S> c;
    for (const auto& v : xi_coords) c.push_back(lift_scalar<S>(v));
    const Mat<S> xi = ctx.from_coords(c);
    return std::make_pair(ctx.coords(lie::conj_field(p[0], xi)), ctx.metric_to_dual(lie::sigma(ctx, p[0], xi)));
  };
}

/// η-twisted Dorfman bracket of two sections p ↦ (X(p), α(p)):
/// ([X,Y], L_Xβ − ι_Y dα + η(Y, X, ·)). `eta` is (p, x, y, z) ↦ scalar.
template <class F1, class F2, class FE, class T>
std::pair<Vec<T>, Vec<T>> dorfman(const ProductSpace& space, const F1& s1, const F2& s2, const FE& eta,
                                  const Point<T>& p) {
  const auto [x, alpha] = s1(p);
  const auto [y, beta] = s2(p);
  const std::size_t d = space.dim();
  const auto [dx_y, dx_beta] = directional(space, s2, p, x);
  const auto [dy_x, dy_alpha] = directional(space, s1, p, y);
  Vec<T> tangent = dx_y - dy_x + space.bracket(x, y);
  Vec<T> cov(d, T(0));
  const bool twisted = !space.ctx().hooks().dorfman_eta;
  for (std::size_t j = 0; j < d; ++j) {
    const Vec<T> e = space.template unit<T>(j);
    const auto [dj_x, dj_alpha] = directional(space, s1, p, e);
    const T lie_beta = dx_beta[j] + dot(beta, dj_x) - dot(beta, space.bracket(x, e));
    const T contract = dy_alpha[j] - dot(dj_alpha, y) - dot(alpha, space.bracket(y, e));
    cov[j] = lie_beta - contract;
    if (twisted) cov[j] += eta(p, y, x, e);
  }
  return {std::move(tangent), std::move(cov)};
}

/// η for the Cartan 3-form(s) on the Group factors, ignoring the base point.
inline auto cartan_eta_family(const ProductSpace& space) {
  return [space](const auto& /*p*/, const auto& x, const auto& y, const auto& z) {
    return cartan_eta_on(space, x, y, z);
  };
}

}  // namespace qpslab
