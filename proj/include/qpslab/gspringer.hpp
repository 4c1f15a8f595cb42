#pragma once

#include <string>
#include <vector>

#include "qpslab/dirac.hpp"

namespace qpslab {

template <class T>
struct DoublePoint {
  Mat<T> a, b;
  Point<T> point() const { return {a, b}; }
};

/// Representative (g, b) of [g:b] ∈ G×_B B.
template <class T>
struct GSPoint {
  Mat<T> g, b;
  Point<T> point() const { return {g, b}; }
};

template <class T>
GSPoint<T> make_gs_point(const GroupContext& ctx, Mat<T> g, Mat<T> b) {
  if (!ctx.in_group(g)) throw std::invalid_argument("g is not in " + ctx.name());
  if (!ctx.in_borel(b)) throw std::invalid_argument("b is not in the Borel subgroup");
  return {std::move(g), std::move(b)};
}

/// [g₁:b₁] = [g₂:b₂] iff h = g₂⁻¹g₁ ∈ B and b₂ = h b₁ h⁻¹.
template <class T>
bool equivalent(const GroupContext& ctx, const GSPoint<T>& p, const GSPoint<T>& q) {
  const Mat<T> h = inverse(q.g) * p.g;
  if (!ctx.in_borel(h)) return false;
  return approx_equal(q.b, h * p.b * inverse(h));
}

/// The right B-action h·(g,b) = (gh⁻¹, hbh⁻¹) on representatives.
template <class T>
GSPoint<T> act(const GSPoint<T>& p, const Mat<T>& h) {
  const Mat<T> hi = inverse(h);
  return {p.g * hi, h * p.b * hi};
}

// ---------------------------------------------------------------------------
// Spaces and maps.

inline ProductSpace double_space(const GroupContext& ctx) {
  return ProductSpace(ctx, {FactorKind::Group, FactorKind::Group});
}
inline ProductSpace gxb_space(const GroupContext& ctx) {
  return ProductSpace(ctx, {FactorKind::Group, FactorKind::Borel});
}
/// G × tU with the tangent directions g ⊕ u.
inline ProductSpace leaf_space(const GroupContext& ctx) {
  return ProductSpace(ctx, {FactorKind::Group, FactorKind::Unipotent});
}
inline ProductSpace group_space(const GroupContext& ctx) { return ProductSpace(ctx, {FactorKind::Group}); }
inline ProductSpace torus_space(const GroupContext& ctx) { return ProductSpace(ctx, {FactorKind::Torus}); }

/// Φ(a,b) = (aba⁻¹, b⁻¹) on a two-factor space (the double or G×B).
inline auto phi_map(const ProductSpace& domain) {
  return make_map("phi", domain, domain, [](const auto& p) {
    using P = std::decay_t<decltype(p)>;
    return P{p[0] * p[1] * inverse(p[0]), inverse(p[1])};
  });
}

/// (a,b) ↦ aba⁻¹ from a two-factor space into G (μ∘q on G×B).
inline auto conjugate_map(const ProductSpace& domain) {
  return make_map("conjugate", domain, group_space(domain.ctx()), [](const auto& p) {
    using P = std::decay_t<decltype(p)>;
    return P{p[0] * p[1] * inverse(p[0])};
  });
}

/// Identity on points, between spaces with nested tangent algebras.
inline auto inclusion_map(const ProductSpace& domain, const ProductSpace& codomain) {
  return make_map("inclusion", domain, codomain, [](const auto& p) { return p; });
}

inline auto first_projection(const ProductSpace& domain) {
  return make_map("projection", domain, group_space(domain.ctx()), [](const auto& p) {
    using P = std::decay_t<decltype(p)>;
    return P{p[0]};
  });
}

/// (g,b) ↦ diagonal part of b.
inline auto lambda_map(const GroupContext& ctx) {
  return make_map("lambda", gxb_space(ctx), torus_space(ctx), [](const auto& p) {
    using P = std::decay_t<decltype(p)>;
    auto t = p[1];
    for (std::size_t i = 0; i < t.rows(); ++i)
      for (std::size_t j = 0; j < t.cols(); ++j)
        if (i != j) t(i, j) = 0;
    return P{t};
  });
}

/// (g₁,g₂)·(a,b) = (g₁ag₂⁻¹, g₂bg₂⁻¹).
template <class T>
auto double_action_map(const GroupContext& ctx, const Mat<T>& g1, const Mat<T>& g2) {
  return make_map("double-action", double_space(ctx), double_space(ctx), [g1, g2](const auto& p) {
    using P = std::decay_t<decltype(p)>;
    using S = typename P::value_type::value_type;
    const Mat<S> l = lift_matrix<S>(g1);
    const Mat<S> r = lift_matrix<S>(g2);
    const Mat<S> ri = lift_matrix<S>(inverse(g2));
    return P{l * p[0] * ri, r * p[1] * ri};
  });
}

/// h·(g,b) = (gh⁻¹, hbh⁻¹) on G×B.
template <class T>
auto right_action_map(const GroupContext& ctx, const Mat<T>& h) {
  return make_map("right-action", gxb_space(ctx), gxb_space(ctx), [h](const auto& p) {
    using P = std::decay_t<decltype(p)>;
    using S = typename P::value_type::value_type;
    const Mat<S> hh = lift_matrix<S>(h);
    const Mat<S> hi = lift_matrix<S>(inverse(h));
    return P{p[0] * hi, hh * p[1] * hi};
  });
}

// ---------------------------------------------------------------------------
// The internal fusion double.

/// Matrix W(i,j) = ω(e_i, e_j) on g ⊕ g at (a,b). With A the matrix of Ad_b
/// and M the Gram matrix, K = M·A and the blocks over (x, y) are
///   W_xx = ½(Kᵀ − K), W_xy = ½(K + M), W_yx = −½(Kᵀ + M), W_yy = 0.
template <class S>
Mat<S> omega_double_matrix(const GroupContext& ctx, const Mat<S>& a, const Mat<S>& b) {
  (void)a;
  const std::size_t d = ctx.dim_g();
  const Mat<S> bi = inverse(b);
  Mat<S> adb(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vec<S> c = ctx.coords(b * cast_matrix<S>(ctx.basis_element(j)) * bi);
    for (std::size_t i = 0; i < d; ++i) adb(i, j) = c[i];
  }
  const Mat<S> m = cast_matrix<S>(ctx.metric());
  const Mat<S> k = m * adb;
  const Mat<S> kt = k.transpose();
  const S half = from_exact<S>(Exact(1, 2));
  Mat<S> w(2 * d, 2 * d);
  w.set_block(0, 0, (kt - k) * half);
  w.set_block(0, d, (k + m) * half);
  w.set_block(d, 0, -((kt + m) * half));
  if (ctx.hooks().omega_sign) return -w;
  return w;
}

inline auto omega_double_family(const GroupContext& ctx) {
  return [&ctx](const auto& p) { return omega_double_matrix(ctx, p[0], p[1]); };
}

template <class T>
TwoFormFiber<T> omega_double(const GroupContext& ctx, const DoublePoint<T>& p) {
  return {p.point(), omega_double_matrix(ctx, p.a, p.b)};
}

template <class T>
std::pair<Mat<T>, Mat<T>> phi(const DoublePoint<T>& p) {
  return {p.a * p.b * inverse(p.a), inverse(p.b)};
}

/// Generating field of (ξ₁, ξ₂) on the double, left-trivialized:
/// (−Ad_{a⁻¹}ξ₁ + ξ₂, ξ₂ − Ad_{b⁻¹}ξ₂).
template <class T>
Vec<T> rho_double(const GroupContext& ctx, const Mat<T>& a, const Mat<T>& b, const Mat<T>& xi1,
                  const Mat<T>& xi2) {
  const Vec<T> x = ctx.coords(xi2 - lie::adjoint_inv(a, xi1));
  const Vec<T> y = ctx.coords(xi2 - lie::adjoint_inv(b, xi2));
  Vec<T> out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

/// σ(ξ) at m in dual-basis coordinates.
template <class T>
Vec<T> sigma_dual(const GroupContext& ctx, const Mat<T>& m, const Mat<T>& xi) {
  return ctx.metric_to_dual(lie::sigma(ctx, m, xi));
}

/// ω^♭(ρ(ξ₁,ξ₂)) = Φ^*(σ(ξ₁) ⊕ σ(ξ₂)).
template <class T>
bool moment_condition_check(const GroupContext& ctx, const DoublePoint<T>& p, const Mat<T>& xi1,
                            const Mat<T>& xi2) {
  const Mat<T> w = omega_double_matrix(ctx, p.a, p.b);
  const auto [m1, m2] = phi(p);
  Vec<T> sig = sigma_dual(ctx, m1, xi1);
  const Vec<T> s2 = sigma_dual(ctx, m2, xi2);
  sig.insert(sig.end(), s2.begin(), s2.end());
  const Mat<T> j = jacobian(phi_map(double_space(ctx)), p.point());
  return approx_equal(w * rho_double(ctx, p.a, p.b, xi1, xi2), j.transpose() * sig);
}

/// Product of two fibers on M₁ × M₂ (tangent blocks first, then covectors).
template <class T>
DiracFiber<T> product_fiber(const DiracFiber<T>& f1, const DiracFiber<T>& f2) {
  const std::size_t d1 = f1.d, d2 = f2.d;
  Mat<T> gens(2 * (d1 + d2), f1.dim() + f2.dim());
  const Mat<T>& b1 = f1.space.basis();
  const Mat<T>& b2 = f2.space.basis();
  for (std::size_t j = 0; j < f1.dim(); ++j)
    for (std::size_t i = 0; i < d1; ++i) {
      gens(i, j) = b1(i, j);
      gens(d1 + d2 + i, j) = b1(d1 + i, j);
    }
  for (std::size_t j = 0; j < f2.dim(); ++j)
    for (std::size_t i = 0; i < d2; ++i) {
      gens(d1 + i, f1.dim() + j) = b2(i, j);
      gens(2 * d1 + d2 + i, f1.dim() + j) = b2(d2 + i, j);
    }
  Point<T> base = f1.base;
  base.insert(base.end(), f2.base.begin(), f2.base.end());
  return {std::move(base), d1 + d2, Subspace<T>::span(gens)};
}

// ---------------------------------------------------------------------------
// Restriction to G×B and the quotient G×_B B.

/// j^*L_D: the graph of the double form restricted to T(G×B).
template <class T>
DiracFiber<T> restrict_to_GxB(const GroupContext& ctx, const GSPoint<T>& p) {
  if (!ctx.in_borel(p.b)) throw std::invalid_argument("restrict_to_GxB: b is not in B");
  const Mat<T> j = jacobian(inclusion_map(gxb_space(ctx), double_space(ctx)), p.point());
  const Mat<T> w = omega_double_matrix(ctx, p.g, p.b);
  return graph_two_form(TwoFormFiber<T>{p.point(), j.transpose() * w * j});
}

/// ρ_D(0, ξ) for ξ ∈ b at (g,b), in G×B coordinates.
template <class T>
Vec<T> rho_b_gxb(const GroupContext& ctx, const GSPoint<T>& p, const Mat<T>& xi) {
  const Vec<T> x = ctx.coords(xi);
  const Vec<T> y = ctx.coords_in(xi - lie::adjoint_inv(p.b, xi), ctx.b_range());
  Vec<T> out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

struct RegactResult {
  std::size_t dim = 0;
  std::size_t expected = 0;
  bool equals_rho_u = false;
  bool passed() const { return dim == expected && equals_rho_u; }
};

/// dim(ρ_D(0⊕b) ⊕ 0 ∩ j^*L_D), and whether the intersection is ρ_D(0⊕u) ⊕ 0.
template <class T>
RegactResult regact_check(const GroupContext& ctx, const GSPoint<T>& p) {
  const DiracFiber<T> f = restrict_to_GxB(ctx, p);
  const std::size_t d = f.d;
  auto lifted = [&](BasisRange r) {
    Mat<T> m(2 * d, r.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Vec<T> v = rho_b_gxb(ctx, p, cast_matrix<T>(ctx.basis_element(r.begin + k)));
      for (std::size_t i = 0; i < d; ++i) m(i, k) = v[i];
    }
    return Subspace<T>::span(m);
  };
  const auto inter = intersect(f.space, lifted(ctx.b_range()));
  RegactResult r;
  r.dim = inter.dim();
  r.expected = ctx.dim_u();
  r.equals_rho_u = equal(inter, lifted(ctx.u_range()));
  return r;
}

/// Linear chart of T_{[g:b]}G̃ at a representative: the vertical space V of
/// the B-action, the complement spanned by (u⁻, 0) and (0, b), and the
/// projection q_* along V onto the complement coordinates.
template <class T>
struct QuotientChart {
  Mat<T> vertical;
  Mat<T> complement;
  Mat<T> q;
};

template <class T>
QuotientChart<T> quotient_chart(const GroupContext& ctx, const GSPoint<T>& p) {
  const std::size_t dg = ctx.dim_g(), db = ctx.dim_b();
  QuotientChart<T> c;
  c.vertical = Mat<T>(dg + db, db);
  for (std::size_t k = 0; k < db; ++k) {
    const Vec<T> v = rho_b_gxb(ctx, p, cast_matrix<T>(ctx.basis_element(k)));
    for (std::size_t i = 0; i < dg + db; ++i) c.vertical(i, k) = -v[i];
  }
  c.complement = Mat<T>(dg + db, dg);
  std::size_t col = 0;
  for (std::size_t i = ctx.u_minus_range().begin; i < dg; ++i) c.complement(i, col++) = T(1);
  for (std::size_t j = 0; j < db; ++j) c.complement(dg + j, col++) = T(1);
  const Mat<T> inv = inverse(hstack(c.complement, c.vertical));
  c.q = inv.block(0, 0, dg, dg + db);
  return c;
}

/// L_{G̃} = q_* j^* L_D in the chart at the representative.
template <class T>
DiracFiber<T> quotient_fiber(const GroupContext& ctx, const GSPoint<T>& p, const QuotientChart<T>& chart) {
  return pushforward(restrict_to_GxB(ctx, p), chart.q, p.point());
}

template <class T>
DiracFiber<T> quotient_fiber(const GroupContext& ctx, const GSPoint<T>& p) {
  return quotient_fiber(ctx, p, quotient_chart(ctx, p));
}

template <class T>
Mat<T> mu(const GSPoint<T>& p) {
  return p.g * p.b * inverse(p.g);
}

template <class T>
Mat<T> lambda(const GSPoint<T>& p) {
  Mat<T> t(p.b.rows(), p.b.cols());
  for (std::size_t i = 0; i < t.rows(); ++i) t(i, i) = p.b(i, i);
  return t;
}

/// dμ in chart coordinates.
template <class T>
Mat<T> mu_jacobian(const GroupContext& ctx, const GSPoint<T>& p, const QuotientChart<T>& chart) {
  return jacobian(conjugate_map(gxb_space(ctx)), p.point()) * chart.complement;
}

/// Induced action field ρ_M(ξ) = q_*ρ_D(ξ, 0), as columns over the basis of g.
template <class T>
Mat<T> action_fields(const GroupContext& ctx, const GSPoint<T>& p, const QuotientChart<T>& chart) {
  const std::size_t dg = ctx.dim_g(), db = ctx.dim_b();
  Mat<T> lifted(dg + db, dg);
  for (std::size_t k = 0; k < dg; ++k) {
    const Vec<T> v = ctx.coords(-lie::adjoint_inv(p.g, cast_matrix<T>(ctx.basis_element(k))));
    for (std::size_t i = 0; i < dg; ++i) lifted(i, k) = v[i];
  }
  return chart.q * lifted;
}

struct CheckLine {
  std::string id;
  bool passed = false;
  std::string witness;
};

/// Theorem-1 checks at p: Lagrangian of dim G, f-Dirac for μ, ker dμ ∩ L = 0,
/// induced-action membership, and the two commutation identities.
template <class T>
std::vector<CheckLine> theorem1_check(const GroupContext& ctx, const GSPoint<T>& p);

/// Theorem-2 checks at p = [g:tu]: leaf tangent = q_*T(G×tU) with dim G − rank,
/// and dλ annihilates it.
template <class T>
std::vector<CheckLine> theorem2_check(const GroupContext& ctx, const GSPoint<T>& p);

/// Quotient fibers computed from (g,b) and from h·(g,b) agree under the chart
/// identification induced by the action.
template <class T>
bool representative_independence(const GroupContext& ctx, const GSPoint<T>& p, const Mat<T>& h);

/// The presymplectic form on the leaf through p: `basis` spans the leaf tangent
/// (chart coordinates, columns) and w(i,j) = ω_S(s_i, s_j).
template <class T>
struct LeafForm {
  Mat<T> basis;
  TwoFormFiber<T> form;
};

template <class T>
LeafForm<T> leaf_two_form(const GroupContext& ctx, const GSPoint<T>& p);

/// Skewness, restricted moment identity, q^*ω_S = ω_D|_{G×tU}, and
/// dω = −(μ∘q)^*η on the given leaf triples (G×tU coordinates).
template <class T>
std::vector<CheckLine> leaf_form_check(const GroupContext& ctx, const GSPoint<T>& p,
                                       const std::vector<std::array<Vec<T>, 3>>& triples);

template <class T>
struct BivectorResult {
  BivectorFiber<T> pi;
  std::vector<CheckLine> checks;
};

/// π^# from the fiber: X_α with (X_α, C^*α) ∈ L and dμ X_α = −(σ^∨)^*ρ_M^*α.
template <class T>
BivectorResult<T> reconstruct_bivector(const GroupContext& ctx, const GSPoint<T>& p);

template <class T>
bool steinberg_membership(const GroupContext& ctx, const Mat<T>& g, const Mat<T>& t) {
  return approx_equal(chevalley(ctx, g), chevalley(ctx, t));
}

/// Kernel of ξ ↦ (σ_b(ξ), x_j)_j over b at b ∈ B (expected: u).
template <class T>
Subspace<T> lemma_kernel(const GroupContext& ctx, const Mat<T>& b) {
  const std::size_t db = ctx.dim_b();
  Mat<T> m(db, db);
  for (std::size_t i = 0; i < db; ++i) {
    const Mat<T> s = lie::sigma(ctx, b, cast_matrix<T>(ctx.basis_element(i)));
    for (std::size_t j = 0; j < db; ++j) m(j, i) = ctx.form(s, cast_matrix<T>(ctx.basis_element(j)));
  }
  return kernel(m);
}

/// Points of μ⁻¹(g) for regular semisimple g, one per ordering of the
/// eigenvalues. Throws std::domain_error("not regular semisimple").
std::vector<GSPoint<Float>> weyl_fiber_enum(const GroupContext& ctx, const Mat<Float>& g);

}  // namespace qpslab

#include "qpslab/gspringer_impl.hpp"
