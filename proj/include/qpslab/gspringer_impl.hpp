#pragma once

// Template bodies for gspringer.hpp.

#include <array>

namespace qpslab {

namespace detail {

template <class T>
std::string vec_string(const Vec<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_display(v[i]);
  return s + "]";
}

template <class T>
Vec<T> concat(Vec<T> a, const Vec<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Subspace {(k, 0)} of T ⊕ T* for k ranging over s.
template <class T>
Subspace<T> as_tangent(const Subspace<T>& s) {
  const std::size_t d = s.ambient_dim();
  return Subspace<T>::span(vstack(s.basis(), Mat<T>(d, s.dim())));
}

/// Columns spanning T(G×tU) inside T(G×B): all of g and the u directions of b.
inline Mat<Exact> leaf_directions(const GroupContext& ctx) {
  const std::size_t dg = ctx.dim_g(), db = ctx.dim_b(), du = ctx.dim_u();
  Mat<Exact> e(dg + db, dg + du);
  for (std::size_t i = 0; i < dg; ++i) e(i, i) = Exact(1);
  for (std::size_t k = 0; k < du; ++k) e(dg + ctx.u_range().begin + k, dg + k) = Exact(1);
  return e;
}

/// Coordinates of each column of m in the (independent) columns of basis.
template <class T>
Mat<T> coordinates_in(const Mat<T>& basis, const Mat<T>& m, bool& ok) {
  Mat<T> out(basis.cols(), m.cols());
  ok = true;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Vec<T> c;
    if (!solve_particular(basis, m.col(j), c)) {
      ok = false;
      return out;
    }
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

/// Matrices of σ^∨ (covector dual coords at m → g coords) and
/// ρ^∨ (tangent coords at m → g coords) for the group G.
template <class T>
std::pair<Mat<T>, Mat<T>> sigma_rho_adjoints(const GroupContext& ctx, const Mat<T>& m) {
  const std::size_t d = ctx.dim_g();
  const Mat<T> mg = cast_matrix<T>(ctx.metric());
  const Mat<T> mgi = cast_matrix<T>(ctx.metric_inverse());
  Mat<T> sig(d, d), rho(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const Mat<T> e = cast_matrix<T>(ctx.basis_element(k));
    const Vec<T> s = sigma_dual(ctx, m, e);
    const Vec<T> r = ctx.coords(lie::conj_field(m, e));
    for (std::size_t i = 0; i < d; ++i) {
      sig(i, k) = s[i];
      rho(i, k) = r[i];
    }
  }
  return {mgi * sig.transpose() * mgi, mgi * rho.transpose() * mg};
}

}  // namespace detail

template <class T>
std::vector<CheckLine> theorem1_check(const GroupContext& ctx, const GSPoint<T>& p) {
  std::vector<CheckLine> out;
  const std::size_t dg = ctx.dim_g();
  const auto chart = quotient_chart(ctx, p);
  const DiracFiber<T> jl = restrict_to_GxB(ctx, p);
  const DiracFiber<T> l = pushforward(jl, chart.q, p.point());
  const Mat<T> m = mu(p);
  const Mat<T> jmu = mu_jacobian(ctx, p, chart);

  {
    const auto v = is_lagrangian(l);
    const bool ok = v.ok && l.dim() == dg;
    out.push_back({"lagrangian", ok, ok ? "" : v.witness + " (dim " + std::to_string(l.dim()) + ")"});
  }
  {
    const auto pushed = pushforward(l, jmu, Point<T>{m});
    const auto target = cartan_dirac(ctx, m);
    const bool ok = fiber_equal(pushed, target);
    out.push_back({"f-dirac", ok,
                   ok ? "" : "mu_* fiber dim " + std::to_string(pushed.dim()) + ", intersection with Cartan-Dirac dim " +
                                 std::to_string(intersect(pushed.space, target.space).dim())});
  }
  {
    const auto inter = intersect(l.space, detail::as_tangent(kernel(jmu)));
    const bool ok = inter.dim() == 0;
    out.push_back({"kernel", ok, ok ? "" : "ker dmu meets the fiber: " + detail::vec_string(inter.vector(0))});
  }
  {
    const Mat<T> fields = action_fields(ctx, p, chart);
    bool ok = true;
    std::string witness;
    for (std::size_t k = 0; k < dg && ok; ++k) {
      const Vec<T> cov = jmu.transpose() * sigma_dual(ctx, m, cast_matrix<T>(ctx.basis_element(k)));
      const Vec<T> e = detail::concat(fields.col(k), cov);
      if (!l.space.contains(e)) {
        ok = false;
        witness = "basis element " + std::to_string(k) + ": " + detail::vec_string(e);
      }
    }
    out.push_back({"action", ok, witness});
  }
  {
    const auto conj = conjugate_map(gxb_space(ctx));
    const auto lhs = pushforward(pushforward(jl, chart.q, p.point()), jmu, Point<T>{m});
    const auto rhs = pushforward(jl, conj, p.point());
    const bool ok1 = fiber_equal(lhs, rhs);
    // Φ_* j^* L_D = i^* Φ_* L_D with Φ restricted to G×B.
    const auto phi_gxb = phi_map(gxb_space(ctx));
    const auto phi_d = phi_map(double_space(ctx));
    const Point<T> dp{p.g, p.b};
    const auto ld = graph_two_form(TwoFormFiber<T>{dp, omega_double_matrix(ctx, p.g, p.b)});
    const auto left = pushforward(jl, phi_gxb, p.point());
    const Point<T> img = phi_gxb.eval(p.point());
    const auto right = pullback(pushforward(ld, phi_d, dp),
                                jacobian(inclusion_map(gxb_space(ctx), double_space(ctx)), img), img);
    const bool ok2 = fiber_equal(left, right);
    out.push_back({"commutation", ok1 && ok2,
                   ok1 && ok2 ? "" : std::string(ok1 ? "" : "mu_* q_* != (p Phi)_*; ") + (ok2 ? "" : "Phi_* j^* != i^* Phi_*")});
  }
  return out;
}

template <class T>
std::vector<CheckLine> theorem2_check(const GroupContext& ctx, const GSPoint<T>& p) {
  std::vector<CheckLine> out;
  const auto chart = quotient_chart(ctx, p);
  const DiracFiber<T> l = quotient_fiber(ctx, p, chart);
  const Subspace<T> leaf = tangent_projection(l);
  const Subspace<T> image = Subspace<T>::span(chart.q * cast_matrix<T>(detail::leaf_directions(ctx)));
  const std::size_t expected = ctx.dim_g() - ctx.rank();
  const bool ok = equal(leaf, image) && leaf.dim() == expected;
  out.push_back({"leaf-tangent", ok,
                 ok ? "" : "projection dim " + std::to_string(leaf.dim()) + ", q_*T(GxtU) dim " +
                               std::to_string(image.dim()) + ", expected " + std::to_string(expected)});
  const Mat<T> jl = jacobian(lambda_map(ctx), p.point()) * chart.complement;
  const bool ok2 = (jl * leaf.basis()).is_zero();
  out.push_back({"lambda-constant", ok2, ok2 ? "" : "dlambda does not vanish on the leaf tangent"});
  return out;
}

template <class T>
bool representative_independence(const GroupContext& ctx, const GSPoint<T>& p, const Mat<T>& h) {
  const GSPoint<T> p2 = act(p, h);
  const auto c1 = quotient_chart(ctx, p);
  const auto c2 = quotient_chart(ctx, p2);
  const Mat<T> ident = c2.q * jacobian(right_action_map(ctx, h), p.point()) * c1.complement;
  const auto moved = pushforward(quotient_fiber(ctx, p, c1), ident, p2.point());
  return fiber_equal(moved, quotient_fiber(ctx, p2, c2));
}

template <class T>
LeafForm<T> leaf_two_form(const GroupContext& ctx, const GSPoint<T>& p) {
  const DiracFiber<T> l = quotient_fiber(ctx, p);
  const Mat<T> tan = tangent_block(l);
  const Mat<T> cov = covector_block(l);
  const Mat<T> s = column_basis(tan);
  const std::size_t k = s.cols();
  std::vector<Vec<T>> alphas;
  for (std::size_t i = 0; i < k; ++i) {
    Vec<T> c;
    if (!solve_particular(tan, s.col(i), c)) throw std::runtime_error("fiber is not graphical over the leaf");
    alphas.push_back(cov * c);
  }
  Mat<T> w(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) w(j, i) = dot(alphas[i], s.col(j));
  return {s, TwoFormFiber<T>{p.point(), w}};
}

template <class T>
std::vector<CheckLine> leaf_form_check(const GroupContext& ctx, const GSPoint<T>& p,
                                       const std::vector<std::array<Vec<T>, 3>>& triples) {
  std::vector<CheckLine> out;
  const LeafForm<T> leaf = leaf_two_form(ctx, p);
  const Mat<T>& w = leaf.form.w;
  out.push_back({"skew", is_skew(w), is_skew(w) ? "" : "leaf form is not skew"});

  const auto chart = quotient_chart(ctx, p);
  const Mat<T> jmu = mu_jacobian(ctx, p, chart);
  const Mat<T> m = mu(p);
  {
    bool ok = true;
    const Mat<T> fields = detail::coordinates_in(leaf.basis, action_fields(ctx, p, chart), ok);
    std::string witness = ok ? "" : "action field leaves the leaf";
    const Mat<T> pushed = jmu * leaf.basis;
    for (std::size_t k = 0; ok && k < ctx.dim_g(); ++k) {
      const Vec<T> lhs = w * fields.col(k);
      const Vec<T> rhs = pushed.transpose() * sigma_dual(ctx, m, cast_matrix<T>(ctx.basis_element(k)));
      if (!approx_equal(lhs, rhs)) {
        ok = false;
        witness = "basis element " + std::to_string(k);
      }
    }
    out.push_back({"moment", ok, witness});
  }

  // ω_D restricted to G×tU, as a family on the leaf space.
  const Mat<Exact> e = detail::leaf_directions(ctx);
  const Mat<Exact> incl = [&] {
    const std::size_t dg = ctx.dim_g();
    Mat<Exact> sel(2 * dg, e.cols());
    for (std::size_t c = 0; c < e.cols(); ++c) {
      for (std::size_t i = 0; i < dg; ++i) sel(i, c) = e(i, c);
      for (std::size_t i = 0; i < ctx.dim_b(); ++i) sel(dg + i, c) = e(dg + i, c);
    }
    return sel;
  }();
  auto restricted = [&ctx, incl](const auto& q) {
    using S = typename std::decay_t<decltype(q)>::value_type::value_type;
    const Mat<S> sel = cast_matrix<S>(incl);
    return sel.transpose() * omega_double_matrix(ctx, q[0], q[1]) * sel;
  };
  {
    bool ok = true;
    const Mat<T> pulled = detail::coordinates_in(leaf.basis, chart.q * cast_matrix<T>(e), ok);
    ok = ok && approx_equal(pulled.transpose() * w * pulled, restricted(p.point()));
    out.push_back({"pullback", ok, ok ? "" : "q^* omega_S differs from omega_D on GxtU"});
  }
  {
    const ProductSpace space = leaf_space(ctx);
    const auto mq = conjugate_map(space);
    bool ok = true;
    std::string witness;
    for (std::size_t t = 0; ok && t < triples.size(); ++t) {
      const auto& [x, y, z] = triples[t];
      const T lhs = d_two_form(space, restricted, p.point(), x, y, z);
      const T rhs = -pullback_eta(mq, p.point(), x, y, z);
      if (!approx_equal(lhs, rhs)) {
        ok = false;
        witness = "triple " + std::to_string(t) + ": d omega = " + to_display(lhs) + ", -mu^* eta = " + to_display(rhs);
      }
    }
    out.push_back({"closure", ok, witness});
  }
  return out;
}

template <class T>
BivectorResult<T> reconstruct_bivector(const GroupContext& ctx, const GSPoint<T>& p) {
  const std::size_t d = ctx.dim_g();
  const auto chart = quotient_chart(ctx, p);
  const DiracFiber<T> l = quotient_fiber(ctx, p, chart);
  const Mat<T> m = mu(p);
  const Mat<T> jmu = mu_jacobian(ctx, p, chart);
  const Mat<T> rm = action_fields(ctx, p, chart);
  const auto [sv, rv] = detail::sigma_rho_adjoints(ctx, m);
  const Mat<T> c = Mat<T>::identity(d) - rm * rv * jmu * from_exact<T>(Exact(1, 4));
  const Mat<T> target = -(sv.transpose() * rm.transpose());

  // Unknown coefficients y of the fiber basis: cov·y = Cᵀα and dμ·tan·y = target·α.
  const Mat<T> tan = tangent_block(l);
  const Mat<T> cov = covector_block(l);
  const Mat<T> system = vstack(cov, jmu * tan);
  BivectorResult<T> r;
  r.pi.base = p.point();
  r.pi.p = Mat<T>(d, d);
  bool solved = true;
  for (std::size_t k = 0; k < d; ++k) {
    Vec<T> alpha(d, T(0));
    alpha[k] = T(1);
    Vec<T> y;
    if (!solve_particular(system, detail::concat(c.transpose() * alpha, target * alpha), y)) {
      solved = false;
      break;
    }
    const Vec<T> x = tan * y;
    for (std::size_t i = 0; i < d; ++i) r.pi.p(i, k) = x[i];
  }
  r.checks.push_back({"solvable", solved, solved ? "" : "no X_alpha for some covector"});
  if (!solved) return r;
  // Uniqueness: a second solution would differ by (X, 0) ∈ L with dμ X = 0.
  const bool unique = intersect(l.space, detail::as_tangent(kernel(jmu))).dim() == 0;
  r.checks.push_back({"unique", unique, unique ? "" : "ker dmu meets the fiber"});
  const bool skew = is_skew(r.pi.p);
  r.checks.push_back({"skew", skew, skew ? "" : "pi is not skew"});
  const bool mocond = approx_equal(r.pi.p * jmu.transpose(), rm * sv);
  r.checks.push_back({"moment", mocond, mocond ? "" : "pi^# mu^* != rho sigma^v"});
  // {(π^#α + ξ_M, C^*α + μ^*σ(ξ))} spans L.
  Mat<T> gens(2 * d, 2 * d);
  for (std::size_t k = 0; k < d; ++k) {
    const Vec<T> sig = jmu.transpose() * sigma_dual(ctx, m, cast_matrix<T>(ctx.basis_element(k)));
    for (std::size_t i = 0; i < d; ++i) {
      gens(i, k) = r.pi.p(i, k);
      gens(d + i, k) = c(k, i);
      gens(i, d + k) = rm(i, k);
      gens(d + i, d + k) = sig[i];
    }
  }
  const bool graph = equal(Subspace<T>::span(gens), l.space);
  r.checks.push_back({"graph", graph, graph ? "" : "generated subspace differs from the fiber"});
  return r;
}

}  // namespace qpslab
