#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpslab/gspringer.hpp"
#include "qpslab/random.hpp"

using namespace qpslab;

namespace {

using P = Point<Exact>;

const std::vector<std::string> kGroups{"sl2", "sl3", "gl2"};

GSPoint<Exact> random_gs(const GroupContext& ctx, SplitMix64& rng) {
  return make_gs_point(ctx, random_point(ctx, SampleKind::G, rng).m, random_point(ctx, SampleKind::B, rng).m);
}

bool all_pass(const std::vector<CheckLine>& lines) {
  bool ok = true;
  for (const auto& l : lines) {
    if (!l.passed) MESSAGE(l.id << ": " << l.witness);
    ok = ok && l.passed;
  }
  return ok;
}

Mat<Exact> E(std::size_t n, std::size_t i, std::size_t j) {
  Mat<Exact> m(n, n);
  m(i, j) = Exact(1);
  return m;
}

}  // namespace

TEST_CASE("phi examples and equivariance") {
  const auto ctx = GroupContext::from_name("sl2");
  SplitMix64 rng(1);
  const Mat<Exact> e = Mat<Exact>::identity(2);
  const auto b = random_point(ctx, SampleKind::G, rng).m;
  const auto [x1, x2] = phi(DoublePoint<Exact>{e, b});
  CHECK(x1 == b);
  CHECK(x2 == inverse(b));
  const auto [y1, y2] = phi(DoublePoint<Exact>{b, e});
  CHECK(y1 == e);
  CHECK(y2 == e);
  for (const auto& name : kGroups) {
    const auto c = GroupContext::from_name(name);
    for (int k = 0; k < 10; ++k) {
      const auto a = random_point(c, SampleKind::G, rng).m, bb = random_point(c, SampleKind::G, rng).m;
      const auto g1 = random_point(c, SampleKind::G, rng).m, g2 = random_point(c, SampleKind::G, rng).m;
      const auto [m1, m2] = phi(DoublePoint<Exact>{g1 * a * inverse(g2), g2 * bb * inverse(g2)});
      const auto [n1, n2] = phi(DoublePoint<Exact>{a, bb});
      CHECK(m1 == g1 * n1 * inverse(g1));
      CHECK(m2 == g2 * n2 * inverse(g2));
    }
  }
}

TEST_CASE("double form anchor and axioms") {
  for (const auto& name : kGroups) {
    const auto ctx = GroupContext::from_name(name);
    const std::size_t n = static_cast<std::size_t>(ctx.n());
    const std::size_t dg = ctx.dim_g();
    const auto d = double_space(ctx);
    SplitMix64 rng(2);
    // ω_(e,e)((x1,y1),(x2,y2)) = (x1,y2) − (x2,y1)
    const Mat<Exact> e = Mat<Exact>::identity(n);
    const Mat<Exact> w0 = omega_double_matrix(ctx, e, e);
    for (int k = 0; k < 5; ++k) {
      const auto x1 = random_algebra(ctx, rng).m, y1 = random_algebra(ctx, rng).m;
      const auto x2 = random_algebra(ctx, rng).m, y2 = random_algebra(ctx, rng).m;
      Vec<Exact> u = ctx.coords(x1), v = ctx.coords(x2);
      const Vec<Exact> uy = ctx.coords(y1), vy = ctx.coords(y2);
      u.insert(u.end(), uy.begin(), uy.end());
      v.insert(v.end(), vy.begin(), vy.end());
      CHECK(dot(u, w0 * v) == trace(x1 * y2) - trace(x2 * y1));
      CHECK(moment_condition_check(ctx, DoublePoint<Exact>{e, e}, x1, y1));
    }
    const auto ph = phi_map(d);
    for (int k = 0; k < 5; ++k) {
      const DoublePoint<Exact> p{random_point(ctx, SampleKind::G, rng).m, random_point(ctx, SampleKind::G, rng).m};
      const auto w = omega_double(ctx, p).w;
      CHECK(is_skew(w));
      // (A1) on a basis of g ⊕ g
      for (std::size_t i = 0; i < 2 * dg; ++i) {
        const Mat<Exact> z(n, n);
        const Mat<Exact>& b = ctx.basis_element(i % dg);
        CHECK(moment_condition_check(ctx, p, i < dg ? b : z, i < dg ? z : b));
      }
      // (A2)
      const auto x = random_vector(d.dim(), rng), y = random_vector(d.dim(), rng), z = random_vector(d.dim(), rng);
      CHECK(d_two_form(d, omega_double_family(ctx), p.point(), x, y, z) == -pullback_eta(ph, p.point(), x, y, z));
      // (A3)
      CHECK(kernel(vstack(w, jacobian(ph, p.point()))).dim() == 0);
      // (A4)
      const auto g1 = random_point(ctx, SampleKind::G, rng).m, g2 = random_point(ctx, SampleKind::G, rng).m;
      const auto act = double_action_map(ctx, g1, g2);
      const Mat<Exact> ja = jacobian(act, p.point());
      const P q = act.eval(p.point());
      CHECK(ja.transpose() * omega_double_matrix(ctx, q[0], q[1]) * ja == w);
      // Φ_* L_ω = Cartan-Dirac ⊕ Cartan-Dirac
      const auto pushed = pushforward(graph_two_form(omega_double(ctx, p)), ph, p.point());
      const auto [m1, m2] = phi(p);
      CHECK(fiber_equal(pushed, product_fiber(cartan_dirac(ctx, m1), cartan_dirac(ctx, m2))));
    }
  }
}

TEST_CASE("negative controls on the double") {
  const auto ctx = GroupContext(Family::SL, 2, Exact(1), TestHooks{false, false, true, false});
  SplitMix64 rng(3);
  const DoublePoint<Exact> p{random_point(ctx, SampleKind::G, rng).m, random_point(ctx, SampleKind::G, rng).m};
  bool any_fail = false;
  for (std::size_t i = 0; i < 3; ++i)
    any_fail = any_fail || !moment_condition_check(ctx, p, ctx.basis_element(i), Mat<Exact>(2, 2));
  CHECK(any_fail);
  const auto half = GroupContext(Family::SL, 2, Exact(1), TestHooks{true, false, false, false});
  CHECK(!moment_condition_check(half, p, half.basis_element(1), Mat<Exact>(2, 2)));
}

TEST_CASE("lemma kernel") {
  for (const auto& name : kGroups) {
    const auto ctx = GroupContext::from_name(name);
    SplitMix64 rng(4);
    Mat<Exact> u(ctx.dim_b(), ctx.dim_u());
    for (std::size_t k = 0; k < ctx.dim_u(); ++k) u(ctx.u_range().begin + k, k) = Exact(1);
    for (int k = 0; k < 10; ++k) {
      const auto b = random_point(ctx, SampleKind::B, rng).m;
      CHECK(equal(lemma_kernel(ctx, b), Subspace<Exact>::span(u)));
    }
  }
  const auto bad = GroupContext(Family::SL, 3, Exact(1), TestHooks{false, true, false, false});
  SplitMix64 rng(5);
  CHECK(lemma_kernel(bad, random_point(bad, SampleKind::B, rng).m).dim() != bad.dim_u());
}

TEST_CASE("restriction, regularity of the action and the quotient") {
  for (const auto& name : kGroups) {
    const auto ctx = GroupContext::from_name(name);
    SplitMix64 rng(6);
    for (int k = 0; k < 4; ++k) {
      const auto p = random_gs(ctx, rng);
      const auto f = restrict_to_GxB(ctx, p);
      CHECK(is_lagrangian(f).ok);
      CHECK(f.dim() == ctx.dim_g() + ctx.dim_b());
      const auto r = regact_check(ctx, p);
      CHECK(r.dim == ctx.dim_u());
      CHECK(r.passed());
      const auto chart = quotient_chart(ctx, p);
      CHECK(rank(hstack(chart.complement, chart.vertical)) == ctx.dim_g() + ctx.dim_b());
      CHECK((chart.q * chart.vertical).is_zero());
      const auto l = quotient_fiber(ctx, p);
      CHECK(l.dim() == ctx.dim_g());
      CHECK(is_lagrangian(l).ok);
      CHECK(representative_independence(ctx, p, random_point(ctx, SampleKind::B, rng).m));
    }
    // ρ(0, E12) lies in the intersection
    const auto p = random_gs(ctx, rng);
    const auto f = restrict_to_GxB(ctx, p);
    Vec<Exact> v = rho_b_gxb(ctx, p, E(static_cast<std::size_t>(ctx.n()), 0, 1));
    v.resize(2 * f.d, Exact(0));
    CHECK(f.space.contains(v));
  }
  const auto ctx = GroupContext::from_name("sl2");
  CHECK_THROWS_AS(make_gs_point(ctx, Mat<Exact>::identity(2), Mat<Exact>{{Exact(1), Exact(0)}, {Exact(1), Exact(1)}}),
                  std::invalid_argument);
}

TEST_CASE("GS points, mu and lambda") {
  const auto ctx = GroupContext::from_name("sl2");
  const Mat<Exact> b{{Exact(2), Exact(3)}, {Exact(0), Exact(1, 2)}};
  const auto p = make_gs_point(ctx, Mat<Exact>::identity(2), b);
  CHECK(mu(p) == b);
  CHECK(lambda(p) == Mat<Exact>{{Exact(2), Exact(0)}, {Exact(0), Exact(1, 2)}});
  for (const auto& name : kGroups) {
    const auto c = GroupContext::from_name(name);
    SplitMix64 rng(7);
    for (int k = 0; k < 10; ++k) {
      const auto q = random_gs(c, rng);
      const auto h = random_point(c, SampleKind::B, rng).m;
      const auto q2 = act(q, h);
      CHECK(equivalent(c, q, q2));
      CHECK(mu(q2) == mu(q));
      CHECK(lambda(q2) == lambda(q));
      CHECK(chevalley(c, mu(q)) == chevalley(c, lambda(q)));
      CHECK(steinberg_membership(c, mu(q), lambda(q)));
      const auto other = random_gs(c, rng);
      CHECK(!equivalent(c, q, other));
    }
  }
  CHECK(steinberg_membership(ctx, Mat<Exact>{{Exact(1), Exact(5)}, {Exact(0), Exact(1)}}, Mat<Exact>::identity(2)));
  CHECK(!steinberg_membership(ctx, Mat<Exact>{{Exact(2), Exact(0)}, {Exact(0), Exact(1, 2)}},
                              Mat<Exact>{{Exact(3), Exact(0)}, {Exact(0), Exact(1, 3)}}));
}

TEST_CASE("theorem checks, leaf form and bivector") {
  for (const auto& name : kGroups) {
    const auto ctx = GroupContext::from_name(name);
    SplitMix64 rng(8);
    std::vector<GSPoint<Exact>> pts;
    pts.push_back(make_gs_point(ctx, random_point(ctx, SampleKind::G, rng).m, random_point(ctx, SampleKind::U, rng).m));
    const auto nr = nonregular_torus_point(ctx, rng).m;
    pts.push_back(make_gs_point(ctx, random_point(ctx, SampleKind::G, rng).m, nr * random_point(ctx, SampleKind::U, rng).m));
    pts.push_back(random_gs(ctx, rng));
    pts.push_back(make_gs_point(ctx, Mat<Exact>::identity(static_cast<std::size_t>(ctx.n())),
                                Mat<Exact>::identity(static_cast<std::size_t>(ctx.n()))));
    const auto leaf = leaf_space(ctx);
    for (const auto& p : pts) {
      CHECK(all_pass(theorem1_check(ctx, p)));
      CHECK(all_pass(theorem2_check(ctx, p)));
      std::vector<std::array<Vec<Exact>, 3>> triples;
      for (int t = 0; t < 2; ++t)
        triples.push_back({random_vector(leaf.dim(), rng), random_vector(leaf.dim(), rng), random_vector(leaf.dim(), rng)});
      CHECK(all_pass(leaf_form_check(ctx, p, triples)));
      const auto lf = leaf_two_form(ctx, p);
      CHECK(lf.basis.cols() == ctx.dim_g() - ctx.rank());
      CHECK(all_pass(reconstruct_bivector(ctx, p).checks));
    }
    // μ(p) = e: pushed fiber is {0} ⊕ g*
    const auto id = pts.back();
    const auto c = cartan_dirac(ctx, mu(id));
    CHECK(tangent_projection(c).dim() == 0);
  }
}

TEST_CASE("checks hold for a rescaled invariant form") {
  for (const Exact c : {Exact(2), Exact(1, 3)}) {
    const GroupContext ctx(Family::SL, 2, c);
    SplitMix64 rng(12);
    const GSPoint<Exact> p = random_gs(ctx, rng);
    CHECK(all_pass(theorem1_check(ctx, p)));
    CHECK(all_pass(theorem2_check(ctx, p)));
    CHECK(all_pass(reconstruct_bivector(ctx, p).checks));
    const auto leaf = leaf_space(ctx);
    std::vector<std::array<Vec<Exact>, 3>> triples{
        {random_vector(leaf.dim(), rng), random_vector(leaf.dim(), rng), random_vector(leaf.dim(), rng)}};
    CHECK(all_pass(leaf_form_check(ctx, p, triples)));
    const DoublePoint<Exact> d{random_point(ctx, SampleKind::G, rng).m, random_point(ctx, SampleKind::G, rng).m};
    const Mat<Exact> z(2, 2);
    for (std::size_t k = 0; k < ctx.dim_g(); ++k) {
      CHECK(moment_condition_check(ctx, d, ctx.basis_element(k), z));
      CHECK(moment_condition_check(ctx, d, z, ctx.basis_element(k)));
    }
    const auto ds = double_space(ctx);
    const Vec<Exact> x = random_vector(ds.dim(), rng), y = random_vector(ds.dim(), rng), w = random_vector(ds.dim(), rng);
    CHECK(d_two_form(ds, omega_double_family(ctx), d.point(), x, y, w) == -pullback_eta(phi_map(ds), d.point(), x, y, w));
  }
}

TEST_CASE("Weyl fiber enumeration") {
  const auto sl2 = GroupContext::from_name("sl2");
  const Mat<Float> d{{Float(2), Float(0)}, {Float(0), Float(0.5)}};
  const auto pts = weyl_fiber_enum(sl2, d);
  CHECK(pts.size() == 2);
  for (const auto& p : pts) CHECK(approx_equal(mu(p), d));
  CHECK(!equivalent(sl2, pts[0], pts[1]));
  CHECK_THROWS_WITH_AS(weyl_fiber_enum(sl2, Mat<Float>{{Float(1), Float(1)}, {Float(0), Float(1)}}),
                       "not regular semisimple", std::domain_error);

  for (const auto* name : {"sl3", "gl3", "sl4"}) {
    const auto ctx = GroupContext::from_name(name);
    SplitMix64 rng(9);
    for (int k = 0; k < 3; ++k) {
      const auto h = random_point(ctx, SampleKind::G, rng).m;
      const auto t = random_point(ctx, SampleKind::RegularSemisimpleT, rng).m;
      const Mat<Float> g = cast_matrix<Float>(h * t * inverse(h));
      const auto fib = weyl_fiber_enum(ctx, g);
      std::size_t fact = 1;
      for (int i = 2; i <= ctx.n(); ++i) fact *= static_cast<std::size_t>(i);
      CHECK(fib.size() == fact);
      for (std::size_t i = 0; i < fib.size(); ++i) {
        CHECK(ctx.in_borel(fib[i].b));
        double res = 0;
        const Mat<Float> r = mu(fib[i]) - g;
        for (const auto& x : r.data()) res = std::max(res, std::abs(x));
        CHECK(res < 1e-8);
        for (std::size_t j = 0; j < i; ++j) CHECK(!equivalent(ctx, fib[i], fib[j]));
      }
    }
  }
}
