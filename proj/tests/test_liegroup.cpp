#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpslab/group.hpp"
#include "qpslab/random.hpp"

using namespace qpslab;

namespace {

Mat<Exact> E(int n, int i, int j) {
  Mat<Exact> m(n, n);
  m(i, j) = Exact(1);
  return m;
}

Mat<Exact> diag2(Exact a, Exact b) { return Mat<Exact>{{a, Exact(0)}, {Exact(0), b}}; }

const std::vector<std::string> kGroups{"sl2", "sl3", "gl2"};

}  // namespace

TEST_CASE("dimensions") {
  const auto sl3 = GroupContext::from_name("sl3");
  CHECK(sl3.dim_g() == 8);
  CHECK(sl3.dim_b() == 5);
  CHECK(sl3.dim_u() == 3);
  CHECK(sl3.rank() == 2);
  const auto gl2 = GroupContext::from_name("gl2");
  CHECK(gl2.dim_g() == 4);
  CHECK(gl2.dim_b() == 3);
  CHECK(gl2.rank() == 2);
  CHECK_THROWS(GroupContext::from_name("so3"));
  CHECK_THROWS(GroupContext::from_name("sl9"));
}

TEST_CASE("sl2 brackets and Ad") {
  const auto ctx = GroupContext::from_name("sl2");
  const AlgebraElement<Exact> e(ctx, E(2, 0, 1)), f(ctx, E(2, 1, 0));
  const AlgebraElement<Exact> h(ctx, diag2(Exact(1), Exact(-1)));
  CHECK(ad(e, e).m.is_zero());
  CHECK(ad(e, f).m == h.m);
  CHECK(ad(h, e).m == e.m * Exact(2));
  const GroupElement<Exact> g(ctx, diag2(Exact(2), Exact(1, 2)));
  CHECK(Ad(g, e).m == e.m * Exact(4));
  CHECK(sigma(g, e).coord.m == e.m * Exact(5, 8));
  CHECK(conj_field(g, e).coord.m == e.m * Exact(3, 4));
  CHECK_THROWS_AS(AlgebraElement<Exact>(ctx, E(2, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(GroupElement<Exact>(ctx, diag2(Exact(2), Exact(1))), std::invalid_argument);
}

TEST_CASE("trivial identities at the identity element") {
  for (const auto& name : kGroups) {
    const auto ctx = GroupContext::from_name(name);
    const GroupElement<Exact> e(ctx, Mat<Exact>::identity(static_cast<std::size_t>(ctx.n())));
    SplitMix64 rng(3);
    const auto xi = random_algebra(ctx, rng);
    CHECK(Ad(e, xi).m == xi.m);
    CHECK(sigma(e, xi).coord.m == xi.m);
    CHECK(conj_field(e, xi).coord.m.is_zero());
    CHECK(sigma_adjoint(Covector<Exact>{e, xi}).m == xi.m);
    CHECK(rho_adjoint(TangentVec<Exact>{e, xi}).m.is_zero());
  }
  const auto gl2 = GroupContext::from_name("gl2");
  const GroupElement<Exact> g(gl2, Mat<Exact>{{Exact(1), Exact(2)}, {Exact(3), Exact(4)}});
  CHECK(conj_field(g, AlgebraElement<Exact>(gl2, Mat<Exact>::identity(2))).coord.m.is_zero());
}

TEST_CASE("form invariance and annihilator of b") {
  for (const auto& name : kGroups) {
    const auto ctx = GroupContext::from_name(name);
    SplitMix64 rng(11);
    for (int k = 0; k < 100; ++k) {
      const auto g = random_point(ctx, SampleKind::G, rng);
      const auto x = random_algebra(ctx, rng);
      const auto y = random_algebra(ctx, rng);
      CHECK(ctx.form(Ad(g, x).m, Ad(g, y).m) == ctx.form(x.m, y.m));
      // Ad_g Ad_{g⁻¹} x = x
      CHECK(lie::adjoint(g.m, lie::adjoint_inv(g.m, x.m)) == x.m);
    }
    // b^⊥ = u
    const auto& metric = ctx.metric();
    Mat<Exact> bcols(ctx.dim_g(), ctx.dim_b());
    for (std::size_t j = 0; j < ctx.dim_b(); ++j) bcols(j, j) = Exact(1);
    const auto ann = annihilator(Subspace<Exact>::span(bcols), metric);
    Mat<Exact> ucols(ctx.dim_g(), ctx.dim_u());
    for (std::size_t j = 0; j < ctx.dim_u(); ++j) ucols(ctx.u_range().begin + j, j) = Exact(1);
    CHECK(equal(ann, Subspace<Exact>::span(ucols)));
  }
}

TEST_CASE("sigma adjointness and rho adjointness") {
  for (const auto& name : kGroups) {
    const auto ctx = GroupContext::from_name(name);
    SplitMix64 rng(5);
    for (int k = 0; k < 20; ++k) {
      const auto g = random_point(ctx, SampleKind::G, rng);
      const auto a = random_algebra(ctx, rng);
      const auto xi = random_algebra(ctx, rng);
      // (σ^∨α, ξ) = α(σ(ξ)^♯): both sides written out with the trace form.
      const Exact lhs = ctx.form(sigma_adjoint(Covector<Exact>{g, a}).m, xi.m);
      const Mat<Exact> sig = (xi.m + inverse(g.m) * xi.m * g.m) * Exact(1, 2);
      CHECK(lhs == ctx.form(a.m, sig));
      // (ρ^∨v, ξ) = (v, ξ − g⁻¹ξg)
      const Exact l2 = ctx.form(rho_adjoint(TangentVec<Exact>{g, a}).m, xi.m);
      CHECK(l2 == ctx.form(a.m, xi.m - inverse(g.m) * xi.m * g.m));
    }
  }
}

TEST_CASE("Cartan 3-form alternation, invariance and chi") {
  for (const auto& name : kGroups) {
    const auto ctx = GroupContext::from_name(name);
    SplitMix64 rng(8);
    for (int k = 0; k < 20; ++k) {
      const auto x = random_algebra(ctx, rng).m;
      const auto y = random_algebra(ctx, rng).m;
      const auto z = random_algebra(ctx, rng).m;
      const auto g = random_point(ctx, SampleKind::G, rng).m;
      const Exact v = lie::cartan_eta(ctx, x, y, z);
      CHECK(lie::cartan_eta(ctx, y, x, z) == -v);
      CHECK(lie::cartan_eta(ctx, x, z, y) == -v);
      CHECK(lie::cartan_eta(ctx, lie::adjoint(g, x), lie::adjoint(g, y), lie::adjoint(g, z)) == v);
      // ½ tr(x(yz − zy)) computed directly
      CHECK(v == Exact(1, 2) * (trace(x * y * z) - trace(x * z * y)));
    }
    // χ(x^∨, y^∨, z^∨) = η(x, y, z) where x^∨ has dual coordinates (x, e_j).
    const std::size_t d = ctx.dim_g();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          const auto& x = ctx.basis_element(i);
          const auto& y = ctx.basis_element(j);
          const auto& z = ctx.basis_element(k);
          CHECK(chi_pairing(ctx, ctx.metric_to_dual(x), ctx.metric_to_dual(y), ctx.metric_to_dual(z)) ==
                lie::cartan_eta(ctx, x, y, z));
        }
  }
}

TEST_CASE("lemma kernel at the algebra level") {
  for (const auto& name : kGroups) {
    const auto ctx = GroupContext::from_name(name);
    SplitMix64 rng(13);
    for (int k = 0; k < 10; ++k) {
      const auto b = random_point(ctx, SampleKind::B, rng).m;
      for (std::size_t i = 0; i < ctx.dim_b(); ++i) {
        const Mat<Exact> xi = ctx.basis_element(i);
        const Mat<Exact> w = xi + lie::adjoint(b, xi);
        bool kills_b = true;
        for (std::size_t j = 0; j < ctx.dim_b(); ++j)
          kills_b = kills_b && ctx.form(w, ctx.basis_element(j)).is_zero();
        const bool in_u = i >= ctx.u_range().begin;
        CHECK(kills_b == in_u);
      }
    }
  }
}

TEST_CASE("borel decomposition") {
  const auto ctx = GroupContext::from_name("sl2");
  const GroupElement<Exact> b(ctx, Mat<Exact>{{Exact(2), Exact(3)}, {Exact(0), Exact(1, 2)}});
  const auto [t, u] = borel_decompose(b);
  CHECK(t.m == diag2(Exact(2), Exact(1, 2)));
  CHECK(u.m == Mat<Exact>{{Exact(1), Exact(3, 2)}, {Exact(0), Exact(1)}});
  const GroupElement<Exact> id(ctx, Mat<Exact>::identity(2));
  CHECK(borel_decompose(id).second.m == id.m);
  const GroupElement<Exact> d(ctx, diag2(Exact(2), Exact(1, 2)));
  CHECK(borel_decompose(d).first.m == d.m);
  CHECK(borel_decompose(d).second.m == id.m);
  const GroupElement<Exact> low(ctx, Mat<Exact>{{Exact(1), Exact(0)}, {Exact(1), Exact(1)}});
  CHECK_THROWS_AS(borel_decompose(low), std::invalid_argument);
}

TEST_CASE("chevalley map") {
  const auto ctx = GroupContext::from_name("sl2");
  CHECK(chevalley(ctx, Mat<Exact>::identity(2)) == Vec<Exact>{Exact(2)});
  CHECK(chevalley(ctx, diag2(Exact(2), Exact(1, 2))) == Vec<Exact>{Exact(5, 2)});
  CHECK(chevalley(ctx, Mat<Exact>{{Exact(1), Exact(1)}, {Exact(0), Exact(1)}}) == Vec<Exact>{Exact(2)});
  for (const auto& name : kGroups) {
    const auto c = GroupContext::from_name(name);
    SplitMix64 rng(17);
    for (int k = 0; k < 20; ++k) {
      const auto g = random_point(c, SampleKind::G, rng).m;
      const auto h = random_point(c, SampleKind::G, rng).m;
      CHECK(chevalley(c, h * g * inverse(h)) == chevalley(c, g));
    }
  }
  // GL: last invariant is the determinant
  const auto gl3 = GroupContext::from_name("gl3");
  const Mat<Exact> m{{Exact(1), Exact(2), Exact(0)}, {Exact(0), Exact(3), Exact(1)}, {Exact(4), Exact(0), Exact(1)}};
  const auto k = chevalley(gl3, m);
  REQUIRE(k.size() == 3);
  CHECK(k[0] == Exact(5));
  // principal 2×2 minors: (3−0) + (1−0) + (3−0) = 7
  CHECK(k[1] == Exact(7));
  CHECK(k[2] == determinant(m));
}

TEST_CASE("random points lie in their subgroups") {
  for (const auto& name : {"sl2", "sl3", "gl2", "gl3"}) {
    const auto ctx = GroupContext::from_name(name);
    SplitMix64 rng(1);
    for (int k = 0; k < 20; ++k) {
      const auto g = random_point(ctx, SampleKind::G, rng);
      if (ctx.family() == Family::SL) CHECK(determinant(g.m) == Exact(1));
      CHECK(ctx.in_borel(random_point(ctx, SampleKind::B, rng).m));
      const auto u = random_point(ctx, SampleKind::U, rng).m;
      CHECK(ctx.in_borel(u));
      for (int i = 0; i < ctx.n(); ++i) CHECK(u(i, i) == Exact(1));
      const auto t = random_point(ctx, SampleKind::RegularSemisimpleT, rng).m;
      for (int i = 0; i < ctx.n(); ++i)
        for (int j = 0; j < i; ++j) CHECK(t(i, i) != t(j, j));
    }
  }
  // Same seed, same point.
  const auto ctx = GroupContext::from_name("sl3");
  CHECK(random_point(ctx, SampleKind::G, 42).m == random_point(ctx, SampleKind::G, 42).m);
}

TEST_CASE("weyl group") {
  for (const auto& name : {"sl2", "sl3", "gl3"}) {
    const auto ctx = GroupContext::from_name(name);
    const auto w = weyl_group(ctx);
    const std::size_t fact = ctx.n() == 2 ? 2 : 6;
    CHECK(w.order() == fact);
    for (const auto& a : w.representatives) {
      CHECK(ctx.in_group(a));
      for (const auto& b : w.representatives) {
        const auto perm = monomial_permutation(a * b);
        CHECK(w.find(perm) < w.order());
      }
    }
  }
}
