#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpslab/linalg.hpp"
#include "qpslab/random.hpp"

using namespace qpslab;

namespace {

Mat<Exact> ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Exact> d;
  std::size_t r = 0, c = 0;
  for (const auto& row : rows) {
    c = row.size();
    for (long v : row) d.emplace_back(v);
    ++r;
  }
  return Mat<Exact>(r, c, d);
}

Mat<Exact> random_int_matrix(SplitMix64& rng, std::size_t r, std::size_t c, long h) {
  Mat<Exact> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Exact(rng.uniform(-h, h));
  return m;
}

}  // namespace

TEST_CASE("gaussian rationals") {
  const Exact a(1, 2);
  const Exact b = Exact::parse("3/4", "-1/3");
  CHECK((a + b).real_string() == "5/4");
  CHECK((a + b).imag_string() == "-1/3");
  CHECK((b * b.inverse()) == Exact(1));
  CHECK((b - b).is_zero());
  // (3/4 − i/3)(3/4 + i/3) = 9/16 + 1/9
  CHECK((b * Exact(mpq_class(3, 4), mpq_class(1, 3))) == Exact(97, 144));
  CHECK_THROWS_AS(Exact(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Exact::parse("1/0", "0"), std::invalid_argument);
  CHECK_THROWS_AS(Exact::parse("x", "0"), std::invalid_argument);
}

TEST_CASE("dual numbers follow the product rule") {
  const Dual<Exact> a(Exact(3), Exact(1, 2));
  const Dual<Exact> b(Exact(-2), Exact(5));
  const auto p = a * b;
  CHECK(p.v == Exact(-6));
  CHECK(p.d == Exact(3) * Exact(5) + Exact(1, 2) * Exact(-2));
  const auto q = a / b;
  CHECK(q.d == (Exact(1, 2) * Exact(-2) - Exact(3) * Exact(5)) / Exact(4));
}

TEST_CASE("rank examples") {
  CHECK(rank(Mat<Exact>::identity(2)) == 2);
  CHECK(rank(Mat<Exact>(3, 3)) == 0);
  CHECK(rank(ints({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(cast_matrix<Float>(ints({{1, 2}, {2, 4}}))) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Mat<Exact>::identity(3)).dim() == 0);
  CHECK(kernel(Mat<Exact>(3, 3)).dim() == 3);
  const auto k = kernel(ints({{1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.contains(Vec<Exact>{Exact(1), Exact(-1)}));
  CHECK(!k.contains(Vec<Exact>{Exact(1), Exact(1)}));
}

TEST_CASE("intersect examples") {
  const auto xy = Subspace<Exact>::span(ints({{1, 0}, {0, 1}, {0, 0}}));
  const auto yz = Subspace<Exact>::span(ints({{0, 0}, {1, 0}, {0, 1}}));
  const auto y = intersect(xy, yz);
  REQUIRE(y.dim() == 1);
  CHECK(y.contains(Vec<Exact>{Exact(0), Exact(1), Exact(0)}));
  CHECK(equal(intersect(xy, xy), xy));
  CHECK_THROWS_AS(intersect(xy, Subspace<Exact>::full(4)), std::invalid_argument);

  SplitMix64 rng(7);
  int generic = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = Subspace<Exact>::span(random_int_matrix(rng, 4, 3, 9));
    const auto b = Subspace<Exact>::span(random_int_matrix(rng, 4, 3, 9));
    if (a.dim() == 3 && b.dim() == 3 && intersect(a, b).dim() == 2) ++generic;
  }
  CHECK(generic >= 18);
}

TEST_CASE("annihilator examples") {
  const auto dotp = Mat<Exact>::identity(3);
  CHECK(annihilator(Subspace<Exact>(3), dotp).dim() == 3);
  CHECK(annihilator(Subspace<Exact>::full(3), dotp).dim() == 0);
  const auto e1 = Subspace<Exact>::span(ints({{1}, {0}, {0}}));
  const auto ann = annihilator(e1, dotp);
  CHECK(equal(ann, Subspace<Exact>::span(ints({{0, 0}, {1, 0}, {0, 1}}))));
  CHECK_THROWS_AS(annihilator(e1, ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})), std::invalid_argument);
}

TEST_CASE("dimension formula on random subspaces") {
  SplitMix64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
    const std::size_t ka = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    const std::size_t kb = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)));
    // Low-height entries so dependencies actually occur.
    const auto a = Subspace<Exact>::span(random_int_matrix(rng, n, ka, 1));
    const auto b = Subspace<Exact>::span(random_int_matrix(rng, n, kb, 1));
    const auto s = sum(a, b);
    const auto i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("rank-nullity and backend agreement") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 6));
    Mat<Exact> m = random_int_matrix(rng, r, c, 100);
    if (trial % 3 == 0 && r > 1)  // force a dependent row
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Exact(2) - m(r / 2, j);
    const std::size_t rk = rank(m);
    CHECK(rk + kernel(m).dim() == c);
    CHECK(rank(cast_matrix<Float>(m)) == rk);
    CHECK(kernel(cast_matrix<Float>(m)).dim() == c - rk);
  }
}

TEST_CASE("inverse, determinant and exact solve") {
  const auto m = ints({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(m * inverse(m) == Mat<Exact>::identity(3));
  // cofactor expansion: 2(12−1) − 1(4−0) = 18
  CHECK(determinant(m) == Exact(18));
  CHECK_THROWS_AS(inverse(ints({{1, 2}, {2, 4}})), std::domain_error);
  Vec<Exact> x;
  REQUIRE(solve_particular(m, Vec<Exact>{Exact(3), Exact(5), Exact(5)}, x));
  CHECK(x == Vec<Exact>{Exact(1), Exact(1), Exact(1)});
  CHECK(!solve_particular(ints({{1, 1}, {1, 1}}), Vec<Exact>{Exact(1), Exact(2)}, x));
}

TEST_CASE("float tolerance is configurable") {
  const double old = float_tolerance();
  Mat<Float> m{{Float(1), Float(0)}, {Float(0), Float(1e-7)}};
  CHECK(rank(m) == 2);
  set_float_tolerance(1e-6);
  CHECK(rank(m) == 1);
  set_float_tolerance(old);
}
