#include "qpslab/random.hpp"

#include <stdexcept>

namespace qpslab {

Exact random_rational(SplitMix64& rng, long height) {
  return Exact(rng.uniform(-height, height), rng.uniform(1, height));
}

Exact random_nonzero_rational(SplitMix64& rng, long height) {
  long num = 0;
  while (num == 0) num = rng.uniform(-height, height);
  return Exact(num, rng.uniform(1, height));
}

namespace {

Mat<Exact> random_diagonal(const GroupContext& ctx, SplitMix64& rng, bool distinct) {
  const int n = ctx.n();
  for (;;) {
    Vec<Exact> d;
    Exact prod(1);
    for (int i = 0; i < n; ++i) {
      if (ctx.family() == Family::SL && i == n - 1) {
        d.push_back(prod.inverse());
      } else {
        d.push_back(random_nonzero_rational(rng));
        prod *= d.back();
      }
    }
    bool ok = true;
    if (distinct)
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j) ok = d[i] != d[j];
    if (ok) return Mat<Exact>::diagonal(d);
  }
}

Mat<Exact> random_unipotent(const GroupContext& ctx, SplitMix64& rng, bool upper) {
  const int n = ctx.n();
  Mat<Exact> u = Mat<Exact>::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (upper)
        u(i, j) = random_rational(rng);
      else
        u(j, i) = random_rational(rng);
    }
  return u;
}

}  // namespace

GroupElement<Exact> random_point(const GroupContext& ctx, SampleKind kind, SplitMix64& rng) {
  switch (kind) {
    case SampleKind::G: {
      const auto l = random_unipotent(ctx, rng, false);
      const auto d = random_diagonal(ctx, rng, false);
      const auto u = random_unipotent(ctx, rng, true);
      return {ctx, l * d * u};
    }
    case SampleKind::B:
      return {ctx, random_diagonal(ctx, rng, false) * random_unipotent(ctx, rng, true)};
    case SampleKind::T:
      return {ctx, random_diagonal(ctx, rng, false)};
    case SampleKind::U:
      return {ctx, random_unipotent(ctx, rng, true)};
    case SampleKind::RegularSemisimpleT:
      return {ctx, random_diagonal(ctx, rng, true)};
  }
  throw std::invalid_argument("unknown sample kind");
}

GroupElement<Exact> random_point(const GroupContext& ctx, SampleKind kind, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_point(ctx, kind, rng);
}

Vec<Exact> random_vector(std::size_t n, SplitMix64& rng) {
  Vec<Exact> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng));
  return v;
}

AlgebraElement<Exact> random_algebra_in(const GroupContext& ctx, BasisRange r, SplitMix64& rng) {
  return {ctx, ctx.from_coords_in(random_vector(r.size(), rng), r)};
}

AlgebraElement<Exact> random_algebra(const GroupContext& ctx, SplitMix64& rng) {
  return random_algebra_in(ctx, ctx.g_range(), rng);
}

GroupElement<Exact> nonregular_torus_point(const GroupContext& ctx, SplitMix64& rng) {
  const int n = ctx.n();
  // SL_2 has only ±1 as non-regular torus points.
  if (ctx.family() == Family::SL && n == 2) {
    return {ctx, Mat<Exact>::diagonal({Exact(-1), Exact(-1)})};
  }
  // Repeat the first entry; for SL the remaining entry fixes the determinant.
  for (;;) {
    const Exact a = random_nonzero_rational(rng);
    Vec<Exact> d(n, a);
    if (ctx.family() == Family::SL) {
      Exact prod(1);
      for (int i = 0; i + 1 < n; ++i) prod *= a;
      d[n - 1] = prod.inverse();
    } else if (n > 2) {
      d[n - 1] = random_nonzero_rational(rng);
    }
    Mat<Exact> t = Mat<Exact>::diagonal(d);
    if (t == Mat<Exact>::identity(n)) continue;  // identity is sampled separately
    return {ctx, std::move(t)};
  }
}

}  // namespace qpslab
