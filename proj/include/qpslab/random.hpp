#pragma once

#include <cstdint>

#include "qpslab/group.hpp"

namespace qpslab {

/// SplitMix64 (Steele, Lea & Flood): state += 0x9E3779B97F4A7C15, then the
/// standard xor-shift-multiply finalizer. Chosen so seeds are portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform integer in [lo, hi] (modulo bias is irrelevant at these sizes).
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }
  /// Independent stream derived from this one.
  SplitMix64 fork() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// Default bound on numerators and denominators of sampled rationals.
inline constexpr long kSampleHeight = 10;

Exact random_rational(SplitMix64& rng, long height = kSampleHeight);
Exact random_nonzero_rational(SplitMix64& rng, long height = kSampleHeight);

enum class SampleKind { G, B, T, U, RegularSemisimpleT };

/// Exact element of the requested subgroup. G is drawn as L·D·U′ (unit lower,
/// determinant-compatible diagonal, unit upper).
GroupElement<Exact> random_point(const GroupContext& ctx, SampleKind kind, SplitMix64& rng);
GroupElement<Exact> random_point(const GroupContext& ctx, SampleKind kind, std::uint64_t seed);

/// Random element of g restricted to a basis range (default all of g).
AlgebraElement<Exact> random_algebra(const GroupContext& ctx, SplitMix64& rng);
AlgebraElement<Exact> random_algebra_in(const GroupContext& ctx, BasisRange r, SplitMix64& rng);
Vec<Exact> random_vector(std::size_t n, SplitMix64& rng);

/// Diagonal element of T with a repeated eigenvalue (not regular); the
/// identity for kind index 0.
GroupElement<Exact> nonregular_torus_point(const GroupContext& ctx, SplitMix64& rng);

}  // namespace qpslab
