#pragma once

#include <cstdint>

#include "wittlab/covector.hpp"

namespace wittlab {

/// Deterministic splitmix64 stream; the same seed yields the same witnesses
/// on every platform, so suite reports are reproducible byte for byte.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t k) { return next() % k; }

  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Decorrelated per-sample stream.
  static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed);
    mix.state ^= 0x6a09e667f3bcc909ULL * (index + 1);
    mix.next();
    return mix;
  }
};

/// Fixed witness-space configuration shared by the identity suites:
/// Laurent exponents in [emin, emax], all coefficients uniform.
struct WitnessSpace {
  int emin = -3;
  int emax = 4;
  int int_lo = -2;  // integer Witt coordinates for ghost suites
  int int_hi = 2;
};

Elem sample_scalar(Rng& rng, const Ring& scalar_ring);
Elem sample_scalar_nonzero(Rng& rng, const Ring& scalar_ring);

/// Random Laurent polynomial with exponents in the window (possibly zero).
Elem sample_laurent(Rng& rng, const Ring& K, const WitnessSpace& space = {});
Elem sample_laurent_nonzero(Rng& rng, const Ring& K, const WitnessSpace& space = {});

/// Invertible witness in the finite-support model: unit * monomial.
Elem sample_monomial_unit(Rng& rng, const Ring& K, const WitnessSpace& space = {});

WittVector sample_witt(Rng& rng, const Ring& ring, std::int64_t p, int n,
                       const WitnessSpace& space = {});

/// Covector with window size drawn from [0, max_window].
Covector sample_covector(Rng& rng, const Ring& K, std::int64_t p, int max_window,
                         const WitnessSpace& space = {});

}  // namespace wittlab
