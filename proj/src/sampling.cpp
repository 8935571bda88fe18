#include "wittlab/sampling.hpp"

#include "wittlab/covector.hpp"

namespace wittlab {

Elem sample_scalar(Rng& rng, const Ring& scalar_ring) {
  const RingDescriptor& r = *scalar_ring;
  switch (r.kind) {
    case RingKind::PrimeField:
    case RingKind::FiniteField:
    case RingKind::LiftRing: {
      std::vector<std::int64_t> coeffs(r.f);
      for (int j = 0; j < r.f; ++j)
        coeffs[j] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(r.scalar_modulus())));
      return Elem::scalar(scalar_ring, coeffs);
    }
    case RingKind::Integers:
      return Elem::from_int(scalar_ring, rng.in_range(-2, 2));
    case RingKind::Rationals:
      return Elem::scalar(scalar_ring, {rng.in_range(-3, 3), rng.in_range(1, 3)});
    default:
      throw RingError("sample_scalar needs a scalar ring");
  }
}

Elem sample_scalar_nonzero(Rng& rng, const Ring& scalar_ring) {
  for (;;) {
    Elem c = sample_scalar(rng, scalar_ring);
    if (!c.is_zero()) return c;
  }
}

Elem sample_laurent(Rng& rng, const Ring& K, const WitnessSpace& space) {
  if (!K->is_laurent()) throw RingError("sample_laurent needs a Laurent ring");
  Ring base = base_scalar_ring(K);
  std::vector<std::pair<int, std::vector<std::int64_t>>> terms;
  for (int e = space.emin; e <= space.emax; ++e) {
    if (rng.below(2)) continue;  // keep the support sparse
    Elem c = sample_scalar(rng, base);
    if (!c.is_zero()) terms.emplace_back(e, c.scalar_coeffs());
  }
  return Elem::laurent(K, terms);
}

Elem sample_laurent_nonzero(Rng& rng, const Ring& K, const WitnessSpace& space) {
  for (;;) {
    Elem b = sample_laurent(rng, K, space);
    if (!b.is_zero()) return b;
  }
}

Elem sample_monomial_unit(Rng& rng, const Ring& K, const WitnessSpace& space) {
  Ring base = base_scalar_ring(K);
  Elem c = sample_scalar_nonzero(rng, base);
  int e = static_cast<int>(rng.in_range(space.emin, space.emax));
  return Elem::monomial(K, e, c.scalar_coeffs());
}

WittVector sample_witt(Rng& rng, const Ring& ring, std::int64_t p, int n,
                       const WitnessSpace& space) {
  std::vector<Elem> coords;
  coords.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (ring->is_laurent())
      coords.push_back(sample_laurent(rng, ring, space));
    else if (ring->kind == RingKind::Integers)
      coords.push_back(Elem::from_int(ring, rng.in_range(space.int_lo, space.int_hi)));
    else
      coords.push_back(sample_scalar(rng, ring));
  }
  return WittVector::make(p, ring, std::move(coords));
}

Covector sample_covector(Rng& rng, const Ring& K, std::int64_t p, int max_window,
                         const WitnessSpace& space) {
  const int w = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_window) + 1));
  std::vector<Elem> window;
  for (int i = 0; i < w; ++i) window.push_back(sample_laurent(rng, K, space));
  return Covector::make(p, K, std::move(window));
}

}  // namespace wittlab
