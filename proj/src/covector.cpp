#include "wittlab/covector.hpp"

#include <algorithm>

namespace wittlab {

namespace {

void trim(std::vector<Elem>& window) {
  size_t lead = 0;
  while (lead < window.size() && window[lead].is_zero()) ++lead;
  window.erase(window.begin(), window.begin() + lead);
}

}  // namespace

Covector Covector::make(std::int64_t p, const Ring& ring, std::vector<Elem> window) {
  if (!ring->is_char_p()) throw RingError("covectors are defined over characteristic-p rings");
  for (const Elem& c : window)
    if (!same_ring(c.ring(), ring)) throw RingError("covector entry ring mismatch");
  trim(window);
  Covector x;
  x.ring = ring;
  x.p = p;
  x.window = std::move(window);
  return x;
}

Covector Covector::zero(std::int64_t p, const Ring& ring) { return make(p, ring, {}); }

bool operator==(const Covector& a, const Covector& b) {
  return a.p == b.p && same_ring(a.ring, b.ring) && a.window == b.window;
}

Covector psi(const WittVector& a) {
  if (!a.ring->is_char_p()) throw RingError("psi needs a characteristic-p ring");
  return Covector::make(a.p, a.ring, a.coords);
}

WittVector cov_to_witt(const Covector& x, int m) {
  if (m < x.window_size()) throw RingError("lift length below the covector window");
  std::vector<Elem> coords(m - x.window_size(), Elem::zero(x.ring));
  coords.insert(coords.end(), x.window.begin(), x.window.end());
  return WittVector::make(x.p, x.ring, std::move(coords));
}

Covector cov_add(const Covector& x, const Covector& y, int extra_lift) {
  if (x.p != y.p || !same_ring(x.ring, y.ring)) throw RingError("covector ring mismatch");
  const int m = std::max({x.window_size(), y.window_size(), 1}) + extra_lift;
  return psi(witt_add(cov_to_witt(x, m), cov_to_witt(y, m)));
}

Covector cov_neg(const Covector& x) {
  if (x.is_zero()) return x;
  return psi(witt_neg(cov_to_witt(x, x.window_size())));
}

Covector cov_sub(const Covector& x, const Covector& y) { return cov_add(x, cov_neg(y)); }

Covector cov_F(const Covector& x) {
  std::vector<Elem> window;
  window.reserve(x.window.size());
  for (const Elem& c : x.window) window.push_back(frobenius_power(c, 1));
  return Covector::make(x.p, x.ring, std::move(window));
}

Covector cov_V(const Covector& x) {
  if (x.is_zero()) return x;
  return Covector::make(x.p, x.ring,
                        std::vector<Elem>(x.window.begin(), x.window.end() - 1));
}

Covector cov_artin_schreier(const Covector& x) { return cov_sub(cov_F(x), x); }

}  // namespace wittlab
