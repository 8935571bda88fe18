#pragma once

#include "wittlab/witt.hpp"

namespace wittlab {

/// Witt covector: finitely supported sequence indexed by non-positive
/// integers (..., a_{-2}, a_{-1}, a_0), the direct limit of (W_n, V).
/// The stored window is minimal (no leading zeros on the low-index side),
/// so equality of limit classes is structural. window.back() sits at
/// index 0. Only characteristic-p coefficient rings are supported.
struct Covector {
  Ring ring;
  std::int64_t p = 0;
  std::vector<Elem> window;

  int window_size() const { return static_cast<int>(window.size()); }
  bool is_zero() const { return window.empty(); }

  static Covector make(std::int64_t p, const Ring& ring, std::vector<Elem> window);
  static Covector zero(std::int64_t p, const Ring& ring);

  friend bool operator==(const Covector& a, const Covector& b);
  friend bool operator!=(const Covector& a, const Covector& b) { return !(a == b); }
};

/// psi_n: (a_0,...,a_{n-1}) -> (...,0,0,a_0,...,a_{n-1}), trimmed.
Covector psi(const WittVector& a);

/// Read the covector back as the length-m truncation with psi(result) = x;
/// requires m >= window size.
WittVector cov_to_witt(const Covector& x, int m);

/// Addition via a common lift: pad both windows to length m, add in W_m,
/// re-embed. The result is independent of m; `extra_lift` adds padding on
/// top of the minimal common length (used by the independence tests).
Covector cov_add(const Covector& x, const Covector& y, int extra_lift = 0);
Covector cov_neg(const Covector& x);
Covector cov_sub(const Covector& x, const Covector& y);

Covector cov_F(const Covector& x);  // coordinatewise p-th power
Covector cov_V(const Covector& x);  // (...,a_2,a_1,a_0) -> (...,a_3,a_2,a_1)
Covector cov_artin_schreier(const Covector& x);  // F - 1

}  // namespace wittlab
