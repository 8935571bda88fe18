#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wittlab/ring.hpp"

namespace wittlab {

/// Budget caps for universal-polynomial generation: p=2 up to n=4, p=3 up
/// to n=3, p=5 up to n=2. Throws BudgetError outside this table.
int budget_max_n(std::int64_t p);
void check_budget(std::int64_t p, int n);

/// Sparse integer polynomial in at most 8 variables (X_0..X_{n-1} followed
/// by Y_0..Y_{n-1}), exponents packed 8 bits per variable into a key.
struct UTerm {
  std::int64_t c;
  std::uint64_t key;
};
struct UPoly {
  std::vector<UTerm> terms;  // sorted by key
};

int upoly_exp(std::uint64_t key, int var);
std::uint64_t upoly_key(const std::vector<int>& exps);

/// Universal Witt polynomials for (p, n): addition S, multiplication P,
/// negation Neg (ghost identities w_i(S) = w_i(X) + w_i(Y), etc.), and the
/// Frobenius polynomials Fr_0..Fr_{n-2} with w_i(Fr(X)) = w_{i+1}(X).
/// Coefficients are integers; generation solves the ghost equations over
/// the rationals and asserts every denominator cancels.
struct UniversalPolySet {
  std::int64_t p;
  int n;
  std::vector<UPoly> S, P, Neg, Fr;
  std::vector<UPoly> S_modp, P_modp, Neg_modp;  // coefficients reduced mod p
};

/// Cached per (p, n); safe for concurrent lookup.
std::shared_ptr<const UniversalPolySet> universal_polys(std::int64_t p, int n);

/// Ghost polynomial w_i = sum_j p^j X_j^(p^(i-j)) evaluated on elements.
Elem ghost_component(std::int64_t p, const std::vector<Elem>& coords, int i);

/// Truncated p-typical Witt vector: n coordinates sharing one ring.
/// n = 0 is the distinguished trivial value W_0 = {0}; it carries no
/// arithmetic and exists only as a map target.
struct WittVector {
  Ring ring;
  std::int64_t p = 0;
  std::vector<Elem> coords;

  int n() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  static WittVector make(std::int64_t p, const Ring& ring, std::vector<Elem> coords);
  static WittVector zero(std::int64_t p, const Ring& ring, int n);
  static WittVector w0(std::int64_t p, const Ring& ring);  // the W_0 value

  friend bool operator==(const WittVector& a, const WittVector& b);
  friend bool operator!=(const WittVector& a, const WittVector& b) { return !(a == b); }
};

struct GhostVector {
  Ring ring;
  std::int64_t p = 0;
  std::vector<Elem> entries;
};

WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_sub(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);
WittVector witt_neg(const WittVector& a);
WittVector witt_int_mul(const WittVector& a, std::int64_t k);

/// Ghost map; faithful only over torsion-free coefficients, so rejects
/// characteristic-p rings.
GhostVector ghost(const WittVector& a);

/// Inverse ghost solve a_i = (g_i - sum_{j<i} p^j a_j^(p^(i-j))) / p^i.
/// Throws IntegralityError carrying the failing index when a division is
/// not exact. Lift-ring callers must supply enough precision: solving n
/// output digits consumes N >= n + (n-1) input digits.
WittVector from_ghost(const GhostVector& g);

/// Frobenius. Characteristic p: coordinatewise p-th power, same length.
/// Torsion-free rings: via the Fr polynomials, length n-1 (the honest
/// codomain of F on truncated vectors).
WittVector frobenius_W(const WittVector& a);
WittVector witt_frobenius_k(const WittVector& a, int k);  // char p, F^k

/// Verschiebung; m = n+1 extends, m = n is the truncated shift.
WittVector verschiebung(const WittVector& a, int m);
WittVector verschiebung_ext_k(const WittVector& a, int k);    // W_n -> W_{n+k}
WittVector verschiebung_trunc_k(const WittVector& a, int k);  // W_n -> W_n

/// [c] = (c, 0, ..., 0). Torsion-free coefficient rings carry no
/// distinguished prime, so p must be passed explicitly there.
WittVector teichmuller(const Elem& c, int n, std::int64_t p_hint = 0);
/// (a_0 b, a_1 b^p, ..., a_{n-1} b^(p^(n-1))) without universal multiplication.
WittVector scale_teich(const WittVector& a, const Elem& b);

WittVector artin_schreier(const WittVector& a);  // F - 1, characteristic p

WittVector truncate(const WittVector& a, int m);

/// Coordinates x_0..x_{n-1} with a = sum_i V^i [x_i], by greedy peel-off.
std::vector<Elem> teich_decompose(const WittVector& a);

}  // namespace wittlab
