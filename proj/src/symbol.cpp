#include "wittlab/symbol.hpp"

#include <algorithm>

namespace wittlab {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

i64 ipow(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::int64_t SymbolValue::modulus() const { return ipow(p, n); }

SymbolValue sym_make(std::int64_t p, int n, std::int64_t v) {
  const i64 m = ipow(p, n);
  v %= m;
  if (v < 0) v += m;
  return SymbolValue{p, n, v};
}

SymbolValue sym_lift(const SymbolValue& s, int level) {
  if (level < s.n) throw RingError("cannot lower a symbol level");
  return sym_make(s.p, level, s.v * ipow(s.p, level - s.n));
}

SymbolValue sym_add(const SymbolValue& a, const SymbolValue& b) {
  if (a.p != b.p) throw RingError("symbol prime mismatch");
  const int l = std::max(a.n, b.n);
  return sym_make(a.p, l, sym_lift(a, l).v + sym_lift(b, l).v);
}

SymbolValue sym_neg(const SymbolValue& a) { return sym_make(a.p, a.n, -a.v); }

SymbolValue sym_sub(const SymbolValue& a, const SymbolValue& b) { return sym_add(a, sym_neg(b)); }

SymbolValue sym_scale(const SymbolValue& a, std::int64_t k) {
  const i64 m = a.modulus();
  i64 kk = k % m;
  if (kk < 0) kk += m;
  return sym_make(a.p, a.n, static_cast<i64>((static_cast<__int128>(a.v) * kk) % m));
}

bool sym_equal(const SymbolValue& a, const SymbolValue& b) {
  if (a.p != b.p) return false;
  const int l = std::max(a.n, b.n);
  return sym_lift(a, l).v == sym_lift(b, l).v;
}

// ---------------------------------------------------------------------
// W_n(F_p) <-> Z/p^n
// ---------------------------------------------------------------------

std::int64_t witt_constant_to_int(const WittVector& x) {
  const Ring prime = make_prime_field(x.p);
  // map coordinates into F_p; they must be prime-field valued
  std::vector<Elem> coords;
  for (const Elem& c : x.coords) {
    const auto& cc = c.scalar_coeffs();
    for (size_t j = 1; j < cc.size(); ++j)
      if (cc[j] != 0) throw InternalError("Witt vector is not W_n(F_p)-valued");
    coords.push_back(Elem::from_int(prime, cc[0]));
  }
  WittVector cur = WittVector::make(x.p, prime, std::move(coords));
  i64 m = 0, pk = 1;
  while (cur.n() > 0) {
    const i64 digit = cur.coords[0].scalar_coeffs()[0];
    m += digit * pk;
    pk *= x.p;
    if (cur.n() == 1) break;
    WittVector rest =
        witt_sub(cur, witt_int_mul(teichmuller(Elem::one(prime), cur.n()), digit));
    if (!rest.coords[0].is_zero()) throw InternalError("digit extraction left a residue");
    cur = WittVector::make(x.p, prime,
                           std::vector<Elem>(rest.coords.begin() + 1, rest.coords.end()));
  }
  return m;
}

// ---------------------------------------------------------------------
// the ghost-residue route
// ---------------------------------------------------------------------

namespace {

struct LocalField {
  Ring K;      // laurent-poly over F_q
  i64 p;
  int f;
};

LocalField check_local(const WittVector& a, const Elem& b) {
  if (!a.ring || a.ring->kind != RingKind::LaurentPoly)
    throw RingError("the local symbol needs Laurent-polynomial witnesses");
  if (!same_ring(a.ring, b.ring())) throw RingError("ring mismatch between a and b");
  if (b.is_zero()) throw RingError("b must be a unit (nonzero)");
  if (a.ring->f > 2) throw BudgetError("f > 2 exceeds the configured budget");
  check_budget(a.p, a.n());
  return LocalField{a.ring, a.p, a.ring->f};
}

SymbolValue symbol_attempt(const WittVector& a, const Elem& b, int N) {
  const LocalField loc{a.ring, a.p, a.ring->f};
  const int n = a.n();
  // lift modulus: the canonical integer lift of K's field modulus
  Ring LL = make_lift_laurent(loc.p, loc.f, N, a.ring->modulus);

  std::vector<Elem> A;
  A.reserve(n);
  for (const Elem& c : a.coords) A.push_back(lift_laurent_elem(c, LL));
  const Elem B = lift_laurent_elem(b, LL);

  std::vector<Elem> w(n, Elem::zero(LL));
  int order = 0;
  for (int i = 0; i < n; ++i) {
    w[i] = ghost_component(loc.p, A, i);
    if (!w[i].is_zero()) order = std::max(order, -1 - valuation(w[i]));
  }
  const Series dl = dlog_series(B, order);

  Ring lift_scalar = base_scalar_ring(LL);
  GhostVector g{lift_scalar, loc.p, {}};
  for (int i = 0; i < n; ++i) g.entries.push_back(residue(series_mul_poly(dl, w[i])));

  WittVector rho = from_ghost(g);  // may throw IntegralityError

  std::vector<Elem> red;
  red.reserve(n);
  for (const Elem& c : rho.coords) red.push_back(reduce_mod_p(c));
  WittVector x = WittVector::make(loc.p, residue_ring(lift_scalar), std::move(red));

  WittVector tr = x;
  WittVector fr = x;
  for (int i = 1; i < loc.f; ++i) {
    fr = frobenius_W(fr);
    tr = witt_add(tr, fr);
  }
  return sym_make(loc.p, n, witt_constant_to_int(tr));
}

int resolve_slack(const PrecisionPolicy& policy, int n) {
  int slack = policy.initial_slack >= 0 ? policy.initial_slack : n;
  return std::max(slack, n - 1);
}

}  // namespace

SymbolValue asw_symbol(const WittVector& a, const Elem& b, const PrecisionPolicy& policy) {
  check_local(a, b);
  const int n = a.n();
  int slack = resolve_slack(policy, n);
  for (int attempt = 0;; ++attempt) {
    try {
      return symbol_attempt(a, b, n + slack);
    } catch (const IntegralityError&) {
      if (attempt >= policy.max_doublings)
        throw PrecisionError("IntegralityError persisted at maximal slack");
      slack = std::max(2 * slack, 1);
    }
  }
}

std::pair<SymbolValue, SymbolValue> asw_symbol_shift_check(const WittVector& a, const Elem& b,
                                                           const PrecisionPolicy& policy) {
  SymbolValue low = asw_symbol(a, b, policy);
  SymbolValue high = asw_symbol(verschiebung(a, a.n() + 1), b, policy);
  return {low, high};
}

SymbolValue pairing_n(const WittVector& a, const WittVector& b, const PrecisionPolicy& policy) {
  if (a.n() != b.n() || !same_ring(a.ring, b.ring) || a.p != b.p)
    throw RingError("pairing_n needs equal-level vectors over one field");
  const int n = a.n();
  SymbolValue acc = sym_make(a.p, n, 0);
  for (int j = 0; j < n; ++j) {
    const Elem& bj = b.coords[j];
    if (bj.is_zero()) continue;
    WittVector first = scale_teich(witt_frobenius_k(a, j), bj);
    acc = sym_add(acc, asw_symbol(first, bj, policy));
  }
  return acc;
}

namespace {

SymbolValue descend(const SymbolValue& s, int target_level) {
  // invert the Br_{p^k} -> Br_{p^l} embedding: the value must be
  // p^(l-k)-divisible (the pairing is p^k-torsion)
  const i64 d = ipow(s.p, s.n - target_level);
  if (s.v % d != 0) throw InternalError("pairing value exceeds its torsion bound");
  return sym_make(s.p, target_level, s.v / d);
}

}  // namespace

SymbolValue pairing_mn(const WittVector& a, const WittVector& b, const PrecisionPolicy& policy) {
  if (!same_ring(a.ring, b.ring) || a.p != b.p) throw RingError("pairing_mn ring mismatch");
  const int m = a.n(), n = b.n();
  if (m < 1 || n < 1) throw RingError("pairing_mn needs positive levels");
  const int k = std::min(m, n), l = std::max(m, n);
  check_budget(a.p, l);

  SymbolValue via_lift = descend(
      pairing_n(verschiebung_ext_k(a, l - m), verschiebung_ext_k(b, l - n), policy), k);

  // direct route: sum_j [F^(m+j) a F^n [b_j], b_j) at level p^m
  SymbolValue direct = sym_make(a.p, m, 0);
  for (int j = 0; j < n; ++j) {
    const Elem& bj = b.coords[j];
    if (bj.is_zero()) continue;
    WittVector first = scale_teich(witt_frobenius_k(a, m + j), frobenius_power(bj, n));
    direct = sym_add(direct, asw_symbol(first, bj, policy));
  }
  direct = descend(direct, k);

  if (!sym_equal(via_lift, direct))
    throw InternalError("pairing_mn route disagreement (lift vs direct formula)");
  return via_lift;
}

SymbolValue pairing_inf(const Covector& x, const Covector& y, const PrecisionPolicy& policy) {
  if (x.is_zero() || y.is_zero()) return sym_make(x.p ? x.p : y.p, 1, 0);
  const int m = x.window_size(), n = y.window_size();
  return pairing_mn(cov_to_witt(x, m), cov_to_witt(y, n), policy);
}

SymbolValue asw_symbol_inf(const Covector& x, const Elem& b, const PrecisionPolicy& policy) {
  if (b.is_zero()) throw RingError("b must be a unit (nonzero)");
  if (x.is_zero()) return sym_make(x.p, 1, 0);
  return asw_symbol(cov_to_witt(x, x.window_size()), b, policy);
}

// ---------------------------------------------------------------------
// Artin-Schreier solving over finite fields
// ---------------------------------------------------------------------

namespace {

std::vector<Elem> field_elements(const Ring& fq) {
  const i64 p = fq->p;
  const int f = fq->f;
  std::vector<Elem> out;
  i64 q = 1;
  for (int i = 0; i < f; ++i) q *= p;
  for (i64 idx = 0; idx < q; ++idx) {
    std::vector<i64> coeffs(f);
    i64 t = idx;
    for (int j = 0; j < f; ++j) {
      coeffs[j] = t % p;
      t /= p;
    }
    out.push_back(Elem::scalar(fq, coeffs));
  }
  return out;
}

std::optional<Elem> solve_level0(const Elem& target) {
  for (const Elem& z : field_elements(target.ring()))
    if (sub(frobenius_power(z, 1), z) == target) return z;
  return std::nullopt;
}

}  // namespace

std::optional<WittVector> wp_solve(const WittVector& target) {
  const Ring& r = target.ring;
  if (!(r->kind == RingKind::PrimeField || r->kind == RingKind::FiniteField))
    throw RingError("wp_solve needs finite-field coordinates");
  const int n = target.n();
  if (n == 0) return target;
  auto x0 = solve_level0(target.coords[0]);
  if (!x0) return std::nullopt;
  if (n == 1) return teichmuller(*x0, 1);
  WittVector peeled = witt_sub(target, artin_schreier(teichmuller(*x0, n)));
  if (!peeled.coords[0].is_zero()) throw InternalError("wp_solve peel left a residue");
  WittVector rest = WittVector::make(target.p, r,
                                     std::vector<Elem>(peeled.coords.begin() + 1,
                                                       peeled.coords.end()));
  auto xs = wp_solve(rest);
  if (!xs) return std::nullopt;
  return witt_add(teichmuller(*x0, n), verschiebung(*xs, n));
}

SymbolValue classical_symbol_p(const Elem& a, const Elem& b) {
  if (!a.ring() || a.ring()->kind != RingKind::LaurentPoly)
    throw RingError("the classical symbol needs Laurent-polynomial witnesses");
  if (!same_ring(a.ring(), b.ring())) throw RingError("ring mismatch between a and b");
  if (b.is_zero()) throw RingError("b must be a unit (nonzero)");
  const i64 p = a.ring()->p;
  if (a.is_zero()) return sym_make(p, 1, 0);
  const int order = std::max(0, -1 - valuation(a));
  Elem r = residue(series_mul_poly(dlog_series(b, order), a));
  Elem tr = trace_to_prime(r);
  return sym_make(p, 1, tr.scalar_coeffs()[0]);
}

}  // namespace wittlab
