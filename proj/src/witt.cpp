#include "wittlab/witt.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace wittlab {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw BudgetError("coefficient overflow in universal polynomial generation");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw BudgetError("coefficient overflow in universal polynomial generation");
  return r;
}

i64 ipow(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

// --- sparse polynomial arithmetic used by the generator ---

UPoly from_map(std::unordered_map<u64, i64>&& m) {
  UPoly out;
  out.terms.reserve(m.size());
  for (const auto& [k, c] : m)
    if (c != 0) out.terms.push_back({c, k});
  std::sort(out.terms.begin(), out.terms.end(),
            [](const UTerm& a, const UTerm& b) { return a.key < b.key; });
  return out;
}

UPoly padd(const UPoly& a, const UPoly& b, i64 bscale = 1) {
  std::unordered_map<u64, i64> m;
  m.reserve(a.terms.size() + b.terms.size());
  for (const auto& t : a.terms) m[t.key] = t.c;
  for (const auto& t : b.terms) {
    i64& slot = m[t.key];
    slot = checked_add(slot, checked_mul(t.c, bscale));
  }
  return from_map(std::move(m));
}

u64 key_add(u64 a, u64 b) {
  // per-variable exponent add; 8 bits per variable, overflow checked
  u64 out = 0;
  for (int v = 0; v < 8; ++v) {
    u64 e = ((a >> (8 * v)) & 0xff) + ((b >> (8 * v)) & 0xff);
    if (e > 0xff) throw BudgetError("exponent overflow in universal polynomial generation");
    out |= e << (8 * v);
  }
  return out;
}

UPoly pmul(const UPoly& a, const UPoly& b) {
  std::unordered_map<u64, i64> m;
  m.reserve(a.terms.size() * 2);
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) {
      i64& slot = m[key_add(ta.key, tb.key)];
      slot = checked_add(slot, checked_mul(ta.c, tb.c));
    }
  return from_map(std::move(m));
}

UPoly ppow(const UPoly& a, int e) {
  UPoly acc;
  acc.terms.push_back({1, 0});
  UPoly base = a;
  while (e) {
    if (e & 1) acc = pmul(acc, base);
    e >>= 1;
    if (e) base = pmul(base, base);
  }
  return acc;
}

UPoly pdiv_exact(const UPoly& a, i64 d) {
  UPoly out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) {
    if (t.c % d != 0)
      throw InternalError("integrality assertion failed in universal polynomial generation");
    out.terms.push_back({t.c / d, t.key});
  }
  return out;
}

UPoly pvar(int var, int exp) {
  UPoly out;
  out.terms.push_back({1, static_cast<u64>(exp) << (8 * var)});
  return out;
}

// w_i over the variable block starting at `offset`
UPoly ghost_upoly(i64 p, int i, int offset) {
  UPoly acc;
  for (int j = 0; j <= i; ++j) {
    UPoly term = ppow(pvar(offset + j, 1), static_cast<int>(ipow(p, i - j)));
    acc = padd(acc, term, ipow(p, j));
  }
  return acc;
}

UPoly reduce_coeffs_mod(const UPoly& a, i64 p) {
  UPoly out;
  for (const auto& t : a.terms) {
    i64 c = t.c % p;
    if (c < 0) c += p;
    if (c != 0) out.terms.push_back({c, t.key});
  }
  return out;
}

// Substitute polynomials for variables: used by the generation self-check.
UPoly pcompose(const UPoly& a, const std::vector<UPoly>& vals) {
  UPoly acc;
  for (const auto& t : a.terms) {
    UPoly term;
    term.terms.push_back({t.c, 0});
    for (size_t v = 0; v < vals.size(); ++v) {
      int e = upoly_exp(t.key, static_cast<int>(v));
      if (e) term = pmul(term, ppow(vals[v], e));
    }
    acc = padd(acc, term);
  }
  return acc;
}

bool pequal(const UPoly& a, const UPoly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].c != b.terms[i].c || a.terms[i].key != b.terms[i].key) return false;
  return true;
}

std::shared_ptr<const UniversalPolySet> generate(i64 p, int n) {
  auto set = std::make_shared<UniversalPolySet>();
  set->p = p;
  set->n = n;

  std::vector<UPoly> wx(n), wy(n);
  for (int i = 0; i < n; ++i) {
    wx[i] = ghost_upoly(p, i, 0);
    wy[i] = ghost_upoly(p, i, n);
  }

  auto solve = [&](int i, const UPoly& target, const std::vector<UPoly>& prev) -> UPoly {
    UPoly acc = target;
    for (int j = 0; j < i; ++j)
      acc = padd(acc, ppow(prev[j], static_cast<int>(ipow(p, i - j))), -ipow(p, j));
    return pdiv_exact(acc, ipow(p, i));
  };

  for (int i = 0; i < n; ++i) {
    set->S.push_back(solve(i, padd(wx[i], wy[i]), set->S));
    set->P.push_back(solve(i, pmul(wx[i], wy[i]), set->P));
    set->Neg.push_back(solve(i, padd(UPoly{}, wx[i], -1), set->Neg));
  }
  for (int i = 0; i + 1 < n; ++i) set->Fr.push_back(solve(i, wx[i + 1], set->Fr));

  // ghost identities, verified symbolically
  for (int i = 0; i < n; ++i) {
    std::vector<UPoly> svals(set->S.begin(), set->S.begin() + (i + 1));
    if (!pequal(pcompose(ghost_upoly(p, i, 0), svals), padd(wx[i], wy[i])))
      throw InternalError("ghost identity failed for the addition polynomials");
  }

  for (int i = 0; i < n; ++i) {
    set->S_modp.push_back(reduce_coeffs_mod(set->S[i], p));
    set->P_modp.push_back(reduce_coeffs_mod(set->P[i], p));
    set->Neg_modp.push_back(reduce_coeffs_mod(set->Neg[i], p));
  }
  return set;
}

// ---------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------

struct UEvaluator {
  Ring ring;
  std::vector<std::vector<Elem>> pows;  // pows[v][e] = vals[v]^e, filled lazily

  UEvaluator(const Ring& r, const std::vector<const Elem*>& vals) : ring(r) {
    pows.resize(vals.size());
    for (size_t v = 0; v < vals.size(); ++v) {
      pows[v].push_back(Elem::one(ring));
      pows[v].push_back(*vals[v]);
    }
  }

  const Elem& power(int v, int e) {
    auto& table = pows[v];
    while (static_cast<int>(table.size()) <= e) table.push_back(mul(table.back(), table[1]));
    return table[e];
  }

  Elem eval(const UPoly& poly) {
    Elem acc = Elem::zero(ring);
    for (const auto& t : poly.terms) {
      Elem term = Elem::one(ring);
      bool have = false;
      for (size_t v = 0; v < pows.size(); ++v) {
        int e = upoly_exp(t.key, static_cast<int>(v));
        if (!e) continue;
        term = have ? mul(term, power(static_cast<int>(v), e)) : power(static_cast<int>(v), e);
        have = true;
      }
      if (t.c != 1) term = mul_int(term, t.c);
      acc = add(acc, term);
    }
    return acc;
  }
};

const std::vector<UPoly>& pick(const Ring& r, const std::vector<UPoly>& raw,
                               const std::vector<UPoly>& modp) {
  return r->is_char_p() ? modp : raw;
}

void require_witt_ops(const WittVector& a) {
  if (a.n() == 0) throw RingError("W_0 carries no arithmetic");
}

void require_match(const WittVector& a, const WittVector& b) {
  if (a.p != b.p || a.n() != b.n() || !same_ring(a.ring, b.ring))
    throw RingError("Witt vector shape mismatch");
}

}  // namespace

int upoly_exp(std::uint64_t key, int var) { return static_cast<int>((key >> (8 * var)) & 0xff); }

std::uint64_t upoly_key(const std::vector<int>& exps) {
  u64 key = 0;
  for (size_t v = 0; v < exps.size(); ++v) key |= static_cast<u64>(exps[v] & 0xff) << (8 * v);
  return key;
}

int budget_max_n(std::int64_t p) {
  switch (p) {
    case 2: return 4;
    case 3: return 3;
    case 5: return 2;
    default: return 0;
  }
}

void check_budget(std::int64_t p, int n) {
  const int cap = budget_max_n(p);
  if (cap == 0)
    throw BudgetError("p=" + std::to_string(p) + " is outside the configured budget");
  if (n < 1 || n > cap)
    throw BudgetError("n=" + std::to_string(n) + " exceeds the budget for p=" + std::to_string(p));
}

std::shared_ptr<const UniversalPolySet> universal_polys(std::int64_t p, int n) {
  check_budget(p, n);
  static std::mutex mu;
  static std::map<std::pair<i64, int>, std::shared_ptr<const UniversalPolySet>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find({p, n});
  if (it != cache.end()) return it->second;
  auto set = generate(p, n);
  cache.emplace(std::make_pair(p, n), set);
  return set;
}

Elem ghost_component(std::int64_t p, const std::vector<Elem>& coords, int i) {
  Elem acc = Elem::zero(coords.at(0).ring());
  i64 pj = 1;
  for (int j = 0; j <= i; ++j) {
    Elem t = pow_int(coords[j], static_cast<u64>(ipow(p, i - j)));
    acc = add(acc, mul_int(t, pj));
    pj *= p;
  }
  return acc;
}

bool WittVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Elem& c) { return c.is_zero(); });
}

WittVector WittVector::make(std::int64_t p, const Ring& ring, std::vector<Elem> coords) {
  for (const Elem& c : coords)
    if (!same_ring(c.ring(), ring)) throw RingError("Witt coordinate ring mismatch");
  if (ring->is_char_p() && ring->p != p) throw RingError("ring characteristic differs from p");
  if (ring->is_lift() && ring->p != p) throw RingError("lift ring p differs from p");
  WittVector w;
  w.ring = ring;
  w.p = p;
  w.coords = std::move(coords);
  return w;
}

WittVector WittVector::zero(std::int64_t p, const Ring& ring, int n) {
  return make(p, ring, std::vector<Elem>(n, Elem::zero(ring)));
}

WittVector WittVector::w0(std::int64_t p, const Ring& ring) { return make(p, ring, {}); }

bool operator==(const WittVector& a, const WittVector& b) {
  return a.p == b.p && same_ring(a.ring, b.ring) && a.coords == b.coords;
}

namespace {

WittVector eval_set(const WittVector& a, const WittVector* b, const std::vector<UPoly>& polys) {
  std::vector<const Elem*> vals;
  for (const Elem& c : a.coords) vals.push_back(&c);
  if (b)
    for (const Elem& c : b->coords) vals.push_back(&c);
  UEvaluator ev(a.ring, vals);
  std::vector<Elem> out;
  out.reserve(a.coords.size());
  for (int i = 0; i < a.n(); ++i) out.push_back(ev.eval(polys[i]));
  return WittVector::make(a.p, a.ring, std::move(out));
}

}  // namespace

WittVector witt_add(const WittVector& a, const WittVector& b) {
  require_match(a, b);
  require_witt_ops(a);
  auto u = universal_polys(a.p, a.n());
  return eval_set(a, &b, pick(a.ring, u->S, u->S_modp));
}

WittVector witt_mul(const WittVector& a, const WittVector& b) {
  require_match(a, b);
  require_witt_ops(a);
  auto u = universal_polys(a.p, a.n());
  return eval_set(a, &b, pick(a.ring, u->P, u->P_modp));
}

WittVector witt_neg(const WittVector& a) {
  require_witt_ops(a);
  auto u = universal_polys(a.p, a.n());
  return eval_set(a, nullptr, pick(a.ring, u->Neg, u->Neg_modp));
}

WittVector witt_sub(const WittVector& a, const WittVector& b) { return witt_add(a, witt_neg(b)); }

WittVector witt_int_mul(const WittVector& a, std::int64_t k) {
  require_witt_ops(a);
  if (k < 0) return witt_neg(witt_int_mul(a, -k));
  WittVector acc = WittVector::zero(a.p, a.ring, a.n());
  WittVector base = a;
  while (k) {
    if (k & 1) acc = witt_add(acc, base);
    k >>= 1;
    if (k) base = witt_add(base, base);
  }
  return acc;
}

GhostVector ghost(const WittVector& a) {
  if (a.ring->is_char_p())
    throw RingError("ghost components are not faithful over characteristic-p rings");
  require_witt_ops(a);
  GhostVector g;
  g.ring = a.ring;
  g.p = a.p;
  for (int i = 0; i < a.n(); ++i) g.entries.push_back(ghost_component(a.p, a.coords, i));
  return g;
}

WittVector from_ghost(const GhostVector& g) {
  const int n = static_cast<int>(g.entries.size());
  if (n == 0) return WittVector::w0(g.p, g.ring);
  if (g.ring->is_char_p()) throw RingError("from_ghost needs a torsion-free ring");
  std::vector<Elem> coords;
  for (int i = 0; i < n; ++i) {
    Elem acc = g.entries[i];
    i64 pj = 1;
    for (int j = 0; j < i; ++j) {
      acc = sub(acc, mul_int(pow_int(coords[j], static_cast<u64>(ipow(g.p, i - j))), pj));
      pj *= g.p;
    }
    auto q = divide_by_p_pow(acc, g.p, i);
    if (!q) throw IntegralityError(i);
    coords.push_back(*q);
  }
  return WittVector::make(g.p, g.ring, std::move(coords));
}

WittVector frobenius_W(const WittVector& a) {
  require_witt_ops(a);
  if (a.ring->is_char_p()) {
    std::vector<Elem> out;
    out.reserve(a.coords.size());
    for (const Elem& c : a.coords) out.push_back(frobenius_power(c, 1));
    return WittVector::make(a.p, a.ring, std::move(out));
  }
  // torsion-free coefficients: F lands in W_{n-1}
  auto u = universal_polys(a.p, a.n());
  std::vector<const Elem*> vals;
  for (const Elem& c : a.coords) vals.push_back(&c);
  UEvaluator ev(a.ring, vals);
  std::vector<Elem> out;
  for (int i = 0; i + 1 < a.n(); ++i) out.push_back(ev.eval(u->Fr[i]));
  return WittVector::make(a.p, a.ring, std::move(out));
}

WittVector witt_frobenius_k(const WittVector& a, int k) {
  if (!a.ring->is_char_p()) throw RingError("iterated Frobenius needs characteristic p");
  if (k < 0) throw RingError("negative Frobenius power");
  std::vector<Elem> out;
  out.reserve(a.coords.size());
  for (const Elem& c : a.coords) out.push_back(frobenius_power(c, k));
  return WittVector::make(a.p, a.ring, std::move(out));
}

WittVector verschiebung(const WittVector& a, int m) {
  const int n = a.n();
  if (m == n + 1) {
    std::vector<Elem> out;
    out.push_back(Elem::zero(a.ring));
    out.insert(out.end(), a.coords.begin(), a.coords.end());
    return WittVector::make(a.p, a.ring, std::move(out));
  }
  if (m == n) {
    if (n == 0) return a;
    std::vector<Elem> out;
    out.push_back(Elem::zero(a.ring));
    out.insert(out.end(), a.coords.begin(), a.coords.end() - 1);
    return WittVector::make(a.p, a.ring, std::move(out));
  }
  throw RingError("verschiebung target must be n or n+1");
}

WittVector verschiebung_ext_k(const WittVector& a, int k) {
  WittVector out = a;
  for (int i = 0; i < k; ++i) out = verschiebung(out, out.n() + 1);
  return out;
}

WittVector verschiebung_trunc_k(const WittVector& a, int k) {
  WittVector out = a;
  for (int i = 0; i < k; ++i) out = verschiebung(out, out.n());
  return out;
}

WittVector teichmuller(const Elem& c, int n, std::int64_t p_hint) {
  const Ring& r = c.ring();
  i64 p = r->p != 0 ? r->p : p_hint;
  if (p == 0) throw RingError("teichmuller over a torsion-free ring needs an explicit p");
  if (r->p != 0 && p_hint != 0 && p_hint != r->p) throw RingError("p disagrees with the ring");
  std::vector<Elem> coords(n, Elem::zero(r));
  if (n > 0) coords[0] = c;
  return WittVector::make(p, r, std::move(coords));
}

WittVector scale_teich(const WittVector& a, const Elem& b) {
  if (!same_ring(a.ring, b.ring())) throw RingError("scale_teich ring mismatch");
  std::vector<Elem> out;
  out.reserve(a.coords.size());
  for (int i = 0; i < a.n(); ++i) {
    Elem bp = a.ring->is_char_p() ? frobenius_power(b, i)
                                  : pow_int(b, static_cast<u64>(ipow(a.p, i)));
    out.push_back(mul(a.coords[i], bp));
  }
  return WittVector::make(a.p, a.ring, std::move(out));
}

WittVector artin_schreier(const WittVector& a) {
  if (!a.ring->is_char_p()) throw RingError("artin_schreier needs characteristic p");
  return witt_sub(frobenius_W(a), a);
}

WittVector truncate(const WittVector& a, int m) {
  if (m < 1 || m > a.n()) throw RingError("truncation length out of range");
  return WittVector::make(a.p, a.ring,
                          std::vector<Elem>(a.coords.begin(), a.coords.begin() + m));
}

std::vector<Elem> teich_decompose(const WittVector& a) {
  std::vector<Elem> out;
  WittVector cur = a;
  while (cur.n() > 1) {
    Elem x0 = cur.coords[0];
    out.push_back(x0);
    WittVector rest = witt_sub(cur, teichmuller(x0, cur.n()));
    if (!rest.coords[0].is_zero()) throw InternalError("teich_decompose peel left a residue");
    cur = WittVector::make(cur.p, cur.ring,
                           std::vector<Elem>(rest.coords.begin() + 1, rest.coords.end()));
  }
  if (cur.n() == 1) out.push_back(cur.coords[0]);
  return out;
}

}  // namespace wittlab
