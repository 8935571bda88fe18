#include "wittlab/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace wittlab {

namespace {

using i64 = std::int64_t;

i64 canon(i64 v, i64 m) {
  v %= m;
  return v < 0 ? v + m : v;
}

i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw BudgetError("integer overflow in exact arithmetic");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw BudgetError("integer overflow in exact arithmetic");
  return r;
}

i64 pow_i64(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- dense polynomial helpers over F_p, for the irreducibility check ---

std::vector<i64> fp_poly_mod(std::vector<i64> a, const std::vector<i64>& m, i64 p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
    i64 c = canon(a[d], p);
    if (c == 0) continue;
    for (int j = 0; j < dm; ++j) a[d - dm + j] = canon(a[d - dm + j] - c * m[j], p);
    a[d] = 0;
  }
  a.resize(dm);
  return a;
}

bool fp_poly_is_zero(const std::vector<i64>& a) {
  return std::all_of(a.begin(), a.end(), [](i64 c) { return c == 0; });
}

// Trial division by every monic polynomial of degree <= f/2.
bool fp_irreducible(const std::vector<i64>& m, i64 p) {
  const int f = static_cast<int>(m.size()) - 1;
  if (f < 1 || m[f] != 1) return false;
  if (f == 1) return true;
  std::vector<i64> div(f / 2 + 2, 0);
  for (int d = 1; d <= f / 2; ++d) {
    std::vector<i64> g(d + 1, 0);
    g[d] = 1;
    // enumerate lower coefficients in base p
    const i64 count = pow_i64(p, d);
    for (i64 idx = 0; idx < count; ++idx) {
      i64 t = idx;
      for (int j = 0; j < d; ++j) {
        g[j] = t % p;
        t /= p;
      }
      if (fp_poly_is_zero(fp_poly_mod(m, g, p))) return false;
    }
  }
  return true;
}

void check_field_modulus(i64 p, int f, const std::vector<i64>& mod_canon) {
  if (static_cast<int>(mod_canon.size()) != f + 1 || mod_canon[f] != 1)
    throw RingError("modulus must be monic of degree f");
  std::vector<i64> mp(mod_canon.size());
  for (size_t i = 0; i < mod_canon.size(); ++i) mp[i] = canon(mod_canon[i], p);
  if (!fp_irreducible(mp, p)) throw RingError("modulus is reducible over F_p");
}

// ---------------------------------------------------------------------
// scalar (single-coefficient) arithmetic on flat int64 blocks
// ---------------------------------------------------------------------

constexpr int kMaxF = 8;

struct Frac {
  i64 num, den;
};

Frac frac_norm(i64 n, i64 d) {
  if (d == 0) throw RingError("zero denominator");
  if (n == 0) return {0, 1};
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i64 g = std::gcd(std::llabs(n), d);
  return {n / g, d / g};
}

Frac frac_add(Frac a, Frac b) {
  return frac_norm(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
}

Frac frac_mul(Frac a, Frac b) {
  return frac_norm(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

struct ScalarOps {
  const RingDescriptor& R;
  int W;
  i64 m;  // scalar modulus; 0 = integers, -1 = rationals

  explicit ScalarOps(const RingDescriptor& r) : R(r), W(r.width()), m(r.scalar_modulus()) {}

  bool modular() const { return m > 0; }

  void norm(i64* a) const {
    if (modular())
      for (int j = 0; j < W; ++j) a[j] = canon(a[j], m);
    else if (m == -1) {
      Frac f = frac_norm(a[0], a[1]);
      a[0] = f.num;
      a[1] = f.den;
    }
  }

  bool is_zero(const i64* a) const {
    for (int j = 0; j < (m == -1 ? 1 : W); ++j)
      if (a[j] != 0) return false;
    return true;
  }

  void set_zero(i64* a) const {
    for (int j = 0; j < W; ++j) a[j] = 0;
    if (m == -1) a[1] = 1;
  }

  void set_int(i64* a, i64 v) const {
    set_zero(a);
    a[0] = v;
    norm(a);
  }

  void add(const i64* a, const i64* b, i64* out) const {
    if (m == -1) {
      Frac f = frac_add({a[0], a[1]}, {b[0], b[1]});
      out[0] = f.num;
      out[1] = f.den;
      return;
    }
    for (int j = 0; j < W; ++j) out[j] = modular() ? canon(a[j] + b[j], m) : checked_add(a[j], b[j]);
  }

  void sub(const i64* a, const i64* b, i64* out) const {
    if (m == -1) {
      Frac f = frac_add({a[0], a[1]}, {-b[0], b[1]});
      out[0] = f.num;
      out[1] = f.den;
      return;
    }
    for (int j = 0; j < W; ++j)
      out[j] = modular() ? canon(a[j] - b[j], m) : checked_add(a[j], -b[j]);
  }

  void negate(const i64* a, i64* out) const {
    if (m == -1) {
      out[0] = -a[0];
      out[1] = a[1];
      return;
    }
    for (int j = 0; j < W; ++j) out[j] = modular() ? canon(-a[j], m) : -a[j];
  }

  // Fold an unreduced degree <= 2W-2 product (length 2W-1) down to W slots.
  void fold(i64* prod, i64* out) const {
    for (int d = 2 * W - 2; d >= W; --d) {
      i64 c = canon(prod[d], m);
      if (c == 0) continue;
      for (int j = 0; j < W; ++j) prod[d - W + j] = canon(prod[d - W + j] - mulmod(c, R.modulus[j], m), m);
      prod[d] = 0;
    }
    for (int j = 0; j < W; ++j) out[j] = canon(prod[j], m);
  }

  void mul(const i64* a, const i64* b, i64* out) const {
    if (m == -1) {
      Frac f = frac_mul({a[0], a[1]}, {b[0], b[1]});
      out[0] = f.num;
      out[1] = f.den;
      return;
    }
    if (m == 0) {
      out[0] = checked_mul(a[0], b[0]);
      return;
    }
    i64 prod[2 * kMaxF - 1] = {0};
    for (int j = 0; j < W; ++j) {
      if (a[j] == 0) continue;
      for (int k = 0; k < W; ++k) prod[j + k] += mulmod(a[j], b[k], m);
    }
    fold(prod, out);
  }

  void mul_small(const i64* a, i64 k, i64* out) const {
    if (m == -1) {
      Frac f = frac_mul({a[0], a[1]}, {k, 1});
      out[0] = f.num;
      out[1] = f.den;
      return;
    }
    if (m == 0) {
      out[0] = checked_mul(a[0], k);
      return;
    }
    i64 kc = canon(k, m);
    for (int j = 0; j < W; ++j) out[j] = mulmod(a[j], kc, m);
  }

  void pow(const i64* a, std::uint64_t e, i64* out) const {
    i64 base[kMaxF], acc[kMaxF], tmp[kMaxF];
    std::copy(a, a + W, base);
    set_int(acc, 1);
    while (e) {
      if (e & 1) {
        mul(acc, base, tmp);
        std::copy(tmp, tmp + W, acc);
      }
      e >>= 1;
      if (e) {
        mul(base, base, tmp);
        std::copy(tmp, tmp + W, base);
      }
    }
    std::copy(acc, acc + W, out);
  }
};

// Hensel inversion in a lift ring: start from the residue-field inverse,
// then z -> z(2 - a z) doubles the p-adic precision per step.
void lift_invert(const ScalarOps& ops, const i64* a, i64* out) {
  const RingDescriptor& R = ops.R;
  bool unit = false;
  for (int j = 0; j < R.f; ++j) unit |= (a[j] % R.p) != 0;
  if (!unit) throw RingError("non-unit lift-ring element");

  RingDescriptor field;
  field.kind = R.f == 1 ? RingKind::PrimeField : RingKind::FiniteField;
  field.p = R.p;
  field.f = R.f;
  for (i64 c : R.modulus) field.modulus.push_back(canon(c, R.p));
  ScalarOps fops(field);

  i64 az[kMaxF], z[kMaxF], two_minus[kMaxF], tmp[kMaxF];
  for (int j = 0; j < R.f; ++j) az[j] = canon(a[j], R.p);
  const std::uint64_t q = static_cast<std::uint64_t>(pow_i64(R.p, R.f));
  fops.pow(az, q - 2, z);  // inverse in F_q

  int digits = 1;
  while (digits < R.N) {
    ops.mul(a, z, tmp);
    i64 two[kMaxF];
    ops.set_int(two, 2);
    ops.sub(two, tmp, two_minus);
    ops.mul(z, two_minus, tmp);
    std::copy(tmp, tmp + R.f, z);
    digits *= 2;
  }
  ops.mul(a, z, tmp);
  i64 one[kMaxF];
  ops.set_int(one, 1);
  for (int j = 0; j < R.f; ++j)
    if (tmp[j] != one[j]) throw InternalError("lift inversion failed to converge");
  std::copy(z, z + R.f, out);
}

void scalar_invert(const RingDescriptor& R, const i64* a, i64* out) {
  ScalarOps ops(R);
  if (ops.is_zero(a)) throw RingError("cannot invert zero");
  switch (R.kind) {
    case RingKind::PrimeField:
    case RingKind::FiniteField: {
      const std::uint64_t q = static_cast<std::uint64_t>(pow_i64(R.p, R.f));
      ops.pow(a, q - 2, out);
      i64 check[kMaxF], one[kMaxF];
      ops.mul(a, out, check);
      ops.set_int(one, 1);
      for (int j = 0; j < R.f; ++j)
        if (check[j] != one[j]) throw InternalError("field inversion failed");
      return;
    }
    case RingKind::LiftRing:
      lift_invert(ops, a, out);
      return;
    case RingKind::Integers:
      if (a[0] == 1 || a[0] == -1) {
        out[0] = a[0];
        return;
      }
      throw RingError("non-unit integer");
    case RingKind::Rationals:
      out[0] = a[1] * (a[0] < 0 ? -1 : 1);
      out[1] = std::llabs(a[0]);
      return;
    default:
      throw RingError("inversion not defined for this ring kind");
  }
}

}  // namespace

// ---------------------------------------------------------------------
// descriptors
// ---------------------------------------------------------------------

const char* ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::PrimeField: return "prime-field";
    case RingKind::FiniteField: return "finite-field";
    case RingKind::LaurentPoly: return "laurent-poly";
    case RingKind::LiftRing: return "lift-ring";
    case RingKind::LiftLaurent: return "lift-laurent";
    case RingKind::Integers: return "integers";
    case RingKind::Rationals: return "rationals";
  }
  return "?";
}

std::int64_t RingDescriptor::scalar_modulus() const {
  switch (kind) {
    case RingKind::PrimeField:
    case RingKind::FiniteField:
    case RingKind::LaurentPoly:
      return p;
    case RingKind::LiftRing:
    case RingKind::LiftLaurent:
      return pow_i64(p, N);
    case RingKind::Integers:
      return 0;
    case RingKind::Rationals:
      return -1;
  }
  return 0;
}

int RingDescriptor::width() const {
  if (kind == RingKind::Rationals) return 2;
  if (kind == RingKind::Integers) return 1;
  return f;
}

bool same_descriptor(const RingDescriptor& a, const RingDescriptor& b) {
  return a.kind == b.kind && a.p == b.p && a.f == b.f && a.N == b.N && a.modulus == b.modulus;
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_descriptor(*a, *b);
}

std::vector<std::int64_t> default_modulus(std::int64_t p, int f) {
  static const std::map<std::pair<i64, int>, std::vector<i64>> table = {
      {{2, 2}, {1, 1, 1}},  // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},  // x^3 + x + 1
      {{3, 2}, {1, 0, 1}},  // x^2 + 1
      {{5, 2}, {2, 0, 1}},  // x^2 + 2
  };
  if (f == 1) return {0, 1};
  auto it = table.find({p, f});
  if (it == table.end())
    throw RingError("no default modulus for p=" + std::to_string(p) + ", f=" + std::to_string(f));
  return it->second;
}

namespace {

Ring finish(RingDescriptor d) { return std::make_shared<const RingDescriptor>(std::move(d)); }

RingDescriptor char_p_descriptor(RingKind kind, i64 p, int f, std::vector<i64> modulus) {
  if (!is_prime(p)) throw RingError("p must be prime");
  if (f < 1 || f > kMaxF - 1) throw RingError("extension degree out of range");
  if (modulus.empty()) modulus = default_modulus(p, f);
  for (i64& c : modulus) c = canon(c, p);
  if (f > 1) check_field_modulus(p, f, modulus);
  RingDescriptor d;
  d.kind = kind;
  d.p = p;
  d.f = f;
  d.modulus = std::move(modulus);
  return d;
}

RingDescriptor lift_descriptor(RingKind kind, i64 p, int f, int N, std::vector<i64> modulus) {
  if (!is_prime(p)) throw RingError("p must be prime");
  if (f < 1 || f > kMaxF - 1) throw RingError("extension degree out of range");
  if (N < 1) throw RingError("lift precision N must be >= 1");
  if (modulus.empty()) modulus = default_modulus(p, f);
  RingDescriptor d;
  d.kind = kind;
  d.p = p;
  d.f = f;
  d.N = N;
  // guard representability of p^N in int64 arithmetic with 128-bit products
  i64 m = 1;
  for (int i = 0; i < N; ++i) {
    if (m > (i64{1} << 62) / p) throw BudgetError("lift precision p^N too large");
    m *= p;
  }
  d.modulus.resize(modulus.size());
  for (size_t i = 0; i < modulus.size(); ++i) d.modulus[i] = canon(modulus[i], m);
  if (static_cast<int>(d.modulus.size()) != f + 1 || d.modulus[f] != 1)
    throw RingError("modulus must be monic of degree f");
  if (f > 1) {
    std::vector<i64> mp(d.modulus.size());
    for (size_t i = 0; i < d.modulus.size(); ++i) mp[i] = canon(d.modulus[i], p);
    if (!fp_irreducible(mp, p)) throw RingError("lift modulus is reducible mod p");
  }
  return d;
}

}  // namespace

Ring make_integers() { return finish(RingDescriptor{RingKind::Integers, 0, 1, {}, 0}); }
Ring make_rationals() { return finish(RingDescriptor{RingKind::Rationals, 0, 1, {}, 0}); }

Ring make_prime_field(std::int64_t p) {
  if (!is_prime(p)) throw RingError("p must be prime");
  RingDescriptor d;
  d.kind = RingKind::PrimeField;
  d.p = p;
  d.f = 1;
  d.modulus = {0, 1};
  return finish(std::move(d));
}

Ring make_finite_field(std::int64_t p, int f, std::vector<std::int64_t> modulus) {
  if (f == 1) return make_prime_field(p);
  return finish(char_p_descriptor(RingKind::FiniteField, p, f, std::move(modulus)));
}

Ring make_laurent(std::int64_t p, int f, std::vector<std::int64_t> modulus) {
  return finish(char_p_descriptor(RingKind::LaurentPoly, p, f, std::move(modulus)));
}

Ring make_lift_ring(std::int64_t p, int f, int N, std::vector<std::int64_t> modulus) {
  return finish(lift_descriptor(RingKind::LiftRing, p, f, N, std::move(modulus)));
}

Ring make_lift_laurent(std::int64_t p, int f, int N, std::vector<std::int64_t> modulus) {
  return finish(lift_descriptor(RingKind::LiftLaurent, p, f, N, std::move(modulus)));
}

Ring base_scalar_ring(const Ring& r) {
  if (!r || !r->is_laurent()) throw RingError("base_scalar_ring needs a Laurent ring");
  if (r->kind == RingKind::LaurentPoly) return make_finite_field(r->p, r->f, r->modulus);
  return make_lift_ring(r->p, r->f, r->N, r->modulus);
}

Ring laurent_over(const Ring& scalar) {
  if (!scalar) throw RingError("null ring");
  switch (scalar->kind) {
    case RingKind::PrimeField:
    case RingKind::FiniteField:
      return make_laurent(scalar->p, scalar->f, scalar->modulus);
    case RingKind::LiftRing:
      return make_lift_laurent(scalar->p, scalar->f, scalar->N, scalar->modulus);
    default:
      throw RingError("no Laurent ring over this scalar kind");
  }
}

Ring residue_ring(const Ring& lift) {
  if (!lift || !lift->is_lift()) throw RingError("residue_ring needs a lift ring");
  std::vector<i64> mod(lift->modulus.size());
  for (size_t i = 0; i < mod.size(); ++i) mod[i] = canon(lift->modulus[i], lift->p);
  if (lift->kind == RingKind::LiftRing) return make_finite_field(lift->p, lift->f, mod);
  return make_laurent(lift->p, lift->f, mod);
}

// ---------------------------------------------------------------------
// elements
// ---------------------------------------------------------------------

namespace {

void normalize_payload(const Ring& r, std::vector<i64>& flat, std::vector<std::int32_t>& exps) {
  ScalarOps ops(*r);
  const int W = ops.W;
  if (!r->is_laurent()) {
    if (flat.size() != static_cast<size_t>(W)) throw InternalError("bad scalar payload size");
    ops.norm(flat.data());
    return;
  }
  if (flat.size() != exps.size() * static_cast<size_t>(W))
    throw InternalError("bad laurent payload size");
  size_t out = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    ops.norm(flat.data() + i * W);
    if (ops.is_zero(flat.data() + i * W)) continue;
    if (out != i) {
      exps[out] = exps[i];
      std::copy(flat.begin() + i * W, flat.begin() + (i + 1) * W, flat.begin() + out * W);
    }
    ++out;
  }
  exps.resize(out);
  flat.resize(out * W);
}

}  // namespace

Elem Elem::raw(Ring r, std::vector<std::int64_t> flat, std::vector<std::int32_t> exps) {
  Elem e;
  e.ring_ = std::move(r);
  e.flat_ = std::move(flat);
  e.exps_ = std::move(exps);
  normalize_payload(e.ring_, e.flat_, e.exps_);
  return e;
}

Elem Elem::zero(const Ring& r) {
  if (r->is_laurent()) return raw(r, {}, {});
  std::vector<i64> flat(r->width(), 0);
  if (r->kind == RingKind::Rationals) flat[1] = 1;
  return raw(r, std::move(flat), {});
}

Elem Elem::one(const Ring& r) { return from_int(r, 1); }

Elem Elem::from_int(const Ring& r, std::int64_t v) {
  if (r->is_laurent()) return monomial(r, 0, {v});
  std::vector<i64> flat(r->width(), 0);
  flat[0] = v;
  if (r->kind == RingKind::Rationals) flat[1] = 1;
  return raw(r, std::move(flat), {});
}

Elem Elem::scalar(const Ring& r, std::vector<std::int64_t> coeffs) {
  if (r->is_laurent()) throw RingError("scalar() needs a non-Laurent ring");
  if (coeffs.size() > static_cast<size_t>(r->width())) throw RingError("too many coefficients");
  coeffs.resize(r->width(), 0);
  if (r->kind == RingKind::Rationals && coeffs[1] == 0) coeffs[1] = 1;
  return raw(r, std::move(coeffs), {});
}

Elem Elem::laurent(const Ring& r,
                   const std::vector<std::pair<int, std::vector<std::int64_t>>>& terms) {
  if (!r->is_laurent()) throw RingError("laurent() needs a Laurent ring");
  const int W = r->width();
  std::vector<std::pair<int, std::vector<i64>>> sorted = terms;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<i64> flat;
  std::vector<std::int32_t> exps;
  for (const auto& [e, c] : sorted) {
    if (!exps.empty() && exps.back() == e) throw RingError("duplicate Laurent exponent");
    if (c.size() > static_cast<size_t>(W)) throw RingError("too many coefficients");
    exps.push_back(e);
    flat.insert(flat.end(), c.begin(), c.end());
    flat.resize(exps.size() * W, 0);
  }
  return raw(r, std::move(flat), std::move(exps));
}

Elem Elem::monomial(const Ring& r, int exp, std::vector<std::int64_t> coeff) {
  return laurent(r, {{exp, std::move(coeff)}});
}

bool Elem::is_zero() const {
  if (!ring_) return true;
  if (ring_->is_laurent()) return exps_.empty();
  return ScalarOps(*ring_).is_zero(flat_.data());
}

const std::vector<std::int64_t>& Elem::scalar_coeffs() const {
  if (ring_->is_laurent()) throw RingError("scalar_coeffs on a Laurent element");
  return flat_;
}

std::vector<std::pair<int, std::vector<std::int64_t>>> Elem::laurent_terms() const {
  if (!ring_->is_laurent()) throw RingError("laurent_terms on a scalar element");
  const int W = ring_->width();
  std::vector<std::pair<int, std::vector<i64>>> out;
  out.reserve(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i)
    out.emplace_back(exps_[i], std::vector<i64>(flat_.begin() + i * W, flat_.begin() + (i + 1) * W));
  return out;
}

bool operator==(const Elem& a, const Elem& b) {
  return same_ring(a.ring_, b.ring_) && a.exps_ == b.exps_ && a.flat_ == b.flat_;
}

// ---------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------

namespace {

void require_same(const Elem& x, const Elem& y) {
  if (!same_ring(x.ring(), y.ring())) throw RingError("ring mismatch");
}

Elem laurent_addsub(const Elem& x, const Elem& y, bool subtract) {
  const Ring& r = x.ring();
  ScalarOps ops(*r);
  const int W = ops.W;
  std::vector<std::int32_t> exps;
  std::vector<i64> flat;
  size_t i = 0, j = 0;
  i64 buf[kMaxF];
  const auto& xe = x.exps();
  const auto& ye = y.exps();
  while (i < xe.size() || j < ye.size()) {
    int e;
    if (j >= ye.size() || (i < xe.size() && xe[i] < ye[j])) {
      e = xe[i];
      std::copy(x.flat().begin() + i * W, x.flat().begin() + (i + 1) * W, buf);
      ++i;
    } else if (i >= xe.size() || ye[j] < xe[i]) {
      e = ye[j];
      if (subtract)
        ops.negate(y.flat().data() + j * W, buf);
      else
        std::copy(y.flat().begin() + j * W, y.flat().begin() + (j + 1) * W, buf);
      ++j;
    } else {
      e = xe[i];
      if (subtract)
        ops.sub(x.flat().data() + i * W, y.flat().data() + j * W, buf);
      else
        ops.add(x.flat().data() + i * W, y.flat().data() + j * W, buf);
      ++i;
      ++j;
    }
    exps.push_back(e);
    flat.insert(flat.end(), buf, buf + W);
  }
  return Elem::raw(r, std::move(flat), std::move(exps));
}

constexpr std::int64_t kDenseCap = 1 << 22;

Elem laurent_mul(const Elem& x, const Elem& y) {
  const Ring& r = x.ring();
  if (x.is_zero() || y.is_zero()) return Elem::zero(r);
  ScalarOps ops(*r);
  const int W = ops.W;
  const int PW = 2 * W - 1;
  const i64 m = ops.m;
  const auto& xe = x.exps();
  const auto& ye = y.exps();
  const i64 lo = static_cast<i64>(xe.front()) + ye.front();
  const i64 hi = static_cast<i64>(xe.back()) + ye.back();
  const i64 span = hi - lo + 1;
  if (span > kDenseCap) throw BudgetError("Laurent product exponent span too large");

  std::vector<i64> acc(static_cast<size_t>(span) * PW, 0);
  for (size_t i = 0; i < xe.size(); ++i) {
    const i64* a = x.flat().data() + i * W;
    for (size_t j = 0; j < ye.size(); ++j) {
      const i64* b = y.flat().data() + j * W;
      i64* slot = acc.data() + (static_cast<i64>(xe[i]) + ye[j] - lo) * PW;
      for (int u = 0; u < W; ++u) {
        if (a[u] == 0) continue;
        for (int v = 0; v < W; ++v) slot[u + v] += mulmod(a[u], b[v], m);
      }
    }
  }

  std::vector<std::int32_t> exps;
  std::vector<i64> flat;
  i64 out[kMaxF];
  for (i64 e = 0; e < span; ++e) {
    i64* slot = acc.data() + e * PW;
    bool any = false;
    for (int u = 0; u < PW; ++u) any |= slot[u] != 0;
    if (!any) continue;
    ops.fold(slot, out);
    bool nz = false;
    for (int u = 0; u < W; ++u) nz |= out[u] != 0;
    if (!nz) continue;
    exps.push_back(static_cast<std::int32_t>(lo + e));
    flat.insert(flat.end(), out, out + W);
  }
  return Elem::raw(r, std::move(flat), std::move(exps));
}

Elem scalar_binop(const Elem& x, const Elem& y, ArithOp op) {
  ScalarOps ops(*x.ring());
  std::vector<i64> out(ops.W);
  switch (op) {
    case ArithOp::Add: ops.add(x.flat().data(), y.flat().data(), out.data()); break;
    case ArithOp::Sub: ops.sub(x.flat().data(), y.flat().data(), out.data()); break;
    case ArithOp::Mul: ops.mul(x.flat().data(), y.flat().data(), out.data()); break;
  }
  return Elem::raw(x.ring(), std::move(out), {});
}

}  // namespace

Elem ring_arith(const Elem& x, const Elem& y, ArithOp op) {
  require_same(x, y);
  if (x.ring()->is_laurent()) {
    switch (op) {
      case ArithOp::Add: return laurent_addsub(x, y, false);
      case ArithOp::Sub: return laurent_addsub(x, y, true);
      case ArithOp::Mul: return laurent_mul(x, y);
    }
  }
  return scalar_binop(x, y, op);
}

Elem add(const Elem& x, const Elem& y) { return ring_arith(x, y, ArithOp::Add); }
Elem sub(const Elem& x, const Elem& y) { return ring_arith(x, y, ArithOp::Sub); }
Elem mul(const Elem& x, const Elem& y) { return ring_arith(x, y, ArithOp::Mul); }

Elem neg(const Elem& x) {
  ScalarOps ops(*x.ring());
  std::vector<i64> flat(x.flat().size());
  const int W = ops.W;
  for (size_t i = 0; i * W < flat.size(); ++i)
    ops.negate(x.flat().data() + i * W, flat.data() + i * W);
  return Elem::raw(x.ring(), std::move(flat), x.exps());
}

Elem mul_int(const Elem& x, std::int64_t k) {
  ScalarOps ops(*x.ring());
  std::vector<i64> flat(x.flat().size());
  const int W = ops.W;
  for (size_t i = 0; i * W < flat.size(); ++i)
    ops.mul_small(x.flat().data() + i * W, k, flat.data() + i * W);
  return Elem::raw(x.ring(), std::move(flat), x.exps());
}

Elem pow_int(const Elem& x, std::uint64_t e) {
  Elem acc = Elem::one(x.ring());
  Elem base = x;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

Elem invert(const Elem& x) {
  const Ring& r = x.ring();
  if (x.is_zero()) throw RingError("cannot invert zero");
  if (!r->is_laurent()) {
    std::vector<i64> out(r->width());
    scalar_invert(*r, x.flat().data(), out.data());
    return Elem::raw(r, std::move(out), {});
  }
  if (x.term_count() != 1)
    throw RingError("exact Laurent inverse requires a monomial; use invert_series");
  Ring base = base_scalar_ring(r);
  std::vector<i64> out(base->width());
  scalar_invert(*base, x.flat().data(), out.data());
  return Elem::monomial(r, -x.exps()[0], std::move(out));
}

Series series_of(const Elem& x) {
  if (!x.ring()->is_laurent()) throw RingError("series_of needs a Laurent element");
  return Series{x, 1 << 30};  // an exact polynomial is known to every order
}

namespace {

Elem truncate_above(const Elem& x, int order) {
  const int W = x.ring()->width();
  std::vector<std::int32_t> exps;
  std::vector<i64> flat;
  for (size_t i = 0; i < x.exps().size(); ++i) {
    if (x.exps()[i] > order) break;
    exps.push_back(x.exps()[i]);
    flat.insert(flat.end(), x.flat().begin() + i * W, x.flat().begin() + (i + 1) * W);
  }
  return Elem::raw(x.ring(), std::move(flat), std::move(exps));
}

}  // namespace

Series invert_series(const Elem& x, int order) {
  const Ring& r = x.ring();
  if (!r->is_laurent()) throw RingError("invert_series needs a Laurent element");
  if (x.is_zero()) throw RingError("cannot invert zero");
  const int v = x.exps().front();
  Elem lead = leading_coeff(x);
  Elem lead_inv_scalar = invert(lead);
  Elem lead_inv = Elem::monomial(r, -v, lead_inv_scalar.scalar_coeffs());
  // u = x * lead_inv - 1 has positive valuation; invert 1 + u geometrically.
  Elem u = sub(mul(x, lead_inv), Elem::one(r));
  const int inner_order = order + v;  // orders needed before the final t^-v shift
  Elem acc = Elem::one(r);
  Elem pw = Elem::one(r);
  if (!u.is_zero()) {
    const int step = u.exps().front();
    for (int k = 1; k * step <= inner_order; ++k) {
      pw = truncate_above(mul(pw, neg(u)), inner_order);
      if (pw.is_zero()) break;
      acc = add(acc, pw);
    }
  }
  return Series{truncate_above(mul(acc, lead_inv), order), order};
}

Series series_add(const Series& a, const Series& b) {
  const int order = std::min(a.order, b.order);
  return Series{truncate_above(add(a.poly, b.poly), order), order};
}

Series series_mul_poly(const Series& s, const Elem& poly) {
  if (poly.is_zero()) return Series{Elem::zero(s.poly.ring()), 1 << 30};
  const long long raw = static_cast<long long>(s.order) + poly.exps().front();
  const int order = static_cast<int>(std::min<long long>(raw, 1 << 30));
  return Series{truncate_above(mul(s.poly, poly), order), order};
}

Elem frobenius_power(const Elem& c, int k) {
  const Ring& r = c.ring();
  if (!r->is_char_p()) throw RingError("frobenius_power needs a characteristic-p ring");
  if (k < 0) throw RingError("frobenius_power needs k >= 0");
  if (k == 0) return c;
  i64 q = 1;
  for (int i = 0; i < k; ++i) q = checked_mul(q, r->p);
  if (!r->is_laurent()) return pow_int(c, static_cast<std::uint64_t>(q));
  // (sum c_e t^e)^(p^k) = sum c_e^(p^k) t^(e p^k) in characteristic p
  ScalarOps ops(*r);
  const int W = ops.W;
  std::vector<std::int32_t> exps(c.exps().size());
  std::vector<i64> flat(c.flat().size());
  for (size_t i = 0; i < exps.size(); ++i) {
    i64 e = checked_mul(c.exps()[i], q);
    if (e > INT32_MAX || e < INT32_MIN) throw BudgetError("Laurent exponent overflow");
    exps[i] = static_cast<std::int32_t>(e);
    ops.pow(c.flat().data() + i * W, static_cast<std::uint64_t>(q), flat.data() + i * W);
  }
  return Elem::raw(r, std::move(flat), std::move(exps));
}

Elem trace_to_prime(const Elem& c) {
  const Ring& r = c.ring();
  if (r->kind == RingKind::PrimeField) return c;
  if (r->kind != RingKind::FiniteField) throw RingError("trace_to_prime needs a finite-field element");
  Elem acc = c;
  Elem pw = c;
  for (int i = 1; i < r->f; ++i) {
    pw = frobenius_power(pw, 1);
    acc = add(acc, pw);
  }
  const auto& coeffs = acc.scalar_coeffs();
  for (int j = 1; j < r->f; ++j)
    if (coeffs[j] != 0) throw InternalError("trace left the prime field");
  return Elem::scalar(make_prime_field(r->p), {coeffs[0]});
}

Elem teichmuller_lift_coeff(const Elem& c, const Ring& lift) {
  const Ring& r = c.ring();
  if (!(r->kind == RingKind::PrimeField || r->kind == RingKind::FiniteField))
    throw RingError("teichmuller_lift_coeff needs a finite-field element");
  if (!lift || lift->kind != RingKind::LiftRing) throw RingError("target must be a lift ring");
  if (lift->p != r->p || lift->f != r->f) throw RingError("lift ring does not match the field");
  for (int j = 0; j <= r->f; ++j)
    if (canon(lift->modulus[j], r->p) != (j < static_cast<int>(r->modulus.size()) ? r->modulus[j] : 0))
      throw RingError("lift modulus does not reduce to the field modulus");

  std::vector<i64> coeffs = c.scalar_coeffs();
  Elem z = Elem::scalar(lift, coeffs);
  const std::uint64_t q = static_cast<std::uint64_t>(pow_i64(r->p, r->f));
  for (int it = 0; it < lift->N + 2; ++it) {
    Elem zq = pow_int(z, q);
    if (zq == z) return z;
    z = zq;
  }
  throw RingError("Teichmuller iteration failed to stabilize (inconsistent modulus lift)");
}

Elem lift_laurent_elem(const Elem& x, const Ring& lift_laurent) {
  if (!x.ring()->is_laurent() || x.ring()->kind != RingKind::LaurentPoly)
    throw RingError("lift_laurent_elem needs a Laurent polynomial over F_q");
  if (!lift_laurent || lift_laurent->kind != RingKind::LiftLaurent)
    throw RingError("target must be a lift-Laurent ring");
  Ring scalar_lift = base_scalar_ring(lift_laurent);
  Ring field = base_scalar_ring(x.ring());
  std::vector<std::pair<int, std::vector<i64>>> out;
  for (const auto& [e, c] : x.laurent_terms()) {
    Elem w = teichmuller_lift_coeff(Elem::scalar(field, c), scalar_lift);
    out.emplace_back(e, w.scalar_coeffs());
  }
  return Elem::laurent(lift_laurent, out);
}

Elem reduce_mod_p(const Elem& x) {
  const Ring& r = x.ring();
  if (!r->is_lift()) throw RingError("reduce_mod_p needs a lift-ring element");
  Ring target = residue_ring(r);
  std::vector<i64> flat(x.flat().size());
  for (size_t i = 0; i < flat.size(); ++i) flat[i] = canon(x.flat()[i], r->p);
  return Elem::raw(target, std::move(flat), x.exps());
}

int valuation(const Elem& x) {
  if (!x.ring()->is_laurent()) throw RingError("valuation needs a Laurent element");
  if (x.is_zero()) throw RingError("zero has no valuation");
  return x.exps().front();
}

Elem leading_coeff(const Elem& x) {
  valuation(x);  // validates Laurent, nonzero
  const int W = x.ring()->width();
  return Elem::scalar(base_scalar_ring(x.ring()),
                      std::vector<i64>(x.flat().begin(), x.flat().begin() + W));
}

Elem shift_t(const Elem& x, int k) {
  std::vector<std::int32_t> exps(x.exps());
  for (auto& e : exps) e += k;
  return Elem::raw(x.ring(), x.flat(), std::move(exps));
}

Elem derivative_t(const Elem& x) {
  if (!x.ring()->is_laurent()) throw RingError("derivative_t needs a Laurent element");
  ScalarOps ops(*x.ring());
  const int W = ops.W;
  std::vector<std::int32_t> exps;
  std::vector<i64> flat;
  i64 buf[kMaxF];
  for (size_t i = 0; i < x.exps().size(); ++i) {
    const int e = x.exps()[i];
    if (e == 0) continue;
    ops.mul_small(x.flat().data() + i * W, e, buf);
    exps.push_back(e - 1);
    flat.insert(flat.end(), buf, buf + W);
  }
  return Elem::raw(x.ring(), std::move(flat), std::move(exps));
}

Series dlog_series(const Elem& x, int order) {
  if (!x.ring()->is_laurent()) throw RingError("dlog_series needs a Laurent element");
  if (x.is_zero()) throw RingError("dlog of zero");
  const Ring& r = x.ring();
  const int v = x.exps().front();
  // x = c t^v (1 + u): dlog x = v t^-1 + u' / (1 + u)
  Elem lead_inv = invert(Elem::monomial(r, v, leading_coeff(x).scalar_coeffs()));
  Elem one_plus_u = mul(x, lead_inv);
  Elem u = sub(one_plus_u, Elem::one(r));
  Series out{mul_int(Elem::monomial(r, -1, {1}), v), order};
  if (!u.is_zero()) {
    Series inv = invert_series(one_plus_u, order);
    Series rest = series_mul_poly(inv, derivative_t(u));
    rest.order = order;  // derivative of u has valuation >= 0
    rest.poly = truncate_above(rest.poly, order);
    out = series_add(out, rest);
  }
  out.order = order;
  out.poly = truncate_above(out.poly, order);
  return out;
}

Elem residue(const Series& s) {
  if (s.order < -1) throw PrecisionError("expansion order does not determine the residue");
  const Elem& x = s.poly;
  Ring base = base_scalar_ring(x.ring());
  const int W = x.ring()->width();
  for (size_t i = 0; i < x.exps().size(); ++i)
    if (x.exps()[i] == -1)
      return Elem::scalar(base,
                          std::vector<i64>(x.flat().begin() + i * W, x.flat().begin() + (i + 1) * W));
  return Elem::zero(base);
}

Elem residue(const Elem& laurent_poly) { return residue(series_of(laurent_poly)); }

std::optional<Elem> divide_by_p_pow(const Elem& x, std::int64_t p, int i) {
  const Ring& r = x.ring();
  if (i == 0) return x;
  if (i < 0 || !is_prime(p)) throw RingError("divide_by_p_pow needs a prime p and i >= 0");
  switch (r->kind) {
    case RingKind::Integers: {
      const i64 d = pow_i64(p, i);
      if (x.flat()[0] % d != 0) return std::nullopt;
      return Elem::from_int(r, x.flat()[0] / d);
    }
    case RingKind::Rationals: {
      const i64 d = pow_i64(p, i);
      Frac f = frac_mul({x.flat()[0], x.flat()[1]}, {1, d});
      return Elem::scalar(r, {f.num, f.den});
    }
    case RingKind::LiftRing:
    case RingKind::LiftLaurent: {
      if (r->p != p) throw RingError("lift ring has a different p");
      if (i >= r->N) throw PrecisionError("lift precision exhausted by division");
      const i64 d = pow_i64(p, i);
      std::vector<i64> flat(x.flat().size());
      for (size_t j = 0; j < flat.size(); ++j) {
        if (x.flat()[j] % d != 0) return std::nullopt;
        flat[j] = x.flat()[j] / d;
      }
      return Elem::raw(r, std::move(flat), x.exps());
    }
    default:
      throw RingError("divide_by_p_pow is defined for integers, rationals and lift rings");
  }
}

}  // namespace wittlab
