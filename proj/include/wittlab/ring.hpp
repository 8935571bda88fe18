#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittlab/errors.hpp"

namespace wittlab {

enum class RingKind {
  PrimeField,   // F_p
  FiniteField,  // F_q = F_p[x]/(modulus), q = p^f
  LaurentPoly,  // F_q[t, t^-1], finite support
  LiftRing,     // (Z/p^N)[x]/(modulus lift)
  LiftLaurent,  // Laurent polynomials over a lift ring
  Integers,
  Rationals,
};

const char* ring_kind_name(RingKind k);

/// Immutable description of a coefficient ring. Values hold a shared handle
/// to their descriptor; descriptor equality is structural.
struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  std::int64_t p = 0;  // 0 for integers/rationals
  int f = 1;           // extension degree, q = p^f
  std::vector<std::int64_t> modulus;  // monic degree-f, low-to-high incl. leading 1
  int N = 0;                          // p-adic digits, lift kinds only

  bool is_char_p() const {
    return kind == RingKind::PrimeField || kind == RingKind::FiniteField ||
           kind == RingKind::LaurentPoly;
  }
  bool is_laurent() const {
    return kind == RingKind::LaurentPoly || kind == RingKind::LiftLaurent;
  }
  bool is_lift() const {
    return kind == RingKind::LiftRing || kind == RingKind::LiftLaurent;
  }
  // p for char-p kinds, p^N for lift kinds, 0 for integers, -1 for rationals.
  std::int64_t scalar_modulus() const;
  // int64 slots per scalar coefficient: f, or 2 for rationals (num, den).
  int width() const;
};

using Ring = std::shared_ptr<const RingDescriptor>;

bool same_ring(const Ring& a, const Ring& b);
bool same_descriptor(const RingDescriptor& a, const RingDescriptor& b);

Ring make_integers();
Ring make_rationals();
Ring make_prime_field(std::int64_t p);
Ring make_finite_field(std::int64_t p, int f, std::vector<std::int64_t> modulus = {});
Ring make_laurent(std::int64_t p, int f = 1, std::vector<std::int64_t> modulus = {});
Ring make_lift_ring(std::int64_t p, int f, int N, std::vector<std::int64_t> modulus = {});
Ring make_lift_laurent(std::int64_t p, int f, int N, std::vector<std::int64_t> modulus = {});

/// Fixed moduli for the small fields the suites use; throws RingError when
/// no entry exists (the modulus is supplied, never discovered).
std::vector<std::int64_t> default_modulus(std::int64_t p, int f);

Ring base_scalar_ring(const Ring& r);  // laurent-poly -> F_q, lift-laurent -> lift ring
Ring laurent_over(const Ring& scalar);
Ring residue_ring(const Ring& lift);  // lift kinds mod p (scalar or laurent)

/// Exact, normalized element of a coefficient ring. Normalization strips
/// zero Laurent coefficients and keeps residues canonical, so equality is
/// structural. Values are immutable after construction and freely shareable.
class Elem {
 public:
  Elem() = default;

  static Elem zero(const Ring& r);
  static Elem one(const Ring& r);
  static Elem from_int(const Ring& r, std::int64_t v);
  // Scalar kinds: coefficient list low-to-high (length <= width).
  static Elem scalar(const Ring& r, std::vector<std::int64_t> coeffs);
  // Laurent kinds: list of (exponent, scalar coefficients).
  static Elem laurent(const Ring& r,
                      const std::vector<std::pair<int, std::vector<std::int64_t>>>& terms);
  static Elem monomial(const Ring& r, int exp, std::vector<std::int64_t> coeff);

  const Ring& ring() const { return ring_; }
  bool is_zero() const;
  bool is_laurent() const { return ring_ && ring_->is_laurent(); }

  int term_count() const { return static_cast<int>(exps_.size()); }
  // Scalar payload (non-Laurent kinds), canonical, length width().
  const std::vector<std::int64_t>& scalar_coeffs() const;
  // Laurent payload as (exp, coeffs) pairs, ascending exponents.
  std::vector<std::pair<int, std::vector<std::int64_t>>> laurent_terms() const;

  friend bool operator==(const Elem& a, const Elem& b);
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  // Internal flat layout: Laurent term i occupies flat_[i*W .. (i+1)*W).
  const std::vector<std::int64_t>& flat() const { return flat_; }
  const std::vector<std::int32_t>& exps() const { return exps_; }

  static Elem raw(Ring r, std::vector<std::int64_t> flat, std::vector<std::int32_t> exps);

 private:
  Ring ring_;
  std::vector<std::int64_t> flat_;
  std::vector<std::int32_t> exps_;  // ascending; empty for scalar kinds
};

enum class ArithOp { Add, Sub, Mul };

Elem ring_arith(const Elem& x, const Elem& y, ArithOp op);
Elem add(const Elem& x, const Elem& y);
Elem sub(const Elem& x, const Elem& y);
Elem mul(const Elem& x, const Elem& y);
Elem neg(const Elem& x);
Elem mul_int(const Elem& x, std::int64_t k);
Elem pow_int(const Elem& x, std::uint64_t e);

/// Exact inverse. Fields and lift-ring units invert exactly; a Laurent
/// element inverts exactly only when it is monomial * unit. Other Laurent
/// units go through invert_series.
Elem invert(const Elem& x);

/// Truncated expansion of a Laurent element: the table of coefficients of
/// t^e for e <= order, exact up to the stated order.
struct Series {
  Elem poly;
  int order = 0;
};

Series invert_series(const Elem& x, int order);
Series series_of(const Elem& x);  // exact polynomial viewed as a series
Series series_add(const Series& a, const Series& b);
Series series_mul_poly(const Series& s, const Elem& poly);

/// c^(p^k) in a characteristic-p ring; Laurent elements map t^e -> t^(e p^k).
Elem frobenius_power(const Elem& c, int k);

/// Sum of c^(p^i) for i < f, landed in F_p.
Elem trace_to_prime(const Elem& c);

/// The multiplicative representative over c: w == c mod p and w^q == w,
/// computed by iterating z -> z^q from the coefficientwise integer lift.
Elem teichmuller_lift_coeff(const Elem& c, const Ring& lift);

/// Coefficientwise teichmuller_lift_coeff of a Laurent polynomial.
Elem lift_laurent_elem(const Elem& x, const Ring& lift_laurent);

/// Coefficientwise reduction mod p of a lift-ring or lift-Laurent element.
Elem reduce_mod_p(const Elem& x);

int valuation(const Elem& x);  // t-adic; rejects x = 0
Elem leading_coeff(const Elem& x);
Elem shift_t(const Elem& x, int k);  // multiply by t^k
Elem derivative_t(const Elem& x);

/// (dx/dt)/x as a Laurent series up to `order`; leading term v(x) t^-1.
Series dlog_series(const Elem& x, int order);

/// Coefficient of t^-1. Requires the view order to reach -1.
Elem residue(const Series& s);
Elem residue(const Elem& laurent_poly);

/// Exact division by p^i (integers, rationals, lift rings). For lift rings
/// the quotient is the canonical representative in [0, p^(N-i)); an empty
/// result means the division was not exact.
std::optional<Elem> divide_by_p_pow(const Elem& x, std::int64_t p, int i);

}  // namespace wittlab
