#pragma once

#include <optional>
#include <utility>

#include "wittlab/covector.hpp"

namespace wittlab {

/// Value of a symbol or pairing over a local field: an element of
/// W_n(F_p) identified with Z/p^n via m -> m*(1,0,...,0). A value (n, v)
/// denotes v/p^n in Q_p/Z_p, so values at different levels compare through
/// that embedding (the inclusion Br_{p^n} into Br_{p^m} multiplies by
/// p^(m-n)).
struct SymbolValue {
  std::int64_t p = 0;
  int n = 1;
  std::int64_t v = 0;  // canonical representative in [0, p^n)

  std::int64_t modulus() const;
  bool is_zero() const { return v == 0; }
};

SymbolValue sym_make(std::int64_t p, int n, std::int64_t v);
SymbolValue sym_lift(const SymbolValue& s, int level);  // embed into a higher level
SymbolValue sym_add(const SymbolValue& a, const SymbolValue& b);
SymbolValue sym_neg(const SymbolValue& a);
SymbolValue sym_sub(const SymbolValue& a, const SymbolValue& b);
SymbolValue sym_scale(const SymbolValue& a, std::int64_t k);
bool sym_equal(const SymbolValue& a, const SymbolValue& b);  // equality in Q_p/Z_p

/// Slack controls the lift precision N = n + slack for the ghost-residue
/// algorithm; on IntegralityError the slack doubles, at most max_doublings
/// times. initial_slack < 0 means the default n (never below n-1).
struct PrecisionPolicy {
  int initial_slack = -1;
  int max_doublings = 3;
};

/// The local Artin-Schreier-Witt symbol [a, b) over K = F_q((t)) with
/// Laurent-polynomial witnesses, through the ghost-residue route:
/// lift the coordinates of a and b coefficientwise by Teichmuller
/// representatives at precision N, take the residues of w_i(A) dlog B,
/// solve the ghost vector back to a Witt vector, reduce mod p, trace down
/// to W_n(F_p) and read the value in Z/p^n. The sign convention is fixed
/// by [[1], t) = +1 over F_p((t)).
SymbolValue asw_symbol(const WittVector& a, const Elem& b, const PrecisionPolicy& policy = {});

/// ([a,b) at level n, [Va,b) at level n+1) for the shift-compatibility
/// identity; the two entries are equal as elements of Q_p/Z_p.
std::pair<SymbolValue, SymbolValue> asw_symbol_shift_check(const WittVector& a, const Elem& b,
                                                           const PrecisionPolicy& policy = {});

/// ((a,b)) at one level: sum over j of [F^j a [b_j], b_j) with zero b_j
/// skipped.
SymbolValue pairing_n(const WittVector& a, const WittVector& b,
                      const PrecisionPolicy& policy = {});

/// ((a,b)) for a of length m and b of length n, computed both as
/// ((V^(l-m) a, V^(l-n) b)) at l = max(m,n) and by the direct sum
/// formula sum_j [F^(m+j) a F^n [b_j], b_j) at level m; the two routes
/// must agree. Result at level min(m,n).
SymbolValue pairing_mn(const WittVector& a, const WittVector& b,
                       const PrecisionPolicy& policy = {});

/// Pairing of covectors through their minimal windows; independent of
/// window padding.
SymbolValue pairing_inf(const Covector& x, const Covector& y,
                        const PrecisionPolicy& policy = {});

/// [x, b) for a covector x through its minimal window.
SymbolValue asw_symbol_inf(const Covector& x, const Elem& b,
                           const PrecisionPolicy& policy = {});

/// Solve the Artin-Schreier equation Fx - x = target over W_n(F_q) by
/// levelwise exhaustive search; empty when the level-0 trace obstruction
/// blocks a solution.
std::optional<WittVector> wp_solve(const WittVector& target);

/// Independent n = 1 oracle: Tr(Res(a dlog b)) computed entirely in
/// characteristic p, with no lift and no ghost solve.
SymbolValue classical_symbol_p(const Elem& a, const Elem& b);

/// Conversion behind SymbolValue: W_n(F_p)-valued vector (coordinates
/// constant) to its digit expansion m with m*(1,...)= x.
std::int64_t witt_constant_to_int(const WittVector& x);

}  // namespace wittlab
