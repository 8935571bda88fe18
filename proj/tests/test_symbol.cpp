#include <doctest.h>

#include "wittlab/sampling.hpp"
#include "wittlab/symbol.hpp"

using namespace wittlab;

namespace {

Elem t_of(const Ring& K) { return Elem::monomial(K, 1, {1}); }

}  // namespace

TEST_CASE("SymbolValue arithmetic in Q_p/Z_p") {
  SymbolValue a = sym_make(2, 2, 3);
  CHECK(sym_lift(a, 3).v == 6);
  CHECK(sym_equal(a, sym_lift(a, 4)));
  CHECK(sym_add(a, a).v == 2);
  CHECK(sym_neg(a).v == 1);
  CHECK(sym_scale(a, 6).v == 2);
  CHECK(!sym_equal(sym_make(2, 1, 1), sym_make(2, 2, 1)));
  CHECK(sym_equal(sym_make(2, 1, 1), sym_make(2, 2, 2)));
  CHECK(sym_add(sym_make(2, 1, 1), sym_make(2, 2, 1)).v == 3);
}

TEST_CASE("normalization anchor [[1],t) = 1") {
  for (std::int64_t p : {2LL, 3LL, 5LL}) {
    Ring K = make_laurent(p);
    for (int n = 1; n <= budget_max_n(p); ++n) {
      SymbolValue s = asw_symbol(teichmuller(Elem::one(K), n), t_of(K));
      CHECK(s.v == 1);
      CHECK(s.n == n);
    }
  }
}

TEST_CASE("symbol rejects bad inputs") {
  Ring K = make_laurent(2);
  WittVector a = teichmuller(Elem::one(K), 2);
  CHECK_THROWS_AS(asw_symbol(a, Elem::zero(K)), RingError);
  CHECK_THROWS_AS(asw_symbol(teichmuller(Elem::one(make_prime_field(2)), 2), Elem::one(K)),
                  RingError);
  Ring K5 = make_laurent(5);
  CHECK_THROWS_AS(asw_symbol(teichmuller(Elem::one(K5), 3), t_of(K5)), BudgetError);
}

TEST_CASE("key lemma and kernel identities") {
  for (auto [p, f] : {std::pair<std::int64_t, int>{2, 1}, {3, 1}, {2, 2}}) {
    Ring K = make_laurent(p, f);
    Rng rng(61);
    const int n = std::min(2, budget_max_n(p));
    for (int i = 0; i < 40; ++i) {
      Elem b = sample_laurent_nonzero(rng, K);
      CHECK(asw_symbol(teichmuller(b, n), b).is_zero());
      WittVector c = sample_witt(rng, K, p, n);
      CHECK(asw_symbol(artin_schreier(c), b).is_zero());
      CHECK(asw_symbol(c, frobenius_power(b, n)).is_zero());
      CHECK(sym_equal(asw_symbol(witt_frobenius_k(c, 1), b), asw_symbol(c, b)));
    }
  }
}

TEST_CASE("shift compatibility across levels") {
  Ring K = make_laurent(2);
  Rng rng(67);
  auto [z_lo, z_hi] = asw_symbol_shift_check(WittVector::zero(2, K, 2), t_of(K));
  CHECK(z_lo.is_zero());
  CHECK(z_hi.is_zero());
  for (int i = 0; i < 40; ++i) {
    WittVector a = sample_witt(rng, K, 2, 2);
    Elem b = sample_laurent_nonzero(rng, K);
    auto [lo, hi] = asw_symbol_shift_check(a, b);
    CHECK(sym_equal(lo, hi));
    CHECK(hi.n == 3);
    // p^(m-n) [a,b)_(p^m) = [a,b)_(p^n) via truncation
    WittVector big = sample_witt(rng, K, 2, 3);
    SymbolValue sm = asw_symbol(big, b);
    SymbolValue sn = asw_symbol(truncate(big, 2), b);
    CHECK(sym_make(2, 2, sm.v).v == sn.v);
  }
}

TEST_CASE("pairing_n basics") {
  Ring K = make_laurent(2);
  Rng rng(71);
  const int n = 2;
  WittVector zero = WittVector::zero(2, K, n);
  for (int i = 0; i < 40; ++i) {
    WittVector a = sample_witt(rng, K, 2, n);
    CHECK(pairing_n(a, zero).is_zero());
    CHECK(pairing_n(zero, a).is_zero());
    // ((a,[b])) = [a[b], b)
    Elem b = sample_laurent_nonzero(rng, K);
    CHECK(sym_equal(pairing_n(a, teichmuller(b, n)), asw_symbol(scale_teich(a, b), b)));
    // Lemma 3.2(ii) shape
    Elem x = sample_laurent_nonzero(rng, K);
    const int k = static_cast<int>(rng.below(n + 1));
    const int l = static_cast<int>(rng.below(n + 1));
    SymbolValue lhs = pairing_n(verschiebung_trunc_k(teichmuller(x, n), k),
                                verschiebung_trunc_k(teichmuller(b, n), l));
    SymbolValue rhs = asw_symbol(
        teichmuller(mul(frobenius_power(x, l), frobenius_power(b, k)), n),
        frobenius_power(b, k));
    CHECK(sym_equal(lhs, rhs));
  }
}

TEST_CASE("pairing_mn degenerates to pairing_n and is skew") {
  Ring K = make_laurent(3);
  Rng rng(73);
  for (int i = 0; i < 25; ++i) {
    WittVector a = sample_witt(rng, K, 3, 2);
    WittVector b = sample_witt(rng, K, 3, 2);
    CHECK(sym_equal(pairing_mn(a, b), pairing_n(a, b)));
    WittVector c = sample_witt(rng, K, 3, 1);
    CHECK(sym_equal(pairing_mn(a, c), sym_neg(pairing_mn(c, a))));
  }
}

TEST_CASE("pairing torsion bound") {
  Ring K = make_laurent(2);
  Rng rng(79);
  for (int i = 0; i < 25; ++i) {
    WittVector a = sample_witt(rng, K, 2, 1);
    WittVector b = sample_witt(rng, K, 2, 3);
    SymbolValue s = pairing_mn(a, b);
    CHECK(s.n == 1);  // p^min(m,n)-torsion
  }
}

TEST_CASE("pairing_inf") {
  Ring K = make_laurent(2);
  Rng rng(83);
  Covector zero = Covector::zero(2, K);
  for (int i = 0; i < 25; ++i) {
    Covector x = sample_covector(rng, K, 2, 2);
    Covector y = sample_covector(rng, K, 2, 2);
    CHECK(pairing_inf(x, zero).is_zero());
    CHECK(sym_equal(pairing_inf(x, y), sym_neg(pairing_inf(y, x))));
    if (!x.is_zero() && !y.is_zero()) {
      SymbolValue padded = pairing_mn(cov_to_witt(x, x.window_size() + 1),
                                      cov_to_witt(y, y.window_size() + 1));
      CHECK(sym_equal(pairing_inf(x, y), padded));
    }
  }
}

TEST_CASE("asw_symbol_inf") {
  for (std::int64_t p : {2LL, 3LL}) {
    Ring K = make_laurent(p);
    Rng rng(89);
    for (int n = 1; n <= 3 && n <= budget_max_n(p); ++n) {
      SymbolValue s = asw_symbol_inf(psi(teichmuller(Elem::one(K), n)), t_of(K));
      CHECK(s.v == 1);
      CHECK(s.n == n);
    }
    for (int i = 0; i < 25; ++i) {
      Covector x = sample_covector(rng, K, p, 2);
      Elem b = sample_laurent_nonzero(rng, K);
      CHECK(asw_symbol_inf(cov_artin_schreier(x), b).is_zero());
      const int k = std::max(1, x.window_size());
      CHECK(asw_symbol_inf(x, frobenius_power(b, k)).is_zero());
    }
    CHECK(asw_symbol_inf(Covector::zero(p, K), t_of(K)).is_zero());
  }
}

TEST_CASE("wp_solve") {
  Ring f2 = make_prime_field(2);
  Ring f4 = make_finite_field(2, 2);

  CHECK(wp_solve(WittVector::zero(2, f2, 3))->is_zero());
  CHECK(!wp_solve(teichmuller(Elem::one(f2), 1)).has_value());

  auto sol = wp_solve(teichmuller(Elem::one(f4), 1));
  REQUIRE(sol.has_value());
  CHECK(artin_schreier(*sol) == teichmuller(Elem::one(f4), 1));

  // solvable iff the Witt-vector trace to W_n(F_p) vanishes
  Rng rng(97);
  for (int i = 0; i < 60; ++i) {
    WittVector target = sample_witt(rng, f4, 2, 3);
    WittVector tr = target;
    WittVector fr = target;
    for (int k = 1; k < 2; ++k) {
      fr = frobenius_W(fr);
      tr = witt_add(tr, fr);
    }
    auto s = wp_solve(target);
    CHECK(s.has_value() == tr.is_zero());
    if (s.has_value()) CHECK(artin_schreier(*s) == target);
    WittVector image = artin_schreier(sample_witt(rng, f4, 2, 3));
    CHECK(wp_solve(image).has_value());
  }
}

TEST_CASE("classical n=1 oracle agrees with the ghost-residue route") {
  for (auto [p, f] : {std::pair<std::int64_t, int>{2, 1}, {3, 1}, {5, 1}, {2, 2}}) {
    Ring K = make_laurent(p, f);
    Rng rng(101);
    for (int i = 0; i < 50; ++i) {
      Elem a = sample_laurent(rng, K);
      Elem b = sample_laurent_nonzero(rng, K);
      CHECK(sym_equal(asw_symbol(teichmuller(a, 1), b), classical_symbol_p(a, b)));
    }
  }
}

TEST_CASE("witt_constant_to_int inverts m -> m*1") {
  for (std::int64_t p : {2LL, 3LL}) {
    Ring P = make_prime_field(p);
    const int n = budget_max_n(p) - 1;
    WittVector one = teichmuller(Elem::one(P), n);
    std::int64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    WittVector acc = WittVector::zero(p, P, n);
    for (std::int64_t m = 0; m < pn; ++m) {
      CHECK(witt_constant_to_int(acc) == m);
      acc = witt_add(acc, one);
    }
  }
}

TEST_CASE("precision policy is honored") {
  Ring K = make_laurent(2);
  WittVector a = teichmuller(Elem::one(K), 2);
  PrecisionPolicy tight;
  tight.initial_slack = 1;
  CHECK(asw_symbol(a, t_of(K), tight).v == 1);
  PrecisionPolicy roomy;
  roomy.initial_slack = 6;
  CHECK(asw_symbol(a, t_of(K), roomy).v == 1);
}
