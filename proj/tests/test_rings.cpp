#include <doctest.h>

#include "wittlab/sampling.hpp"

using namespace wittlab;

namespace {

Elem fq(const Ring& r, std::vector<std::int64_t> c) { return Elem::scalar(r, std::move(c)); }

}  // namespace

TEST_CASE("ring_arith worked examples") {
  Ring f2 = make_prime_field(2);
  CHECK(add(Elem::one(f2), Elem::one(f2)).is_zero());

  Ring f4 = make_finite_field(2, 2);  // F_2[x]/(x^2+x+1)
  Elem x = fq(f4, {0, 1});
  CHECK(mul(x, x) == fq(f4, {1, 1}));

  Ring k3 = make_laurent(3);
  Elem a = Elem::laurent(k3, {{-1, {1}}, {0, {1}}});
  Elem t = Elem::monomial(k3, 1, {1});
  CHECK(mul(a, t) == Elem::laurent(k3, {{0, {1}}, {1, {1}}}));
}

TEST_CASE("ring mismatch is rejected") {
  Ring f2 = make_prime_field(2);
  Ring f3 = make_prime_field(3);
  CHECK_THROWS_AS(add(Elem::one(f2), Elem::one(f3)), RingError);
}

TEST_CASE("invert") {
  Ring f5 = make_prime_field(5);
  CHECK(invert(Elem::from_int(f5, 2)) == Elem::from_int(f5, 3));

  Ring k2 = make_laurent(2);
  CHECK(invert(Elem::monomial(k2, 3, {1})) == Elem::monomial(k2, -3, {1}));

  Elem one_plus_t = Elem::laurent(k2, {{0, {1}}, {1, {1}}});
  Series inv = invert_series(one_plus_t, 3);
  CHECK(inv.poly == Elem::laurent(k2, {{0, {1}}, {1, {1}}, {2, {1}}, {3, {1}}}));
  // geometric-series oracle: (1+t)(1+t+t^2+t^3) = 1 mod t^4
  Elem prod = mul(one_plus_t, inv.poly);
  for (const auto& [e, c] : prod.laurent_terms())
    CHECK((e == 0 ? c[0] == 1 : (e > 3 || c[0] == 0)));

  CHECK_THROWS_AS(invert(Elem::zero(f5)), RingError);
  CHECK_THROWS_AS(invert(one_plus_t), RingError);  // not a monomial: needs invert_series

  Ring l9 = make_lift_ring(3, 1, 2);
  Elem u = Elem::from_int(l9, 5);
  CHECK(mul(invert(u), u) == Elem::one(l9));
  CHECK_THROWS_AS(invert(Elem::from_int(l9, 3)), RingError);  // non-unit mod 3
}

TEST_CASE("frobenius_power") {
  Ring f4 = make_finite_field(2, 2);
  CHECK(frobenius_power(fq(f4, {0, 1}), 1) == fq(f4, {1, 1}));

  Ring f5 = make_prime_field(5);
  for (int c = 0; c < 5; ++c)
    CHECK(frobenius_power(Elem::from_int(f5, c), 1) == Elem::from_int(f5, c));

  Ring k2 = make_laurent(2);
  Elem b = Elem::laurent(k2, {{0, {1}}, {1, {1}}});
  CHECK(frobenius_power(b, 1) == Elem::laurent(k2, {{0, {1}}, {2, {1}}}));

  CHECK_THROWS_AS(frobenius_power(Elem::one(make_integers()), 1), RingError);
}

TEST_CASE("frobenius is a ring endomorphism") {
  for (const Ring& r : {make_finite_field(2, 2), make_finite_field(3, 2), make_laurent(2)}) {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
      Elem a = r->is_laurent() ? sample_laurent(rng, r) : sample_scalar(rng, r);
      Elem b = r->is_laurent() ? sample_laurent(rng, r) : sample_scalar(rng, r);
      int k = 1 + static_cast<int>(rng.below(2));
      CHECK(frobenius_power(add(a, b), k) == add(frobenius_power(a, k), frobenius_power(b, k)));
      CHECK(frobenius_power(mul(a, b), k) == mul(frobenius_power(a, k), frobenius_power(b, k)));
    }
  }
}

TEST_CASE("trace_to_prime") {
  Ring f4 = make_finite_field(2, 2);
  CHECK(trace_to_prime(fq(f4, {0, 1})) == Elem::one(make_prime_field(2)));
  CHECK(trace_to_prime(Elem::one(f4)).is_zero());

  Ring f3 = make_prime_field(3);
  CHECK(trace_to_prime(Elem::from_int(f3, 2)) == Elem::from_int(f3, 2));

  CHECK_THROWS_AS(trace_to_prime(Elem::one(make_laurent(2))), RingError);

  // additive and Frobenius-invariant over F_4, F_8, F_9
  for (const Ring& r : {make_finite_field(2, 2), make_finite_field(2, 3), make_finite_field(3, 2)}) {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
      Elem a = sample_scalar(rng, r);
      Elem b = sample_scalar(rng, r);
      CHECK(trace_to_prime(add(a, b)) == add(trace_to_prime(a), trace_to_prime(b)));
      CHECK(trace_to_prime(frobenius_power(a, 1)) == trace_to_prime(a));
    }
  }
}

TEST_CASE("teichmuller_lift_coeff") {
  Ring f2 = make_prime_field(2);
  Ring l2 = make_lift_ring(2, 1, 5);
  CHECK(teichmuller_lift_coeff(Elem::one(f2), l2) == Elem::one(l2));
  CHECK(teichmuller_lift_coeff(Elem::zero(f2), l2).is_zero());

  Ring f3 = make_prime_field(3);
  Ring l3 = make_lift_ring(3, 1, 2);
  CHECK(teichmuller_lift_coeff(Elem::from_int(f3, 2), l3) == Elem::from_int(l3, 8));

  // multiplicative, and a q-power fixed point, over F_4 and F_9 lifts
  for (auto [p, f] : {std::pair<int, int>{2, 2}, {3, 2}}) {
    Ring field = make_finite_field(p, f);
    Ring lift = make_lift_ring(p, f, 4);
    Rng rng(17);
    const std::uint64_t q = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(f == 2 ? p : 1);
    for (int i = 0; i < 60; ++i) {
      Elem c = sample_scalar(rng, field);
      Elem d = sample_scalar(rng, field);
      Elem wc = teichmuller_lift_coeff(c, lift);
      Elem wd = teichmuller_lift_coeff(d, lift);
      CHECK(teichmuller_lift_coeff(mul(c, d), lift) == mul(wc, wd));
      CHECK(pow_int(wc, q) == wc);
      CHECK(reduce_mod_p(wc) == c);
    }
  }
}

TEST_CASE("residue") {
  Ring k2 = make_laurent(2);
  CHECK(residue(Elem::monomial(k2, -1, {1})) == Elem::one(make_prime_field(2)));
  CHECK(residue(Elem::laurent(k2, {{0, {1}}, {2, {1}}})).is_zero());

  Ring ll9 = make_lift_laurent(3, 1, 2);
  Elem s = Elem::laurent(ll9, {{-2, {1}}, {-1, {3}}});
  CHECK(residue(s) == Elem::from_int(make_lift_ring(3, 1, 2), 3));

  Series too_short{Elem::zero(k2), -2};
  CHECK_THROWS_AS(residue(too_short), PrecisionError);
}

TEST_CASE("dlog_series") {
  Ring k2 = make_laurent(2);
  Elem t = Elem::monomial(k2, 1, {1});
  CHECK(dlog_series(t, 0).poly == Elem::monomial(k2, -1, {1}));
  CHECK(dlog_series(Elem::one(k2), 3).poly.is_zero());
  CHECK(dlog_series(Elem::laurent(k2, {{0, {1}}, {1, {1}}}), 2).poly ==
        Elem::laurent(k2, {{0, {1}}, {1, {1}}, {2, {1}}}));
  CHECK_THROWS_AS(dlog_series(Elem::zero(k2), 1), RingError);
}

TEST_CASE("residue of dlog reads the valuation") {
  for (const Ring& K : {make_laurent(2), make_laurent(3), make_laurent(2, 2)}) {
    Rng rng(23);
    Ring prime = make_prime_field(K->p);
    for (int i = 0; i < 100; ++i) {
      Elem b = sample_laurent_nonzero(rng, K);
      Elem r = residue(dlog_series(b, 0));
      CHECK(r == mul_int(Elem::one(base_scalar_ring(K)), valuation(b)));
    }
    (void)prime;
  }
}

TEST_CASE("ring axioms hold exactly per kind") {
  std::vector<Ring> rings = {make_prime_field(2),     make_prime_field(5),
                             make_finite_field(2, 2), make_finite_field(3, 2),
                             make_laurent(2),         make_laurent(3, 2),
                             make_lift_ring(2, 1, 6), make_lift_ring(3, 2, 3),
                             make_lift_laurent(2, 1, 4), make_integers(),
                             make_rationals()};
  for (const Ring& r : rings) {
    Rng rng(29);
    auto draw = [&] {
      if (r->is_laurent()) return sample_laurent(rng, r, {-2, 2, -2, 2});
      if (r->kind == RingKind::Integers) return Elem::from_int(r, rng.in_range(-4, 4));
      return sample_scalar(rng, r);
    };
    for (int i = 0; i < 200; ++i) {
      Elem a = draw(), b = draw(), c = draw();
      CHECK(add(a, b) == add(b, a));
      CHECK(add(add(a, b), c) == add(a, add(b, c)));
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
      CHECK(add(a, Elem::zero(r)) == a);
      CHECK(mul(a, Elem::one(r)) == a);
      CHECK(add(a, neg(a)).is_zero());
      CHECK(sub(a, b) == add(a, neg(b)));
    }
  }
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(make_prime_field(6), RingError);
  CHECK_THROWS_AS(make_finite_field(2, 2, {1, 0, 1}), RingError);  // x^2+1 = (x+1)^2 over F_2
  CHECK_THROWS_AS(make_finite_field(2, 2, {1, 1}), RingError);     // wrong degree
  CHECK_THROWS_AS(make_lift_ring(2, 1, 0), RingError);
  CHECK_THROWS_AS(make_lift_ring(2, 2, 3, {0, 0, 1}), RingError);  // reduces to x^2
  CHECK(make_finite_field(5, 1)->kind == RingKind::PrimeField);
  CHECK(same_ring(make_laurent(2, 2), make_laurent(2, 2, {1, 1, 1})));
}

TEST_CASE("normalization keeps equality structural") {
  Ring k2 = make_laurent(2);
  CHECK(Elem::laurent(k2, {{0, {0}}, {3, {2}}}) == Elem::zero(k2));
  CHECK(Elem::laurent(k2, {{1, {1}}, {-1, {0}}}) == Elem::monomial(k2, 1, {1}));
  Ring q = make_rationals();
  CHECK(Elem::scalar(q, {2, 4}) == Elem::scalar(q, {1, 2}));
  CHECK(Elem::scalar(q, {-1, -2}) == Elem::scalar(q, {1, 2}));
}

TEST_CASE("divide_by_p_pow") {
  Ring z = make_integers();
  CHECK(*divide_by_p_pow(Elem::from_int(z, 12), 2, 2) == Elem::from_int(z, 3));
  CHECK(!divide_by_p_pow(Elem::from_int(z, 13), 2, 2).has_value());

  Ring l = make_lift_ring(2, 1, 5);
  CHECK(*divide_by_p_pow(Elem::from_int(l, 24), 2, 3) == Elem::from_int(l, 3));
  CHECK(!divide_by_p_pow(Elem::from_int(l, 20), 2, 3).has_value());
  CHECK_THROWS_AS(divide_by_p_pow(Elem::from_int(l, 16), 2, 5), PrecisionError);
}
