#include <doctest.h>

#include "wittlab/sampling.hpp"

using namespace wittlab;

namespace {

WittVector wv(const Ring& r, std::int64_t p, std::vector<std::int64_t> ints) {
  std::vector<Elem> coords;
  for (std::int64_t v : ints) coords.push_back(Elem::from_int(r, v));
  return WittVector::make(p, r, std::move(coords));
}

}  // namespace

TEST_CASE("universal polynomials at small (p, n)") {
  auto u = universal_polys(2, 2);
  // S_0 = X_0 + Y_0, P_0 = X_0 Y_0 for every p
  CHECK(u->S[0].terms.size() == 2);
  CHECK(u->P[0].terms.size() == 1);
  CHECK(u->P[0].terms[0].key == upoly_key({1, 0, 1, 0}));

  // S_1 = X_1 + Y_1 - X_0 Y_0
  REQUIRE(u->S[1].terms.size() == 3);
  CHECK(u->S[1].terms[0].c == 1);
  CHECK(u->S[1].terms[0].key == upoly_key({0, 1}));
  CHECK(u->S[1].terms[1].c == -1);
  CHECK(u->S[1].terms[1].key == upoly_key({1, 0, 1, 0}));
  CHECK(u->S[1].terms[2].c == 1);
  CHECK(u->S[1].terms[2].key == upoly_key({0, 0, 0, 1}));

  // P_1 = X_0^2 Y_1 + X_1 Y_0^2 + 2 X_1 Y_1
  REQUIRE(u->P[1].terms.size() == 3);
  CHECK(u->P[1].terms[0].c == 1);
  CHECK(u->P[1].terms[0].key == upoly_key({0, 1, 2, 0}));
  CHECK(u->P[1].terms[1].c == 1);
  CHECK(u->P[1].terms[1].key == upoly_key({2, 0, 0, 1}));
  CHECK(u->P[1].terms[2].c == 2);
  CHECK(u->P[1].terms[2].key == upoly_key({0, 1, 0, 1}));
}

TEST_CASE("budget caps") {
  CHECK_THROWS_AS(universal_polys(2, 5), BudgetError);
  CHECK_THROWS_AS(universal_polys(3, 4), BudgetError);
  CHECK_THROWS_AS(universal_polys(5, 3), BudgetError);
  CHECK_THROWS_AS(universal_polys(7, 1), BudgetError);
  CHECK_NOTHROW(universal_polys(5, 2));
}

TEST_CASE("witt arithmetic fixtures over F_2") {
  Ring f2 = make_prime_field(2);
  WittVector a = wv(f2, 2, {1, 0});
  CHECK(witt_add(a, a) == wv(f2, 2, {0, 1}));  // 2*[1] = (0,1)
  CHECK(witt_add(a, WittVector::zero(2, f2, 2)) == a);
  CHECK(witt_mul(a, wv(f2, 2, {1, 1})) == wv(f2, 2, {1, 1}));  // [1] is the unit
}

TEST_CASE("ghost and from_ghost") {
  Ring z = make_integers();
  WittVector a = wv(z, 2, {3, 5});
  GhostVector g = ghost(a);
  CHECK(g.entries[0] == Elem::from_int(z, 3));
  CHECK(g.entries[1] == Elem::from_int(z, 19));
  CHECK(from_ghost(g) == a);

  CHECK(ghost(WittVector::zero(2, z, 3)).entries[2].is_zero());

  // Teichmuller ghost (c, c^p, c^(p^2), ...)
  WittVector tc = teichmuller(Elem::from_int(z, 3), 3, 2);
  GhostVector gt = ghost(tc);
  CHECK(gt.entries[1] == Elem::from_int(z, 9));
  CHECK(gt.entries[2] == Elem::from_int(z, 81));
  CHECK(from_ghost(gt) == tc);

  GhostVector bad{z, 2, {Elem::from_int(z, 0), Elem::from_int(z, 1)}};
  CHECK_THROWS_AS(from_ghost(bad), IntegralityError);
  try {
    from_ghost(bad);
  } catch (const IntegralityError& e) {
    CHECK(e.index == 1);
  }

  CHECK_THROWS_AS(ghost(wv(make_prime_field(2), 2, {1, 0})), RingError);
}

TEST_CASE("from_ghost over the rationals") {
  Ring q = make_rationals();
  GhostVector g{q, 2, {Elem::from_int(q, 0), Elem::from_int(q, 1)}};
  WittVector x = from_ghost(g);
  CHECK(x.coords[1] == Elem::scalar(q, {1, 2}));
  CHECK(ghost(x).entries[1] == Elem::from_int(q, 1));
}

TEST_CASE("frobenius") {
  Ring k2 = make_laurent(2);
  WittVector a = WittVector::make(2, k2, {Elem::monomial(k2, 1, {1}), Elem::one(k2)});
  WittVector fa = frobenius_W(a);
  CHECK(fa.coords[0] == Elem::monomial(k2, 2, {1}));
  CHECK(fa.coords[1] == Elem::one(k2));

  Ring f3 = make_prime_field(3);
  WittVector b = wv(f3, 3, {1, 2, 0});
  CHECK(frobenius_W(b) == b);

  // over a lift ring F lands in W_{n-1}; on Teichmuller vectors [c] -> [c^p]
  Ring l = make_lift_ring(3, 1, 3);
  Elem c = Elem::from_int(l, 5);
  WittVector tc = teichmuller(c, 3);
  WittVector ftc = frobenius_W(tc);
  CHECK(ftc.n() == 2);
  CHECK(ftc == teichmuller(pow_int(c, 3), 2));
}

TEST_CASE("verschiebung") {
  Ring f2 = make_prime_field(2);
  WittVector a = wv(f2, 2, {1, 1});
  CHECK(verschiebung(a, 3) == wv(f2, 2, {0, 1, 1}));
  CHECK(verschiebung(a, 2) == wv(f2, 2, {0, 1}));
  CHECK(verschiebung_trunc_k(a, 2).is_zero());  // V^n = 0 on W_n
  CHECK_THROWS_AS(verschiebung(a, 4), RingError);
}

TEST_CASE("teichmuller and scale_teich") {
  Ring k2 = make_laurent(2);
  Elem t = Elem::monomial(k2, 1, {1});
  WittVector a = WittVector::make(
      2, k2, {Elem::laurent(k2, {{0, {1}}, {1, {1}}}), Elem::monomial(k2, -1, {1})});
  WittVector s = scale_teich(a, t);
  CHECK(s.coords[0] == mul(a.coords[0], t));
  CHECK(s.coords[1] == mul(a.coords[1], Elem::monomial(k2, 2, {1})));
  CHECK(scale_teich(a, Elem::one(k2)) == a);

  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    WittVector x = sample_witt(rng, k2, 2, 3);
    Elem b = sample_laurent(rng, k2);
    CHECK(witt_mul(x, teichmuller(b, 3)) == scale_teich(x, b));
  }
}

TEST_CASE("artin_schreier") {
  Ring f3 = make_prime_field(3);
  for (std::int64_t v = 0; v < 27; ++v)
    CHECK(artin_schreier(wv(f3, 3, {v % 3, (v / 3) % 3, v / 9})).is_zero());

  Ring f4 = make_finite_field(2, 2);
  WittVector x = WittVector::make(2, f4, {Elem::scalar(f4, {0, 1})});
  CHECK(artin_schreier(x) == WittVector::make(2, f4, {Elem::one(f4)}));

  CHECK(artin_schreier(WittVector::zero(2, f4, 2)).is_zero());
}

TEST_CASE("truncate") {
  Ring f2 = make_prime_field(2);
  WittVector a = wv(f2, 2, {1, 0, 1});
  CHECK(truncate(a, 1) == wv(f2, 2, {1}));
  CHECK(truncate(a, 3) == a);
  CHECK_THROWS_AS(truncate(a, 0), RingError);
  CHECK_THROWS_AS(truncate(a, 4), RingError);

  Rng rng(37);
  Ring k2 = make_laurent(2);
  for (int i = 0; i < 100; ++i) {
    WittVector x = sample_witt(rng, k2, 2, 3);
    WittVector y = sample_witt(rng, k2, 2, 3);
    const int m = 1 + static_cast<int>(rng.below(3));
    CHECK(truncate(witt_add(x, y), m) == witt_add(truncate(x, m), truncate(y, m)));
    CHECK(truncate(witt_mul(x, y), m) == witt_mul(truncate(x, m), truncate(y, m)));
  }
}

TEST_CASE("W_0 is inert") {
  Ring f2 = make_prime_field(2);
  WittVector w0 = WittVector::w0(2, f2);
  CHECK(w0.n() == 0);
  CHECK(w0.is_zero());
  CHECK_THROWS_AS(witt_add(w0, w0), RingError);
}

TEST_CASE("teich_decompose") {
  Ring f2 = make_prime_field(2);
  Elem c = Elem::one(f2);
  auto d1 = teich_decompose(teichmuller(c, 3));
  CHECK(d1 == std::vector<Elem>{c, Elem::zero(f2), Elem::zero(f2)});
  auto d2 = teich_decompose(verschiebung(teichmuller(c, 2), 3));
  CHECK(d2 == std::vector<Elem>{Elem::zero(f2), c, Elem::zero(f2)});

  auto d3 = teich_decompose(wv(f2, 2, {1, 1}));
  CHECK(d3 == std::vector<Elem>{c, c});

  for (const Ring& r : {make_prime_field(3), Ring(make_laurent(2))}) {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
      WittVector a = sample_witt(rng, r, r->p, 3);
      auto parts = teich_decompose(a);
      WittVector sum = WittVector::zero(r->p, r, 3);
      for (int k = 0; k < 3; ++k)
        sum = witt_add(sum, verschiebung_trunc_k(teichmuller(parts[k], 3), k));
      CHECK(sum == a);
    }
  }
}

TEST_CASE("FV = VF = p and the twist law") {
  for (const Ring& r : {Ring(make_finite_field(2, 2)), Ring(make_laurent(3))}) {
    Rng rng(43);
    const int n = 3;
    for (int i = 0; i < 100; ++i) {
      WittVector a = sample_witt(rng, r, r->p, n);
      WittVector b = sample_witt(rng, r, r->p, n);
      WittVector pa = witt_int_mul(a, r->p);
      CHECK(frobenius_W(verschiebung(a, n)) == pa);
      CHECK(verschiebung(frobenius_W(a), n) == pa);
      const int k = static_cast<int>(rng.below(n));
      const int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - k)));
      CHECK(witt_mul(verschiebung_trunc_k(a, k), verschiebung_trunc_k(b, l)) ==
            verschiebung_trunc_k(witt_mul(witt_frobenius_k(a, l), witt_frobenius_k(b, k)),
                                 k + l));
    }
  }
}

TEST_CASE("ghost is a ring morphism over Z") {
  Ring z = make_integers();
  Rng rng(47);
  for (int i = 0; i < 100; ++i) {
    WittVector a = sample_witt(rng, z, 2, 3);
    WittVector b = sample_witt(rng, z, 2, 3);
    GhostVector ga = ghost(a), gb = ghost(b);
    GhostVector gsum = ghost(witt_add(a, b));
    GhostVector gprod = ghost(witt_mul(a, b));
    for (int k = 0; k < 3; ++k) {
      CHECK(gsum.entries[k] == add(ga.entries[k], gb.entries[k]));
      CHECK(gprod.entries[k] == mul(ga.entries[k], gb.entries[k]));
    }
    CHECK(from_ghost(ga) == a);
  }
}
