#include <doctest.h>

#include "wittlab/forms.hpp"

using namespace wittlab;

namespace {

constexpr int kN = 2;

struct Fixture {
  Ring K = make_laurent(2);
  Rng rng{103};
  WittVector rand_wv() { return sample_witt(rng, K, 2, kN); }
};

}  // namespace

TEST_CASE("alpha kills exact forms and Leibniz sums") {
  Fixture fx;
  WittVector one = teichmuller(Elem::one(fx.K), kN);
  for (int i = 0; i < 30; ++i) {
    WittVector a = fx.rand_wv();
    WittVector b = fx.rand_wv();
    FormalTensor da = FormalTensor::make(fx.K, 2, kN, {{1, one, a}});
    CHECK(alpha_eval(da).is_zero());
    FormalTensor leib = FormalTensor::make(fx.K, 2, kN, {{1, a, b}, {1, b, a}});
    CHECK(alpha_eval(leib).is_zero());
  }
}

TEST_CASE("dlog_term") {
  Fixture fx;
  Elem t = Elem::monomial(fx.K, 1, {1});
  // alpha([1] dlog [t]) is the normalization anchor
  FormalTensor anchor = dlog_term(teichmuller(Elem::one(fx.K), kN), t);
  CHECK(alpha_eval(anchor).v == 1);

  CHECK(dlog_term(WittVector::zero(2, fx.K, kN), t).empty());
  FormalTensor at_one = dlog_term(fx.rand_wv(), Elem::one(fx.K));
  CHECK(alpha_eval(at_one).is_zero());
  CHECK_THROWS_AS(dlog_term(fx.rand_wv(), Elem::zero(fx.K)), RingError);

  for (int i = 0; i < 30; ++i) {
    WittVector a = fx.rand_wv();
    Elem b = sample_monomial_unit(fx.rng, fx.K);
    if (a.is_zero()) continue;
    CHECK(sym_equal(alpha_eval(dlog_term(a, b)), asw_symbol(a, b)));
  }
}

TEST_CASE("relation generators vanish under alpha") {
  Fixture fx;
  for (auto kind : {RelationKind::MnPrime, RelationKind::Mn, RelationKind::NnPrime,
                    RelationKind::Nn}) {
    for (int i = 0; i < 25; ++i)
      CHECK(alpha_eval(gen_relation(kind, fx.rng, fx.K, kN)).is_zero());
  }
  auto ncov = cov_relation_check(RelationKind::NCov, 25, fx.rng, fx.K, kN);
  CHECK(ncov.failures.empty());
  auto nwedge = cov_relation_check(RelationKind::NPrimeCov, 25, fx.rng, fx.K, kN);
  CHECK(nwedge.failures.empty());
}

TEST_CASE("relation kind names round-trip") {
  for (auto kind : {RelationKind::MnPrime, RelationKind::Mn, RelationKind::NnPrime,
                    RelationKind::Nn, RelationKind::NCov, RelationKind::NPrimeCov})
    CHECK(relation_kind_from_name(relation_kind_name(kind)) == kind);
  CHECK_THROWS_AS(relation_kind_from_name("bogus"), RingError);
}

TEST_CASE("reduce_to_teich") {
  Fixture fx;
  // fixed point on [x] (x) [y]
  Elem x = sample_laurent_nonzero(fx.rng, fx.K);
  Elem y = sample_laurent_nonzero(fx.rng, fx.K);
  FormalTensor pure = FormalTensor::make(
      fx.K, 2, kN, {{1, teichmuller(x, kN), teichmuller(y, kN)}});
  FormalTensor red = reduce_to_teich(pure);
  REQUIRE(red.terms.size() == 1);
  CHECK(red.terms[0].left == teichmuller(x, kN));
  CHECK(red.terms[0].right == teichmuller(y, kN));

  // V^k[x] (x) V^l[y] -> [x^(p^l)] (x) [y^(p^k)]
  FormalTensor shifted = FormalTensor::make(
      fx.K, 2, kN,
      {{1, verschiebung_trunc_k(teichmuller(x, kN), 1), teichmuller(y, kN)}});
  FormalTensor sred = reduce_to_teich(shifted);
  REQUIRE(sred.terms.size() == 1);
  CHECK(sred.terms[0].left == teichmuller(x, kN));
  CHECK(sred.terms[0].right == teichmuller(frobenius_power(y, 1), kN));

  for (int i = 0; i < 30; ++i) {
    FormalTensor t = FormalTensor::make(
        fx.K, 2, kN, {{1, fx.rand_wv(), fx.rand_wv()}, {-1, fx.rand_wv(), fx.rand_wv()}});
    FormalTensor r = reduce_to_teich(t);
    for (const auto& term : r.terms) {
      for (int c = 1; c < kN; ++c) {
        CHECK(term.left.coords[c].is_zero());
        CHECK(term.right.coords[c].is_zero());
      }
    }
    CHECK(sym_equal(alpha_eval(r), alpha_eval(t)));
  }
}

TEST_CASE("f_map and g_map against the exactness diagram") {
  Fixture fx;
  FormalTensor empty = FormalTensor::zero(fx.K, 2, kN);
  CHECK(f_map(empty).empty());
  CHECK(g_map(empty).empty());
  for (int i = 0; i < 30; ++i) {
    WittVector a = fx.rand_wv();
    WittVector b = fx.rand_wv();
    FormalTensor low = FormalTensor::make(
        fx.K, 2, kN - 1, {{1, truncate(a, kN - 1), truncate(b, kN - 1)}});
    CHECK(sym_equal(alpha_eval(f_map(low)), alpha_eval(low)));
    CHECK(sym_equal(alpha_eval(f_map(low)), sym_scale(alpha_eval(zero_extend(low)), 2)));

    FormalTensor top = FormalTensor::make(fx.K, 2, kN, {{1, a, b}});
    CHECK(sym_equal(alpha_eval(g_map(top)), sym_scale(alpha_eval(top), 1 << (kN - 1))));
    CHECK(alpha_eval(g_map(tensor_scale(top, 2))).is_zero());

    // both slots in V(W) truncate to a zero slot
    FormalTensor vv = FormalTensor::make(
        fx.K, 2, kN, {{1, verschiebung(truncate(a, kN - 1), kN), b}});
    CHECK(alpha_eval(g_map(vv)).is_zero());
  }
}

TEST_CASE("gn_equal") {
  Fixture fx;
  for (int i = 0; i < 20; ++i) {
    FormalTensor xt = FormalTensor::make(fx.K, 2, kN, {{1, fx.rand_wv(), fx.rand_wv()}});
    CHECK(gn_equal(xt, tensor_add(xt, gen_relation(RelationKind::Mn, fx.rng, fx.K, kN))));
    CHECK(gn_equal(xt, reduce_to_teich(xt)));
    FormalTensor anchor =
        dlog_term(teichmuller(Elem::one(fx.K), kN), Elem::monomial(fx.K, 1, {1}));
    CHECK(!gn_equal(xt, tensor_add(xt, anchor)));
  }
}

TEST_CASE("tensors prune zero slots and reject mismatches") {
  Fixture fx;
  WittVector z = WittVector::zero(2, fx.K, kN);
  FormalTensor t = FormalTensor::make(fx.K, 2, kN, {{0, fx.rand_wv(), fx.rand_wv()},
                                                    {3, z, fx.rand_wv()}});
  CHECK(t.empty());
  WittVector wrong_level = teichmuller(Elem::one(fx.K), kN + 1);
  CHECK_THROWS_AS(FormalTensor::make(fx.K, 2, kN, {{1, wrong_level, wrong_level}}), RingError);
  CHECK_THROWS_AS(FormalTensor::make(make_prime_field(2), 2, kN, {}), RingError);
}
