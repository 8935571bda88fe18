#include <doctest.h>

#include "wittlab/sampling.hpp"
#include "wittlab/suites.hpp"

using namespace wittlab;

TEST_CASE("psi embeds compatibly with V") {
  Ring k2 = make_laurent(2);
  Elem c = Elem::monomial(k2, -1, {1});
  WittVector vc = WittVector::make(2, k2, {Elem::zero(k2), c});
  CHECK(psi(vc) == psi(WittVector::make(2, k2, {c})));
  CHECK(psi(WittVector::zero(2, k2, 3)).is_zero());

  WittVector abc = WittVector::make(2, k2, {c, Elem::one(k2), c});
  CHECK(psi(abc).window_size() == 3);
}

TEST_CASE("covectors reject non-characteristic-p rings") {
  CHECK_THROWS_AS(Covector::zero(2, make_integers()), RingError);
}

TEST_CASE("cov_add") {
  Ring k3 = make_laurent(3);
  Rng rng(53);
  Covector zero = Covector::zero(3, k3);
  for (int i = 0; i < 100; ++i) {
    WittVector a = sample_witt(rng, k3, 3, 2);
    WittVector b = sample_witt(rng, k3, 3, 2);
    CHECK(cov_add(psi(a), psi(b)) == psi(witt_add(a, b)));
    Covector x = sample_covector(rng, k3, 3, 2);
    CHECK(cov_add(x, zero) == x);
    CHECK(cov_add(x, cov_neg(x)).is_zero());
    CHECK(cov_add(x, psi(b)) == cov_add(x, psi(b), 1));  // lift-length independence
  }
}

TEST_CASE("cov F and V formulas") {
  Ring k2 = make_laurent(2);
  Elem a1 = Elem::monomial(k2, 1, {1});
  Elem a0 = Elem::one(k2);
  Covector x = Covector::make(2, k2, {a1, a0});
  CHECK(cov_V(x) == Covector::make(2, k2, {a1}));
  CHECK(cov_F(Covector::zero(2, k2)).is_zero());
  CHECK(cov_F(x) == Covector::make(2, k2, {mul(a1, a1), Elem::one(k2)}));

  Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    WittVector a = sample_witt(rng, k2, 2, 3);
    CHECK(cov_F(psi(a)) == psi(witt_frobenius_k(a, 1)));
    CHECK(cov_V(psi(a)) == psi(verschiebung(a, 3)));
  }
}

TEST_CASE("covector suites at their stated sample counts") {
  struct Cfg {
    const char* id;
    int samples;
  };
  for (const Cfg& c : {Cfg{"cov-add-lift-independence", 100}, Cfg{"cov-group-axioms", 200},
                       Cfg{"cov-psi-fv", 100}}) {
    SuiteSpec spec = find_suite(c.id)->defaults;
    spec.id = c.id;
    spec.samples = c.samples;
    spec.seed = 2024;
    SuiteReport rep = run_suite(spec);
    CAPTURE(c.id);
    CHECK(rep.passed());
  }
}
