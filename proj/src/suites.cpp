#include "wittlab/suites.hpp"

#include <chrono>

namespace wittlab {

namespace {

using i64 = std::int64_t;

i64 ipow(i64 b, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Ring field_for(const SuiteSpec& s) { return make_finite_field(s.p, s.f); }
Ring laurent_for(const SuiteSpec& s) { return make_laurent(s.p, s.f); }
Ring witt_ring_for(const SuiteSpec& s) {
  return s.laurent ? laurent_for(s) : Ring(field_for(s));
}

PrecisionPolicy policy_for(const SuiteSpec& s) {
  PrecisionPolicy p;
  p.initial_slack = s.precision_slack;
  return p;
}

Json sym_json(const SymbolValue& v) {
  Json j;
  j["value"] = v.v;
  j["modulus"] = v.modulus();
  return j;
}

// Witness-and-check plumbing: body returns true on success, otherwise
// fills the witness object that the failure report serializes.
template <typename Body>
void sample_loop(const SuiteSpec& spec, SuiteReport& rep, Body&& body) {
  rep.samples = spec.samples;
  for (int i = 0; i < spec.samples; ++i) {
    Rng rng = Rng::for_sample(spec.seed, static_cast<std::uint64_t>(i));
    Json witness = Json::object();
    bool ok;
    try {
      ok = body(rng, witness);
    } catch (const InternalError& e) {
      witness["internal_error"] = e.what();
      ok = false;
    }
    if (!ok) rep.failures.push_back({i, witness});
  }
}

bool check_sym(Json& w, const char* label, const SymbolValue& lhs, const SymbolValue& rhs) {
  if (sym_equal(lhs, rhs)) return true;
  w["identity"] = label;
  w["lhs"] = sym_json(lhs);
  w["rhs"] = sym_json(rhs);
  return false;
}

bool check_zero(Json& w, const char* label, const SymbolValue& v) {
  return check_sym(w, label, v, sym_make(v.p, v.n, 0));
}

// ---------------------------------------------------------------------
// witt-core suites
// ---------------------------------------------------------------------

void witt_ring_axioms(const SuiteSpec& spec, SuiteReport& rep) {
  Ring R = witt_ring_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, R, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, R, spec.p, spec.n, spec.space);
    WittVector c = sample_witt(rng, R, spec.p, spec.n, spec.space);
    WittVector zero = WittVector::zero(spec.p, R, spec.n);
    WittVector one = teichmuller(Elem::one(R), spec.n);
    bool ok = witt_add(a, b) == witt_add(b, a) &&
              witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c)) &&
              witt_mul(a, b) == witt_mul(b, a) &&
              witt_mul(witt_mul(a, b), c) == witt_mul(a, witt_mul(b, c)) &&
              witt_mul(a, witt_add(b, c)) == witt_add(witt_mul(a, b), witt_mul(a, c)) &&
              witt_add(a, zero) == a && witt_mul(a, one) == a &&
              witt_add(a, witt_neg(a)) == zero;
    if (!ok) {
      w["a"] = witt_to_json(a);
      w["b"] = witt_to_json(b);
      w["c"] = witt_to_json(c);
    }
    return ok;
  });
}

void witt_fv_vf(const SuiteSpec& spec, SuiteReport& rep) {
  Ring R = witt_ring_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, R, spec.p, spec.n, spec.space);
    WittVector fv = frobenius_W(verschiebung(a, spec.n));
    WittVector vf = verschiebung(frobenius_W(a), spec.n);
    WittVector pa = witt_int_mul(a, spec.p);
    bool ok = fv == pa && vf == pa;
    if (!ok) {
      w["a"] = witt_to_json(a);
      w["FV(a)"] = witt_to_json(fv);
      w["VF(a)"] = witt_to_json(vf);
      w["p*a"] = witt_to_json(pa);
    }
    return ok;
  });
}

void witt_v_twist(const SuiteSpec& spec, SuiteReport& rep) {
  Ring R = witt_ring_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    const int k = static_cast<int>(rng.below(spec.n));
    const int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n - k)));
    WittVector a = sample_witt(rng, R, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, R, spec.p, spec.n, spec.space);
    WittVector lhs = witt_mul(verschiebung_trunc_k(a, k), verschiebung_trunc_k(b, l));
    WittVector rhs = verschiebung_trunc_k(
        witt_mul(witt_frobenius_k(a, l), witt_frobenius_k(b, k)), k + l);
    WittVector lhs2 = witt_mul(verschiebung_trunc_k(a, k), b);
    WittVector rhs2 = verschiebung_trunc_k(witt_mul(a, witt_frobenius_k(b, k)), k);
    bool ok = lhs == rhs && lhs2 == rhs2;
    if (!ok) {
      w["k"] = k;
      w["l"] = l;
      w["a"] = witt_to_json(a);
      w["b"] = witt_to_json(b);
    }
    return ok;
  });
}

void witt_ghost_morphism(const SuiteSpec& spec, SuiteReport& rep) {
  Ring Z = make_integers();
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, Z, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, Z, spec.p, spec.n, spec.space);
    GhostVector ga = ghost(a), gb = ghost(b);
    GhostVector gs = ghost(witt_add(a, b));
    GhostVector gd = ghost(witt_sub(a, b));
    GhostVector gp = ghost(witt_mul(a, b));
    bool ok = true;
    for (int i = 0; i < spec.n; ++i) {
      ok = ok && gs.entries[i] == add(ga.entries[i], gb.entries[i]);
      ok = ok && gd.entries[i] == sub(ga.entries[i], gb.entries[i]);
      ok = ok && gp.entries[i] == mul(ga.entries[i], gb.entries[i]);
    }
    if (!ok) {
      w["a"] = witt_to_json(a);
      w["b"] = witt_to_json(b);
      w["ghost(a)"] = ghost_to_json(ga);
      w["ghost(b)"] = ghost_to_json(gb);
    }
    return ok;
  });
}

void witt_ghost_roundtrip(const SuiteSpec& spec, SuiteReport& rep) {
  Ring Z = make_integers();
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, Z, spec.p, spec.n, spec.space);
    WittVector back = from_ghost(ghost(a));
    if (back == a) return true;
    w["a"] = witt_to_json(a);
    w["roundtrip"] = witt_to_json(back);
    return false;
  });
}

void witt_teich_scale(const SuiteSpec& spec, SuiteReport& rep) {
  Ring R = witt_ring_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, R, spec.p, spec.n, spec.space);
    Elem b = R->is_laurent() ? sample_laurent(rng, R, spec.space)
                             : sample_scalar(rng, R);
    WittVector lhs = witt_mul(a, teichmuller(b, spec.n));
    WittVector rhs = scale_teich(a, b);
    if (lhs == rhs) return true;
    w["a"] = witt_to_json(a);
    w["b"] = elem_to_json(b);
    w["a*[b]"] = witt_to_json(lhs);
    w["scale_teich"] = witt_to_json(rhs);
    return false;
  });
}

void witt_truncation_morphism(const SuiteSpec& spec, SuiteReport& rep) {
  Ring R = witt_ring_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    const int m = 1 + static_cast<int>(rng.below(spec.n));
    WittVector a = sample_witt(rng, R, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, R, spec.p, spec.n, spec.space);
    bool ok = truncate(witt_add(a, b), m) == witt_add(truncate(a, m), truncate(b, m)) &&
              truncate(witt_mul(a, b), m) == witt_mul(truncate(a, m), truncate(b, m));
    if (!ok) {
      w["m"] = m;
      w["a"] = witt_to_json(a);
      w["b"] = witt_to_json(b);
    }
    return ok;
  });
}

void witt_decompose_roundtrip(const SuiteSpec& spec, SuiteReport& rep) {
  Ring R = witt_ring_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, R, spec.p, spec.n, spec.space);
    std::vector<Elem> parts = teich_decompose(a);
    WittVector sum = WittVector::zero(spec.p, R, spec.n);
    for (int i = 0; i < spec.n; ++i)
      sum = witt_add(sum, verschiebung_trunc_k(teichmuller(parts[i], spec.n), i));
    if (sum == a) return true;
    w["a"] = witt_to_json(a);
    w["reconstruction"] = witt_to_json(sum);
    return false;
  });
}

void wp_kernel_iso(const SuiteSpec& spec, SuiteReport& rep) {
  // exhaustive over W_n(F_p); the samples field is ignored
  Ring P = make_prime_field(spec.p);
  const i64 count = ipow(spec.p, spec.n);
  rep.samples = static_cast<int>(count);
  WittVector one = teichmuller(Elem::one(P), spec.n);
  std::vector<WittVector> table;
  WittVector acc = WittVector::zero(spec.p, P, spec.n);
  for (i64 m = 0; m < count; ++m) {
    table.push_back(acc);
    acc = witt_add(acc, one);
  }
  if (!(acc == table[0])) {
    Json w;
    w["identity"] = "p^n * 1 = 0";
    rep.failures.push_back({0, w});
  }
  for (i64 m = 0; m < count; ++m) {
    Json w;
    // kernel: wp vanishes on every vector of W_n(F_p)
    if (!artin_schreier(table[m]).is_zero()) {
      w["identity"] = "wp = 0 on W_n(F_p)";
      w["m"] = m;
      rep.failures.push_back({static_cast<int>(m), w});
      continue;
    }
    // m -> m*1 is injective (hence bijective) and additive
    for (i64 k = 0; k < m; ++k)
      if (table[m] == table[k]) {
        w["identity"] = "m -> m*1 injective";
        w["m"] = m;
        w["k"] = k;
        rep.failures.push_back({static_cast<int>(m), w});
        break;
      }
    if (witt_constant_to_int(table[m]) != m) {
      w["identity"] = "digit extraction inverts m -> m*1";
      w["m"] = m;
      rep.failures.push_back({static_cast<int>(m), w});
    }
  }
}

// ---------------------------------------------------------------------
// covector suites
// ---------------------------------------------------------------------

void cov_add_lift_independence(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    Covector x = sample_covector(rng, K, spec.p, spec.n, spec.space);
    Covector y = sample_covector(rng, K, spec.p, spec.n, spec.space);
    if (cov_add(x, y) == cov_add(x, y, 2)) return true;
    w["x"] = covector_to_json(x);
    w["y"] = covector_to_json(y);
    return false;
  });
}

void cov_group_axioms(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    Covector x = sample_covector(rng, K, spec.p, spec.n, spec.space);
    Covector y = sample_covector(rng, K, spec.p, spec.n, spec.space);
    Covector z = sample_covector(rng, K, spec.p, spec.n, spec.space);
    Covector zero = Covector::zero(spec.p, K);
    bool ok = cov_add(x, y) == cov_add(y, x) &&
              cov_add(cov_add(x, y), z) == cov_add(x, cov_add(y, z)) &&
              cov_add(x, zero) == x && cov_add(x, cov_neg(x)) == zero;
    if (!ok) {
      w["x"] = covector_to_json(x);
      w["y"] = covector_to_json(y);
      w["z"] = covector_to_json(z);
    }
    return ok;
  });
}

void cov_psi_fv(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    bool ok = psi(witt_frobenius_k(a, 1)) == cov_F(psi(a)) &&
              psi(verschiebung(a, spec.n)) == cov_V(psi(a)) &&
              psi(verschiebung(a, spec.n + 1)) == psi(a) &&
              psi(witt_add(a, b)) == cov_add(psi(a), psi(b));
    if (!ok) {
      w["a"] = witt_to_json(a);
      w["b"] = witt_to_json(b);
    }
    return ok;
  });
}

// ---------------------------------------------------------------------
// symbol suites
// ---------------------------------------------------------------------

void sym_bilinear(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector a2 = sample_witt(rng, K, spec.p, spec.n, spec.space);
    Elem b = sample_laurent_nonzero(rng, K, spec.space);
    Elem b2 = sample_laurent_nonzero(rng, K, spec.space);
    w["a"] = witt_to_json(a);
    w["a'"] = witt_to_json(a2);
    w["b"] = elem_to_json(b);
    w["b'"] = elem_to_json(b2);
    return check_sym(w, "[a+a',b) = [a,b) + [a',b)",
                     asw_symbol(witt_add(a, a2), b, pol),
                     sym_add(asw_symbol(a, b, pol), asw_symbol(a2, b, pol))) &&
           check_sym(w, "[a,bb') = [a,b) + [a,b')", asw_symbol(a, mul(b, b2), pol),
                     sym_add(asw_symbol(a, b, pol), asw_symbol(a, b2, pol)));
  });
}

void sym_wp_vanish(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector c = sample_witt(rng, K, spec.p, spec.n, spec.space);
    Elem b = sample_laurent_nonzero(rng, K, spec.space);
    w["c"] = witt_to_json(c);
    w["b"] = elem_to_json(b);
    return check_zero(w, "[wp(c),b) = 0", asw_symbol(artin_schreier(c), b, pol));
  });
}

void sym_power_vanish(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    Elem b = sample_laurent_nonzero(rng, K, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = elem_to_json(b);
    return check_zero(w, "[a,b^(p^n)) = 0",
                      asw_symbol(a, frobenius_power(b, spec.n), pol));
  });
}

void sym_frob_inv(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    Elem b = sample_laurent_nonzero(rng, K, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = elem_to_json(b);
    return check_sym(w, "[Fa,b) = [a,b)", asw_symbol(witt_frobenius_k(a, 1), b, pol),
                     asw_symbol(a, b, pol)) &&
           check_sym(w, "[Va,b) = p[a,b)",
                     asw_symbol(verschiebung(a, spec.n), b, pol),
                     sym_scale(asw_symbol(a, b, pol), spec.p));
  });
}

void sym_v_shift(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    Elem b = sample_laurent_nonzero(rng, K, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = elem_to_json(b);
    auto [lo, hi] = asw_symbol_shift_check(a, b, pol);
    if (!check_sym(w, "[a,b)_(p^n) = [Va,b)_(p^(n+1))", lo, hi)) return false;
    // truncation compatibility: p^(m-n) [a',b)_(p^m) = [a,b)_(p^n) with a' at level m = n+1
    WittVector ap = sample_witt(rng, K, spec.p, spec.n + 1, spec.space);
    SymbolValue high = asw_symbol(ap, b, pol);
    SymbolValue low = asw_symbol(truncate(ap, spec.n), b, pol);
    return check_sym(w, "p^(m-n) [a,b)_(p^m) = [a,b)_(p^n)",
                     sym_make(spec.p, spec.n, high.v), low);
  });
}

void sym_unramified_unit(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  WitnessSpace nonneg = spec.space;
  nonneg.emin = 0;
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, nonneg);
    Elem b;
    do {
      b = sample_laurent(rng, K, nonneg);
    } while (b.is_zero() || valuation(b) != 0);
    w["a"] = witt_to_json(a);
    w["b"] = elem_to_json(b);
    return check_zero(w, "unramified a, unit b => [a,b) = 0", asw_symbol(a, b, pol));
  });
}

void lemma_22i_key(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    Elem b = sample_laurent_nonzero(rng, K, spec.space);
    w["b"] = elem_to_json(b);
    return check_zero(w, "[[b],b) = 0", asw_symbol(teichmuller(b, spec.n), b, pol));
  });
}

void lemma_22ii_at_t(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  WitnessSpace positive = spec.space;
  positive.emin = 1;  // coordinates in t F_q[t]
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, positive);
    Elem t = Elem::monomial(K, 1, {1});
    w["a"] = witt_to_json(a);
    return check_zero(w, "a in W_n(t F_q[t]) => [a,t) = 0", asw_symbol(a, t, pol));
  });
}

void sym_inf_wp_vanish(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    Covector x = sample_covector(rng, K, spec.p, spec.n, spec.space);
    Elem b = sample_laurent_nonzero(rng, K, spec.space);
    Covector wx = cov_artin_schreier(x);
    w["x"] = covector_to_json(x);
    w["b"] = elem_to_json(b);
    return check_zero(w, "[wp(x),b)_(p^inf) = 0", asw_symbol_inf(wx, b, pol));
  });
}

void sym_inf_power_vanish(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    Covector x = sample_covector(rng, K, spec.p, spec.n, spec.space);
    Elem b0 = sample_laurent_nonzero(rng, K, spec.space);
    const int k = std::max(1, x.window_size());
    Elem b = frobenius_power(b0, k);
    w["x"] = covector_to_json(x);
    w["b"] = elem_to_json(b);
    return check_zero(w, "b in K^(x p^inf) => [x,b)_(p^inf) = 0",
                      asw_symbol_inf(x, b, pol));
  });
}

void oracle_n1_classical(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    Elem a = sample_laurent(rng, K, spec.space);
    Elem b = sample_laurent_nonzero(rng, K, spec.space);
    w["a"] = elem_to_json(a);
    w["b"] = elem_to_json(b);
    return check_sym(w, "ghost-residue route = Tr(Res(a dlog b)) at n=1",
                     asw_symbol(teichmuller(a, 1), b, pol), classical_symbol_p(a, b));
  });
}

void anchor_normalization(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  rep.samples = 1;
  Json w;
  Elem t = Elem::monomial(K, 1, {1});
  SymbolValue s = asw_symbol(teichmuller(Elem::one(K), spec.n), t, pol);
  rep.notes["value"] = s.v;
  rep.notes["modulus"] = s.modulus();
  if (s.v != 1) {
    w["identity"] = "[[1],t)_(p^n) = 1";
    w["value"] = sym_json(s);
    w["note"] = "anchor failure with a passing identity suite indicates a sign/normalization error";
    rep.failures.push_back({0, w});
  }
}

void anchor_order4(const SuiteSpec& spec, SuiteReport& rep) {
  // p = 2, n = 2: (([t^-1],[t])) must be an element of order 4 in Z/4
  Ring K = make_laurent(2);
  PrecisionPolicy pol = policy_for(spec);
  rep.samples = 1;
  Elem t = Elem::monomial(K, 1, {1});
  Elem tinv = Elem::monomial(K, -1, {1});
  SymbolValue s = pairing_n(teichmuller(tinv, 2), teichmuller(t, 2), pol);
  rep.notes["value"] = s.v;
  rep.notes["modulus"] = s.modulus();
  if (s.v % 2 == 0) {
    Json w;
    w["identity"] = "(([t^-1],[t]))_4 has order 4";
    w["value"] = sym_json(s);
    rep.failures.push_back({0, w});
  }
}

// ---------------------------------------------------------------------
// pairing suites
// ---------------------------------------------------------------------

void prop_33i(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector c = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector d = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    w["c"] = witt_to_json(c);
    w["d"] = witt_to_json(d);
    return check_sym(w, "((a,b)) = ((a+F^n c, b+F^n d))", pairing_n(a, b, pol),
                     pairing_n(witt_add(a, witt_frobenius_k(c, spec.n)),
                               witt_add(b, witt_frobenius_k(d, spec.n)), pol));
  });
}

void prop_33ii(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector a2 = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b2 = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["a'"] = witt_to_json(a2);
    w["b"] = witt_to_json(b);
    w["b'"] = witt_to_json(b2);
    return check_sym(w, "((a+a',b)) = ((a,b)) + ((a',b))",
                     pairing_n(witt_add(a, a2), b, pol),
                     sym_add(pairing_n(a, b, pol), pairing_n(a2, b, pol))) &&
           check_sym(w, "((a,b+b')) = ((a,b)) + ((a,b'))",
                     pairing_n(a, witt_add(b, b2), pol),
                     sym_add(pairing_n(a, b, pol), pairing_n(a, b2, pol)));
  });
}

void prop_33iii(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    return check_zero(w, "((a,b)) + ((b,a)) = 0",
                      sym_add(pairing_n(a, b, pol), pairing_n(b, a, pol)));
  });
}

void prop_33iv(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector c = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    w["c"] = witt_to_json(c);
    SymbolValue s = sym_add(sym_add(pairing_n(a, witt_mul(b, c), pol),
                                    pairing_n(b, witt_mul(a, c), pol)),
                            pairing_n(c, witt_mul(a, b), pol));
    return check_zero(w, "((a,bc)) + ((b,ac)) + ((c,ab)) = 0", s);
  });
}

void lemma_32i(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    SymbolValue rhs = sym_make(spec.p, spec.n, 0);
    for (int i = 0; i < spec.n; ++i) {
      if (a.coords[i].is_zero()) continue;
      for (int j = 0; j < spec.n; ++j) {
        if (b.coords[j].is_zero()) continue;
        Elem ai = frobenius_power(a.coords[i], j);
        Elem bj = frobenius_power(b.coords[j], i);
        rhs = sym_add(rhs, asw_symbol(teichmuller(mul(ai, bj), spec.n), bj, pol));
      }
    }
    return check_sym(w, "((a,b)) = sum [[a_i^(p^j) b_j^(p^i)], b_j^(p^i))",
                     pairing_n(a, b, pol), rhs);
  });
}

void lemma_32ii(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    const int k = static_cast<int>(rng.below(spec.n + 1));
    const int l = static_cast<int>(rng.below(spec.n + 1));
    Elem a = sample_laurent_nonzero(rng, K, spec.space);
    Elem b = sample_laurent_nonzero(rng, K, spec.space);
    w["k"] = k;
    w["l"] = l;
    w["a"] = elem_to_json(a);
    w["b"] = elem_to_json(b);
    SymbolValue lhs = pairing_n(verschiebung_trunc_k(teichmuller(a, spec.n), k),
                                verschiebung_trunc_k(teichmuller(b, spec.n), l), pol);
    Elem first = mul(frobenius_power(a, l), frobenius_power(b, k));
    SymbolValue rhs = asw_symbol(teichmuller(first, spec.n), frobenius_power(b, k), pol);
    return check_sym(w, "((V^k[a],V^l[b])) = [[a^(p^l) b^(p^k)], b^(p^k))", lhs, rhs);
  });
}

void prop_37_adjoint(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    return check_sym(w, "((Fa,b)) = ((a,Vb))", pairing_n(witt_frobenius_k(a, 1), b, pol),
                     pairing_n(a, verschiebung(b, spec.n), pol)) &&
           check_sym(w, "((Va,b)) = ((a,Fb))",
                     pairing_n(verschiebung(a, spec.n), b, pol),
                     pairing_n(a, witt_frobenius_k(b, 1), pol));
  });
}

void prop_38_vshift(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    return check_sym(w, "((a,b))_(p^n) = ((Va,Vb))_(p^(n+1))", pairing_n(a, b, pol),
                     pairing_n(verschiebung(a, spec.n + 1), verschiebung(b, spec.n + 1), pol));
  });
}

void cor_39_scaling(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  const int m = spec.n + 1;
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, m, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, m, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    SymbolValue low = pairing_n(truncate(a, spec.n), truncate(b, spec.n), pol);
    SymbolValue high = pairing_n(a, b, pol);
    return check_sym(w, "((a,b))_(p^n) = p^(m-n)((a,b))_(p^m)", sym_lift(low, m),
                     sym_scale(high, ipow(spec.p, m - spec.n)));
  });
}

void prop_310_antisym(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    return check_zero(w, "((a,a)) = 0", pairing_n(a, a, pol));
  });
}

void prop_311ii(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.m, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector c = sample_witt(rng, K, spec.p, spec.m, spec.space);
    WittVector d = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    w["c"] = witt_to_json(c);
    w["d"] = witt_to_json(d);
    return check_sym(w, "((a,b))_(p^m,p^n) = ((a+F^n c, b+F^m d))_(p^m,p^n)",
                     pairing_mn(a, b, pol),
                     pairing_mn(witt_add(a, witt_frobenius_k(c, spec.n)),
                                witt_add(b, witt_frobenius_k(d, spec.m)), pol));
  });
}

void prop_311iv(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.m, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    return check_sym(w, "((a,b))_(p^m,p^n) = -((b,a))_(p^n,p^m)", pairing_mn(a, b, pol),
                     sym_neg(pairing_mn(b, a, pol)));
  });
}

void prop_313_case_split(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    const int i = static_cast<int>(rng.below(3));
    const int j = static_cast<int>(rng.below(3));
    const int k = static_cast<int>(rng.below(3));
    const int l = static_cast<int>(rng.below(3));
    WittVector a = sample_witt(rng, K, spec.p, spec.m, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["i"] = i;
    w["j"] = j;
    w["k"] = k;
    w["l"] = l;
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    SymbolValue lhs = pairing_mn(witt_frobenius_k(verschiebung_trunc_k(a, j), i),
                                 witt_frobenius_k(verschiebung_trunc_k(b, l), k), pol);
    if (spec.m > j + k && spec.n > i + l) {
      SymbolValue rhs = pairing_mn(truncate(a, spec.m - j - k), truncate(b, spec.n - i - l), pol);
      return check_sym(w, "((F^i V^j a, F^k V^l b)) = ((a,b)) at the shifted levels", lhs, rhs);
    }
    return check_zero(w, "((F^i V^j a, F^k V^l b)) = 0 beyond the level split", lhs);
  });
}

void prop_314i_routes(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.m, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    // pairing_mn evaluates both the common-lift route and the direct sum
    // formula and throws InternalError if they disagree
    SymbolValue s = pairing_mn(a, b, pol);
    w["value"] = sym_json(s);
    return true;
  });
}

void prop_317_padding(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    Covector x = sample_covector(rng, K, spec.p, spec.n, spec.space);
    Covector y = sample_covector(rng, K, spec.p, spec.n, spec.space);
    w["x"] = covector_to_json(x);
    w["y"] = covector_to_json(y);
    SymbolValue s = pairing_inf(x, y, pol);
    if (x.is_zero() || y.is_zero()) return check_zero(w, "zero covector pairs to 0", s);
    SymbolValue padded = pairing_mn(cov_to_witt(x, x.window_size() + 1),
                                    cov_to_witt(y, y.window_size() + 1), pol);
    return check_sym(w, "((x,y))_(p^inf) is window-padding independent", s, padded);
  });
}

void prop_317_antisym(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    Covector x = sample_covector(rng, K, spec.p, spec.n, spec.space);
    Covector y = sample_covector(rng, K, spec.p, spec.n, spec.space);
    w["x"] = covector_to_json(x);
    w["y"] = covector_to_json(y);
    bool ok = check_sym(w, "((x,y))_(p^inf) = -((y,x))_(p^inf)", pairing_inf(x, y, pol),
                        sym_neg(pairing_inf(y, x, pol)));
    return ok && check_zero(w, "((x,x))_(p^inf) = 0", pairing_inf(x, x, pol));
  });
}

// ---------------------------------------------------------------------
// forms suites
// ---------------------------------------------------------------------

void lemma_42_kernel(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector one = teichmuller(Elem::one(K), spec.n);
    // d a = 1 (x) a
    FormalTensor da = FormalTensor::make(K, spec.p, spec.n, {{1, one, a}});
    if (!check_zero(w, "alpha(da) = 0", alpha_eval(da, pol))) {
      w["a"] = witt_to_json(a);
      return false;
    }
    FormalTensor fv = FormalTensor::make(
        K, spec.p, spec.n,
        {{1, witt_frobenius_k(a, 1), b}, {-1, a, verschiebung(b, spec.n)}});
    if (!check_zero(w, "alpha(Fa db - a dVb) = 0", alpha_eval(fv, pol))) {
      w["a"] = witt_to_json(a);
      w["b"] = witt_to_json(b);
      return false;
    }
    FormalTensor vf = FormalTensor::make(
        K, spec.p, spec.n,
        {{1, verschiebung(a, spec.n), b}, {-1, a, witt_frobenius_k(b, 1)}});
    if (!check_zero(w, "alpha(Va db - a dFb) = 0", alpha_eval(vf, pol))) {
      w["a"] = witt_to_json(a);
      w["b"] = witt_to_json(b);
      return false;
    }
    Elem bu = sample_monomial_unit(rng, K, spec.space);
    WittVector wpa = artin_schreier(a);
    if (!wpa.is_zero()) {
      FormalTensor dl = dlog_term(wpa, bu);
      if (!check_zero(w, "alpha(wp(a) dlog [b]) = 0", alpha_eval(dl, pol))) {
        w["a"] = witt_to_json(a);
        w["b"] = elem_to_json(bu);
        return false;
      }
    }
    return true;
  });
}

void nn_generators(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    RelationKind kind = rng.below(2) ? RelationKind::Nn : RelationKind::NnPrime;
    FormalTensor t = gen_relation(kind, rng, K, spec.n, spec.space);
    SymbolValue s = alpha_eval(t, pol);
    if (s.is_zero()) return true;
    w["identity"] = "alpha vanishes on the sampled tensor relation generator";
    w["kind"] = relation_kind_name(kind);
    w["tensor"] = tensor_to_json(t);
    w["value"] = sym_json(s);
    return false;
  });
}

void lemma_44_consequences(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector one = teichmuller(Elem::one(K), spec.n);
    FormalTensor leibniz = FormalTensor::make(K, spec.p, spec.n, {{1, a, b}, {1, b, a}});
    FormalTensor da = FormalTensor::make(K, spec.p, spec.n, {{1, one, a}});
    FormalTensor fn_da =
        FormalTensor::make(K, spec.p, spec.n, {{1, witt_frobenius_k(one, spec.n), a}});
    bool ok = check_zero(w, "alpha(a db + b da) = 0", alpha_eval(leibniz, pol)) &&
              check_zero(w, "alpha(F^n 1 da) = 0", alpha_eval(fn_da, pol)) &&
              check_zero(w, "alpha(da) = 0", alpha_eval(da, pol));
    if (!ok) {
      w["a"] = witt_to_json(a);
      w["b"] = witt_to_json(b);
    }
    return ok;
  });
}

void lemma_45_rewrites(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    const int k = static_cast<int>(rng.below(4));
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    w["k"] = k;
    auto al = [&](const WittVector& l, const WittVector& r) {
      return alpha_eval(FormalTensor::make(K, spec.p, spec.n, {{1, l, r}}), pol);
    };
    // b^k and k a b^(k-1), with b^0 = 1
    WittVector bk = teichmuller(Elem::one(K), spec.n);
    for (int u = 0; u < k; ++u) bk = witt_mul(bk, b);
    WittVector bk1 = teichmuller(Elem::one(K), spec.n);
    for (int u = 0; u + 1 < k; ++u) bk1 = witt_mul(bk1, b);
    SymbolValue power_rhs = k == 0 ? sym_make(spec.p, spec.n, 0)
                                   : sym_scale(al(witt_mul(a, bk1), b), k);
    return check_sym(w, "alpha(Fa (x) b) = alpha(a (x) Vb)",
                     al(witt_frobenius_k(a, 1), b), al(a, verschiebung(b, spec.n))) &&
           check_sym(w, "alpha(Va (x) b) = alpha(a (x) Fb)",
                     al(verschiebung(a, spec.n), b), al(a, witt_frobenius_k(b, 1))) &&
           check_sym(w, "alpha(a (x) b) = -alpha(b (x) a)", al(a, b), sym_neg(al(b, a))) &&
           check_sym(w, "alpha(a (x) b^k) = k alpha(a b^(k-1) (x) b)", al(a, bk), power_rhs);
  });
}

void thm_410_fmap(const SuiteSpec& spec, SuiteReport& rep) {
  if (spec.n < 2) throw RingError("thm-4.10-fmap needs n >= 2");
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n - 1, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n - 1, spec.space);
    FormalTensor x = FormalTensor::make(K, spec.p, spec.n - 1, {{1, a, b}});
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    FormalTensor fx = f_map(x);
    return check_sym(w, "alpha_n(f_n(x)) = alpha_(n-1)(x)", alpha_eval(fx, pol),
                     alpha_eval(x, pol)) &&
           check_sym(w, "alpha_n(f_n(x)) = p alpha_n(zero-extension of x)",
                     alpha_eval(fx, pol), sym_scale(alpha_eval(zero_extend(x), pol), spec.p));
  });
}

void thm_410_gmap(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    WittVector b = sample_witt(rng, K, spec.p, spec.n, spec.space);
    FormalTensor x = FormalTensor::make(K, spec.p, spec.n, {{1, a, b}});
    w["a"] = witt_to_json(a);
    w["b"] = witt_to_json(b);
    return check_sym(w, "alpha_1(g_n(x)) = p^(n-1) alpha_n(x)", alpha_eval(g_map(x), pol),
                     sym_scale(alpha_eval(x, pol), ipow(spec.p, spec.n - 1))) &&
           check_zero(w, "alpha_1(g_n(p x)) = 0",
                      alpha_eval(g_map(tensor_scale(x, spec.p)), pol));
  });
}

void lemma_411_probe(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    Elem a = sample_laurent(rng, K, spec.space);
    Elem b = sample_monomial_unit(rng, K, spec.space);
    WittVector wpa = artin_schreier(teichmuller(a, spec.n));
    if (wpa.is_zero()) return true;
    FormalTensor eta = dlog_term(wpa, b);
    w["a"] = elem_to_json(a);
    w["b"] = elem_to_json(b);
    return check_zero(w, "alpha_(n+1)((V(x)V) wp([a]) dlog [b]) = 0",
                      alpha_eval(f_map(eta), pol));
  });
}

void lemma_412_cov(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    CovectorTensor t = gen_cov_relation(RelationKind::NCov, rng, K, spec.n, spec.space);
    SymbolValue s = alpha_eval_cov(t, policy_for(spec));
    if (s.is_zero()) return true;
    w["identity"] = "alpha_(p^inf) vanishes on the N generators";
    w["value"] = sym_json(s);
    return false;
  });
}

void cor_414_wedge(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    CovectorTensor t = gen_cov_relation(RelationKind::NPrimeCov, rng, K, spec.n, spec.space);
    SymbolValue s = alpha_eval_cov(t, policy_for(spec));
    if (s.is_zero()) return true;
    w["identity"] = "alpha_(p^inf) vanishes on the N' wedge generators";
    w["value"] = sym_json(s);
    return false;
  });
}

void reduce_teich_alpha(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    std::vector<FormalTensor::Term> terms;
    const int nterms = 1 + static_cast<int>(rng.below(3));
    for (int t = 0; t < nterms; ++t)
      terms.push_back({static_cast<i64>(rng.in_range(-2, 2)),
                       sample_witt(rng, K, spec.p, spec.n, spec.space),
                       sample_witt(rng, K, spec.p, spec.n, spec.space)});
    FormalTensor x = FormalTensor::make(K, spec.p, spec.n, std::move(terms));
    FormalTensor reduced = reduce_to_teich(x);
    w["x"] = tensor_to_json(x);
    return check_sym(w, "alpha(reduce_to_teich(x)) = alpha(x)", alpha_eval(reduced, pol),
                     alpha_eval(x, pol));
  });
}

void dlog_term_agree(const SuiteSpec& spec, SuiteReport& rep) {
  Ring K = laurent_for(spec);
  PrecisionPolicy pol = policy_for(spec);
  sample_loop(spec, rep, [&](Rng& rng, Json& w) {
    WittVector a = sample_witt(rng, K, spec.p, spec.n, spec.space);
    Elem b = sample_monomial_unit(rng, K, spec.space);
    w["a"] = witt_to_json(a);
    w["b"] = elem_to_json(b);
    if (a.is_zero()) return true;
    return check_sym(w, "alpha(a dlog [b]) = [a,b)", alpha_eval(dlog_term(a, b), pol),
                     asw_symbol(a, b, pol));
  });
}

// ---------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------

SuiteSpec defaults(std::int64_t p, int f, bool laurent, int n, int m = 0) {
  SuiteSpec s;
  s.p = p;
  s.f = f;
  s.laurent = laurent;
  s.n = n;
  s.m = m ? m : n;
  return s;
}

std::vector<SuiteDef> build_catalog() {
  std::vector<SuiteDef> defs;
  auto addf = [&](std::string id, std::string desc, SuiteSpec d,
                  void (*fn)(const SuiteSpec&, SuiteReport&)) {
    defs.push_back({std::move(id), std::move(desc), std::move(d), fn});
  };

  addf("witt-ring-axioms", "[sec-1] W_n(R) satisfies the commutative-ring axioms",
       defaults(2, 1, false, 2), witt_ring_axioms);
  addf("witt-fv-vf", "[sec-1] FV = VF = p on W_n", defaults(2, 1, false, 2), witt_fv_vf);
  addf("witt-v-twist", "[sec-1] (V^k a)(V^l b) = V^(k+l)(F^l a F^k b) and (V^k a)b = V^k(a F^k b)",
       defaults(2, 1, false, 3), witt_v_twist);
  addf("witt-ghost-morphism", "[sec-1] the ghost map is a ring morphism over Z",
       defaults(2, 1, false, 2), witt_ghost_morphism);
  addf("witt-ghost-roundtrip", "[sec-1] from_ghost inverts ghost over Z",
       defaults(2, 1, false, 2), witt_ghost_roundtrip);
  addf("witt-teich-scale", "[sec-1] a[b] = (a_0 b, a_1 b^p, ...) matches universal multiplication",
       defaults(2, 1, false, 2), witt_teich_scale);
  addf("witt-truncation-morphism", "[sec-1] truncation W_n -> W_m is a ring morphism",
       defaults(2, 1, false, 3), witt_truncation_morphism);
  addf("witt-decompose-roundtrip", "[lemma-2.1] a = sum V^i [x_i] for the greedy decomposition",
       defaults(2, 1, false, 3), witt_decompose_roundtrip);
  addf("wp-kernel-iso",
       "[sec-1] ker(wp) = W_n(F_p) exhaustively and m -> m*1 is Z/p^n -> W_n(F_p)",
       defaults(2, 1, false, 2), wp_kernel_iso);

  addf("cov-add-lift-independence", "[sec-1] covector addition is independent of the lift length",
       defaults(2, 1, true, 2), cov_add_lift_independence);
  addf("cov-group-axioms", "[sec-1] (CW(K), +) is an abelian group", defaults(2, 1, true, 3),
       cov_group_axioms);
  addf("cov-psi-fv", "[sec-1] psi intertwines F and V and is additive", defaults(2, 1, true, 3),
       cov_psi_fv);

  addf("sym-bilinear", "[sec-1] [.,.) is bilinear", defaults(2, 1, true, 2), sym_bilinear);
  addf("sym-wp-vanish", "[sec-1] [wp(a),b) = 0", defaults(2, 1, true, 2), sym_wp_vanish);
  addf("sym-power-vanish", "[sec-1] [a,b^(p^n)) = 0", defaults(2, 1, true, 2), sym_power_vanish);
  addf("sym-frob-inv", "[sec-1] [Fa,b) = [a,b) and [Va,b) = p[a,b)", defaults(2, 1, true, 2),
       sym_frob_inv);
  addf("sym-v-shift", "[sec-1] [a,b)_(p^n) = [Va,b)_(p^(n+1)) and the truncation scaling",
       defaults(2, 1, true, 2), sym_v_shift);
  addf("sym-unramified-unit",
       "[sec-2] integral a and unit b give [a,b) = 0 (unramified extensions, unit norms)",
       defaults(2, 1, true, 2), sym_unramified_unit);
  addf("lemma-2.2i-key", "[lemma-2.2i] [[b],b) = 0", defaults(2, 1, true, 2), lemma_22i_key);
  addf("lemma-2.2ii-at-t", "[lemma-2.2ii] a in W_n(t F_q[t]) gives [a,t) = 0",
       defaults(2, 1, true, 2), lemma_22ii_at_t);
  addf("sym-inf-wp-vanish", "[sec-1] [wp(x),b)_(p^inf) = 0 on covectors",
       defaults(2, 1, true, 3), sym_inf_wp_vanish);
  addf("sym-inf-power-vanish", "[sec-1] [x,b)_(p^inf) = 0 for b a deep p-power",
       defaults(2, 1, true, 3), sym_inf_power_vanish);
  addf("oracle-n1-classical",
       "[sec-1] at n = 1 the ghost-residue route equals Tr(Res(a dlog b))",
       defaults(2, 1, true, 1), oracle_n1_classical);
  addf("anchor-normalization", "[sec-1] [[1],t)_(p^n) = 1, the sign/normalization anchor",
       defaults(2, 1, true, 2), anchor_normalization);
  addf("anchor-order4", "[prop-1.2] the pairing attains an element of order 4 in Z/4",
       defaults(2, 1, true, 2), anchor_order4);

  addf("prop-3.3i-fn-shift", "[prop-3.3i] ((a,b)) = ((a+F^n c, b+F^n d))",
       defaults(2, 1, true, 2), prop_33i);
  addf("prop-3.3ii-bilinear", "[prop-3.3ii] ((.,.)) is bilinear", defaults(2, 1, true, 2),
       prop_33ii);
  addf("prop-3.3iii-skew", "[prop-3.3iii] ((a,b)) = -((b,a))", defaults(2, 1, true, 2),
       prop_33iii);
  addf("prop-3.3iv-cyclic", "[prop-3.3iv] ((a,bc)) + ((b,ac)) + ((c,ab)) = 0",
       defaults(2, 1, true, 2), prop_33iv);
  addf("lemma-3.2i-expansion",
       "[lemma-3.2i] ((a,b)) expands into Teichmuller symbols coordinatewise",
       defaults(2, 1, true, 2), lemma_32i);
  addf("lemma-3.2ii-teich", "[lemma-3.2ii] ((V^k[a],V^l[b])) = [[a^(p^l) b^(p^k)], b^(p^k))",
       defaults(2, 1, true, 2), lemma_32ii);
  addf("prop-3.7-adjoint", "[prop-3.7] ((Fa,b)) = ((a,Vb)) and ((Va,b)) = ((a,Fb))",
       defaults(2, 1, true, 2), prop_37_adjoint);
  addf("prop-3.8-vshift", "[prop-3.8] ((a,b))_(p^n) = ((Va,Vb))_(p^(n+1))",
       defaults(2, 1, true, 2), prop_38_vshift);
  addf("cor-3.9-scaling", "[cor-3.9] ((a,b))_(p^n) = p^(m-n) ((a,b))_(p^m)",
       defaults(2, 1, true, 2), cor_39_scaling);
  addf("prop-3.10-antisym", "[prop-3.10] ((a,a)) = 0, including p = 2", defaults(2, 1, true, 2),
       prop_310_antisym);
  addf("prop-3.11ii-fn-invariance", "[prop-3.11ii] ((a,b))_(p^m,p^n) = ((a+F^n c, b+F^m d))",
       defaults(2, 1, true, 2, 3), prop_311ii);
  addf("prop-3.11iv-skew", "[prop-3.11iv] ((a,b))_(p^m,p^n) = -((b,a))_(p^n,p^m)",
       defaults(2, 1, true, 2, 3), prop_311iv);
  addf("prop-3.13-case-split", "[prop-3.13] ((F^i V^j a, F^k V^l b))_(p^m,p^n) case split",
       defaults(2, 1, true, 2, 3), prop_313_case_split);
  addf("prop-3.14i-routes",
       "[prop-3.14i] the direct sum formula agrees with the common-lift definition",
       defaults(2, 1, true, 2, 3), prop_314i_routes);
  addf("prop-3.17-padding", "[prop-3.17] ((x,y))_(p^inf) is window-padding independent",
       defaults(2, 1, true, 2), prop_317_padding);
  addf("prop-3.17-antisym", "[prop-3.17] ((.,.))_(p^inf) is bilinear antisymmetric",
       defaults(2, 1, true, 2), prop_317_antisym);

  addf("lemma-4.2-kernel", "[lemma-4.2] da, Fa db - a dVb, Va db - a dFb, wp(a) dlog [b] die under alpha",
       defaults(2, 1, true, 2), lemma_42_kernel);
  addf("nn-generators", "[lemma-4.4] alpha vanishes on the sampled N_n and N_n' tensor generators",
       defaults(2, 1, true, 2), nn_generators);
  addf("lemma-4.4-consequences", "[lemma-4.4] alpha kills a db + b da and F^n 1 da",
       defaults(2, 1, true, 2), lemma_44_consequences);
  addf("lemma-4.5-rewrites", "[lemma-4.5] each G_n rewrite rule preserves alpha termwise",
       defaults(2, 1, true, 2), lemma_45_rewrites);
  addf("thm-4.10-fmap", "[thm-4.10] alpha_n (V(x)V) = alpha_(n-1), the f_n leg of the diagram",
       defaults(2, 1, true, 2), thm_410_fmap);
  addf("thm-4.10-gmap", "[thm-4.10] alpha_1 g_n = p^(n-1) alpha_n, the g_n leg of the diagram",
       defaults(2, 1, true, 2), thm_410_gmap);
  addf("lemma-4.11-probe", "[lemma-4.11] (V(x)V) wp([a]) dlog [b] dies at level n+1",
       defaults(2, 1, true, 2), lemma_411_probe);
  addf("lemma-4.12-cov", "[lemma-4.12] the covector relation generators die under alpha",
       defaults(2, 1, true, 2), lemma_412_cov);
  addf("cor-4.14-wedge", "[cor-4.14] the wedge relation generators die under alpha",
       defaults(2, 1, true, 2), cor_414_wedge);
  addf("reduce-teich-alpha", "[lemma-4.5] reduce_to_teich preserves alpha",
       defaults(2, 1, true, 2), reduce_teich_alpha);
  addf("dlog-term-agree", "[lemma-4.1] alpha(a dlog [b]) = [a,b)", defaults(2, 1, true, 2),
       dlog_term_agree);

  return defs;
}

int max_level_needed(const std::string& id, const SuiteSpec& spec) {
  if (id == "cov-add-lift-independence") return spec.n + 2;
  if (id == "sym-v-shift" || id == "prop-3.8-vshift" || id == "cor-3.9-scaling" ||
      id == "thm-4.10-fmap" || id == "lemma-4.11-probe")
    return spec.n + 1;
  if (id == "prop-3.11ii-fn-invariance" || id == "prop-3.11iv-skew" ||
      id == "prop-3.13-case-split" || id == "prop-3.14i-routes")
    return std::max(spec.n, spec.m);
  return spec.n;
}

}  // namespace

Json SuiteReport::to_json(bool include_wall) const {
  Json j;
  j["suite"] = id;
  j["description"] = description;
  j["p"] = spec.p;
  j["f"] = spec.f;
  j["n"] = spec.n;
  j["m"] = spec.m;
  j["samples"] = samples;
  j["seed"] = spec.seed;
  j["status"] = passed() ? "pass" : "fail";
  Json fj = Json::array();
  for (const auto& f : failures) {
    Json one;
    one["sample"] = f.sample;
    one["witness"] = f.witness;
    fj.push_back(one);
  }
  j["failures"] = fj;
  if (!notes.empty()) j["notes"] = notes;
  if (include_wall) j["wall_ms"] = wall_ms;
  return j;
}

const std::vector<SuiteDef>& suite_catalog() {
  static const std::vector<SuiteDef> defs = build_catalog();
  return defs;
}

const SuiteDef* find_suite(const std::string& id) {
  for (const auto& d : suite_catalog())
    if (d.id == id) return &d;
  return nullptr;
}

SuiteReport run_suite(const SuiteSpec& spec) {
  const SuiteDef* def = find_suite(spec.id);
  if (!def) throw RingError("unknown suite: " + spec.id);
  if (spec.samples < 1) throw RingError("samples must be positive");
  if (spec.f > 2) throw BudgetError("f > 2 exceeds the configured budget");
  check_budget(spec.p, max_level_needed(spec.id, spec));

  SuiteReport rep;
  rep.id = def->id;
  rep.description = def->description;
  rep.spec = spec;
  const auto start = std::chrono::steady_clock::now();
  def->run(spec, rep);
  const auto stop = std::chrono::steady_clock::now();
  rep.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const SuiteFailure& a, const SuiteFailure& b) { return a.sample < b.sample; });
  return rep;
}

}  // namespace wittlab
