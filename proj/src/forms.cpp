#include "wittlab/forms.hpp"

#include <algorithm>

namespace wittlab {

namespace {

void require_local(const Ring& K) {
  if (!K || K->kind != RingKind::LaurentPoly)
    throw RingError("formal tensors are evaluated over a registered local field F_q((t))");
}

}  // namespace

FormalTensor FormalTensor::make(const Ring& ring, std::int64_t p, int n,
                                std::vector<Term> terms) {
  require_local(ring);
  FormalTensor x;
  x.ring = ring;
  x.p = p;
  x.n = n;
  for (Term& t : terms) {
    if (t.c == 0 || t.left.is_zero() || t.right.is_zero()) continue;
    if (t.left.n() != n || t.right.n() != n || !same_ring(t.left.ring, ring) ||
        !same_ring(t.right.ring, ring))
      throw RingError("tensor term level or ring mismatch");
    x.terms.push_back(std::move(t));
  }
  return x;
}

FormalTensor FormalTensor::zero(const Ring& ring, std::int64_t p, int n) {
  return make(ring, p, n, {});
}

FormalTensor tensor_add(const FormalTensor& x, const FormalTensor& y) {
  if (x.n != y.n || !same_ring(x.ring, y.ring)) throw RingError("tensor shape mismatch");
  std::vector<FormalTensor::Term> terms = x.terms;
  terms.insert(terms.end(), y.terms.begin(), y.terms.end());
  return FormalTensor::make(x.ring, x.p, x.n, std::move(terms));
}

FormalTensor tensor_neg(const FormalTensor& x) { return tensor_scale(x, -1); }

FormalTensor tensor_sub(const FormalTensor& x, const FormalTensor& y) {
  return tensor_add(x, tensor_neg(y));
}

FormalTensor tensor_scale(const FormalTensor& x, std::int64_t k) {
  std::vector<FormalTensor::Term> terms = x.terms;
  for (auto& t : terms) t.c *= k;
  return FormalTensor::make(x.ring, x.p, x.n, std::move(terms));
}

CovectorTensor CovectorTensor::make(const Ring& ring, std::int64_t p, std::vector<Term> terms) {
  require_local(ring);
  CovectorTensor x;
  x.ring = ring;
  x.p = p;
  for (Term& t : terms) {
    if (t.c == 0 || t.left.is_zero() || t.right.is_zero()) continue;
    x.terms.push_back(std::move(t));
  }
  return x;
}

SymbolValue alpha_eval(const FormalTensor& x, const PrecisionPolicy& policy) {
  SymbolValue acc = sym_make(x.p, x.n, 0);
  for (const auto& t : x.terms)
    acc = sym_add(acc, sym_scale(pairing_n(t.left, t.right, policy), t.c));
  return acc;
}

SymbolValue alpha_eval_cov(const CovectorTensor& x, const PrecisionPolicy& policy) {
  SymbolValue acc = sym_make(x.p, 1, 0);
  for (const auto& t : x.terms)
    acc = sym_add(acc, sym_scale(pairing_inf(t.left, t.right, policy), t.c));
  return acc;
}

FormalTensor dlog_term(const WittVector& a, const Elem& b) {
  require_local(a.ring);
  if (b.is_zero()) throw RingError("dlog term needs b != 0");
  Elem binv = invert(b);  // monomial * unit in the finite-support model
  return FormalTensor::make(
      a.ring, a.p, a.n(),
      {{1, scale_teich(a, binv), teichmuller(b, a.n())}});
}

// ---------------------------------------------------------------------
// relation generators
// ---------------------------------------------------------------------

RelationKind relation_kind_from_name(const std::string& name) {
  if (name == "M_n'" || name == "Mn'" || name == "M_n_prime") return RelationKind::MnPrime;
  if (name == "M_n" || name == "Mn") return RelationKind::Mn;
  if (name == "N_n'" || name == "Nn'" || name == "N_n_prime") return RelationKind::NnPrime;
  if (name == "N_n" || name == "Nn") return RelationKind::Nn;
  if (name == "N_cov" || name == "Ncov") return RelationKind::NCov;
  if (name == "N_cov'" || name == "Nprime_cov" || name == "N_cov_prime")
    return RelationKind::NPrimeCov;
  throw RingError("unknown relation kind: " + name);
}

const char* relation_kind_name(RelationKind k) {
  switch (k) {
    case RelationKind::MnPrime: return "M_n'";
    case RelationKind::Mn: return "M_n";
    case RelationKind::NnPrime: return "N_n'";
    case RelationKind::Nn: return "N_n";
    case RelationKind::NCov: return "N_cov";
    case RelationKind::NPrimeCov: return "Nprime_cov";
  }
  return "?";
}

bool relation_is_covector(RelationKind k) {
  return k == RelationKind::NCov || k == RelationKind::NPrimeCov;
}

namespace {

using Term = FormalTensor::Term;

FormalTensor fv_relation(Rng& rng, const Ring& K, std::int64_t p, int n,
                         const WitnessSpace& space) {
  WittVector a = sample_witt(rng, K, p, n, space);
  WittVector b = sample_witt(rng, K, p, n, space);
  return FormalTensor::make(K, p, n,
                            {{1, witt_frobenius_k(a, 1), b}, {-1, a, verschiebung(b, n)}});
}

FormalTensor leibniz_relation(Rng& rng, const Ring& K, std::int64_t p, int n,
                              const WitnessSpace& space) {
  WittVector a = sample_witt(rng, K, p, n, space);
  WittVector b = sample_witt(rng, K, p, n, space);
  WittVector c = sample_witt(rng, K, p, n, space);
  return FormalTensor::make(K, p, n,
                            {{1, a, witt_mul(b, c)},
                             {-1, witt_mul(a, b), c},
                             {-1, witt_mul(a, c), b}});
}

FormalTensor wp_dlog_relation(Rng& rng, const Ring& K, std::int64_t p, int n,
                              const WitnessSpace& space) {
  Elem a = sample_laurent(rng, K, space);
  Elem b = sample_monomial_unit(rng, K, space);
  WittVector wp_a = artin_schreier(teichmuller(a, n));
  if (wp_a.is_zero()) return FormalTensor::zero(K, p, n);
  return dlog_term(wp_a, b);
}

}  // namespace

FormalTensor gen_relation(RelationKind kind, Rng& rng, const Ring& K, int n,
                          const WitnessSpace& space) {
  require_local(K);
  const std::int64_t p = K->p;
  switch (kind) {
    case RelationKind::MnPrime:
      return fv_relation(rng, K, p, n, space);
    case RelationKind::Mn:
      return rng.below(2) ? fv_relation(rng, K, p, n, space)
                          : wp_dlog_relation(rng, K, p, n, space);
    case RelationKind::NnPrime:
      return rng.below(2) ? fv_relation(rng, K, p, n, space)
                          : leibniz_relation(rng, K, p, n, space);
    case RelationKind::Nn:
      switch (rng.below(3)) {
        case 0: return fv_relation(rng, K, p, n, space);
        case 1: return leibniz_relation(rng, K, p, n, space);
        default: return wp_dlog_relation(rng, K, p, n, space);
      }
    default:
      throw RingError("this relation kind generates covector tensors");
  }
}

namespace {

using CTerm = CovectorTensor::Term;

Covector teich_at_level(const Elem& a, int l) {
  // [a]_l = psi_{|l|+1}([a]) for l <= 0
  return psi(teichmuller(a, -l + 1));
}

}  // namespace

CovectorTensor gen_cov_relation(RelationKind kind, Rng& rng, const Ring& K, int max_window,
                                const WitnessSpace& space) {
  require_local(K);
  const std::int64_t p = K->p;
  auto rand_cov = [&] { return sample_covector(rng, K, p, max_window, space); };
  const int pick =
      static_cast<int>(rng.below(kind == RelationKind::NCov ? 3 : 3));
  if (kind == RelationKind::NCov) {
    switch (pick) {
      case 0: {  // a (x) b + b (x) a
        Covector a = rand_cov(), b = rand_cov();
        return CovectorTensor::make(K, p, {{1, a, b}, {1, b, a}});
      }
      case 1: {  // Fa (x) b - a (x) Vb
        Covector a = rand_cov(), b = rand_cov();
        return CovectorTensor::make(K, p, {{1, cov_F(a), b}, {-1, a, cov_V(b)}});
      }
      default: {  // [a]_l (x) [bc]_l + [b]_l (x) [ac]_l + [c]_l (x) [ab]_l
        Ring base = base_scalar_ring(K);
        Elem a = sample_laurent_nonzero(rng, K, space);
        Elem b = sample_laurent_nonzero(rng, K, space);
        Elem c = sample_laurent_nonzero(rng, K, space);
        const int l = -static_cast<int>(rng.below(static_cast<std::uint64_t>(max_window)));
        return CovectorTensor::make(K, p,
                                    {{1, teich_at_level(a, l), teich_at_level(mul(b, c), l)},
                                     {1, teich_at_level(b, l), teich_at_level(mul(a, c), l)},
                                     {1, teich_at_level(c, l), teich_at_level(mul(a, b), l)}});
      }
    }
  }
  if (kind == RelationKind::NPrimeCov) {
    switch (pick) {
      case 0: {  // F/V relation carried over to the wedge presentation
        Covector a = rand_cov(), b = rand_cov();
        return CovectorTensor::make(K, p, {{1, cov_F(a), b}, {-1, a, cov_V(b)}});
      }
      case 1: {  // a wedge a = 0, carried as the a (x) a generator
        Covector a = rand_cov();
        return CovectorTensor::make(K, p, {{1, a, a}});
      }
      default: {
        Elem a = sample_laurent_nonzero(rng, K, space);
        Elem b = sample_laurent_nonzero(rng, K, space);
        Elem c = sample_laurent_nonzero(rng, K, space);
        const int l = -static_cast<int>(rng.below(static_cast<std::uint64_t>(max_window)));
        return CovectorTensor::make(K, p,
                                    {{1, teich_at_level(a, l), teich_at_level(mul(b, c), l)},
                                     {1, teich_at_level(b, l), teich_at_level(mul(a, c), l)},
                                     {1, teich_at_level(c, l), teich_at_level(mul(a, b), l)}});
      }
    }
  }
  throw RingError("this relation kind generates level tensors");
}

// ---------------------------------------------------------------------
// structure maps
// ---------------------------------------------------------------------

FormalTensor reduce_to_teich(const FormalTensor& x) {
  std::vector<Term> out;
  for (const auto& t : x.terms) {
    std::vector<Elem> xs = teich_decompose(t.left);
    std::vector<Elem> ys = teich_decompose(t.right);
    for (int i = 0; i < x.n; ++i) {
      if (xs[i].is_zero()) continue;
      for (int j = 0; j < x.n; ++j) {
        if (ys[j].is_zero()) continue;
        // V^i[x] (x) V^j[y] = [x^(p^j)] (x) [y^(p^i)] in G_n
        out.push_back({t.c, teichmuller(frobenius_power(xs[i], j), x.n),
                       teichmuller(frobenius_power(ys[j], i), x.n)});
      }
    }
  }
  return FormalTensor::make(x.ring, x.p, x.n, std::move(out));
}

FormalTensor f_map(const FormalTensor& x) {
  std::vector<Term> out;
  out.reserve(x.terms.size());
  for (const auto& t : x.terms)
    out.push_back({t.c, verschiebung(t.left, x.n + 1), verschiebung(t.right, x.n + 1)});
  return FormalTensor::make(x.ring, x.p, x.n + 1, std::move(out));
}

FormalTensor g_map(const FormalTensor& x) {
  std::vector<Term> out;
  out.reserve(x.terms.size());
  for (const auto& t : x.terms) out.push_back({t.c, truncate(t.left, 1), truncate(t.right, 1)});
  return FormalTensor::make(x.ring, x.p, 1, std::move(out));
}

FormalTensor zero_extend(const FormalTensor& x) {
  auto extend = [&](const WittVector& w) {
    std::vector<Elem> coords = w.coords;
    coords.push_back(Elem::zero(x.ring));
    return WittVector::make(x.p, x.ring, std::move(coords));
  };
  std::vector<Term> out;
  out.reserve(x.terms.size());
  for (const auto& t : x.terms) out.push_back({t.c, extend(t.left), extend(t.right)});
  return FormalTensor::make(x.ring, x.p, x.n + 1, std::move(out));
}

bool gn_equal(const FormalTensor& x, const FormalTensor& y, const PrecisionPolicy& policy) {
  return alpha_eval(tensor_sub(x, y), policy).is_zero();
}

RelationReport cov_relation_check(RelationKind kind, int count, Rng& rng, const Ring& K,
                                  int max_window, const WitnessSpace& space) {
  RelationReport report;
  for (int i = 0; i < count; ++i) {
    CovectorTensor t = gen_cov_relation(kind, rng, K, max_window, space);
    report.checked++;
    if (!alpha_eval_cov(t).is_zero()) report.failures.push_back(i);
  }
  return report;
}

}  // namespace wittlab
