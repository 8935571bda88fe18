#pragma once

#include "wittlab/sampling.hpp"
#include "wittlab/symbol.hpp"

namespace wittlab {

/// Integer combination of pairs of Witt vectors at one level over a local
/// field K. A term (c, a, b) denotes c*(a (x) b), equivalently c*(a db) in
/// the 1-form presentation; terms with zero coefficient or a zero slot are
/// pruned.
struct FormalTensor {
  struct Term {
    std::int64_t c;
    WittVector left, right;
  };
  Ring ring;
  std::int64_t p = 0;
  int n = 1;
  std::vector<Term> terms;

  static FormalTensor make(const Ring& ring, std::int64_t p, int n, std::vector<Term> terms);
  static FormalTensor zero(const Ring& ring, std::int64_t p, int n);
  bool empty() const { return terms.empty(); }
};

FormalTensor tensor_add(const FormalTensor& x, const FormalTensor& y);
FormalTensor tensor_neg(const FormalTensor& x);
FormalTensor tensor_sub(const FormalTensor& x, const FormalTensor& y);
FormalTensor tensor_scale(const FormalTensor& x, std::int64_t k);

/// Same shape with covector slots; evaluated through the limit pairing.
struct CovectorTensor {
  struct Term {
    std::int64_t c;
    Covector left, right;
  };
  Ring ring;
  std::int64_t p = 0;
  std::vector<Term> terms;

  static CovectorTensor make(const Ring& ring, std::int64_t p, std::vector<Term> terms);
};

/// alpha at level p^n: a (x) b -> ((a,b)), extended by linearity.
SymbolValue alpha_eval(const FormalTensor& x, const PrecisionPolicy& policy = {});
SymbolValue alpha_eval_cov(const CovectorTensor& x, const PrecisionPolicy& policy = {});

/// a dlog [b] = a [b]^-1 (x) [b]; b must be invertible in the
/// Laurent-polynomial model (a monomial with unit coefficient).
FormalTensor dlog_term(const WittVector& a, const Elem& b);

/// Relation generator families. The M kinds present relations of 1-forms,
/// the N kinds of tensors, the *Cov kinds of covector tensors.
enum class RelationKind {
  MnPrime,    // Fa db - a dVb
  Mn,         // MnPrime plus wp([a]) dlog [b]
  NnPrime,    // a(x)bc - ab(x)c - ac(x)b  and  Fa(x)b - a(x)Vb
  Nn,         // NnPrime plus wp([a])[b]^-1 (x) [b]
  NCov,       // a(x)b + b(x)a, Fa(x)b - a(x)Vb, Teichmuller-Leibniz at level l
  NPrimeCov,  // wedge variant: F/V relation, Teichmuller-Leibniz, a(x)a
};

RelationKind relation_kind_from_name(const std::string& name);
const char* relation_kind_name(RelationKind k);
bool relation_is_covector(RelationKind k);

/// One random relation generator of the requested kind.
FormalTensor gen_relation(RelationKind kind, Rng& rng, const Ring& K, int n,
                          const WitnessSpace& space = {});
CovectorTensor gen_cov_relation(RelationKind kind, Rng& rng, const Ring& K, int max_window,
                                const WitnessSpace& space = {});

/// Rewrite every term into Teichmuller shape [x] (x) [y] by decomposing
/// both slots and applying V^k[x] (x) V^l[y] -> [x^(p^l)] (x) [y^(p^k)].
/// alpha_eval is unchanged by the rewrite.
FormalTensor reduce_to_teich(const FormalTensor& x);

/// V (x) V termwise, level n -> n+1; alpha of the image equals alpha of
/// the input (one level down) and p times alpha of the zero-extension.
FormalTensor f_map(const FormalTensor& x);

/// Truncation (x) truncation termwise, down to level 1.
FormalTensor g_map(const FormalTensor& x);

/// Zero-extension of every slot to level n+1 (full-Witt truncation view).
FormalTensor zero_extend(const FormalTensor& x);

/// Semantic equality in G_n over the given local field: alpha(x - y) = 0.
bool gn_equal(const FormalTensor& x, const FormalTensor& y, const PrecisionPolicy& policy = {});

struct RelationReport {
  int checked = 0;
  std::vector<int> failures;  // sample indices with nonzero evaluation
};

/// Sample `count` covector-relation generators of the kind and verify each
/// evaluates to zero under the limit pairing.
RelationReport cov_relation_check(RelationKind kind, int count, Rng& rng, const Ring& K,
                                  int max_window, const WitnessSpace& space = {});

}  // namespace wittlab
