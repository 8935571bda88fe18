#include "wittlab/json_io.hpp"

#include <string>

namespace wittlab {

namespace {

RingKind kind_from_name(const std::string& name) {
  for (RingKind k : {RingKind::PrimeField, RingKind::FiniteField, RingKind::LaurentPoly,
                     RingKind::LiftRing, RingKind::LiftLaurent, RingKind::Integers,
                     RingKind::Rationals})
    if (name == ring_kind_name(k)) return k;
  throw RingError("unknown ring kind: " + name);
}

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw RingError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw RingError(std::string(what) + " must contain integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

Json ring_to_json(const Ring& r) {
  Json j;
  j["kind"] = ring_kind_name(r->kind);
  if (r->p != 0) {
    j["p"] = r->p;
    j["f"] = r->f;
    j["modulus"] = r->modulus;
  }
  if (r->is_lift()) j["N"] = r->N;
  return j;
}

Ring ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw RingError("ring JSON needs a \"kind\"");
  const RingKind kind = kind_from_name(j.at("kind").get<std::string>());
  switch (kind) {
    case RingKind::Integers: return make_integers();
    case RingKind::Rationals: return make_rationals();
    default: break;
  }
  const std::int64_t p = j.at("p").get<std::int64_t>();
  const int f = j.value("f", 1);
  std::vector<std::int64_t> modulus =
      j.contains("modulus") ? int_list(j.at("modulus"), "modulus") : std::vector<std::int64_t>{};
  switch (kind) {
    case RingKind::PrimeField: return make_prime_field(p);
    case RingKind::FiniteField: return make_finite_field(p, f, modulus);
    case RingKind::LaurentPoly: return make_laurent(p, f, modulus);
    case RingKind::LiftRing: return make_lift_ring(p, f, j.at("N").get<int>(), modulus);
    case RingKind::LiftLaurent: return make_lift_laurent(p, f, j.at("N").get<int>(), modulus);
    default: throw RingError("unreachable ring kind");
  }
}

Json elem_to_json(const Elem& e) {
  Json j;
  j["ring"] = ring_to_json(e.ring());
  Json coeffs = Json::object();
  if (e.ring()->is_laurent()) {
    for (const auto& [exp, c] : e.laurent_terms()) coeffs[std::to_string(exp)] = c;
  } else {
    coeffs["0"] = e.scalar_coeffs();
  }
  j["coeffs"] = coeffs;
  return j;
}

Elem elem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("coeffs"))
    throw RingError("element JSON needs \"ring\" and \"coeffs\"");
  Ring r = ring_from_json(j.at("ring"));
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_object()) throw RingError("\"coeffs\" must map exponents to coefficient arrays");
  if (r->is_laurent()) {
    std::vector<std::pair<int, std::vector<std::int64_t>>> terms;
    for (const auto& [key, val] : coeffs.items())
      terms.emplace_back(std::stoi(key), int_list(val, "coefficients"));
    return Elem::laurent(r, terms);
  }
  if (coeffs.empty()) return Elem::zero(r);
  if (coeffs.size() != 1 || !coeffs.contains("0"))
    throw RingError("scalar element JSON must have a single \"0\" exponent");
  return Elem::scalar(r, int_list(coeffs.at("0"), "coefficients"));
}

Json witt_to_json(const WittVector& w) {
  Json j;
  j["p"] = w.p;
  j["n"] = w.n();
  j["ring"] = ring_to_json(w.ring);
  Json coords = Json::array();
  for (const Elem& c : w.coords) coords.push_back(elem_to_json(c));
  j["coords"] = coords;
  return j;
}

WittVector witt_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("ring") || !j.contains("coords"))
    throw RingError("Witt vector JSON needs \"p\", \"ring\" and \"coords\"");
  const std::int64_t p = j.at("p").get<std::int64_t>();
  Ring r = ring_from_json(j.at("ring"));
  std::vector<Elem> coords;
  for (const auto& cj : j.at("coords")) {
    Elem c = elem_from_json(cj);
    if (!same_ring(c.ring(), r)) throw RingError("coordinate ring differs from the vector ring");
    coords.push_back(std::move(c));
  }
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(coords.size()))
    throw RingError("declared n does not match the number of coordinates");
  return WittVector::make(p, r, std::move(coords));
}

Json ghost_to_json(const GhostVector& g) {
  Json j;
  j["p"] = g.p;
  j["ring"] = ring_to_json(g.ring);
  Json entries = Json::array();
  for (const Elem& c : g.entries) entries.push_back(elem_to_json(c));
  j["entries"] = entries;
  return j;
}

Json covector_to_json(const Covector& x) {
  Json j;
  j["p"] = x.p;
  j["ring"] = ring_to_json(x.ring);
  Json window = Json::array();
  for (const Elem& c : x.window) window.push_back(elem_to_json(c));
  j["window"] = window;
  j["top_index"] = 0;
  return j;
}

Covector covector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("ring") || !j.contains("window"))
    throw RingError("covector JSON needs \"p\", \"ring\" and \"window\"");
  if (j.contains("top_index") && j.at("top_index").get<int>() != 0)
    throw RingError("covector windows always end at index 0");
  const std::int64_t p = j.at("p").get<std::int64_t>();
  Ring r = ring_from_json(j.at("ring"));
  std::vector<Elem> window;
  for (const auto& cj : j.at("window")) {
    Elem c = elem_from_json(cj);
    if (!same_ring(c.ring(), r)) throw RingError("window entry ring differs from the covector ring");
    window.push_back(std::move(c));
  }
  return Covector::make(p, r, std::move(window));
}

Json tensor_to_json(const FormalTensor& t) {
  Json j;
  j["n"] = t.n;
  j["ring"] = ring_to_json(t.ring);
  Json terms = Json::array();
  for (const auto& term : t.terms) {
    Json tj;
    tj["c"] = term.c;
    tj["left"] = witt_to_json(term.left);
    tj["right"] = witt_to_json(term.right);
    terms.push_back(tj);
  }
  j["terms"] = terms;
  return j;
}

FormalTensor tensor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("ring") || !j.contains("terms"))
    throw RingError("tensor JSON needs \"n\", \"ring\" and \"terms\"");
  Ring r = ring_from_json(j.at("ring"));
  const int n = j.at("n").get<int>();
  std::vector<FormalTensor::Term> terms;
  for (const auto& tj : j.at("terms"))
    terms.push_back({tj.at("c").get<std::int64_t>(), witt_from_json(tj.at("left")),
                     witt_from_json(tj.at("right"))});
  return FormalTensor::make(r, r->p, n, std::move(terms));
}

Json symbol_to_json(const SymbolValue& s, const Json& provenance) {
  Json j;
  j["value"] = s.v;
  j["modulus"] = s.modulus();
  j["provenance"] = provenance;
  return j;
}

}  // namespace wittlab
