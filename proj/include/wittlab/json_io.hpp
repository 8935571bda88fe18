#pragma once

#include <json.hpp>

#include "wittlab/forms.hpp"

namespace wittlab {

// Stable field ordering everywhere: reports must be byte-identical for a
// fixed seed, and eval output must round-trip through these serializers.
using Json = nlohmann::ordered_json;

Json ring_to_json(const Ring& r);
Ring ring_from_json(const Json& j);

Json elem_to_json(const Elem& e);
Elem elem_from_json(const Json& j);

Json witt_to_json(const WittVector& w);
WittVector witt_from_json(const Json& j);

Json ghost_to_json(const GhostVector& g);

Json covector_to_json(const Covector& x);
Covector covector_from_json(const Json& j);

Json tensor_to_json(const FormalTensor& t);
FormalTensor tensor_from_json(const Json& j);

Json symbol_to_json(const SymbolValue& s, const Json& provenance = Json::object());

}  // namespace wittlab
