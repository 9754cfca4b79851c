#pragma once

#include <string>

#include <json.hpp>

#include "homext/cotorsors.hpp"
#include "homext/extensions.hpp"
#include "homext/extgroup.hpp"
#include "homext/torsors.hpp"

namespace homext {

using Json = nlohmann::ordered_json;

/// "Z" or "Z/n".
RingDescriptor parse_ring(const std::string& text);

/// Formal JSON ({"ring":..., "factors":[...]}) or shorthand "Z/4+Z/2" / "0".
/// Shorthand is interpreted over `ring` and normalized to invariant factors.
/// A JSON module over a different ring is rejected with RingMismatch.
Module parse_module(const std::string& text, const RingDescriptor& ring);

/// Parses JSON text; syntax errors become ParseError.
Json parse_json(const std::string& text);

Json to_json(const RingDescriptor& ring);
Json to_json(const Module& m);
Json to_json(const Morphism& h);
Json to_json(const Extension& E);
Json to_json(const Coextension& C);
Json to_json(const TorsorStructure& T);
Json to_json(const CotorsorStructure& T);

RingDescriptor ring_from_json(const Json& j);
Module module_from_json(const Json& j);
Morphism morphism_from_json(const Json& j);
/// Validated; throws NotSurjective, AlphaNotKernelIso, ...
Extension extension_from_json(const Json& j);
Coextension coextension_from_json(const Json& j);
/// Shape-checked only; axioms are left to the verifier. The acting module
/// is read off tau as the complement of P in its source (resp. target).
TorsorStructure torsor_from_json(const Json& j);
CotorsorStructure cotorsor_from_json(const Json& j);

/// {"M","N","ext_invariant_factors","classes","split_index","baer_table"}.
/// ext_invariant_factors come from the Baer table when present.
Json to_json(const ExtClassification& c);
Json to_json(const ExtGroupDescriptor& d);

}  // namespace homext
