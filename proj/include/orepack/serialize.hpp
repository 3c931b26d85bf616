#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "orepack/coloring.hpp"
#include "orepack/extended_nat.hpp"
#include "orepack/extremal.hpp"
#include "orepack/packing.hpp"
#include "orepack/parameters.hpp"
#include "orepack/rational.hpp"

namespace orepack {

// Insertion-ordered so emitted documents are stable byte-for-byte.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);             // {"num": n, "den": d}
Json to_json(const ExtendedNat& e);          // {"finite": b, "value": v-or-null}
Json to_json(const ColoringPartition& c);    // [[v, ...], ...]
Json to_json(const Embedding& e);            // {"h_vertex": g_vertex, ...}
Json to_json(const std::vector<Embedding>& cert);
Json to_json(const ParameterReport& rep);
// {"graph6", "w", "family", "params", "claimed_bound"}
Json to_json(const ExtremalInstance& inst);
Json to_json(const LowerBoundReport& rep);

// The from_json functions throw ParseError on malformed documents.
Rational rational_from_json(const Json& j);
ExtendedNat extended_nat_from_json(const Json& j);
Embedding embedding_from_json(const Json& j);
ExtremalInstance instance_from_json(const Json& j);

}  // namespace orepack
