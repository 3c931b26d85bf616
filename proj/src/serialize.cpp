#include "orepack/serialize.hpp"

#include "orepack/errors.hpp"

namespace orepack {

Json to_json(const Rational& q) { return Json{{"num", q.num()}, {"den", q.den()}}; }

Json to_json(const ExtendedNat& e) {
    Json j;
    j["finite"] = e.is_finite();
    j["value"] = e.is_finite() ? Json(e.value()) : Json(nullptr);
    return j;
}

Json to_json(const ColoringPartition& c) {
    Json j = Json::array();
    for (const auto& cls : c.classes) j.push_back(cls);
    return j;
}

Json to_json(const Embedding& e) {
    Json j = Json::object();
    for (std::size_t i = 0; i < e.map.size(); ++i) j[std::to_string(i)] = e.map[i];
    return j;
}

Json to_json(const std::vector<Embedding>& cert) {
    Json j = Json::array();
    for (const auto& e : cert) j.push_back(to_json(e));
    return j;
}

Json to_json(const ParameterReport& rep) {
    Json j;
    j["order"] = rep.order;
    j["edges"] = rep.edges;
    j["chi"] = rep.chi;
    j["sigma"] = rep.sigma;
    j["chi_cr"] = to_json(rep.chi_cr);
    j["d_set"] = Json(std::vector<int>(rep.d_set.begin(), rep.d_set.end()));
    j["hcf_chi"] = to_json(rep.hcf_chi);
    j["hcf_c"] = rep.hcf_c;
    j["hcf_is_one"] = rep.hcf_is_one;
    j["ce"] = to_json(rep.ce);
    j["witness_vertex"] = rep.witness_vertex ? Json(*rep.witness_vertex) : Json(nullptr);
    j["chi_star"] = to_json(rep.chi_star);
    j["chi_prime_ore"] = to_json(rep.chi_prime_ore);
    j["chi_ore"] = to_json(rep.chi_ore);
    j["ore_coefficient"] = to_json(rep.ore_coefficient);
    return j;
}

Json to_json(const ExtremalInstance& inst) {
    Json j;
    j["graph6"] = to_graph6(inst.graph);
    j["w"] = inst.w;
    j["family"] = to_string(inst.family);
    Json p;
    p["r"] = inst.params.r;
    p["m"] = inst.params.m;
    p["h_order"] = inst.params.h_order;
    p["t"] = inst.params.t;
    p["n"] = inst.params.n;
    j["params"] = p;
    j["claimed_bound"] = to_json(inst.claimed_ore_bound);
    return j;
}

Json to_json(const LowerBoundReport& rep) {
    Json j;
    j["min_ore_degree_sum"] = to_json(rep.min_ore_sum);
    j["ore_ok"] = rep.ore_ok;
    switch (rep.no_cover) {
        case Verdict::Yes: j["no_cover"] = "confirmed"; break;
        case Verdict::No: j["no_cover"] = "refuted"; break;
        case Verdict::Unknown: j["no_cover"] = "unknown"; break;
    }
    j["covering_copy"] = rep.covering_copy ? to_json(*rep.covering_copy) : Json(nullptr);
    j["divisibility_ok"] = rep.divisibility_ok;
    j["nodes"] = rep.stats.nodes;
    j["all_passed"] = rep.all_passed();
    return j;
}

namespace {

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("json: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json: bad field '") + key + "': " + e.what());
    }
}

}  // namespace

Rational rational_from_json(const Json& j) {
    auto den = field<std::int64_t>(j, "den");
    if (den <= 0) throw ParseError("json: rational denominator must be positive");
    return Rational(field<std::int64_t>(j, "num"), den);
}

ExtendedNat extended_nat_from_json(const Json& j) {
    if (!field<bool>(j, "finite")) return ExtendedNat::infinite();
    return ExtendedNat::finite(field<std::uint64_t>(j, "value"));
}

Embedding embedding_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("json: embedding must be an object");
    Embedding e;
    e.map.assign(j.size(), -1);
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(it.key());
        } catch (const std::exception&) {
            throw ParseError("json: embedding key '" + it.key() + "' is not a vertex index");
        }
        if (idx >= e.map.size() || !it.value().is_number_integer())
            throw ParseError("json: malformed embedding entry '" + it.key() + "'");
        e.map[idx] = it.value().get<Vertex>();
    }
    return e;
}

ExtremalInstance instance_from_json(const Json& j) {
    ExtremalInstance inst;
    inst.graph = parse_graph6(field<std::string>(j, "graph6"));
    inst.w = field<Vertex>(j, "w");
    inst.family = family_from_string(field<std::string>(j, "family"));
    const Json p = field<Json>(j, "params");
    inst.params.r = field<int>(p, "r");
    inst.params.m = field<int>(p, "m");
    inst.params.h_order = field<int>(p, "h_order");
    inst.params.t = field<int>(p, "t");
    inst.params.n = field<int>(p, "n");
    inst.claimed_ore_bound = rational_from_json(field<Json>(j, "claimed_bound"));
    return inst;
}

}  // namespace orepack
