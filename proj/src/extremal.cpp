#include "orepack/extremal.hpp"

#include <numeric>

#include "orepack/coloring.hpp"
#include "orepack/errors.hpp"
#include "orepack/parameters.hpp"

namespace orepack {

std::string to_string(Family f) {
    switch (f) {
        case Family::Prop1: return "prop1";
        case Family::Prop2: return "prop2";
        case Family::Prop2Padded: return "prop2-padded";
        case Family::FDiamond: return "fdiamond";
        case Family::HDiamond: return "hdiamond";
    }
    return "prop1";
}

Family family_from_string(const std::string& name) {
    for (Family f : {Family::Prop1, Family::Prop2, Family::Prop2Padded, Family::FDiamond, Family::HDiamond})
        if (to_string(f) == name) return f;
    throw ParseError("unknown construction family '" + name + "'");
}

namespace {

// Lays out consecutive classes starting at vertex `first`.
VertexSetPartition consecutive_classes(const std::vector<int>& sizes, Vertex first) {
    VertexSetPartition part;
    for (int s : sizes) {
        std::vector<Vertex> cls(static_cast<std::size_t>(s));
        std::iota(cls.begin(), cls.end(), first);
        first += s;
        part.classes.push_back(std::move(cls));
    }
    return part;
}

void join_classes(Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex u : a)
        for (Vertex v : b) g.add_edge(u, v);
}

// 2(1 - (m+2)/((m+2)r-2)) * order, exactly.
Rational prop2_coefficient_times(int r, int m, std::int64_t order) {
    const std::int64_t d = static_cast<std::int64_t>(m + 2) * r - 2;
    return Rational(2) * (Rational(1) - Rational(m + 2, d)) * Rational(order);
}

void check_prop2_common(int r, int m, int h_order) {
    if (r < 3) throw PreconditionError("prop2: r >= 3 required");
    if (m < 0) throw PreconditionError("prop2: m >= 0 required");
    if (h_order < 1) throw PreconditionError("prop2: h_order >= 1 required");
    const int d = (m + 2) * r - 2;
    if ((2 * h_order) % d != 0)
        throw PreconditionError("prop2: divisibility violated, s = 2*h_order/((m+2)r-2) = " + std::to_string(2 * h_order) +
                                "/" + std::to_string(d) + " is not an integer");
}

ExtremalInstance build_prop2(int r, int m, int h_order, int t, int padding) {
    const int d = (m + 2) * r - 2;
    const int s = 2 * h_order / d;
    const int st = s * t;
    const int big = (h_order * t - (m + 1) * st) / (r - 2);

    std::vector<int> sizes;
    sizes.push_back(st - 1 + padding);
    for (int i = 0; i < m; ++i) sizes.push_back(st);
    for (int i = 0; i < r - 2; ++i) sizes.push_back(big);

    ExtremalInstance inst;
    inst.classes = consecutive_classes(sizes, 1);
    inst.graph = Graph(h_order * t + padding);
    inst.w = 0;
    const auto& cls = inst.classes.classes;
    for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b) join_classes(inst.graph, cls[a], cls[b]);
    for (std::size_t i = static_cast<std::size_t>(m) + 1; i < cls.size(); ++i)
        join_classes(inst.graph, {inst.w}, cls[i]);
    inst.graph.set_label(inst.w, "w");
    return inst;
}

}  // namespace

Rational claimed_bound_for(Family family, const ExtremalParams& p) {
    switch (family) {
        case Family::Prop1:
            return Rational(2 * static_cast<std::int64_t>(p.r - 1) * p.n, p.r) - Rational(2);
        case Family::Prop2:
            return prop2_coefficient_times(p.r, p.m, static_cast<std::int64_t>(p.h_order) * p.t) - Rational(1);
        case Family::Prop2Padded: {
            std::int64_t h4 = static_cast<std::int64_t>(p.h_order) * p.h_order * p.h_order * p.h_order;
            return prop2_coefficient_times(p.r, p.m, p.n) - Rational(2 * h4);
        }
        case Family::FDiamond:
        case Family::HDiamond: break;
    }
    throw PreconditionError("family " + to_string(family) + " is not a lower-bound construction");
}

ExtremalInstance construct_prop1(int r, int n) {
    if (r < 2) throw PreconditionError("prop1: r >= 2 required");
    if (n < r) throw PreconditionError("prop1: n >= r required");
    if (n > kMaxVertices) throw PreconditionError("prop1: order exceeds 128 vertices");

    // Balanced sizes, ascending: |V'1| <= |V'2| <= |V3| <= ... <= |Vr|.
    std::vector<int> balanced(static_cast<std::size_t>(r), n / r);
    for (int i = r - n % r; i < r; ++i) ++balanced[i];

    std::vector<int> sizes;
    sizes.push_back(balanced[0] - 1 + balanced[1]);
    for (int i = 2; i < r; ++i) sizes.push_back(balanced[i]);

    ExtremalInstance inst;
    inst.family = Family::Prop1;
    inst.params.r = r;
    inst.params.n = n;
    inst.w = 0;
    inst.classes = consecutive_classes(sizes, 1);
    inst.graph = Graph(n);
    const auto& cls = inst.classes.classes;
    const auto& v2 = cls[0];
    for (std::size_t i = 0; i < v2.size(); ++i)
        for (std::size_t j = i + 1; j < v2.size(); ++j) inst.graph.add_edge(v2[i], v2[j]);
    for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b) join_classes(inst.graph, cls[a], cls[b]);
    for (std::size_t i = 1; i < cls.size(); ++i) join_classes(inst.graph, {inst.w}, cls[i]);
    inst.graph.set_label(inst.w, "w");
    inst.claimed_ore_bound = claimed_bound_for(inst.family, inst.params);
    return inst;
}

ExtremalInstance construct_prop2(int r, int m, int h_order, int t) {
    check_prop2_common(r, m, h_order);
    const int d = (m + 2) * r - 2;
    if (t < 1 || t % (d * (r - 2)) != 0)
        throw PreconditionError("prop2: divisibility violated, ((m+2)r-2)(r-2) = " + std::to_string(d * (r - 2)) +
                                " must divide t = " + std::to_string(t));
    if (static_cast<long>(h_order) * t > kMaxVertices)
        throw PreconditionError("prop2: size overflow, order h_order*t exceeds 128 vertices");

    ExtremalInstance inst = build_prop2(r, m, h_order, t, 0);
    inst.family = Family::Prop2;
    inst.params = {r, m, h_order, t, h_order * t};
    inst.claimed_ore_bound = claimed_bound_for(inst.family, inst.params);
    return inst;
}

ExtremalInstance construct_prop2_padded(int r, int m, int h_order, int n) {
    check_prop2_common(r, m, h_order);
    const int d = (m + 2) * r - 2;
    const int block = d * (r - 2) * h_order;
    if (n % h_order != 0)
        throw PreconditionError("prop2-padded: divisibility violated, h_order = " + std::to_string(h_order) +
                                " must divide n = " + std::to_string(n));
    if (n < block)
        throw PreconditionError("prop2-padded: n >= ((m+2)r-2)(r-2)*h_order = " + std::to_string(block) + " required");
    if (n > kMaxVertices) throw PreconditionError("prop2-padded: size overflow, n exceeds 128 vertices");

    const int base = n / block * block;
    ExtremalInstance inst = build_prop2(r, m, h_order, base / h_order, n - base);
    inst.family = Family::Prop2Padded;
    inst.params = {r, m, h_order, base / h_order, n};
    inst.claimed_ore_bound = claimed_bound_for(inst.family, inst.params);
    return inst;
}

Graph construct_fdiamond() {
    auto [g, part] = complete_multipartite({2, 2, 2});
    Graph out(7);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    out.remove_edge(0, 2);
    out.add_edge(kFDiamondZ, 0);
    out.add_edge(kFDiamondZ, 2);
    out.set_label(0, "x");
    out.set_label(2, "y");
    out.set_label(kFDiamondZ, "z");
    return out;
}

Graph construct_hdiamond(int k, int r, const std::vector<int>& sizes) {
    if (k < 1) throw PreconditionError("hdiamond: k >= 1 required");
    if (r < k + 2) throw PreconditionError("hdiamond: r >= k+2 required");
    if (sizes.size() != static_cast<std::size_t>(r)) throw PreconditionError("hdiamond: exactly r class sizes required");
    long total = 1;
    for (int s : sizes) {
        if (s <= k) throw PreconditionError("hdiamond: every class size must exceed k");
        total += s;
    }
    if (total > kMaxVertices) throw PreconditionError("hdiamond: order exceeds 128 vertices");

    auto [base, part] = complete_multipartite(sizes);
    const Vertex x = static_cast<Vertex>(total - 1);
    Graph h(static_cast<int>(total));
    for (auto [u, v] : base.edges()) h.add_edge(u, v);
    for (int j = 0; j < k; ++j) {
        for (int a = 0; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) h.remove_edge(part.classes[a][j], part.classes[b][j]);
        for (int a = 0; a <= k; ++a) h.add_edge(x, part.classes[a][j]);
    }
    for (int i = k + 1; i < r - 1; ++i)
        for (Vertex v : part.classes[i]) h.add_edge(x, v);
    h.set_label(x, "x");
    return h;
}

LowerBoundReport verify_lower_bound(const ExtremalInstance& inst, const Graph& h, std::uint64_t budget) {
    const auto& p = inst.params;
    if (inst.family == Family::FDiamond || inst.family == Family::HDiamond)
        throw PreconditionError("verify: family " + to_string(inst.family) + " is not a lower-bound construction");
    if (inst.w < 0 || inst.w >= inst.graph.order()) throw PreconditionError("verify: w outside the instance graph");
    if (h.edge_count() == 0) throw PreconditionError("verify: H has no edges");

    const int chi = chromatic_number(h);
    if (chi != p.r)
        throw PreconditionError("verify: parameter mismatch, chi(H) = " + std::to_string(chi) + " but instance has r = " +
                                std::to_string(p.r));
    const ExtendedNat ce = colour_extension_number(h).value;
    if (inst.family == Family::Prop1) {
        if (ce.is_finite())
            throw PreconditionError("verify: parameter mismatch, prop1 needs CE(H) = inf but CE(H) = " + ce.to_string());
    } else {
        if (ce != ExtendedNat::finite(static_cast<std::uint64_t>(p.m)))
            throw PreconditionError("verify: parameter mismatch, CE(H) = " + ce.to_string() + " but instance has m = " +
                                    std::to_string(p.m));
        if (h.order() != p.h_order)
            throw PreconditionError("verify: parameter mismatch, |H| = " + std::to_string(h.order()) +
                                    " but instance has h_order = " + std::to_string(p.h_order));
    }
    if (inst.claimed_ore_bound != claimed_bound_for(inst.family, p))
        throw PreconditionError("verify: claimed bound " + inst.claimed_ore_bound.to_string() +
                                " does not match the family formula");

    LowerBoundReport rep;
    rep.min_ore_sum = min_ore_degree_sum(inst.graph);
    rep.ore_ok = rep.min_ore_sum.is_infinite() ||
                 Rational(static_cast<std::int64_t>(rep.min_ore_sum.value())) >= inst.claimed_ore_bound;
    rep.divisibility_ok = inst.graph.order() % h.order() == 0;

    CoverResult cover = copy_covering_vertex(inst.graph, h, inst.w, budget);
    rep.stats = cover.stats;
    switch (cover.verdict) {
        case Verdict::Yes:
            rep.no_cover = Verdict::No;
            rep.covering_copy = cover.embedding;
            break;
        case Verdict::No: rep.no_cover = Verdict::Yes; break;
        case Verdict::Unknown: rep.no_cover = Verdict::Unknown; break;
    }
    return rep;
}

}  // namespace orepack
