#include "orepack/parameters.hpp"

#include <algorithm>
#include <numeric>

#include "orepack/errors.hpp"

namespace orepack {

namespace formula {

Rational critical_chromatic_number(int chi, int order, int sigma) {
    return Rational(static_cast<std::int64_t>(chi - 1) * order, order - sigma);
}

ExtendedNat hcf_of_differences(const std::set<int>& d_set) {
    int g = 0;
    for (int d : d_set) g = std::gcd(g, d);
    if (g == 0) return ExtendedNat::infinite();
    return ExtendedNat::finite(static_cast<std::uint64_t>(g));
}

bool hcf_is_one(int chi, const ExtendedNat& hcf_chi, int hcf_c) {
    if (chi == 2) return hcf_c == 1 && hcf_chi.is_finite() && hcf_chi.value() <= 2;
    return hcf_chi == ExtendedNat::finite(1);
}

Rational chi_star(int chi, const Rational& chi_cr, bool hcf_one) { return hcf_one ? chi_cr : Rational(chi); }

Rational chi_prime_ore(int chi, const ExtendedNat& ce) {
    if (ce.is_infinite()) return Rational(chi);
    return Rational(chi) - Rational(2, static_cast<std::int64_t>(ce.value()) + 2);
}

Rational chi_ore(int chi, const Rational& chi_cr, bool hcf_one, const ExtendedNat& ce) {
    if (!hcf_one || ce.is_infinite()) return Rational(chi);
    return std::max(chi_cr, Rational(chi) - Rational(2, static_cast<std::int64_t>(ce.value()) + 2));
}

Rational ore_coefficient(const Rational& chi_ore) { return Rational(2) * (Rational(1) - Rational(1) / chi_ore); }

}  // namespace formula

namespace {

void require_edge(const Graph& h, const char* op) {
    if (h.edge_count() == 0) throw PreconditionError(std::string(op) + ": graph has no edges");
}

// Tries to colour V(H) \ N(x) on top of a fixed colouring of N(x) whose
// classes own colours 0..fixed-1, using at most `palette` colours in total.
class ExtensionSearch {
public:
    ExtensionSearch(const Graph& h, const ColoringPartition& fixed, const VertexSet& nbhd, int palette)
        : h_(h), fixed_(static_cast<int>(fixed.classes.size())), palette_(palette) {
        for (const auto& cls : fixed.classes) {
            VertexSet s;
            for (Vertex v : cls) s.insert(v);
            classes_.push_back(s);
        }
        classes_.resize(static_cast<std::size_t>(std::max(palette, fixed_)));
        (h.vertices() - nbhd).for_each([&](Vertex v) { free_.push_back(v); });
        std::stable_sort(free_.begin(), free_.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    }

    bool run() {
        if (fixed_ > palette_) return false;
        return place(0, fixed_);
    }

private:
    bool place(std::size_t pos, int used) {
        if (pos == free_.size()) return true;
        Vertex v = free_[pos];
        // Colours at or above `used` are unused and interchangeable.
        int limit = std::min(used + 1, palette_);
        for (int c = 0; c < limit; ++c) {
            if (h_.neighbors(v).intersects(classes_[c])) continue;
            classes_[c].insert(v);
            bool ok = place(pos + 1, std::max(used, c + 1));
            classes_[c].erase(v);
            if (ok) return true;
        }
        return false;
    }

    const Graph& h_;
    int fixed_;
    int palette_;
    std::vector<VertexSet> classes_;
    std::vector<Vertex> free_;
};

struct Eligible {
    Vertex x;
    VertexSet nbhd;
    std::vector<ColoringPartition> nbhd_colorings;
};

ColourExtension colour_extension_with_chi(const Graph& h, int r) {
    std::vector<Eligible> eligible;
    for (Vertex x = 0; x < h.order(); ++x) {
        const VertexSet& nbhd = h.neighbors(x);
        Graph sub = induced_subgraph(h, nbhd);
        if (!is_k_colorable(sub, r - 2)) continue;
        auto local = colorings_with_at_most(sub, r - 2);
        // Map local indices back to H.
        auto verts = nbhd.to_vector();
        for (auto& c : local)
            for (auto& cls : c.classes)
                for (auto& v : cls) v = verts[v];
        eligible.push_back({x, nbhd, std::move(local)});
    }
    if (eligible.empty()) return {};

    // An (r-2)-colouring of N(x) plus r fresh colours on the rest always
    // works, so m never exceeds r - 2.
    for (int m = 0; m <= std::max(r - 2, 0); ++m) {
        for (const auto& e : eligible)
            for (const auto& c : e.nbhd_colorings)
                if (ExtensionSearch(h, c, e.nbhd, r + m).run())
                    return {ExtendedNat::finite(static_cast<std::uint64_t>(m)), e.x};
    }
    throw std::logic_error("colour extension search exceeded its a priori bound");
}

}  // namespace

Rational critical_chromatic_number(const Graph& h) {
    require_edge(h, "critical_chromatic_number");
    auto colorings = optimal_colorings(h);
    return formula::critical_chromatic_number(chromatic_number(h), h.order(), smallest_class_size(colorings));
}

ExtendedNat hcf_chi(const Graph& h) {
    require_edge(h, "hcf_chi");
    return formula::hcf_of_differences(colour_difference_set(h));
}

int hcf_c(const Graph& h) {
    if (h.order() == 0) throw PreconditionError("hcf_c: graph has no vertices");
    int g = 0;
    for (const auto& comp : connected_components(h)) g = std::gcd(g, comp.size());
    return g;
}

bool hcf_is_one(const Graph& h) {
    require_edge(h, "hcf_is_one");
    return formula::hcf_is_one(chromatic_number(h), hcf_chi(h), hcf_c(h));
}

ColourExtension colour_extension_number(const Graph& h) {
    require_edge(h, "colour_extension_number");
    return colour_extension_with_chi(h, chromatic_number(h));
}

Rational chi_star(const Graph& h) {
    require_edge(h, "chi_star");
    const int chi = chromatic_number(h);
    auto colorings = optimal_colorings(h);
    Rational chi_cr = formula::critical_chromatic_number(chi, h.order(), smallest_class_size(colorings));
    bool one = formula::hcf_is_one(chi, formula::hcf_of_differences(difference_set(colorings)), hcf_c(h));
    return formula::chi_star(chi, chi_cr, one);
}

Rational chi_ore(const Graph& h) { return full_report(h).chi_ore; }

Rational chi_prime_ore(const Graph& h) {
    require_edge(h, "chi_prime_ore");
    return formula::chi_prime_ore(chromatic_number(h), colour_extension_number(h).value);
}

Rational ore_threshold_coefficient(const Graph& h) { return full_report(h).ore_coefficient; }

ParameterReport full_report(const Graph& h) {
    require_edge(h, "full_report");
    ParameterReport rep;
    rep.order = h.order();
    rep.edges = h.edge_count();
    rep.chi = chromatic_number(h);
    auto colorings = optimal_colorings(h);
    rep.sigma = smallest_class_size(colorings);
    rep.d_set = difference_set(colorings);
    rep.chi_cr = formula::critical_chromatic_number(rep.chi, rep.order, rep.sigma);
    rep.hcf_chi = formula::hcf_of_differences(rep.d_set);
    rep.hcf_c = hcf_c(h);
    rep.hcf_is_one = formula::hcf_is_one(rep.chi, rep.hcf_chi, rep.hcf_c);
    auto ce = colour_extension_with_chi(h, rep.chi);
    rep.ce = ce.value;
    rep.witness_vertex = ce.witness;
    rep.chi_star = formula::chi_star(rep.chi, rep.chi_cr, rep.hcf_is_one);
    rep.chi_prime_ore = formula::chi_prime_ore(rep.chi, rep.ce);
    rep.chi_ore = formula::chi_ore(rep.chi, rep.chi_cr, rep.hcf_is_one, rep.ce);
    rep.ore_coefficient = formula::ore_coefficient(rep.chi_ore);
    return rep;
}

}  // namespace orepack
