#include "orepack/probe.hpp"

#include <algorithm>
#include <array>

#include "orepack/errors.hpp"

namespace orepack {

std::string to_string(ProbeFamily f) {
    switch (f) {
        case ProbeFamily::HajnalSzemeredi: return "hajnal-szemeredi";
        case ProbeFamily::KiersteadKostochka: return "kierstead-kostochka";
        case ProbeFamily::AverageDegree: return "average-degree";
    }
    return "hajnal-szemeredi";
}

ProbeFamily probe_family_from_string(const std::string& name) {
    for (auto f : {ProbeFamily::HajnalSzemeredi, ProbeFamily::KiersteadKostochka, ProbeFamily::AverageDegree})
        if (to_string(f) == name) return f;
    throw PreconditionError("unknown probe family '" + name + "'");
}

void validate(const ProbeConfig& cfg) {
    if (cfg.samples < 1) throw PreconditionError("probe: samples >= 1 required");
    if (cfg.n < 1 || cfg.n > kMaxVertices) throw PreconditionError("probe: n must lie in [1, 128]");
    if (cfg.family == ProbeFamily::AverageDegree) return;
    if (cfg.r < 2) throw PreconditionError("probe: r >= 2 required");
    if (cfg.n > 24) throw PreconditionError("probe: n <= 24 required for packing probes");
    if (cfg.n % cfg.r != 0) throw PreconditionError("probe: r must divide n");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::array<int, 3> kProbabilityTenths = {5, 7, 9};

}  // namespace

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x5851F42D4C957F2DULL)));
}

Graph random_graph(int n, int tenths, std::mt19937_64& rng) {
    // mt19937_64 output is fixed by the standard; distributions are not, so
    // the Bernoulli trial is done by hand.
    const std::uint64_t threshold = (~std::uint64_t{0} / 10) * static_cast<std::uint64_t>(tenths);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() < threshold) g.add_edge(u, v);
    return g;
}

ProbeSummary run_probe(const ProbeConfig& cfg) {
    validate(cfg);
    ProbeSummary sum;
    sum.samples = cfg.samples;
    const Graph clique = cfg.family == ProbeFamily::AverageDegree ? Graph() : complete_graph(cfg.r);
    const std::int64_t n = cfg.n;
    const std::int64_t r = cfg.r;

    for (int i = 0; i < cfg.samples; ++i) {
        auto rng = sample_rng(cfg.seed, static_cast<std::uint64_t>(i));
        Graph g = random_graph(cfg.n, kProbabilityTenths[static_cast<std::size_t>(i) % kProbabilityTenths.size()], rng);

        if (cfg.family == ProbeFamily::AverageDegree) {
            ExtendedNat ore = min_ore_degree_sum(g);
            // Largest k with ore >= 2k; k <= n-1 always holds for a degree.
            std::int64_t kmax = ore.is_infinite() ? n - 1 : std::min<std::int64_t>(ore.value() / 2, n - 1);
            if (kmax < 1) continue;
            ++sum.condition_hits;
            Rational avg = average_degree(g);
            for (std::int64_t k = 1; k <= kmax; ++k) {
                ++sum.checks;
                if (avg < Rational(k)) {
                    sum.violations.push_back({i, to_graph6(g),
                                              "average degree " + avg.to_string() + " < k = " + std::to_string(k)});
                    break;
                }
            }
            continue;
        }

        bool hypothesis = false;
        if (cfg.family == ProbeFamily::HajnalSzemeredi) {
            // delta(G) >= (1 - 1/r) n
            hypothesis = r * min_degree(g) >= (r - 1) * n;
        } else {
            // d(x) + d(y) >= 2(1 - 1/r) n - 1 for non-adjacent pairs
            ExtendedNat ore = min_ore_degree_sum(g);
            hypothesis = ore.is_infinite() || r * (static_cast<std::int64_t>(ore.value()) + 1) >= 2 * (r - 1) * n;
        }
        if (!hypothesis) continue;
        ++sum.condition_hits;
        ++sum.checks;
        PackingResult res = has_perfect_packing(g, clique, cfg.budget);
        if (res.verdict == Verdict::Unknown) {
            ++sum.unknown;
        } else if (res.verdict == Verdict::No) {
            sum.violations.push_back({i, to_graph6(g), "no perfect K_" + std::to_string(cfg.r) + "-packing"});
        } else if (!verify_packing(g, clique, res.certificate)) {
            sum.violations.push_back({i, to_graph6(g), "certificate failed verification"});
        }
    }
    return sum;
}

}  // namespace orepack
