// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orepack/cli.hpp"
#include "orepack/extremal.hpp"
#include "orepack/packing.hpp"
#include "orepack/parameters.hpp"
#include "orepack/probe.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace orepack;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        } else if (!cond) {
            detail += "; " + what;
        }
    }
    void within(double elapsed, double limit, const std::string& what) {
        std::ostringstream s;
        s << what << " took " << elapsed << " s (limit " << limit << " s)";
        require(elapsed < limit, s.str());
    }
};

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

ExtendedNat fin(std::uint64_t v) { return ExtendedNat::finite(v); }

std::string cli_out(const std::vector<std::string>& args) {
    std::vector<std::string> full{"orepack"};
    full.insert(full.end(), args.begin(), args.end());
    std::istringstream in;
    std::ostringstream out, err;
    cli::run(full, in, out, err);
    return out.str();
}

Outcome worked_examples() {
    Outcome o;
    auto t0 = Clock::now();
    auto fd = full_report(construct_fdiamond());
    o.within(seconds_since(t0), 1.0, "F-diamond report");
    o.require(fd.chi == 3, "F-diamond chi");
    o.require(fd.sigma == 2, "F-diamond sigma");
    o.require(fd.chi_cr == Rational(14, 5), "F-diamond chi_cr");
    o.require(fd.hcf_is_one, "F-diamond hcf");
    o.require(fd.ce == fin(1), "F-diamond CE");
    o.require(fd.chi_ore == Rational(14, 5), "F-diamond chi_Ore");
    o.require(fd.ore_coefficient == Rational(9, 7), "F-diamond coefficient");
    t0 = Clock::now();
    auto k4m = full_report(corpus::k4_minus());
    o.within(seconds_since(t0), 1.0, "K4- report");
    o.require(k4m.ce.is_infinite(), "K4- CE");
    o.require(k4m.chi_ore == Rational(3), "K4- chi_Ore");
    o.require(k4m.ore_coefficient == Rational(4, 3), "K4- coefficient");
    return o;
}

Outcome hdiamond_ce() {
    Outcome o;
    struct Case {
        int k, r;
    };
    for (Case c : {Case{1, 3}, Case{2, 4}, Case{2, 5}}) {
        std::vector<int> sizes(static_cast<std::size_t>(c.r), c.k + 1);
        auto t0 = Clock::now();
        auto ce = colour_extension_number(construct_hdiamond(c.k, c.r, sizes)).value;
        std::string tag = "H-diamond(" + std::to_string(c.k) + "," + std::to_string(c.r) + ")";
        o.within(seconds_since(t0), 60.0, tag);
        o.require(ce == fin(static_cast<std::uint64_t>(c.k)), tag + " CE = " + ce.to_string());
    }
    return o;
}

Outcome strict_chi_ore() {
    Outcome o;
    auto rep = full_report(construct_hdiamond(2, 4, {3, 4, 5, 5}));
    std::cout << "  chi_cr = " << rep.chi_cr << ", chi_Ore = " << rep.chi_ore << ", chi = " << rep.chi << "\n";
    o.require(rep.chi_cr < rep.chi_ore, "chi_cr < chi_Ore");
    o.require(rep.chi_ore < Rational(rep.chi), "chi_Ore < chi");
    if (!o.ok) {
        auto alt = full_report(construct_hdiamond(2, 4, {3, 6, 7, 7}));
        std::cout << "  note: sizes [3,6,7,7] give chi_cr = " << alt.chi_cr << ", chi_Ore = " << alt.chi_ore
                  << ", chi = " << alt.chi << "\n";
    }
    return o;
}

Outcome prop1_verification() {
    Outcome o;
    auto t0 = Clock::now();
    auto inst = construct_prop1(3, 9);
    auto rep = verify_lower_bound(inst, complete_graph(3));
    o.within(seconds_since(t0), 1.0, "verification");
    o.require(inst.claimed_ore_bound == Rational(10), "bound 10");
    o.require(rep.min_ore_sum == fin(10), "min Ore sum 10");
    o.require(rep.ore_ok, "ore_ok");
    o.require(rep.no_cover == Verdict::Yes, "no K3 covers w");
    o.require(rep.divisibility_ok, "3 | 9");
    return o;
}

Outcome prop2_verification() {
    Outcome o;
    auto t0 = Clock::now();
    auto inst = construct_prop2(3, 1, 7, 7);
    auto rep = verify_lower_bound(inst, construct_fdiamond(), kDefaultNodeBudget);
    double el = seconds_since(t0);
    std::cout << "  anchored search: " << rep.stats.nodes << " nodes, " << el << " s\n";
    o.within(el, 600.0, "verification");
    o.require(inst.graph.order() == 49, "49 vertices");
    o.require(rep.min_ore_sum == fin(55), "min Ore sum 55");
    o.require(inst.claimed_ore_bound == Rational(2) * (Rational(1) - Rational(3, 7)) * Rational(49) - Rational(1),
              "bound formula");
    o.require(rep.ore_ok, "ore_ok");
    o.require(rep.no_cover == Verdict::Yes, std::string("no F-diamond covers w: ") + to_string(rep.no_cover));
    o.require(rep.divisibility_ok, "7 | 49");
    return o;
}

Outcome degree_identities() {
    Outcome o;
    int generated = 0;
    for (int r = 3; r <= 6; ++r)
        for (int m = 0; m <= r - 2; ++m) {
            const int d = (m + 2) * r - 2;
            for (int h = 1; h <= 40; ++h) {
                if ((2 * h) % d != 0) continue;
                for (int t = d * (r - 2); h * t <= kMaxVertices; t += d * (r - 2)) {
                    auto inst = construct_prop2(r, m, h, t);
                    ++generated;
                    const auto& g = inst.graph;
                    const auto& cls = inst.classes.classes;
                    const int st = 2 * h / d * t;
                    const std::string tag = "(" + std::to_string(r) + "," + std::to_string(m) + "," +
                                            std::to_string(h) + "," + std::to_string(t) + ")";
                    for (int i = 1; i <= m; ++i)
                        for (Vertex y : cls[static_cast<std::size_t>(i)])
                            o.require(g.degree(y) + g.degree(inst.w) == 2 * h * t - (m + 2) * st - 1,
                                      tag + " d(y)+d(w)");
                    Rational same = Rational(2) * (Rational(1) - Rational(m + 2, d)) * Rational(g.order());
                    for (std::size_t i = static_cast<std::size_t>(m) + 1; i < cls.size(); ++i)
                        if (cls[i].size() >= 2)
                            o.require(Rational(g.degree(cls[i][0]) + g.degree(cls[i][1])) == same,
                                      tag + " same-class sum");
                }
            }
        }
    std::cout << "  " << generated << " instances\n";
    o.require(generated >= 5, "too few instances generated");
    return o;
}

Outcome parameter_laws() {
    Outcome o;
    auto fx = corpus::fixtures();
    o.require(fx.size() >= 20, "corpus has fewer than 20 graphs");
    for (const auto& f : fx) {
        auto rep = full_report(f.graph);
        o.require(Rational(rep.chi - 1) < rep.chi_cr && rep.chi_cr <= Rational(rep.chi), f.name + " chi_cr range");
        o.require((rep.chi_cr == Rational(rep.chi)) == every_optimal_coloring_equitable(f.graph),
                  f.name + " equitable law");
        if (rep.ce.is_finite() && rep.ce.value() >= 1)
            o.require(static_cast<int>(rep.ce.value()) <= rep.chi - 2, f.name + " CE <= chi-2");
        if (rep.chi == 2) {
            bool isolated = false;
            for (Vertex v = 0; v < f.graph.order(); ++v) isolated = isolated || f.graph.degree(v) == 0;
            o.require(rep.ce == (isolated ? fin(0) : ExtendedNat::infinite()), f.name + " bipartite CE");
        }
        o.require(rep.chi_ore == std::max(rep.chi_star, rep.chi_prime_ore), f.name + " max identity");
    }
    return o;
}

Outcome matching_oracle() {
    Outcome o;
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> order(0, 12);
    std::uniform_real_distribution<double> dens(0.05, 0.9);
    int disagreements = 0;
    auto t0 = Clock::now();
    for (int i = 0; i < 10000; ++i) {
        Graph g = random_graph(rng, order(rng), dens(rng));
        bool expected = 2 * oracle::maximum_matching(g) == g.order();
        auto res = has_perfect_packing(g, complete_graph(2));
        bool ok = res.verdict == (expected ? Verdict::Yes : Verdict::No);
        if (ok && expected) ok = verify_packing(g, complete_graph(2), res.certificate);
        disagreements += !ok;
    }
    o.within(seconds_since(t0), 60.0, "10000 graphs");
    o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    return o;
}

Outcome probes() {
    Outcome o;
    auto t0 = Clock::now();
    struct Case {
        ProbeFamily family;
        int n, r, samples;
    };
    for (Case c : {Case{ProbeFamily::HajnalSzemeredi, 9, 3, 200}, Case{ProbeFamily::KiersteadKostochka, 6, 3, 200},
                   Case{ProbeFamily::KiersteadKostochka, 9, 3, 200}, Case{ProbeFamily::AverageDegree, 30, 0, 500}}) {
        ProbeConfig cfg;
        cfg.family = c.family;
        cfg.n = c.n;
        cfg.r = c.r;
        cfg.samples = c.samples;
        cfg.seed = 42;
        auto sum = run_probe(cfg);
        std::string tag = to_string(c.family) + " n=" + std::to_string(c.n);
        std::cout << "  " << tag << ": " << sum.condition_hits << "/" << sum.samples << " hypothesis hits, "
                  << sum.checks << " checks, " << sum.violations.size() << " violations\n";
        o.require(sum.violations.empty(), tag + " violations");
        o.require(sum.unknown == 0, tag + " unknown verdicts");
    }
    o.within(seconds_since(t0), 300.0, "probes");
    return o;
}

Outcome ce_oracle() {
    Outcome o;
    int compared = 0;
    for (const auto& f : corpus::fixtures()) {
        if (f.graph.order() > 8) continue;
        ++compared;
        auto ours = colour_extension_number(f.graph).value;
        auto theirs = oracle::colour_extension_number(f.graph);
        ExtendedNat expected = theirs ? fin(static_cast<std::uint64_t>(*theirs)) : ExtendedNat::infinite();
        o.require(ours == expected, f.name + ": " + ours.to_string() + " vs " + expected.to_string());
    }
    std::cout << "  " << compared << " fixtures compared\n";
    return o;
}

Outcome round_trip_and_determinism() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> order(0, 128);
    std::uniform_real_distribution<double> dens(0.0, 1.0);
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        Graph g = random_graph(rng, order(rng), dens(rng));
        std::string s = to_graph6(g);
        Graph back = parse_graph6(s);
        failures += !(back == g) || to_graph6(back) != s;
    }
    o.require(failures == 0, std::to_string(failures) + " graph6 round-trip failures");

    const std::vector<std::vector<std::string>> invocations = {
        {"probe", "--family", "hajnal-szemeredi", "--n", "9", "--r", "3", "--samples", "40", "--seed", "42"},
        {"probe", "--family", "kierstead-kostochka", "--n", "6", "--r", "3", "--samples", "40", "--seed", "9"},
        {"probe", "--family", "average-degree", "--n", "30", "--samples", "40", "--seed", "3"},
        {"construct", "prop2", "--r", "3", "--m", "1", "--h-order", "7", "--t", "7"},
        {"construct", "prop1", "--r", "4", "--n", "17"},
        {"construct", "hdiamond", "--k", "2", "--r", "5", "--sizes", "3,3,3,3,3"},
    };
    for (const auto& args : invocations) {
        std::string a = cli_out(args), b = cli_out(args);
        o.require(!a.empty() && a == b, "non-deterministic output for " + args[0] + " " + args[1]);
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 worked examples (F-diamond, K4-)", worked_examples},
        {"2 H-diamond colour extension numbers", hdiamond_ce},
        {"3 chi_cr < chi_Ore < chi on H-diamond(2,4,[3,4,5,5])", strict_chi_ore},
        {"4 lower-bound verification, Prop1(3,9) with K3", prop1_verification},
        {"5 lower-bound verification, Prop2(3,1,7,7) with F-diamond", prop2_verification},
        {"6 Prop2 degree identities", degree_identities},
        {"7 parameter laws over the corpus", parameter_laws},
        {"8 perfect matching oracle equivalence", matching_oracle},
        {"9 packing theorem probes", probes},
        {"10 colour extension oracle equivalence", ce_oracle},
        {"11 graph6 round trip and CLI determinism", round_trip_and_determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << name << " (" << seconds_since(t0) << " s)";
        if (!o.ok) std::cout << ": " << o.detail;
        std::cout << std::endl;
        failed += !o.ok;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
