#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orepack/graph.hpp"
#include "orepack/packing.hpp"

namespace orepack {

enum class ProbeFamily { HajnalSzemeredi, KiersteadKostochka, AverageDegree };

std::string to_string(ProbeFamily f);
ProbeFamily probe_family_from_string(const std::string& name);

struct ProbeConfig {
    ProbeFamily family = ProbeFamily::HajnalSzemeredi;
    int n = 0;
    int r = 0;  // clique order; unused by AverageDegree
    int samples = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultNodeBudget;
};

// Throws PreconditionError: samples >= 1; 1 <= n <= 128; packing families
// additionally need r >= 2, n <= 24 and r | n.
void validate(const ProbeConfig& cfg);

struct ProbeViolation {
    int sample = 0;
    std::string graph6;
    std::string detail;
};

struct ProbeSummary {
    int samples = 0;
    int condition_hits = 0;  // samples meeting the hypothesis
    int checks = 0;          // conclusions evaluated (one per k for AverageDegree)
    int unknown = 0;         // packing searches that ran out of budget
    std::vector<ProbeViolation> violations;
};

// Independent generator per sample, derived from (seed, sample index).
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

// G(n, p) with p = tenths/10, deterministic for a given generator state.
Graph random_graph(int n, int tenths, std::mt19937_64& rng);

// Sample i uses edge probability 0.5, 0.7, 0.9 cyclically, keeps the graph
// only if it meets the family's degree hypothesis, and then checks the
// conclusion exactly.
ProbeSummary run_probe(const ProbeConfig& cfg);

}  // namespace orepack
