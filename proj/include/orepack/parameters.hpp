#pragma once

#include <optional>
#include <set>

#include "orepack/coloring.hpp"
#include "orepack/extended_nat.hpp"
#include "orepack/graph.hpp"
#include "orepack/rational.hpp"

namespace orepack {

struct ColourExtension {
    ExtendedNat value = ExtendedNat::infinite();
    std::optional<Vertex> witness;  // a vertex attaining the minimum when finite
};

// Every invariant of one graph H; see full_report.
struct ParameterReport {
    int order = 0;
    int edges = 0;
    int chi = 0;
    int sigma = 0;
    Rational chi_cr;
    std::set<int> d_set;
    ExtendedNat hcf_chi = ExtendedNat::infinite();
    int hcf_c = 0;
    bool hcf_is_one = false;
    ExtendedNat ce = ExtendedNat::infinite();
    Rational chi_star;
    Rational chi_ore;
    Rational chi_prime_ore;
    Rational ore_coefficient;
    std::optional<Vertex> witness_vertex;
};

// All operations below except hcf_c require h to have at least one edge and
// throw PreconditionError otherwise. Arithmetic is exact throughout.

// (chi - 1) |H| / (|H| - sigma)
Rational critical_chromatic_number(const Graph& h);

// gcd of the colour difference set, infinite when that set is {0}.
ExtendedNat hcf_chi(const Graph& h);

// gcd of the component orders. Requires |h| >= 1.
int hcf_c(const Graph& h);

// Non-bipartite: hcf_chi == 1. Bipartite: hcf_c == 1 and hcf_chi <= 2.
bool hcf_is_one(const Graph& h);

// Minimum over vertices x whose neighbourhood is (chi-2)-colourable of the
// least m such that some (chi-2)-colouring of H[N(x)] extends to a proper
// colouring of H with at most chi+m colours. Infinite when no x qualifies.
ColourExtension colour_extension_number(const Graph& h);

Rational chi_star(const Graph& h);
Rational chi_ore(const Graph& h);
Rational chi_prime_ore(const Graph& h);

// 2 (1 - 1/chi_ore(h))
Rational ore_threshold_coefficient(const Graph& h);

ParameterReport full_report(const Graph& h);

// Formula layer over already computed invariants.
namespace formula {

Rational critical_chromatic_number(int chi, int order, int sigma);
ExtendedNat hcf_of_differences(const std::set<int>& d_set);
bool hcf_is_one(int chi, const ExtendedNat& hcf_chi, int hcf_c);
Rational chi_star(int chi, const Rational& chi_cr, bool hcf_one);
Rational chi_prime_ore(int chi, const ExtendedNat& ce);
Rational chi_ore(int chi, const Rational& chi_cr, bool hcf_one, const ExtendedNat& ce);
Rational ore_coefficient(const Rational& chi_ore);

}  // namespace formula

}  // namespace orepack
