#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orepack/extended_nat.hpp"
#include "orepack/graph.hpp"
#include "orepack/packing.hpp"
#include "orepack/rational.hpp"

namespace orepack {

enum class Family { Prop1, Prop2, Prop2Padded, FDiamond, HDiamond };

std::string to_string(Family f);
// Accepts the names produced by to_string; throws ParseError otherwise.
Family family_from_string(const std::string& name);

// Construction parameters; fields a family does not use stay zero.
struct ExtremalParams {
    int r = 0;
    int m = 0;
    int h_order = 0;
    int t = 0;
    int n = 0;

    friend bool operator==(const ExtremalParams&, const ExtremalParams&) = default;
};

// A graph with a vertex w that lies in no copy of H, together with the
// Ore-type bound its degree sums are claimed to satisfy.
struct ExtremalInstance {
    Graph graph;
    Vertex w = 0;
    Rational claimed_ore_bound;
    Family family = Family::Prop1;
    ExtremalParams params;
    // Vertex classes other than {w}, in construction order. Not serialized.
    VertexSetPartition classes;
};

// Lower-bound construction for H with CE(H) infinite. Classes are listed as
// [V2, V3, ..., Vr]; V2 is a clique and w = 0 is joined to V3..Vr only.
// Bound: 2(r-1)n/r - 2.
ExtremalInstance construct_prop1(int r, int n);

// Lower-bound construction for H with CE(H) = m finite and chi(H) = r >= 3.
// Classes [V1, V2..V_{m+1}, V_{m+2}..V_{r+m-1}]; w = 0 is joined to the last
// r-2 classes. Bound: 2(1 - (m+2)/((m+2)r-2)) |G| - 1.
ExtremalInstance construct_prop2(int r, int m, int h_order, int t);

// The construct_prop2 graph on the largest admissible n' <= n, with n - n'
// extra vertices cloned into V1. Bound: 2(1 - (m+2)/((m+2)r-2)) n - 2|H|^4.
ExtremalInstance construct_prop2_padded(int r, int m, int h_order, int n);

// K_{2,2,2} minus the edge xy, plus z joined to x and y. Vertices 0..5 are the
// classes {0,1},{2,3},{4,5}; x = 0, y = 2, z = 6.
Graph construct_fdiamond();

inline constexpr Vertex kFDiamondZ = 6;

// Complete r-partite graph with class sizes `sizes`, minus the edges of k
// disjoint K_{k+1} (the j-th copy uses the j-th vertex of V1..V_{k+1}), plus a
// vertex x = order-1 joined to those copies and to V_{k+2}..V_{r-1}.
Graph construct_hdiamond(int k, int r, const std::vector<int>& sizes);

// The bound a construction of this family and these parameters must meet.
Rational claimed_bound_for(Family family, const ExtremalParams& params);

struct LowerBoundReport {
    ExtendedNat min_ore_sum = ExtendedNat::infinite();
    bool ore_ok = false;
    // Yes: no copy of H covers w (complete search). No: one does.
    Verdict no_cover = Verdict::Unknown;
    std::optional<Embedding> covering_copy;
    bool divisibility_ok = false;
    SearchStats stats;

    bool all_passed() const { return ore_ok && no_cover == Verdict::Yes && divisibility_ok; }
};

// Throws PreconditionError when h does not match the instance parameters
// (chi(h) = r, CE(h) infinite for Prop1 or = m otherwise, |h| = h_order).
LowerBoundReport verify_lower_bound(const ExtremalInstance& inst, const Graph& h,
                                    std::uint64_t budget = kDefaultNodeBudget);

}  // namespace orepack
