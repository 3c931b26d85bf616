#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "orepack/graph.hpp"

namespace orepack {

// A partition of V(H) into independent classes. Classes are listed in
// increasing order of their smallest vertex, which makes two partitions
// differing only by colour names compare equal.
struct ColoringPartition {
    std::vector<std::vector<Vertex>> classes;
    std::vector<int> sizes_sorted;  // nondecreasing

    friend bool operator==(const ColoringPartition&, const ColoringPartition&) = default;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

int greedy_clique_size(const Graph& h);

// Colour index per vertex using at most k colours, or nullopt.
std::optional<std::vector<int>> find_coloring(const Graph& h, int k);
bool is_k_colorable(const Graph& h, int k);

// Throws PreconditionError on the 0-vertex graph.
int chromatic_number(const Graph& h);

// Every partition of V(h) into at most max_classes independent sets, each
// reported once. Throws EnumerationLimitError beyond `cap` results.
std::vector<ColoringPartition> colorings_with_at_most(const Graph& h, int max_classes,
                                                      std::size_t cap = kDefaultEnumerationCap);

// Every partition of V(h) into exactly chi(h) independent sets.
std::vector<ColoringPartition> optimal_colorings(const Graph& h, std::size_t cap = kDefaultEnumerationCap);

// Statistics over an already computed set of optimal colourings.
int smallest_class_size(const std::vector<ColoringPartition>& colorings);
std::set<int> difference_set(const std::vector<ColoringPartition>& colorings);

// The next three reject graphs without edges.
int sigma(const Graph& h);
std::set<int> colour_difference_set(const Graph& h);
bool every_optimal_coloring_equitable(const Graph& h);

}  // namespace orepack
