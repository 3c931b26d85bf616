#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "orepack/graph.hpp"

namespace orepack {

// Injective map V(H) -> V(G) sending edges to edges (not necessarily induced).
struct Embedding {
    std::vector<Vertex> map;

    VertexSet image() const;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchStats {
    std::uint64_t nodes = 0;   // search-tree node expansions
    std::uint64_t budget = 0;  // the limit those expansions were checked against
};

// Yes: certificate covers V(G) with disjoint copies. No: complete search
// found none. Unknown: the node budget ran out first.
struct PackingResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<Embedding> certificate;
    SearchStats stats;
};

// Yes carries the embedding; No means no copy of H contains w.
struct CoverResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Embedding> embedding;
    SearchStats stats;
};

enum class EnumerationStatus { Complete, Stopped, BudgetExhausted };

struct EnumerationOutcome {
    EnumerationStatus status = EnumerationStatus::Complete;
    std::uint64_t emitted = 0;
    SearchStats stats;
};

bool is_valid_embedding(const Graph& g, const Graph& h, const Embedding& e);

// Streams every embedding of h into g, restricted to those whose image
// contains `anchor` when given. `visit` returns false to stop early.
EnumerationOutcome enumerate_copies(const Graph& g, const Graph& h, std::optional<Vertex> anchor,
                                    const std::function<bool(const Embedding&)>& visit,
                                    std::uint64_t budget = kDefaultNodeBudget);

// Throws PreconditionError if w is not a vertex of g.
CoverResult copy_covering_vertex(const Graph& g, const Graph& h, Vertex w,
                                 std::uint64_t budget = kDefaultNodeBudget);

// Throws PreconditionError if h has no vertices.
PackingResult has_perfect_packing(const Graph& g, const Graph& h, std::uint64_t budget = kDefaultNodeBudget);

bool verify_packing(const Graph& g, const Graph& h, const std::vector<Embedding>& cert);

}  // namespace orepack
