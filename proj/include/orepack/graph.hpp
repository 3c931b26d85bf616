#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orepack/extended_nat.hpp"
#include "orepack/rational.hpp"
#include "orepack/vertex_set.hpp"

namespace orepack {

// Undirected simple graph on at most 128 vertices with bitset adjacency rows.
// Mutation is limited to construction helpers (add_edge/remove_edge); all
// library operations treat graphs as values.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::range(n_); }

    // Throws PreconditionError on loops or out-of-range endpoints.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    std::vector<std::pair<Vertex, Vertex>> edges() const;

    // Optional vertex names; empty when the graph carries none.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(Vertex v, std::string label);

    // Structural equality; labels are decoration and do not participate.
    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

// Disjoint vertex classes covering a ground set; each class sorted ascending.
struct VertexSetPartition {
    std::vector<std::vector<Vertex>> classes;

    // Throws PreconditionError if classes overlap, are empty, or do not
    // cover exactly `ground`.
    void validate(const VertexSet& ground) const;
};

// graph6 (McKay) encoding. Surrounding whitespace is ignored on input.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// "n m" header followed by m lines "u v" (0-indexed). Lines starting with
// '#' are comments; duplicate edges are merged.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// Chooses graph6 or edge-list parsing by content. graph6 words never
// contain decimal digits, edge lists always start with one.
Graph parse_graph_auto(std::string_view text);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
// K_{1,leaves}, centre is vertex 0.
Graph star_graph(int leaves);

// Class i occupies a consecutive index block of sizes[i] vertices.
std::pair<Graph, VertexSetPartition> complete_multipartite(const std::vector<int>& sizes);

// Each x becomes the block {x*t, ..., x*t + t - 1}.
Graph blow_up(const Graph& g, int t);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph complement(const Graph& g);
// Vertices of `keep` renumbered in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Minimum of d(x)+d(y) over non-adjacent distinct pairs; infinite when no such
// pair exists (complete graphs and graphs with fewer than two vertices).
ExtendedNat min_ore_degree_sum(const Graph& g);

// 2e(g)/|g|. Throws PreconditionError on the 0-vertex graph.
Rational average_degree(const Graph& g);

int min_degree(const Graph& g);

// Vertex sets of connected components, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace orepack
