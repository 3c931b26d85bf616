#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the search code they are compared against.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "orepack/graph.hpp"

namespace oracle {

using orepack::Graph;
using orepack::Vertex;

// Every set partition of {0..n-1} as a restricted growth string.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& f) {
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            f(block, used);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            block[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
}

inline bool proper(const Graph& g, const std::vector<int>& block) {
    for (auto [u, v] : g.edges())
        if (block[u] == block[v]) return false;
    return true;
}

inline int chromatic_number(const Graph& g) {
    int best = g.order();
    for_each_set_partition(g.order(), [&](const std::vector<int>& b, int k) {
        if (k < best && proper(g, b)) best = k;
    });
    return best;
}

// Sorted class sizes of every proper partition into exactly chi blocks.
inline std::vector<std::vector<int>> optimal_size_vectors(const Graph& g) {
    const int chi = oracle::chromatic_number(g);
    std::vector<std::vector<int>> out;
    for_each_set_partition(g.order(), [&](const std::vector<int>& b, int k) {
        if (k != chi || !proper(g, b)) return;
        std::vector<int> sizes(static_cast<std::size_t>(k), 0);
        for (int x : b) ++sizes[x];
        std::sort(sizes.begin(), sizes.end());
        out.push_back(sizes);
    });
    return out;
}

// CE(H) with nullopt for infinity: the least k - chi over proper partitions
// into k blocks in which some N(x) meets at most chi - 2 blocks.
inline std::optional<int> colour_extension_number(const Graph& g) {
    const int r = oracle::chromatic_number(g);
    std::optional<int> best;
    for_each_set_partition(g.order(), [&](const std::vector<int>& b, int k) {
        if (!proper(g, b)) return;
        for (Vertex x = 0; x < g.order(); ++x) {
            std::set<int> seen;
            g.neighbors(x).for_each([&](Vertex v) { seen.insert(b[v]); });
            if (static_cast<int>(seen.size()) <= r - 2) {
                if (!best || k - r < *best) best = k - r;
            }
        }
    });
    return best;
}

// Edmonds' blossom algorithm; returns the size of a maximum matching.
inline int maximum_matching(const Graph& g) {
    const int n = g.order();
    std::vector<int> match(n, -1), parent(n), base(n);
    std::vector<bool> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<bool> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    };
    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };
    auto find_path = [&](int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to = 0; to < n; ++to) {
                if (!g.adjacent(v, to)) continue;
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    for (int i = 0; i < n; ++i) {
        if (match[i] != -1) continue;
        int v = find_path(i);
        while (v != -1) {
            int pv = parent[v];
            int ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }
    int size = 0;
    for (int i = 0; i < n; ++i)
        if (match[i] > i) ++size;
    return size;
}

// Perfect matching by bitmask recursion on the lowest unmatched vertex.
inline bool has_perfect_matching_dp(const Graph& g) {
    const int n = g.order();
    if (n % 2) return false;
    std::vector<signed char> memo(std::size_t{1} << n, -1);
    std::function<bool(unsigned)> rec = [&](unsigned mask) -> bool {
        if (mask == 0) return true;
        if (memo[mask] >= 0) return memo[mask];
        int v = __builtin_ctz(mask);
        bool ok = false;
        for (int u = v + 1; u < n && !ok; ++u)
            if ((mask >> u & 1U) && g.adjacent(u, v)) ok = rec(mask & ~(1U << v) & ~(1U << u));
        memo[mask] = ok;
        return ok;
    };
    return rec((1U << n) - 1);
}

// Does g restricted to `verts` (|verts| == |h|) contain h as a subgraph?
inline bool spans_copy(const Graph& g, const Graph& h, std::vector<Vertex> verts) {
    std::sort(verts.begin(), verts.end());
    do {
        bool ok = true;
        for (auto [a, b] : h.edges())
            if (!g.adjacent(verts[a], verts[b])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(verts.begin(), verts.end()));
    return false;
}

// All |h|-subsets of `pool` that contain `must` (if >= 0) and span a copy.
inline void for_each_copy_set(const Graph& g, const Graph& h, const std::vector<Vertex>& pool, Vertex must,
                              const std::function<bool(const std::vector<Vertex>&)>& f) {
    const int k = h.order();
    std::vector<Vertex> pick;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (stop) return;
        if (static_cast<int>(pick.size()) == k) {
            if (must >= 0 && std::find(pick.begin(), pick.end(), must) == pick.end()) return;
            if (spans_copy(g, h, pick) && !f(pick)) stop = true;
            return;
        }
        if (i == pool.size()) return;
        pick.push_back(pool[i]);
        rec(i + 1);
        pick.pop_back();
        rec(i + 1);
    };
    rec(0);
}

// Naive exhaustive perfect packing search over vertex subsets.
inline bool has_perfect_packing(const Graph& g, const Graph& h) {
    if (g.order() % h.order() != 0) return false;
    std::function<bool(std::vector<Vertex>)> rec = [&](std::vector<Vertex> left) -> bool {
        if (left.empty()) return true;
        bool found = false;
        for_each_copy_set(g, h, left, left.front(), [&](const std::vector<Vertex>& s) {
            std::vector<Vertex> rest;
            for (Vertex v : left)
                if (std::find(s.begin(), s.end(), v) == s.end()) rest.push_back(v);
            found = rec(rest);
            return !found;
        });
        return found;
    };
    std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    return rec(all);
}

inline bool covered_by_copy(const Graph& g, const Graph& h, Vertex w) {
    std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    bool found = false;
    for_each_copy_set(g, h, all, w, [&](const std::vector<Vertex>&) {
        found = true;
        return false;
    });
    return found;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.adjacent(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace oracle
