#include "orepack/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "orepack/errors.hpp"

namespace orepack {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0 || n > kMaxVertices)
        throw PreconditionError("graph order " + std::to_string(n) + " outside [0, 128]");
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u)
        adj_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

void Graph::set_label(Vertex v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
    labels_[v] = std::move(label);
}

void VertexSetPartition::validate(const VertexSet& ground) const {
    VertexSet seen;
    for (const auto& cls : classes) {
        if (cls.empty()) throw PreconditionError("partition has an empty class");
        for (Vertex v : cls) {
            if (v < 0 || v >= kMaxVertices || !ground.contains(v))
                throw PreconditionError("partition class member " + std::to_string(v) + " outside ground set");
            if (seen.contains(v)) throw PreconditionError("partition classes overlap at " + std::to_string(v));
            seen.insert(v);
        }
    }
    if (seen != ground) throw PreconditionError("partition does not cover its ground set");
}

// graph6 -------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError("graph6: byte outside the printable range 63..126");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126) throw ParseError("graph6: order exceeds 128 vertices");
        if (text.size() < 4) throw ParseError("graph6: truncated length header");
        n = (static_cast<long>(text[1] - 63) << 12) | (static_cast<long>(text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    }
    if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds 128 vertices");

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                         std::to_string(text.size() - pos));

    Graph g(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; k < bytes * 6; ++k) {
        int byte = text[pos + k / 6] - 63;
        if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

// edge list ----------------------------------------------------------------

namespace {

std::vector<std::string_view> edge_list_tokens(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else {
            std::size_t start = i;
            while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
            tokens.push_back(text.substr(start, i - start));
        }
    }
    return tokens;
}

long parse_count(std::string_view tok, const char* what) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw ParseError(std::string("edge list: invalid ") + what + " '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    auto tokens = edge_list_tokens(text);
    if (tokens.empty()) throw ParseError("edge list: empty input");
    if (tokens.size() < 2) throw ParseError("edge list: missing 'n m' header");
    long n = parse_count(tokens[0], "vertex count");
    long m = parse_count(tokens[1], "edge count");
    if (n > kMaxVertices) throw ParseError("edge list: order " + std::to_string(n) + " exceeds 128 vertices");
    if (tokens.size() - 2 != static_cast<std::size_t>(2 * m))
        throw ParseError("edge list: header announces " + std::to_string(m) + " edges but body has " +
                         std::to_string(tokens.size() - 2) + " endpoint tokens");
    Graph g(static_cast<int>(n));
    for (long e = 0; e < m; ++e) {
        long u = parse_count(tokens[2 + 2 * e], "vertex");
        long v = parse_count(tokens[3 + 2 * e], "vertex");
        if (u >= n || v >= n) throw ParseError("edge list: vertex out of range in edge " + std::to_string(e));
        if (u == v) throw ParseError("edge list: loop at vertex " + std::to_string(u));
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    auto es = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(es.size()) + "\n";
    for (auto [u, v] : es) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph_auto(std::string_view text) {
    for (auto tok : edge_list_tokens(text)) {
        if (std::isdigit(static_cast<unsigned char>(tok.front()))) return parse_edge_list(text);
        return parse_graph6(text);
    }
    throw ParseError("empty graph input");
}

// generators ---------------------------------------------------------------

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

std::pair<Graph, VertexSetPartition> complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw PreconditionError("complete_multipartite: no classes");
    long total = 0;
    for (int s : sizes) {
        if (s <= 0) throw PreconditionError("complete_multipartite: class sizes must be positive");
        total += s;
    }
    if (total > kMaxVertices) throw PreconditionError("complete_multipartite: order exceeds 128 vertices");

    VertexSetPartition part;
    Vertex next = 0;
    for (int s : sizes) {
        std::vector<Vertex> cls(static_cast<std::size_t>(s));
        std::iota(cls.begin(), cls.end(), next);
        next += s;
        part.classes.push_back(std::move(cls));
    }
    Graph g(static_cast<int>(total));
    for (std::size_t a = 0; a < part.classes.size(); ++a)
        for (std::size_t b = a + 1; b < part.classes.size(); ++b)
            for (Vertex u : part.classes[a])
                for (Vertex v : part.classes[b]) g.add_edge(u, v);
    return {std::move(g), std::move(part)};
}

Graph blow_up(const Graph& g, int t) {
    if (t < 1) throw PreconditionError("blow_up: t must be positive");
    if (static_cast<long>(t) * g.order() > kMaxVertices) throw PreconditionError("blow_up: order exceeds 128 vertices");
    Graph out(t * g.order());
    for (auto [x, y] : g.edges())
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) out.add_edge(x * t + i, y * t + j);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > kMaxVertices) throw PreconditionError("disjoint_union: order exceeds 128 vertices");
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
    return g;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    auto verts = keep.to_vector();
    for (Vertex v : verts)
        if (v >= g.order()) throw PreconditionError("induced_subgraph: vertex outside graph");
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    if (perm.size() != static_cast<std::size_t>(g.order())) throw PreconditionError("relabel: permutation size mismatch");
    std::vector<Vertex> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<Vertex>(i)) throw PreconditionError("relabel: not a permutation");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

// degree utilities ---------------------------------------------------------

ExtendedNat min_ore_degree_sum(const Graph& g) {
    std::optional<int> best;
    for (Vertex u = 0; u < g.order(); ++u) {
        VertexSet non = g.vertices() - g.neighbors(u);
        non.erase(u);
        non.for_each([&](Vertex v) {
            if (v > u) {
                int s = g.degree(u) + g.degree(v);
                if (!best || s < *best) best = s;
            }
        });
    }
    return best ? ExtendedNat::finite(static_cast<std::uint64_t>(*best)) : ExtendedNat::infinite();
}

Rational average_degree(const Graph& g) {
    if (g.order() == 0) throw PreconditionError("average_degree: graph has no vertices");
    return Rational(2 * static_cast<std::int64_t>(g.edge_count()), g.order());
}

int min_degree(const Graph& g) {
    int best = g.order();
    for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet unseen = g.vertices();
    while (!unseen.empty()) {
        VertexSet comp;
        VertexSet frontier = VertexSet::of({unseen.first()});
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet grown;
            frontier.for_each([&](Vertex v) { grown |= g.neighbors(v); });
            frontier = grown - comp;
        }
        unseen -= comp;
        comps.push_back(comp);
    }
    return comps;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](Vertex v) { ok = ok && !g.neighbors(v).intersects(s); });
    return ok;
}

}  // namespace orepack
