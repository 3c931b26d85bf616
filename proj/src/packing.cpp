#include "orepack/packing.hpp"

#include <algorithm>
#include <unordered_set>

#include "orepack/errors.hpp"

namespace orepack {

VertexSet Embedding::image() const {
    VertexSet s;
    for (Vertex v : map) s.insert(v);
    return s;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "YES";
        case Verdict::No: return "NO";
        case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

bool is_valid_embedding(const Graph& g, const Graph& h, const Embedding& e) {
    if (e.map.size() != static_cast<std::size_t>(h.order())) return false;
    VertexSet seen;
    for (Vertex v : e.map) {
        if (v < 0 || v >= g.order() || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (auto [a, b] : h.edges())
        if (!g.adjacent(e.map[a], e.map[b])) return false;
    return true;
}

namespace {

struct NodeBudget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    // False once the limit has been crossed.
    bool spend() { return ++used <= limit; }
    bool exhausted() const { return used > limit; }
};

// H-vertex placement order: components by decreasing size, and inside a
// component each vertex after the first has an already placed neighbour.
struct Plan {
    std::vector<Vertex> order;
    std::vector<std::vector<int>> back;  // positions of earlier H-neighbours
};

Plan make_plan(const Graph& h, std::optional<Vertex> start) {
    auto comps = connected_components(h);
    std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    if (start) {
        auto it = std::find_if(comps.begin(), comps.end(), [&](const VertexSet& c) { return c.contains(*start); });
        std::rotate(comps.begin(), it, it + 1);
    }

    Plan plan;
    std::vector<int> position(static_cast<std::size_t>(h.order()), -1);
    VertexSet placed;
    for (const auto& comp : comps) {
        Vertex first = -1;
        if (start && comp.contains(*start)) {
            first = *start;
        } else {
            comp.for_each([&](Vertex v) {
                if (first < 0 || h.degree(v) > h.degree(first)) first = v;
            });
        }
        VertexSet remaining = comp;
        Vertex next = first;
        while (next >= 0) {
            position[next] = static_cast<int>(plan.order.size());
            plan.order.push_back(next);
            placed.insert(next);
            remaining.erase(next);
            next = -1;
            int best_links = -1;
            remaining.for_each([&](Vertex v) {
                int links = (h.neighbors(v) & placed).size();
                if (links == 0) return;
                if (links > best_links || (links == best_links && h.degree(v) > h.degree(next))) {
                    next = v;
                    best_links = links;
                }
            });
        }
    }
    for (Vertex u : plan.order) {
        std::vector<int> back;
        h.neighbors(u).for_each([&](Vertex v) {
            if (position[v] < position[u]) back.push_back(position[v]);
        });
        plan.back.push_back(std::move(back));
    }
    return plan;
}

class Matcher {
public:
    Matcher(const Graph& g, const Graph& h, NodeBudget& budget) : g_(g), h_(h), budget_(budget) {
        for (Vertex u = 0; u < h.order(); ++u) {
            VertexSet ok;
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.degree(v) >= h.degree(u)) ok.insert(v);
            degree_ok_.push_back(ok);
        }
    }

    // Embeddings with image inside `allowed`; if anchored, image contains it.
    // `visit` returning false stops the search.
    EnumerationStatus run(const VertexSet& allowed, std::optional<Vertex> anchor,
                          const std::function<bool(const Embedding&)>& visit) {
        if (h_.order() > allowed.size()) return EnumerationStatus::Complete;
        if (!anchor) return run_plan(plan_for(std::nullopt), allowed, std::nullopt, visit);
        if (!allowed.contains(*anchor)) return EnumerationStatus::Complete;
        for (Vertex s = 0; s < h_.order(); ++s) {
            if (!degree_ok_[s].contains(*anchor)) continue;
            auto status = run_plan(plan_for(s), allowed, anchor, visit);
            if (status != EnumerationStatus::Complete) return status;
        }
        return EnumerationStatus::Complete;
    }

private:
    const Plan& plan_for(std::optional<Vertex> start) {
        std::size_t key = start ? static_cast<std::size_t>(*start) + 1 : 0;
        if (plans_.size() <= key) plans_.resize(key + 1);
        if (!plans_[key]) plans_[key] = make_plan(h_, start);
        return *plans_[key];
    }

    EnumerationStatus run_plan(const Plan& plan, const VertexSet& allowed, std::optional<Vertex> anchor,
                               const std::function<bool(const Embedding&)>& visit) {
        plan_ = &plan;
        visit_ = &visit;
        current_.map.assign(static_cast<std::size_t>(h_.order()), -1);
        mapped_.assign(static_cast<std::size_t>(h_.order()), -1);
        stopped_ = false;
        extend(0, allowed, anchor);
        if (budget_.exhausted()) return EnumerationStatus::BudgetExhausted;
        return stopped_ ? EnumerationStatus::Stopped : EnumerationStatus::Complete;
    }

    void extend(std::size_t pos, const VertexSet& free, std::optional<Vertex> anchor) {
        if (pos == plan_->order.size()) {
            if (!(*visit_)(current_)) stopped_ = true;
            return;
        }
        const Vertex u = plan_->order[pos];
        VertexSet cand = free & degree_ok_[u];
        if (pos == 0 && anchor) cand &= VertexSet::of({*anchor});
        for (int q : plan_->back[pos]) cand &= g_.neighbors(mapped_[q]);
        for (Vertex v = cand.first(); v >= 0; v = cand.next(v)) {
            if (!budget_.spend()) return;
            current_.map[u] = v;
            mapped_[pos] = v;
            VertexSet rest = free;
            rest.erase(v);
            extend(pos + 1, rest, anchor);
            if (stopped_ || budget_.exhausted()) return;
        }
        current_.map[u] = -1;
    }

    const Graph& g_;
    const Graph& h_;
    NodeBudget& budget_;
    std::vector<VertexSet> degree_ok_;
    std::vector<std::optional<Plan>> plans_;

    const Plan* plan_ = nullptr;
    const std::function<bool(const Embedding&)>* visit_ = nullptr;
    Embedding current_;
    std::vector<Vertex> mapped_;
    bool stopped_ = false;
};

class PackingSearch {
public:
    PackingSearch(const Graph& g, const Graph& h, NodeBudget& budget) : matcher_(g, h, budget), budget_(budget) {}

    bool solve(const VertexSet& uncovered) {
        if (uncovered.empty()) return true;
        if (failed_.contains(uncovered)) return false;

        // Fail-first: branch on the uncovered vertex with the fewest distinct
        // copies available to cover it.
        std::vector<Embedding> best;
        bool have_best = false;
        for (Vertex v = uncovered.first(); v >= 0; v = uncovered.next(v)) {
            std::vector<Embedding> options;
            std::unordered_set<VertexSet, VertexSetHash> images;
            const std::size_t cap = have_best ? best.size() : SIZE_MAX;
            auto status = matcher_.run(uncovered, v, [&](const Embedding& e) {
                if (images.insert(e.image()).second) options.push_back(e);
                return options.size() < cap;
            });
            if (status == EnumerationStatus::BudgetExhausted) return false;
            if (status == EnumerationStatus::Stopped) continue;
            if (options.empty()) {
                failed_.insert(uncovered);
                return false;
            }
            best = std::move(options);
            have_best = true;
            if (best.size() == 1) break;
        }

        for (const auto& e : best) {
            chosen_.push_back(e);
            if (solve(uncovered - e.image())) return true;
            chosen_.pop_back();
            if (budget_.exhausted()) return false;
        }
        failed_.insert(uncovered);
        return false;
    }

    std::vector<Embedding> certificate() const { return chosen_; }

private:
    Matcher matcher_;
    NodeBudget& budget_;
    std::unordered_set<VertexSet, VertexSetHash> failed_;
    std::vector<Embedding> chosen_;
};

}  // namespace

EnumerationOutcome enumerate_copies(const Graph& g, const Graph& h, std::optional<Vertex> anchor,
                                    const std::function<bool(const Embedding&)>& visit, std::uint64_t budget) {
    if (anchor && (*anchor < 0 || *anchor >= g.order()))
        throw PreconditionError("enumerate_copies: anchor vertex out of range");
    NodeBudget nb{budget};
    EnumerationOutcome out;
    Matcher m(g, h, nb);
    out.status = m.run(g.vertices(), anchor, [&](const Embedding& e) {
        ++out.emitted;
        return visit(e);
    });
    out.stats = {std::min(nb.used, budget), budget};
    return out;
}

CoverResult copy_covering_vertex(const Graph& g, const Graph& h, Vertex w, std::uint64_t budget) {
    if (w < 0 || w >= g.order())
        throw PreconditionError("copy_covering_vertex: vertex " + std::to_string(w) + " out of range");
    CoverResult res;
    NodeBudget nb{budget};
    Matcher m(g, h, nb);
    auto status = m.run(g.vertices(), w, [&](const Embedding& e) {
        res.embedding = e;
        return false;
    });
    switch (status) {
        case EnumerationStatus::Stopped: res.verdict = Verdict::Yes; break;
        case EnumerationStatus::Complete: res.verdict = Verdict::No; break;
        case EnumerationStatus::BudgetExhausted:
            res.verdict = Verdict::Unknown;
            res.embedding.reset();
            break;
    }
    res.stats = {std::min(nb.used, budget), budget};
    return res;
}

PackingResult has_perfect_packing(const Graph& g, const Graph& h, std::uint64_t budget) {
    if (h.order() == 0) throw PreconditionError("has_perfect_packing: H has no vertices");
    PackingResult res;
    res.stats.budget = budget;
    if (g.order() % h.order() != 0) {
        res.verdict = Verdict::No;
        return res;
    }
    NodeBudget nb{budget};
    PackingSearch search(g, h, nb);
    bool found = search.solve(g.vertices());
    res.stats.nodes = std::min(nb.used, budget);
    if (found) {
        res.verdict = Verdict::Yes;
        res.certificate = search.certificate();
    } else {
        res.verdict = nb.exhausted() ? Verdict::Unknown : Verdict::No;
    }
    return res;
}

bool verify_packing(const Graph& g, const Graph& h, const std::vector<Embedding>& cert) {
    VertexSet covered;
    for (const auto& e : cert) {
        if (!is_valid_embedding(g, h, e)) return false;
        VertexSet img = e.image();
        if (covered.intersects(img)) return false;
        covered |= img;
    }
    return covered == g.vertices();
}

}  // namespace orepack
