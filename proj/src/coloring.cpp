#include "orepack/coloring.hpp"

#include <algorithm>
#include <numeric>

#include "orepack/errors.hpp"

namespace orepack {

namespace {

std::vector<Vertex> degree_descending_order(const Graph& h) {
    std::vector<Vertex> order(static_cast<std::size_t>(h.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    return order;
}

class KColoringSearch {
public:
    KColoringSearch(const Graph& h, int k) : h_(h), k_(k), order_(degree_descending_order(h)), classes_(k) {}

    std::optional<std::vector<int>> run() {
        colour_.assign(static_cast<std::size_t>(h_.order()), -1);
        if (!place(0, 0)) return std::nullopt;
        return colour_;
    }

private:
    bool place(std::size_t pos, int used) {
        if (pos == order_.size()) return true;
        Vertex v = order_[pos];
        // Colours >= used are interchangeable, so only the first is tried.
        int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (h_.neighbors(v).intersects(classes_[c])) continue;
            classes_[c].insert(v);
            colour_[v] = c;
            if (place(pos + 1, std::max(used, c + 1))) return true;
            classes_[c].erase(v);
        }
        colour_[v] = -1;
        return false;
    }

    const Graph& h_;
    int k_;
    std::vector<Vertex> order_;
    std::vector<VertexSet> classes_;
    std::vector<int> colour_;
};

// Partitions into independent classes, assigning vertices in index order so
// each class is opened by its smallest member.
class PartitionEnumerator {
public:
    PartitionEnumerator(const Graph& h, int max_classes, bool exact, std::size_t cap)
        : h_(h), max_classes_(max_classes), exact_(exact), cap_(cap) {}

    std::vector<ColoringPartition> run() {
        if (h_.order() == 0) {
            if (!exact_ || max_classes_ == 0) out_.push_back({});
            return std::move(out_);
        }
        assign(0);
        return std::move(out_);
    }

private:
    void assign(Vertex v) {
        const int n = h_.order();
        const int open = static_cast<int>(classes_.size());
        if (exact_ && max_classes_ - open > n - v) return;
        if (v == n) {
            emit();
            return;
        }
        for (int c = 0; c < open; ++c) {
            if (h_.neighbors(v).intersects(classes_[c])) continue;
            classes_[c].insert(v);
            assign(v + 1);
            classes_[c].erase(v);
        }
        if (open < max_classes_) {
            classes_.push_back(VertexSet::of({v}));
            assign(v + 1);
            classes_.pop_back();
        }
    }

    void emit() {
        if (out_.size() >= cap_)
            throw EnumerationLimitError("colouring enumeration exceeded cap of " + std::to_string(cap_));
        ColoringPartition p;
        for (const auto& cls : classes_) {
            p.classes.push_back(cls.to_vector());
            p.sizes_sorted.push_back(cls.size());
        }
        std::sort(p.sizes_sorted.begin(), p.sizes_sorted.end());
        out_.push_back(std::move(p));
    }

    const Graph& h_;
    int max_classes_;
    bool exact_;
    std::size_t cap_;
    std::vector<VertexSet> classes_;
    std::vector<ColoringPartition> out_;
};

void require_edge(const Graph& h, const char* op) {
    if (h.edge_count() == 0) throw PreconditionError(std::string(op) + ": graph has no edges");
}

}  // namespace

int greedy_clique_size(const Graph& h) {
    int best = h.order() > 0 ? 1 : 0;
    for (Vertex seed = 0; seed < h.order(); ++seed) {
        VertexSet candidates = h.neighbors(seed);
        int size = 1;
        while (!candidates.empty()) {
            Vertex pick = -1;
            int pick_deg = -1;
            candidates.for_each([&](Vertex v) {
                int d = (h.neighbors(v) & candidates).size();
                if (d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            });
            ++size;
            candidates &= h.neighbors(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

std::optional<std::vector<int>> find_coloring(const Graph& h, int k) {
    if (h.order() == 0) return std::vector<int>{};
    if (k <= 0) return std::nullopt;
    return KColoringSearch(h, k).run();
}

bool is_k_colorable(const Graph& h, int k) { return find_coloring(h, k).has_value(); }

int chromatic_number(const Graph& h) {
    if (h.order() == 0) throw PreconditionError("chromatic_number: graph has no vertices");
    for (int k = greedy_clique_size(h);; ++k)
        if (is_k_colorable(h, k)) return k;
}

std::vector<ColoringPartition> colorings_with_at_most(const Graph& h, int max_classes, std::size_t cap) {
    return PartitionEnumerator(h, std::max(max_classes, 0), false, cap).run();
}

std::vector<ColoringPartition> optimal_colorings(const Graph& h, std::size_t cap) {
    return PartitionEnumerator(h, chromatic_number(h), true, cap).run();
}

int smallest_class_size(const std::vector<ColoringPartition>& colorings) {
    int best = kMaxVertices + 1;
    for (const auto& c : colorings)
        if (!c.sizes_sorted.empty()) best = std::min(best, c.sizes_sorted.front());
    return best;
}

std::set<int> difference_set(const std::vector<ColoringPartition>& colorings) {
    std::set<int> d;
    for (const auto& c : colorings)
        for (std::size_t i = 0; i + 1 < c.sizes_sorted.size(); ++i) d.insert(c.sizes_sorted[i + 1] - c.sizes_sorted[i]);
    return d;
}

int sigma(const Graph& h) {
    require_edge(h, "sigma");
    return smallest_class_size(optimal_colorings(h));
}

std::set<int> colour_difference_set(const Graph& h) {
    require_edge(h, "colour_difference_set");
    return difference_set(optimal_colorings(h));
}

bool every_optimal_coloring_equitable(const Graph& h) {
    require_edge(h, "every_optimal_coloring_equitable");
    return colour_difference_set(h) == std::set<int>{0};
}

}  // namespace orepack
