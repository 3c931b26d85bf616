#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace orepack {

using Vertex = int;

inline constexpr int kMaxVertices = 128;

// Fixed-width set of vertex indices in [0, 128), two 64-bit words.
class VertexSet {
public:
    constexpr VertexSet() = default;

    static constexpr VertexSet range(int n) {
        VertexSet s;
        if (n >= 64) {
            s.words_[0] = ~std::uint64_t{0};
            s.words_[1] = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
        } else if (n > 0) {
            s.words_[0] = (std::uint64_t{1} << n) - 1;
        }
        return s;
    }

    static VertexSet of(std::initializer_list<Vertex> vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    constexpr bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    constexpr void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    constexpr int size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }
    constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

    // Smallest member, or -1 when empty.
    constexpr Vertex first() const {
        if (words_[0]) return std::countr_zero(words_[0]);
        if (words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    // Smallest member strictly greater than v, or -1.
    constexpr Vertex next(Vertex v) const {
        int i = v + 1;
        if (i >= kMaxVertices) return -1;
        int w = i >> 6;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
        if (bits) return (w << 6) + std::countr_zero(bits);
        if (w == 0 && words_[1]) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<Vertex>((w << 6) + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    constexpr VertexSet operator&(const VertexSet& o) const {
        VertexSet r;
        r.words_ = {words_[0] & o.words_[0], words_[1] & o.words_[1]};
        return r;
    }
    constexpr VertexSet operator|(const VertexSet& o) const {
        VertexSet r;
        r.words_ = {words_[0] | o.words_[0], words_[1] | o.words_[1]};
        return r;
    }
    // Set difference.
    constexpr VertexSet operator-(const VertexSet& o) const {
        VertexSet r;
        r.words_ = {words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]};
        return r;
    }
    constexpr VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    constexpr VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    constexpr VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    constexpr bool intersects(const VertexSet& o) const { return !(*this & o).empty(); }

    constexpr auto operator<=>(const VertexSet&) const = default;

    constexpr std::uint64_t word(int i) const { return words_[i]; }

private:
    std::array<std::uint64_t, 2> words_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept {
        std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
        h ^= s.word(1) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace orepack
