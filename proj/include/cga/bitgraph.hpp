#pragma once

#include "cga/perm.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace cga {

struct Bitset {
    std::vector<std::uint64_t> w;

    Bitset() = default;
    explicit Bitset(int bits) : w((static_cast<std::size_t>(bits) + 63) / 64, 0) {}

    void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }

    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    // lowest set bit, -1 when empty
    int lowest() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
        return -1;
    }
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~o.w[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }
    bool operator==(const Bitset&) const = default;

    template <typename F>
    void for_each(F&& f) const {  // ascending
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::uint64_t x = w[i]; x; x &= x - 1)
                f(static_cast<int>(i * 64) + std::countr_zero(x));
    }
};

class BitGraph {
public:
    BitGraph() = default;
    explicit BitGraph(int n) : n_(n), rows_(static_cast<std::size_t>(n), Bitset(n)) {}

    int size() const { return n_; }
    void add_edge(int i, int j) {
        rows_[static_cast<std::size_t>(i)].set(j);
        rows_[static_cast<std::size_t>(j)].set(i);
    }
    bool edge(int i, int j) const { return rows_[static_cast<std::size_t>(i)].test(j); }
    const Bitset& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    int degree(int i) const { return rows_[static_cast<std::size_t>(i)].count(); }

    BitGraph complement() const;  // no self loops

    bool operator==(const BitGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Bitset> rows_;
};

// Edge iff the permutations commute. The parallel builder fills whole rows
// per worker and is bit-identical to the serial one.
BitGraph commuting_graph(const std::vector<Permutation>& elems);
BitGraph commuting_graph_parallel(const std::vector<Permutation>& elems);

}  // namespace cga
