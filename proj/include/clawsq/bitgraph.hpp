#pragma once

// Bitset adjacency rows used by the exact solvers.  Desk-scale graphs only,
// so a flat vector of 64-bit words per vertex is plenty.

#include "clawsq/graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace clawsq {

class BitGraph {
public:
    explicit BitGraph(const SimpleGraph& g)
        : n_(g.n()), words_((g.n() + 63) / 64), rows_(g.n(), std::vector<std::uint64_t>(words_, 0)) {
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u)) set(rows_[u], v);
    }

    int n() const { return n_; }
    int words() const { return words_; }
    const std::vector<std::uint64_t>& row(int v) const { return rows_[v]; }

    bool adjacent(int u, int v) const { return test(rows_[u], v); }

    static void set(std::vector<std::uint64_t>& bits, int i) {
        bits[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    static void clear(std::vector<std::uint64_t>& bits, int i) {
        bits[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    static bool test(const std::vector<std::uint64_t>& bits, int i) {
        return (bits[i >> 6] >> (i & 63)) & 1;
    }

    static int popcount(const std::vector<std::uint64_t>& bits) {
        int total = 0;
        for (std::uint64_t w : bits) total += std::popcount(w);
        return total;
    }

    // number of set bits shared by `bits` and the row of v
    int intersection_size(const std::vector<std::uint64_t>& bits, int v) const {
        int total = 0;
        for (int w = 0; w < words_; ++w) total += std::popcount(bits[w] & rows_[v][w]);
        return total;
    }

private:
    int n_;
    int words_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace clawsq
