#pragma once

// Exact maximum clique by branch and bound.  The pruning bound is a greedy
// colouring of the candidate set; a candidate of colour c cannot extend the
// running clique past |current| + c.

#include "clawsq/bitgraph.hpp"
#include "clawsq/graph.hpp"

#include <numeric>
#include <vector>

namespace clawsq {

namespace detail {

struct MaxCliqueSearch {
    const BitGraph& bits;
    std::vector<int> best;
    std::vector<int> current;

    explicit MaxCliqueSearch(const BitGraph& b) : bits(b) {}

    void search(const std::vector<int>& cand) {
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            bool placed = false;
            for (auto& cls : classes) {
                bool clash = false;
                for (int u : cls)
                    if (bits.adjacent(u, v)) {
                        clash = true;
                        break;
                    }
                if (!clash) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        std::vector<int> order;
        std::vector<int> color_of;
        order.reserve(cand.size());
        color_of.reserve(cand.size());
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                color_of.push_back(int(c) + 1);
            }
        // branch from the highest colour downwards; once the cap falls to the
        // incumbent size every remaining candidate is hopeless too
        while (!order.empty()) {
            int v = order.back();
            if (int(current.size()) + color_of.back() <= int(best.size())) return;
            current.push_back(v);
            std::vector<int> next;
            for (int u : order)
                if (u != v && bits.adjacent(u, v)) next.push_back(u);
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                search(next);
            }
            current.pop_back();
            order.pop_back();
            color_of.pop_back();
        }
    }
};

}  // namespace detail

inline std::vector<int> max_clique(const SimpleGraph& g) {
    if (g.n() == 0) return {};
    BitGraph bits(g);
    detail::MaxCliqueSearch search(bits);
    std::vector<int> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    search.search(all);
    std::sort(search.best.begin(), search.best.end());
    return search.best;
}

inline int clique_number(const SimpleGraph& g) { return int(max_clique(g).size()); }

}  // namespace clawsq
