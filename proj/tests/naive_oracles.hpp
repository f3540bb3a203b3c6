// Small, slow, independent re-implementations used only to cross-check the
// library. Deliberately written with different algorithms and state orders
// than the production code.
#ifndef TESTS_NAIVE_ORACLES_HPP
#define TESTS_NAIVE_ORACLES_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <vector>

#include "balance/coloring.hpp"
#include "balance/graph.hpp"

namespace naive {

// Every injective vertex map (all n^p tuples filtered), counting those that
// carry every pattern edge onto a host edge.
inline long count_embeddings(const balance::SmallGraph& host, const balance::SmallGraph& pattern) {
    const int n = host.order(), p = pattern.order();
    std::vector<int> map(static_cast<size_t>(p), 0);
    long count = 0;
    const long total = [&] {
        long t = 1;
        for (int i = 0; i < p; ++i) t *= n;
        return t;
    }();
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < p; ++i) {
            map[static_cast<size_t>(i)] = static_cast<int>(c % n);
            c /= n;
        }
        bool ok = true;
        for (int i = 0; ok && i < p; ++i)
            for (int j = i + 1; ok && j < p; ++j)
                if (map[static_cast<size_t>(i)] == map[static_cast<size_t>(j)]) ok = false;
        for (int u = 0; ok && u < p; ++u)
            for (int v = u + 1; ok && v < p; ++v)
                if (pattern.has_edge(u, v) &&
                    !host.has_edge(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]))
                    ok = false;
        if (ok) ++count;
    }
    return count;
}

// True iff some embedding of g admits a color assignment within the lists
// with counts differing by at most one. Tries all 2^e assignments.
inline bool has_balanced_copy(const balance::ListColoring& c, const balance::SmallGraph& g) {
    const int n = c.order(), p = g.order();
    const auto pedges = g.edges();
    const int e = static_cast<int>(pedges.size());
    std::vector<int> map(static_cast<size_t>(p), 0);
    long total = 1;
    for (int i = 0; i < p; ++i) total *= n;
    for (long code = 0; code < total; ++code) {
        long cc = code;
        for (int i = 0; i < p; ++i) {
            map[static_cast<size_t>(i)] = static_cast<int>(cc % n);
            cc /= n;
        }
        bool inj = true;
        for (int i = 0; inj && i < p; ++i)
            for (int j = i + 1; inj && j < p; ++j)
                if (map[static_cast<size_t>(i)] == map[static_cast<size_t>(j)]) inj = false;
        if (!inj) continue;
        for (long bits = 0; bits < (1l << e); ++bits) {
            int red = 0, blue = 0;
            bool ok = true;
            for (int i = 0; ok && i < e; ++i) {
                const int hu = map[static_cast<size_t>(pedges[static_cast<size_t>(i)].first)];
                const int hv = map[static_cast<size_t>(pedges[static_cast<size_t>(i)].second)];
                if ((bits >> i) & 1) {
                    ok = c.in_red(hu, hv);
                    ++red;
                } else {
                    ok = c.in_blue(hu, hv);
                    ++blue;
                }
            }
            if (ok && std::abs(red - blue) <= 1) return true;
        }
    }
    return false;
}

// bal by full 2^E enumeration, no color-swap shortcut, masks descending.
inline long bal(int n, const balance::SmallGraph& g) {
    const int E = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    long best = 0;
    for (long mask = (1l << E) - 1; mask >= 0; --mask) {
        balance::ListColoring c(n, balance::EdgeList::Blue);
        long reds = 0;
        for (int i = 0; i < E; ++i)
            if ((mask >> i) & 1) {
                c.set(pairs[static_cast<size_t>(i)].first, pairs[static_cast<size_t>(i)].second,
                      balance::EdgeList::Red);
                ++reds;
            }
        const long mn = std::min(reds, static_cast<long>(E) - reds);
        if (mn <= best) continue;
        if (!has_balanced_copy(c, g)) best = mn;
    }
    return best;
}

// lbal by full 3^E enumeration, digits read most-significant first.
inline long lbal(int n, const balance::SmallGraph& g) {
    const int E = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    long total = 1;
    for (int i = 0; i < E; ++i) total *= 3;
    long best = 0;
    for (long state = total - 1; state >= 0; --state) {
        balance::ListColoring c(n, balance::EdgeList::Red);
        long red = 0, blue = 0;
        long s = state;
        for (int i = E - 1; i >= 0; --i) {
            long p = 1;
            for (int j = 0; j < i; ++j) p *= 3;
            const int d = static_cast<int>(s / p);
            s %= p;
            const auto l = (d == 0)   ? balance::EdgeList::Red
                           : (d == 1) ? balance::EdgeList::Blue
                                      : balance::EdgeList::Both;
            c.set(pairs[static_cast<size_t>(i)].first, pairs[static_cast<size_t>(i)].second, l);
            if (d != 1) ++red;
            if (d != 0) ++blue;
        }
        const long mn = std::min(red, blue);
        if (mn <= best) continue;
        if (!has_balanced_copy(c, g)) best = mn;
    }
    return best;
}

// Exact Turan number by scanning every labeled graph on n vertices.
inline int ex_brute(int n, const std::vector<balance::SmallGraph>& family) {
    const int E = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int best = 0;
    for (long mask = 0; mask < (1l << E); ++mask) {
        const int edges = static_cast<int>(__builtin_popcountl(static_cast<unsigned long>(mask)));
        if (edges <= best) continue;
        balance::SmallGraph g(n);
        for (int i = 0; i < E; ++i)
            if ((mask >> i) & 1)
                g.add_edge(pairs[static_cast<size_t>(i)].first, pairs[static_cast<size_t>(i)].second);
        bool free = true;
        for (const auto& f : family)
            if (balance::embeds(g, f)) {
                free = false;
                break;
            }
        if (free) best = edges;
    }
    return best;
}

}  // namespace naive

#endif
