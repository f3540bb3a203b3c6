#include "balance/constructions.hpp"

#include <cmath>
#include <stdexcept>

#include "balance/extremal.hpp"

namespace balance {

ListColoring split_coloring_c4k(int n, int k) {
    if (k < 1) throw std::invalid_argument("split_coloring_c4k: k must be >= 1");
    if (n < 4 * k) throw std::invalid_argument("split_coloring_c4k: need n >= 4k");
    ListColoring c(n, EdgeList::Blue);
    for (int u = 0; u < k - 1; ++u)
        for (int v = k - 1; v < n; ++v) c.set(u, v, EdgeList::Red);
    return c;
}

ListColoring clique_split_coloring(int n, int a) {
    if (a < 0 || a > n) throw std::invalid_argument("clique_split_coloring: need 0 <= a <= n");
    ListColoring c(n, EdgeList::Blue);
    for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < a; ++v) c.set(u, v, EdgeList::Red);
    return c;
}

ListColoring type_b_coloring(int n, int t, const std::vector<std::pair<int, int>>& rb_edges) {
    if (t < 1 || 2 * t > n) throw std::invalid_argument("type_b_coloring: need 1 <= 2t <= n");
    ListColoring c(n, EdgeList::Blue);
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) c.set(u, v, EdgeList::Red);
    for (int u = t; u < 2 * t; ++u)
        for (int v = u + 1; v < 2 * t; ++v) c.set(u, v, EdgeList::Red);
    for (auto [u, v] : rb_edges) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("type_b_coloring: invalid bicolored edge position");
        c.set(u, v, EdgeList::Both);
    }
    return c;
}

ListColoring single_edge_coloring(int n) {
    if (n < 2) throw std::invalid_argument("single_edge_coloring: need n >= 2");
    ListColoring c(n, EdgeList::Blue);
    c.set(0, 1, EdgeList::Red);
    return c;
}

K5Params k5_params(int n, double epsilon) {
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("k5_params: need 0 < epsilon < 1");
    K5Params p;
    p.epsilon = epsilon;
    p.alpha = 1.0 - 1.0 / std::sqrt(2.0);
    p.beta = (1.0 - epsilon / 2.0) * std::pow(p.alpha / 2.0, 1.5);
    const double dn = static_cast<double>(n);
    p.k = static_cast<int>(std::ceil(p.alpha * dn));
    p.k_prime = static_cast<int>(std::ceil(p.alpha * dn + p.beta * std::sqrt(dn)));
    p.m = static_cast<long>(std::floor(p.beta * std::pow(dn, 1.5)));
    return p;
}

K5Coloring k5_coloring(int n, double epsilon, std::uint64_t seed) {
    K5Params p = k5_params(n, epsilon);
    if (p.k_prime > n) throw std::invalid_argument("k5_coloring: n too small, k' exceeds n");

    // X is the first n - k' vertices (red clique), Y the rest; the bicolored
    // girth->=6 graph sits on the first k vertices of Y.
    const int x_size = n - p.k_prime;
    ListColoring c(n, EdgeList::Blue);
    for (int u = 0; u < x_size; ++u)
        for (int v = u + 1; v < x_size; ++v) c.set(u, v, EdgeList::Red);

    int achieved = 0;
    std::optional<SmallGraph> h = girth6_graph(p.k, static_cast<int>(p.m), seed, 400, &achieved);
    SmallGraph placed = h ? *h : SmallGraph(p.k);
    if (!h) {
        // Keep the best graph the generator reached rather than nothing.
        int dummy = 0;
        if (achieved > 0)
            placed = *girth6_graph(p.k, achieved, seed, 400, &dummy);
    }
    for (auto [u, v] : placed.edges()) c.set(x_size + u, x_size + v, EdgeList::Both);
    return {std::move(c), p, placed.edge_count()};
}

}  // namespace balance
