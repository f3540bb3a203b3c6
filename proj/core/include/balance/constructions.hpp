#ifndef BALANCE_CONSTRUCTIONS_HPP
#define BALANCE_CONSTRUCTIONS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "balance/coloring.hpp"

namespace balance {

/// Split coloring avoiding balanced C_{4k}: V1 the first k-1 vertices, all
/// V1-V2 edges red-only, everything else blue-only, |R| = (k-1)(n-k+1).
ListColoring split_coloring_c4k(int n, int k);

/// Edges inside the first `a` vertices red-only, all other edges blue-only
/// (the planted type-A pattern host).
ListColoring clique_split_coloring(int n, int a);

/// X = {0..t-1}, Y = {t..2t-1}: internal edges red-only, crossing and
/// outside edges blue-only, then the listed pairs upgraded to bicolored.
ListColoring type_b_coloring(int n, int t, const std::vector<std::pair<int, int>>& rb_edges);

/// Exactly one red-only edge (0,1); all others blue-only.
ListColoring single_edge_coloring(int n);

/// Derived quantities of the K5 lower-bound coloring.
struct K5Params {
    double epsilon;
    double alpha;  // 1 - 1/sqrt(2)
    double beta;   // (1 - eps/2) (alpha/2)^{3/2}
    int k;         // ceil(alpha n)
    int k_prime;   // ceil(alpha n + beta sqrt(n))
    long m;        // floor(beta n^{3/2})
};

K5Params k5_params(int n, double epsilon);

struct K5Coloring {
    ListColoring coloring;
    K5Params params;
    long achieved_m;  // edges of the bicolored girth-6 graph actually placed
};

/// Lower-bound coloring for K5: red clique on X (|X| = n - k'), a bicolored
/// girth->=6 graph on k vertices of Y, all remaining edges blue-only. The
/// generator may fall short of m; achieved_m reports what was placed and the
/// coloring stays valid either way.
K5Coloring k5_coloring(int n, double epsilon, std::uint64_t seed = 1);

}  // namespace balance

#endif
