#include "balance/extremal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace balance {

void FamilySpec::insert(const SmallGraph& g) {
    if (!contains_isomorphic(g)) members.push_back(g);
}

bool FamilySpec::contains_isomorphic(const SmallGraph& g) const {
    return std::any_of(members.begin(), members.end(),
                       [&](const SmallGraph& m) { return is_isomorphic(m, g); });
}

bool contains_member(const SmallGraph& g, const FamilySpec& f, int required_vertex) {
    return std::any_of(f.members.begin(), f.members.end(), [&](const SmallGraph& m) {
        return embeds(g, m, required_vertex);
    });
}

namespace {

// Subgraph of g on the chosen edge subset, restricted to non-isolated vertices.
SmallGraph edge_subset_graph(const SmallGraph& g, const std::vector<std::pair<int, int>>& all_edges,
                             std::uint64_t subset) {
    std::uint64_t touched = 0;
    std::uint64_t bits = subset;
    while (bits) {
        int idx = std::countr_zero(bits);
        bits &= bits - 1;
        touched |= std::uint64_t{1} << all_edges[idx].first;
        touched |= std::uint64_t{1} << all_edges[idx].second;
    }
    std::vector<int> relabel(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((touched >> v) & 1u) relabel[v] = next++;
    SmallGraph sub(next);
    bits = subset;
    while (bits) {
        int idx = std::countr_zero(bits);
        bits &= bits - 1;
        sub.add_edge(relabel[all_edges[idx].first], relabel[all_edges[idx].second]);
    }
    return sub;
}

}  // namespace

FamilySpec half_family(const SmallGraph& g) {
    const int e = g.edge_count();
    if (e < 2) throw std::invalid_argument("half_family: target needs at least 2 edges");
    const int half = e / 2;
    const auto all_edges = g.edges();
    FamilySpec family;
    // Enumerate all edge subsets of the target size (e <= 64 always holds).
    std::uint64_t subset = (std::uint64_t{1} << half) - 1;
    const std::uint64_t limit = e == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e);
    while (subset < limit) {
        family.insert(edge_subset_graph(g, all_edges, subset));
        // Next subset of the same popcount (Gosper's hack).
        std::uint64_t c = subset & -subset;
        std::uint64_t r = subset + c;
        if (r == 0) break;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
    return family;
}

FamilySpec linear_forest_family(int total) {
    if (total < 1) throw std::invalid_argument("linear_forest_family: total must be >= 1");
    FamilySpec family;
    std::vector<int> parts;
    auto emit = [&]() {
        family.members.push_back(make_named(NamedGraph{NamedGraph::Kind::LinearForest, 0, parts}));
    };
    // Partitions of `total` in non-increasing order; distinct partitions give
    // non-isomorphic forests, so no deduplication pass is needed.
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    recurse(recurse, total, total);
    return family;
}

FamilySpec c3c4c5() {
    FamilySpec family;
    for (int m : {3, 4, 5}) family.members.push_back(make_named(NamedGraph{NamedGraph::Kind::Cycle, m}));
    return family;
}

namespace {

// All family-free graphs on `n` vertices up to isomorphism, built level by
// level: the class is closed under vertex deletion, so extending every
// (n-1)-vertex member by one new vertex reaches every n-vertex member.
std::vector<SmallGraph> family_free_graphs(int n, const FamilySpec& f) {
    std::vector<SmallGraph> level{SmallGraph(1)};
    for (int size = 2; size <= n; ++size) {
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
        std::vector<SmallGraph> next;
        auto keep = [&](const SmallGraph& g) {
            std::uint64_t key = iso_invariant(g);
            auto& bucket = buckets[key];
            for (std::size_t idx : bucket)
                if (is_isomorphic(next[idx], g)) return;
            bucket.push_back(next.size());
            next.push_back(g);
        };
        for (const SmallGraph& parent : level) {
            SmallGraph base(size);
            for (auto [u, v] : parent.edges()) base.add_edge(u, v);
            const int fresh = size - 1;
            // DFS over neighbor subsets of the new vertex; adding edges can
            // only create violations, so a violating branch prunes whole.
            auto extend = [&](auto&& self, SmallGraph g, int from) -> void {
                keep(g);
                for (int v = from; v < fresh; ++v) {
                    SmallGraph candidate = g;
                    candidate.add_edge(fresh, v);
                    if (!contains_member(candidate, f, fresh)) self(self, candidate, v + 1);
                }
            };
            extend(extend, base, 0);
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

int ex_exact(int n, const FamilySpec& f) {
    if (n < 1) throw std::invalid_argument("ex_exact: n must be positive");
    if (n > kExExactCap)
        throw std::invalid_argument("ex_exact: n exceeds implementation cap " +
                                    std::to_string(kExExactCap));
    for (const SmallGraph& m : f.members)
        if (m.edge_count() == 0) throw std::invalid_argument("ex_exact: empty family member");
    int best = 0;
    for (const SmallGraph& g : family_free_graphs(n, f)) best = std::max(best, g.edge_count());
    return best;
}

namespace {

// Distance from u to v capped at 5; adding edge uv keeps girth >= 6 iff the
// current distance is at least 5.
bool far_enough(const SmallGraph& g, int u, int v) {
    std::uint64_t frontier = std::uint64_t{1} << u;
    std::uint64_t seen = frontier;
    for (int step = 1; step <= 4; ++step) {
        std::uint64_t reach = 0;
        std::uint64_t bits = frontier;
        while (bits) {
            int w = std::countr_zero(bits);
            bits &= bits - 1;
            reach |= g.neighbor_row(w);
        }
        frontier = reach & ~seen;
        seen |= reach;
        if ((seen >> v) & 1u) return false;
    }
    return true;
}

int greedy_pass(SmallGraph& g, std::vector<std::pair<int, int>>& pairs, std::mt19937_64& rng) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    int added = 0;
    for (auto [u, v] : pairs) {
        if (g.has_edge(u, v)) continue;
        if (far_enough(g, u, v)) {
            g.add_edge(u, v);
            ++added;
        }
    }
    return added;
}

}  // namespace

std::optional<SmallGraph> girth6_graph(int k, int m, std::uint64_t seed, int restarts,
                                       int* best_found) {
    if (k < 1 || k > SmallGraph::kMaxVertices)
        throw std::invalid_argument("girth6_graph: k must be in 1..64");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) pairs.emplace_back(u, v);

    SmallGraph best(k);
    for (int attempt = 0; attempt < restarts; ++attempt) {
        SmallGraph g(k);
        greedy_pass(g, pairs, rng);
        // Local repair: drop a random edge and re-run the greedy insertion,
        // keeping the change only when it gains edges.
        for (int repair = 0; repair < 8; ++repair) {
            auto edges = g.edges();
            if (edges.empty()) break;
            SmallGraph trial = g;
            auto [u, v] = edges[rng() % edges.size()];
            trial.remove_edge(u, v);
            greedy_pass(trial, pairs, rng);
            if (trial.edge_count() > g.edge_count()) g = trial;
        }
        if (g.edge_count() > best.edge_count()) best = g;
        if (best.edge_count() >= m) break;
    }
    if (best_found) *best_found = best.edge_count();
    if (best.edge_count() >= m) return best;
    return std::nullopt;
}

}  // namespace balance
