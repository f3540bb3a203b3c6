#ifndef BALANCE_EXTREMAL_HPP
#define BALANCE_EXTREMAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "balance/graph.hpp"

namespace balance {

/// A finite set of pairwise non-isomorphic forbidden graphs.
struct FamilySpec {
    std::vector<SmallGraph> members;

    /// Adds g unless an isomorphic member is already present.
    void insert(const SmallGraph& g);
    bool contains_isomorphic(const SmallGraph& g) const;
};

/// True iff some family member embeds in g as a subgraph. When
/// required_vertex >= 0 only embeddings covering that vertex count, which is
/// what the incremental generator needs after adding a vertex.
bool contains_member(const SmallGraph& g, const FamilySpec& f, int required_vertex = -1);

/// All subgraphs of g with exactly floor(e(g)/2) edges and no isolated
/// vertices, deduplicated up to isomorphism. Requires e(g) >= 2.
FamilySpec half_family(const SmallGraph& g);

/// One linear forest per integer partition of `total` (path edge counts).
FamilySpec linear_forest_family(int total);

/// The forbidden family {C3, C4, C5} (graphs of girth at least 6 avoid it).
FamilySpec c3c4c5();

inline constexpr int kExExactCap = 11;

/// Exact Turan number ex(n, f): maximum edges of an n-vertex graph containing
/// no family member, via incremental isomorph-rejected generation.
/// Throws std::invalid_argument when n exceeds kExExactCap.
int ex_exact(int n, const FamilySpec& f);

/// Heuristic generator: a k-vertex graph with >= m edges and girth >= 6, or
/// nullopt once the restart budget is spent. Never proves nonexistence; the
/// best edge count reached is reported through best_found when non-null.
std::optional<SmallGraph> girth6_graph(int k, int m, std::uint64_t seed = 1,
                                       int restarts = 400, int* best_found = nullptr);

}  // namespace balance

#endif
