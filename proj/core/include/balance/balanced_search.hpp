#ifndef BALANCE_BALANCED_SEARCH_HPP
#define BALANCE_BALANCED_SEARCH_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "balance/coloring.hpp"
#include "balance/graph.hpp"

namespace balance {

/// An embedding of a target graph into the colored K_n together with a color
/// choice per image edge realizing E1 in R, E2 in B, ||E1| - |E2|| <= 1.
struct BalancedWitness {
    std::vector<int> mapping;                      // pattern vertex -> host vertex
    std::vector<std::tuple<int, int, char>> edges; // host edge (u, v) + chosen 'r'/'b'

    int red_count() const;
    int blue_count() const;
};

struct SearchOptions {
    int workers = 1;  // > 1 splits the search over the first image vertex
};

/// Reads the worker count from BALANCE_LAB_WORKERS (or hardware concurrency
/// for the value "auto"); defaults to 1.
int workers_from_env();

/// Pruned backtracking over embeddings of g into the colored K_n. Returns
/// the first witness under the deterministic vertex order, or nullopt when
/// no embedding admits a balanced assignment. The parallel mode keeps the
/// same answer: the lowest starting vertex with a witness wins.
std::optional<BalancedWitness> find_balanced_copy(const ListColoring& c, const SmallGraph& g,
                                                  const SearchOptions& opts = {});

/// True iff mapping is injective and edge-preserving, every r-assigned edge
/// is in R, every b-assigned edge is in B, and the counts differ by <= 1.
bool verify_witness(const ListColoring& c, const SmallGraph& g, const BalancedWitness& w);

std::string witness_to_json(const BalancedWitness& w);

/// DOT export of a coloring; witness edges, when given, carry penwidth=2.
std::string export_dot(const ListColoring& c, const BalancedWitness* w = nullptr);

}  // namespace balance

#endif
