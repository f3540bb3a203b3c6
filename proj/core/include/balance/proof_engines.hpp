#ifndef BALANCE_PROOF_ENGINES_HPP
#define BALANCE_PROOF_ENGINES_HPP

#include <optional>
#include <string>
#include <vector>

#include "balance/balanced_search.hpp"
#include "balance/coloring.hpp"
#include "balance/graph.hpp"

namespace balance {

enum class PatternKind { TypeA, TypeB };

/// A K_{2t} copy with halves (X, Y) matching one of the two unavoidable
/// colorings. TypeA: E(X) red, E(Y) and E(X,Y) blue. TypeB: E(X) and E(Y)
/// red, E(X,Y) blue. `swapped` exchanges the two colors in either pattern.
struct PatternWitness {
    std::vector<int> x_set, y_set;
    PatternKind kind;
    bool swapped;
};

/// Searches a strict 2-coloring for an unavoidable K_{2t} pattern.
/// Exhaustive for 2t <= 10; otherwise bounded by node_budget backtracking
/// nodes. nullopt means "not found", never "does not exist".
std::optional<PatternWitness> find_pattern(const ListColoring& strict, int t,
                                           long node_budget = 4'000'000);

/// Closes a balanced even path into a balanced odd cycle: the closing edge
/// tips the count by exactly one regardless of its color.
/// Throws std::invalid_argument when p is not a balanced path witness.
BalancedWitness odd_cycle_from_path(const ListColoring& c, const BalancedWitness& p);

/// Deletes one majority-color edge from a balanced odd cycle, returning the
/// equal-count path. Throws when the counts do not differ by exactly one.
BalancedWitness path_from_odd_cycle(const ListColoring& c, const BalancedWitness& w);

struct EngineResult {
    std::optional<BalancedWitness> witness;
    std::string case_label;  // which proof case produced the witness
};

/// Balanced C_{4k+2} via the unavoidable-pattern case analysis, with the
/// generic finder as an always-on fallback (labelled as such).
EngineResult find_balanced_c4k2(const ListColoring& c, int k, const SearchOptions& opts = {});

/// Balanced C_{4k} via the cycle-extension engine: start from a balanced
/// C_{4k-1}, try the one- and two-vertex detours, then the certified-
/// structure constructions, then the generic fallback.
EngineResult find_balanced_c4k(const ListColoring& c, int k, const SearchOptions& opts = {});

}  // namespace balance

#endif
