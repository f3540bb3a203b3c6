#ifndef BALANCE_ORACLES_HPP
#define BALANCE_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "balance/balanced_search.hpp"
#include "balance/coloring.hpp"
#include "balance/graph.hpp"

namespace balance {

struct OracleResult {
    long value = 0;
    // An extremal coloring: no balanced copy of the target, min class size
    // equal to value. Absent when every coloring contains a copy.
    std::optional<ListColoring> witness_coloring;
    long colorings_examined = 0;
};

/// Largest min(|R|, |B|) over strict 2-colorings of K_n with no balanced
/// copy of g, clamped to 0. Full 2^binom(n,2) enumeration, halved by
/// color-swap symmetry. Requires binom(n,2) <= 24.
OracleResult bal_exact(int n, const SmallGraph& g, const SearchOptions& opts = {});

/// Same over all 2-list colorings (3 labels per edge). Requires
/// binom(n,2) <= 15.
OracleResult lbal_exact(int n, const SmallGraph& g, const SearchOptions& opts = {});

/// Seeded property checks for the desk-scale claims. Each trial samples a
/// coloring satisfying the claim's hypothesis and asserts the conclusion
/// through the matching finder. The report is a JSON object that depends
/// only on (claim, n, trials, seed), never on the worker count.
/// Claims: thm3.1, thm3.2-upper, thm3.5, lemma3.3, lemma4.4, thm4.2.
nlohmann::json randomized_verify(const std::string& claim, int n, int trials, std::uint64_t seed,
                                 const SearchOptions& opts = {});

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace balance

#endif
