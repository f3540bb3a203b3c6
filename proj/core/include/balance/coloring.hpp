#ifndef BALANCE_COLORING_HPP
#define BALANCE_COLORING_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace balance {

/// Nonempty color list of one K_n edge.
enum class EdgeList : std::uint8_t { Red, Blue, Both };

/// 2-list edge coloring of K_n: every unordered pair carries a nonempty
/// subset of {r, b}. Stored as two symmetric bit-matrices (red membership,
/// blue membership) so class sizes are population counts.
class ListColoring {
public:
    explicit ListColoring(int n, EdgeList fill = EdgeList::Both);

    int order() const { return n_; }
    long pair_count() const { return static_cast<long>(n_) * (n_ - 1) / 2; }

    void set(int u, int v, EdgeList label);
    EdgeList list_at(int u, int v) const;

    bool in_red(int u, int v) const;
    bool in_blue(int u, int v) const;
    bool is_bicolored(int u, int v) const { return in_red(u, v) && in_blue(u, v); }
    bool is_strict() const;  // no bicolored edges

    std::uint64_t red_row(int v) const { return red_[v]; }
    std::uint64_t blue_row(int v) const { return blue_[v]; }

    long red_size() const;
    long blue_size() const;
    long bicolored_count() const;

    /// Bicolored edges as (u, v), u < v, lexicographic.
    std::vector<std::pair<int, int>> bicolored_edges() const;

    bool operator==(const ListColoring&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> red_, blue_;

    void check_pair(int u, int v) const;
};

struct ColorStats {
    long red_size = 0;
    long blue_size = 0;
    long bicolored = 0;
    /// min(|R|, |B|) - C(n,2)/2, exact (may be a half-integer).
    double excess = 0.0;
};

ColorStats stats(const ListColoring& c);

/// Restriction of a 2-list coloring to a strict 2-coloring with both class
/// sizes above the threshold k. Follows the two-branch rule: if |R \ B| > k
/// keep R' = R \ B, B' = B; otherwise grow R \ B with the lexicographically
/// first bicolored edges up to |R'| = k + 1 and give the rest to blue.
/// Throws std::invalid_argument naming the violated inequality.
ListColoring restrict_to_2coloring(const ListColoring& c, long k);

/// Resolves every bicolored edge to a fixed color so that the two classes
/// stay as balanced as possible. Bicolored edges are taken in lexicographic
/// order and each one joins the currently smaller class (ties go red).
ListColoring fix_bicolored_balanced(const ListColoring& c);

std::string coloring_to_json(const ListColoring& c);
ListColoring coloring_from_json(const std::string& text);

}  // namespace balance

#endif
