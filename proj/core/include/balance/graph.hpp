#ifndef BALANCE_GRAPH_HPP
#define BALANCE_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace balance {

/// Undirected simple graph on at most 64 vertices, one adjacency bit-row
/// per vertex. Rows are kept symmetric and loop-free at all times.
class SmallGraph {
public:
    static constexpr int kMaxVertices = 64;

    explicit SmallGraph(int n);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbor_row(int v) const { return adj_[v]; }
    int degree(int v) const;

    /// Edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const SmallGraph&) const = default;

private:
    int n_;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v) const;
};

/// Tags for the graphs the library knows by name.
struct NamedGraph {
    enum class Kind {
        Cycle,
        Path,
        Complete,
        FourPan,
        FourPanComplement,
        Bull,
        Cricket,
        Diamond,
        LinearForest,
    };

    Kind kind;
    int size = 0;                    // m for Cycle / Path / Complete
    std::vector<int> path_lengths;   // LinearForest component edge counts
};

SmallGraph make_named(const NamedGraph& spec);

/// CLI tokens: c5, p4, k5, 4pan, co4pan, bull, cricket, diamond, lf:3+1+1.
std::optional<NamedGraph> parse_named_token(std::string_view token);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const SmallGraph& g);

/// Visits every injective, edge-preserving map from pattern vertices into
/// host vertices, exactly once each. The visitor returns false to abort.
/// Returns the number of embeddings visited.
using EmbeddingVisitor = std::function<bool(const std::vector<int>&)>;
long enumerate_embeddings(const SmallGraph& host, const SmallGraph& pattern,
                          const EmbeddingVisitor& visit);

/// True iff pattern embeds in host as a (not necessarily induced) subgraph.
/// When required_vertex >= 0, only embeddings covering that host vertex count.
bool embeds(const SmallGraph& host, const SmallGraph& pattern,
            int required_vertex = -1);

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b);

/// Cheap isomorphism invariant (degree refinement hash) for bucketing.
std::uint64_t iso_invariant(const SmallGraph& g);

std::string to_graph6(const SmallGraph& g);
SmallGraph from_graph6(std::string_view text);

}  // namespace balance

#endif
