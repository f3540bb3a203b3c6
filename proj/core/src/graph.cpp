#include "balance/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <deque>
#include <stdexcept>

namespace balance {

SmallGraph::SmallGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("SmallGraph: vertex count must be in 1..64");
    }
}

void SmallGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("SmallGraph: vertex out of range");
}

int SmallGraph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

bool SmallGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

void SmallGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("SmallGraph: self-loops not allowed");
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

void SmallGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
}

int SmallGraph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::vector<std::pair<int, int>> SmallGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t row = adj_[u] >> (u + 1) << (u + 1);
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

SmallGraph make_named(const NamedGraph& spec) {
    using Kind = NamedGraph::Kind;
    switch (spec.kind) {
        case Kind::Cycle: {
            if (spec.size < 3) throw std::invalid_argument("Cycle: need m >= 3");
            SmallGraph g(spec.size);
            for (int i = 0; i < spec.size; ++i) g.add_edge(i, (i + 1) % spec.size);
            return g;
        }
        case Kind::Path: {
            if (spec.size < 1) throw std::invalid_argument("Path: need m >= 1 edges");
            SmallGraph g(spec.size + 1);
            for (int i = 0; i < spec.size; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Kind::Complete: {
            if (spec.size < 1) throw std::invalid_argument("Complete: need m >= 1");
            SmallGraph g(spec.size);
            for (int u = 0; u < spec.size; ++u)
                for (int v = u + 1; v < spec.size; ++v) g.add_edge(u, v);
            return g;
        }
        case Kind::FourPan: {
            SmallGraph g(5);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(2, 3);
            g.add_edge(3, 0);
            g.add_edge(0, 4);
            return g;
        }
        case Kind::FourPanComplement: {
            // Triangle with a path of two edges hanging off one corner.
            SmallGraph g(5);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(0, 2);
            g.add_edge(2, 3);
            g.add_edge(3, 4);
            return g;
        }
        case Kind::Bull: {
            SmallGraph g(5);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(0, 2);
            g.add_edge(0, 3);
            g.add_edge(1, 4);
            return g;
        }
        case Kind::Cricket: {
            SmallGraph g(5);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(0, 2);
            g.add_edge(2, 3);
            g.add_edge(2, 4);
            return g;
        }
        case Kind::Diamond: {
            SmallGraph g(4);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(2, 3);
            g.add_edge(3, 0);
            g.add_edge(0, 2);
            return g;
        }
        case Kind::LinearForest: {
            if (spec.path_lengths.empty())
                throw std::invalid_argument("LinearForest: need at least one path");
            int total_vertices = 0;
            for (int len : spec.path_lengths) {
                if (len < 1) throw std::invalid_argument("LinearForest: path lengths must be >= 1");
                total_vertices += len + 1;
            }
            SmallGraph g(total_vertices);
            int base = 0;
            for (int len : spec.path_lengths) {
                for (int i = 0; i < len; ++i) g.add_edge(base + i, base + i + 1);
                base += len + 1;
            }
            return g;
        }
    }
    throw std::logic_error("make_named: unreachable");
}

namespace {

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

std::optional<NamedGraph> parse_named_token(std::string_view token) {
    using Kind = NamedGraph::Kind;
    if (token == "4pan") return NamedGraph{Kind::FourPan};
    if (token == "co4pan") return NamedGraph{Kind::FourPanComplement};
    if (token == "bull") return NamedGraph{Kind::Bull};
    if (token == "cricket") return NamedGraph{Kind::Cricket};
    if (token == "diamond") return NamedGraph{Kind::Diamond};
    if (token.starts_with("lf:")) {
        NamedGraph spec{Kind::LinearForest};
        std::string_view rest = token.substr(3);
        while (!rest.empty()) {
            auto plus = rest.find('+');
            std::string_view piece = rest.substr(0, plus);
            auto len = parse_int(piece);
            if (!len || *len < 1) return std::nullopt;
            spec.path_lengths.push_back(*len);
            if (plus == std::string_view::npos) break;
            rest = rest.substr(plus + 1);
        }
        if (spec.path_lengths.empty()) return std::nullopt;
        return spec;
    }
    if (token.size() >= 2) {
        auto num = parse_int(token.substr(1));
        if (num) {
            switch (token[0]) {
                case 'c': return NamedGraph{Kind::Cycle, *num};
                case 'p': return NamedGraph{Kind::Path, *num};
                case 'k': return NamedGraph{Kind::Complete, *num};
                default: break;
            }
        }
    }
    return std::nullopt;
}

std::optional<int> girth(const SmallGraph& g) {
    // BFS from every vertex; the shortest cycle through the root closes when
    // a non-tree edge joins two vertices already reached.
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            std::uint64_t row = g.neighbor_row(u);
            while (row) {
                int v = std::countr_zero(row);
                row &= row - 1;
                if (v == parent[u]) continue;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else {
                    int len = dist[u] + dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

// Static pattern vertex order: each vertex after the first is adjacent to an
// already-placed one whenever the pattern is connected enough to allow it.
std::vector<int> connectivity_order(const SmallGraph& pattern) {
    const int p = pattern.order();
    std::vector<int> order;
    order.reserve(p);
    std::uint64_t placed = 0;
    while (static_cast<int>(order.size()) < p) {
        int pick = -1;
        for (int v = 0; v < p; ++v) {
            if ((placed >> v) & 1u) continue;
            if (pattern.neighbor_row(v) & placed) {
                pick = v;
                break;
            }
        }
        if (pick < 0) {
            // Start of a new component: highest degree first.
            for (int v = 0; v < p; ++v) {
                if ((placed >> v) & 1u) continue;
                if (pick < 0 || pattern.degree(v) > pattern.degree(pick)) pick = v;
            }
        }
        order.push_back(pick);
        placed |= std::uint64_t{1} << pick;
    }
    return order;
}

struct EmbeddingSearch {
    const SmallGraph& host;
    const SmallGraph& pattern;
    const EmbeddingVisitor& visit;
    std::vector<int> order;
    std::vector<int> image;      // pattern vertex -> host vertex (or -1)
    std::uint64_t used = 0;
    long count = 0;
    bool aborted = false;

    bool consistent(int pv, int hv) const {
        std::uint64_t need = pattern.neighbor_row(pv);
        while (need) {
            int q = std::countr_zero(need);
            need &= need - 1;
            int hq = image[q];
            if (hq >= 0 && !((host.neighbor_row(hv) >> hq) & 1u)) return false;
        }
        return true;
    }

    void run(std::size_t depth) {
        if (aborted) return;
        if (depth == order.size()) {
            ++count;
            if (!visit(image)) aborted = true;
            return;
        }
        int pv = order[depth];
        for (int hv = 0; hv < host.order() && !aborted; ++hv) {
            if ((used >> hv) & 1u) continue;
            if (!consistent(pv, hv)) continue;
            image[pv] = hv;
            used |= std::uint64_t{1} << hv;
            run(depth + 1);
            used &= ~(std::uint64_t{1} << hv);
            image[pv] = -1;
        }
    }
};

}  // namespace

long enumerate_embeddings(const SmallGraph& host, const SmallGraph& pattern,
                          const EmbeddingVisitor& visit) {
    if (pattern.order() > host.order()) return 0;
    EmbeddingSearch search{host, pattern, visit, connectivity_order(pattern),
                           std::vector<int>(static_cast<std::size_t>(pattern.order()), -1)};
    search.run(0);
    return search.count;
}

bool embeds(const SmallGraph& host, const SmallGraph& pattern, int required_vertex) {
    bool found = false;
    enumerate_embeddings(host, pattern, [&](const std::vector<int>& image) {
        if (required_vertex >= 0 &&
            std::find(image.begin(), image.end(), required_vertex) == image.end()) {
            return true;
        }
        found = true;
        return false;
    });
    return found;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

// Iterated neighbor-degree refinement; returns the stable per-vertex codes.
std::vector<std::uint64_t> refine_colors(const SmallGraph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> color(n);
    for (int v = 0; v < n; ++v) color[v] = mix(static_cast<std::uint64_t>(g.degree(v)) + 1);
    std::vector<std::uint64_t> next(n);
    for (int round = 0; round < 4; ++round) {
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> around;
            std::uint64_t row = g.neighbor_row(v);
            while (row) {
                int u = std::countr_zero(row);
                row &= row - 1;
                around.push_back(color[u]);
            }
            std::sort(around.begin(), around.end());
            std::uint64_t h = color[v];
            for (std::uint64_t c : around) h = mix(h ^ c);
            next[v] = h;
        }
        color = next;
    }
    return color;
}

bool iso_backtrack(const SmallGraph& a, const SmallGraph& b,
                   const std::vector<std::uint64_t>& ca,
                   const std::vector<std::uint64_t>& cb, std::vector<int>& map,
                   std::uint64_t used, int depth) {
    const int n = a.order();
    if (depth == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (ca[depth] != cb[w]) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev) {
            if (a.has_edge(depth, prev) != b.has_edge(w, map[prev])) ok = false;
        }
        if (!ok) continue;
        map[depth] = w;
        if (iso_backtrack(a, b, ca, cb, map, used | (std::uint64_t{1} << w), depth + 1))
            return true;
    }
    return false;
}

}  // namespace

std::uint64_t iso_invariant(const SmallGraph& g) {
    std::vector<std::uint64_t> color = refine_colors(g);
    std::sort(color.begin(), color.end());
    std::uint64_t h = mix(static_cast<std::uint64_t>(g.order()) * 131 +
                          static_cast<std::uint64_t>(g.edge_count()));
    for (std::uint64_t c : color) h = mix(h ^ c);
    return h;
}

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<std::uint64_t> ca = refine_colors(a);
    std::vector<std::uint64_t> cb = refine_colors(b);
    std::vector<std::uint64_t> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map(static_cast<std::size_t>(a.order()), -1);
    return iso_backtrack(a, b, ca, cb, map, 0, 0);
}

std::string to_graph6(const SmallGraph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    int bits = 0, value = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + 63));
                bits = 0;
                value = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    return out;
}

SmallGraph from_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    std::size_t pos = 0;
    int n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated order");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    } else {
        n = text[0] - 63;
        pos = 1;
    }
    if (n < 1 || n > SmallGraph::kMaxVertices)
        throw std::invalid_argument("graph6: order out of supported range 1..64");
    SmallGraph g(n);
    int bits = 0, value = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits == 0) {
                if (pos >= text.size()) throw std::invalid_argument("graph6: truncated bits");
                int c = text[pos++] - 63;
                if (c < 0 || c > 63) throw std::invalid_argument("graph6: bad byte");
                value = c;
                bits = 6;
            }
            if ((value >> (bits - 1)) & 1) g.add_edge(u, v);
            --bits;
        }
    }
    return g;
}

}  // namespace balance
