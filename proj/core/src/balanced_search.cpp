#include "balance/balanced_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace balance {

int BalancedWitness::red_count() const {
    return static_cast<int>(
        std::count_if(edges.begin(), edges.end(), [](const auto& e) { return std::get<2>(e) == 'r'; }));
}

int BalancedWitness::blue_count() const {
    return static_cast<int>(edges.size()) - red_count();
}

int workers_from_env() {
    const char* raw = std::getenv("BALANCE_LAB_WORKERS");
    if (!raw) return 1;
    std::string value(raw);
    if (value == "auto") {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }
    int parsed = std::atoi(raw);
    return parsed >= 1 ? parsed : 1;
}

namespace {

std::vector<int> pattern_order(const SmallGraph& pattern) {
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

struct PlacedEdge {
    int u, v;        // host endpoints
    EdgeList label;  // color list of that host edge
};

struct BalancedFinder {
    const ListColoring& coloring;
    const SmallGraph& pattern;
    std::vector<int> order;
    int edge_cap;  // ceil(e(g)/2): budget for each forced color class

    std::vector<int> image;
    std::uint64_t used = 0;
    std::vector<PlacedEdge> placed;
    int forced_red = 0, forced_blue = 0;

    std::optional<BalancedWitness> result;

    explicit BalancedFinder(const ListColoring& c, const SmallGraph& g)
        : coloring(c),
          pattern(g),
          order(pattern_order(g)),
          edge_cap((g.edge_count() + 1) / 2),
          image(static_cast<std::size_t>(g.order()), -1) {}

    bool complete() {
        const int m = static_cast<int>(placed.size()) - forced_red - forced_blue;
        // Red total r0 + x for some 0 <= x <= m must land within 1 of e/2.
        int x = std::max(0, (forced_blue + m - forced_red - 1 + 1) / 2);
        for (; x <= m; ++x) {
            int diff = forced_red + x - (forced_blue + m - x);
            if (diff > 1) break;
            if (diff >= -1) {
                BalancedWitness w;
                w.mapping = image;
                int remaining_red = x;
                for (const PlacedEdge& pe : placed) {
                    char color;
                    if (pe.label == EdgeList::Red) {
                        color = 'r';
                    } else if (pe.label == EdgeList::Blue) {
                        color = 'b';
                    } else if (remaining_red > 0) {
                        color = 'r';
                        --remaining_red;
                    } else {
                        color = 'b';
                    }
                    w.edges.emplace_back(pe.u, pe.v, color);
                }
                result = std::move(w);
                return true;
            }
        }
        return false;
    }

    bool place(std::size_t depth, int first_lo, int first_hi) {
        if (depth == order.size()) return complete();
        const int pv = order[depth];
        const int lo = depth == 0 ? first_lo : 0;
        const int hi = depth == 0 ? first_hi : coloring.order();
        for (int hv = lo; hv < hi; ++hv) {
            if ((used >> hv) & 1u) continue;
            // Collect the host edges this placement induces.
            std::size_t before = placed.size();
            int add_red = 0, add_blue = 0;
            bool ok = true;
            std::uint64_t need = pattern.neighbor_row(pv);
            while (need && ok) {
                int q = std::countr_zero(need);
                need &= need - 1;
                int hq = image[q];
                if (hq < 0) continue;
                EdgeList label = coloring.list_at(hv, hq);
                if (label == EdgeList::Red) ++add_red;
                if (label == EdgeList::Blue) ++add_blue;
                placed.push_back({std::min(hv, hq), std::max(hv, hq), label});
            }
            if (forced_red + add_red > edge_cap || forced_blue + add_blue > edge_cap) ok = false;
            if (ok) {
                image[pv] = hv;
                used |= std::uint64_t{1} << hv;
                forced_red += add_red;
                forced_blue += add_blue;
                if (place(depth + 1, first_lo, first_hi)) return true;
                forced_red -= add_red;
                forced_blue -= add_blue;
                used &= ~(std::uint64_t{1} << hv);
                image[pv] = -1;
            }
            placed.resize(before);
        }
        return false;
    }
};

}  // namespace

std::optional<BalancedWitness> find_balanced_copy(const ListColoring& c, const SmallGraph& g,
                                                  const SearchOptions& opts) {
    if (g.order() > c.order()) return std::nullopt;
    const int n = c.order();
    if (opts.workers <= 1) {
        BalancedFinder finder(c, g);
        finder.place(0, 0, n);
        return finder.result;
    }
    // Split on the image of the first pattern vertex. The lowest successful
    // start wins, so the parallel answer matches the sequential one.
    std::vector<std::optional<BalancedWitness>> per_start(static_cast<std::size_t>(n));
    std::atomic<int> next_start{0};
    std::atomic<int> best_start{n};
    auto work = [&]() {
        for (;;) {
            int start = next_start.fetch_add(1);
            if (start >= n || start >= best_start.load()) break;
            BalancedFinder finder(c, g);
            finder.place(0, start, start + 1);
            if (finder.result) {
                per_start[static_cast<std::size_t>(start)] = std::move(finder.result);
                int expected = best_start.load();
                while (start < expected && !best_start.compare_exchange_weak(expected, start)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opts.workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (int start = 0; start < n; ++start) {
        if (per_start[static_cast<std::size_t>(start)]) return per_start[static_cast<std::size_t>(start)];
    }
    return std::nullopt;
}

bool verify_witness(const ListColoring& c, const SmallGraph& g, const BalancedWitness& w) {
    const int p = g.order();
    if (static_cast<int>(w.mapping.size()) != p) return false;
    std::uint64_t seen = 0;
    for (int hv : w.mapping) {
        if (hv < 0 || hv >= c.order()) return false;
        if ((seen >> hv) & 1u) return false;
        seen |= std::uint64_t{1} << hv;
    }
    // The witness edges must be exactly the images of the pattern edges.
    std::multiset<std::pair<int, int>> expected;
    for (auto [pu, pv] : g.edges()) {
        int hu = w.mapping[pu], hv = w.mapping[pv];
        expected.insert({std::min(hu, hv), std::max(hu, hv)});
    }
    if (w.edges.size() != expected.size()) return false;
    int red = 0, blue = 0;
    for (const auto& [u, v, color] : w.edges) {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        auto it = expected.find(key);
        if (it == expected.end()) return false;
        expected.erase(it);
        if (color == 'r') {
            if (!c.in_red(u, v)) return false;
            ++red;
        } else if (color == 'b') {
            if (!c.in_blue(u, v)) return false;
            ++blue;
        } else {
            return false;
        }
    }
    return std::abs(red - blue) <= 1;
}

std::string witness_to_json(const BalancedWitness& w) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v, color] : w.edges)
        edges.push_back({{"u", u}, {"v", v}, {"color", std::string(1, color)}});
    nlohmann::json doc{{"mapping", w.mapping}, {"edges", std::move(edges)}};
    return doc.dump();
}

std::string export_dot(const ListColoring& c, const BalancedWitness* w) {
    std::set<std::pair<int, int>> marked;
    if (w) {
        for (const auto& [u, v, color] : w->edges)
            marked.insert({std::min(u, v), std::max(u, v)});
    }
    std::ostringstream out;
    out << "graph coloring {\n";
    const int n = c.order();
    for (int v = 0; v < n; ++v) out << "  " << v << ";\n";
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const char* color = "purple";
            switch (c.list_at(u, v)) {
                case EdgeList::Red: color = "red"; break;
                case EdgeList::Blue: color = "blue"; break;
                case EdgeList::Both: color = "purple"; break;
            }
            out << "  " << u << " -- " << v << " [color=" << color;
            if (marked.count({u, v})) out << ", penwidth=2";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace balance
