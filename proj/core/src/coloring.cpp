#include "balance/coloring.hpp"

#include <bit>
#include <stdexcept>

#include <json.hpp>

namespace balance {

ListColoring::ListColoring(int n, EdgeList fill)
    : n_(n), red_(static_cast<std::size_t>(n), 0), blue_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > 64) throw std::invalid_argument("ListColoring: n must be in 1..64");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) set(u, v, fill);
}

void ListColoring::check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw std::invalid_argument("ListColoring: invalid vertex pair");
}

void ListColoring::set(int u, int v, EdgeList label) {
    check_pair(u, v);
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    const bool r = label != EdgeList::Blue;
    const bool b = label != EdgeList::Red;
    red_[u] = r ? (red_[u] | bv) : (red_[u] & ~bv);
    red_[v] = r ? (red_[v] | bu) : (red_[v] & ~bu);
    blue_[u] = b ? (blue_[u] | bv) : (blue_[u] & ~bv);
    blue_[v] = b ? (blue_[v] | bu) : (blue_[v] & ~bu);
}

EdgeList ListColoring::list_at(int u, int v) const {
    check_pair(u, v);
    const bool r = (red_[u] >> v) & 1u;
    const bool b = (blue_[u] >> v) & 1u;
    if (r && b) return EdgeList::Both;
    return r ? EdgeList::Red : EdgeList::Blue;
}

bool ListColoring::in_red(int u, int v) const {
    check_pair(u, v);
    return (red_[u] >> v) & 1u;
}

bool ListColoring::in_blue(int u, int v) const {
    check_pair(u, v);
    return (blue_[u] >> v) & 1u;
}

bool ListColoring::is_strict() const { return bicolored_count() == 0; }

long ListColoring::red_size() const {
    long twice = 0;
    for (std::uint64_t row : red_) twice += std::popcount(row);
    return twice / 2;
}

long ListColoring::blue_size() const {
    long twice = 0;
    for (std::uint64_t row : blue_) twice += std::popcount(row);
    return twice / 2;
}

long ListColoring::bicolored_count() const {
    long twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(red_[v] & blue_[v]);
    return twice / 2;
}

std::vector<std::pair<int, int>> ListColoring::bicolored_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t row = (red_[u] & blue_[u]) >> (u + 1) << (u + 1);
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

ColorStats stats(const ListColoring& c) {
    ColorStats s;
    s.red_size = c.red_size();
    s.blue_size = c.blue_size();
    s.bicolored = c.bicolored_count();
    long min_class = std::min(s.red_size, s.blue_size);
    s.excess = static_cast<double>(min_class) - static_cast<double>(c.pair_count()) / 2.0;
    return s;
}

ListColoring restrict_to_2coloring(const ListColoring& c, long k) {
    const long total = c.pair_count();
    if (c.red_size() <= k) throw std::invalid_argument("restrict_to_2coloring: |R| > k violated");
    if (c.blue_size() <= k) throw std::invalid_argument("restrict_to_2coloring: |B| > k violated");
    if (!(2 * k < total))
        throw std::invalid_argument("restrict_to_2coloring: k < binomial(n,2)/2 violated");

    const int n = c.order();
    long red_only = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (c.in_red(u, v) && !c.in_blue(u, v)) ++red_only;

    ListColoring strict(n, EdgeList::Blue);
    if (red_only > k) {
        // R' = R \ B, B' = B: every bicolored edge resolves blue.
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (c.in_red(u, v) && !c.in_blue(u, v)) strict.set(u, v, EdgeList::Red);
        return strict;
    }
    // Grow R \ B with lexicographically first bicolored edges to size k + 1.
    long red_target = k + 1;
    long red_placed = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (c.in_red(u, v) && !c.in_blue(u, v)) {
                strict.set(u, v, EdgeList::Red);
                ++red_placed;
            }
        }
    }
    for (int u = 0; u < n && red_placed < red_target; ++u) {
        for (int v = u + 1; v < n && red_placed < red_target; ++v) {
            if (c.is_bicolored(u, v)) {
                strict.set(u, v, EdgeList::Red);
                ++red_placed;
            }
        }
    }
    return strict;
}

ListColoring fix_bicolored_balanced(const ListColoring& c) {
    const int n = c.order();
    ListColoring strict(n, EdgeList::Blue);
    long red = 0, blue = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            EdgeList label = c.list_at(u, v);
            if (label == EdgeList::Red) {
                strict.set(u, v, EdgeList::Red);
                ++red;
            } else if (label == EdgeList::Blue) {
                ++blue;
            }
        }
    }
    for (auto [u, v] : c.bicolored_edges()) {
        if (red <= blue) {
            strict.set(u, v, EdgeList::Red);
            ++red;
        } else {
            ++blue;
        }
    }
    return strict;
}

std::string coloring_to_json(const ListColoring& c) {
    nlohmann::json edges = nlohmann::json::array();
    const int n = c.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const char* label = "rb";
            switch (c.list_at(u, v)) {
                case EdgeList::Red: label = "r"; break;
                case EdgeList::Blue: label = "b"; break;
                case EdgeList::Both: label = "rb"; break;
            }
            edges.push_back({{"u", u}, {"v", v}, {"list", label}});
        }
    }
    nlohmann::json doc{{"n", n}, {"edges", std::move(edges)}};
    return doc.dump();
}

ListColoring coloring_from_json(const std::string& text) {
    try {
        nlohmann::json doc = nlohmann::json::parse(text);
        const int n = doc.at("n").get<int>();
        ListColoring c(n);
        std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
        long count = 0;
        for (const auto& e : doc.at("edges")) {
            int u = e.at("u").get<int>();
            int v = e.at("v").get<int>();
            if (u >= v) throw std::invalid_argument("coloring json: edges must have u < v");
            std::string label = e.at("list").get<std::string>();
            EdgeList list;
            if (label == "r") list = EdgeList::Red;
            else if (label == "b") list = EdgeList::Blue;
            else if (label == "rb") list = EdgeList::Both;
            else throw std::invalid_argument("coloring json: list must be r|b|rb");
            if (seen[static_cast<std::size_t>(u) * n + v])
                throw std::invalid_argument("coloring json: duplicate edge");
            seen[static_cast<std::size_t>(u) * n + v] = true;
            c.set(u, v, list);
            ++count;
        }
        if (count != c.pair_count())
            throw std::invalid_argument("coloring json: all binomial(n,2) pairs must be present");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("coloring json: ") + e.what());
    }
}

}  // namespace balance
