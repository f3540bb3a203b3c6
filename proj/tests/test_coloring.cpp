#include <doctest.h>

#include <random>
#include <stdexcept>

#include "balance/coloring.hpp"

using namespace balance;

namespace {

ListColoring random_coloring(int n, std::mt19937_64& rng) {
    ListColoring c(n);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            c.set(u, v, static_cast<EdgeList>(pick(rng)));
    return c;
}

}  // namespace

TEST_CASE("class sizes and the counting identity") {
    ListColoring c(4, EdgeList::Blue);
    c.set(0, 1, EdgeList::Red);
    c.set(0, 2, EdgeList::Both);
    CHECK(c.red_size() == 2);
    CHECK(c.blue_size() == 5);
    CHECK(c.bicolored_count() == 1);
    CHECK(c.bicolored_edges() == std::vector<std::pair<int, int>>{{0, 2}});
    CHECK(c.is_bicolored(0, 2));
    CHECK(c.is_bicolored(2, 0));
    CHECK(!c.is_strict());

    std::mt19937_64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const auto r = random_coloring(7, rng);
        // |R| + |B| = C(n,2) + #bicolored always.
        CHECK(r.red_size() + r.blue_size() == r.pair_count() + r.bicolored_count());
        const auto st = stats(r);
        CHECK(st.red_size == r.red_size());
        CHECK(st.excess ==
              doctest::Approx(std::min(st.red_size, st.blue_size) - r.pair_count() / 2.0));
    }
}

TEST_CASE("pair validation") {
    ListColoring c(4);
    CHECK_THROWS_AS(c.set(0, 0, EdgeList::Red), std::invalid_argument);
    CHECK_THROWS_AS(c.set(0, 4, EdgeList::Red), std::invalid_argument);
    CHECK_THROWS_AS(c.list_at(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(ListColoring(0), std::invalid_argument);
    CHECK_THROWS_AS(ListColoring(65), std::invalid_argument);
}

TEST_CASE("restriction to a strict coloring keeps both classes above k") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        const auto c = random_coloring(8, rng);
        const long k = std::min(c.red_size(), c.blue_size()) - 1;
        if (k < 0) continue;
        if (c.red_size() <= k || c.blue_size() <= k ||
            c.red_size() + c.blue_size() - c.bicolored_count() <= 2 * k + 1) {
            continue;
        }
        const auto s = restrict_to_2coloring(c, k);
        CHECK(s.is_strict());
        CHECK(s.red_size() > k);
        CHECK(s.blue_size() > k);
        // Refinement: each strict color was in the original list.
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) {
                if (s.in_red(u, v)) CHECK(c.in_red(u, v));
                if (s.in_blue(u, v)) CHECK(c.in_blue(u, v));
            }
    }
    // Violated hypothesis is reported, not silently accepted.
    ListColoring all_red(5, EdgeList::Red);
    CHECK_THROWS_WITH_AS(restrict_to_2coloring(all_red, 3), doctest::Contains("|B| > k"),
                         std::invalid_argument);
}

TEST_CASE("balanced bicolored fixing") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
        const auto c = random_coloring(8, rng);
        const auto s = fix_bicolored_balanced(c);
        CHECK(s.is_strict());
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v) {
                if (s.in_red(u, v)) CHECK(c.in_red(u, v));
                if (s.in_blue(u, v)) CHECK(c.in_blue(u, v));
            }
        // The strict split is as even as the bicolored budget allows.
        const long strict_red = c.red_size() - c.bicolored_count();
        const long strict_blue = c.blue_size() - c.bicolored_count();
        const long reachable = std::abs(strict_red - strict_blue) <= c.bicolored_count()
                                   ? (c.pair_count() % 2)
                                   : std::abs(strict_red - strict_blue) - c.bicolored_count();
        CHECK(std::abs(s.red_size() - s.blue_size()) == reachable);
    }
}

TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        const auto c = random_coloring(6, rng);
        CHECK(coloring_from_json(coloring_to_json(c)) == c);
    }
    CHECK_THROWS_AS(coloring_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(coloring_from_json(R"({"n":2,"edges":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(
        coloring_from_json(R"({"n":2,"edges":[{"u":0,"v":1,"list":"x"}]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        coloring_from_json(R"({"n":2,"edges":[{"u":1,"v":0,"list":"r"}]})"),
        std::invalid_argument);
}
