#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "balance/constructions.hpp"
#include "balance/proof_engines.hpp"

#include "naive_oracles.hpp"

using namespace balance;

namespace {

SmallGraph cycle(int m) { return make_named({NamedGraph::Kind::Cycle, m, {}}); }

ListColoring random_coloring(int n, std::uint64_t seed, int both_weight) {
    std::uint64_t s = seed;
    auto next = [&s] {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    ListColoring c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int roll = static_cast<int>(next() % static_cast<std::uint64_t>(4 + both_weight));
            if (roll < 2)
                c.set(u, v, EdgeList::Red);
            else if (roll < 4)
                c.set(u, v, EdgeList::Blue);
            else
                c.set(u, v, EdgeList::Both);
        }
    return c;
}

}  // namespace

TEST_CASE("pattern search finds the planted halves") {
    const ListColoring tb = type_b_coloring(12, 4, {});
    const auto pb = find_pattern(tb, 4);
    REQUIRE(pb.has_value());
    CHECK(pb->kind == PatternKind::TypeB);
    CHECK(pb->x_set.size() == 4);
    CHECK(pb->y_set.size() == 4);

    const ListColoring cs = clique_split_coloring(12, 5);
    const auto pa = find_pattern(cs, 4);
    REQUIRE(pa.has_value());
    // X clique in one color, Y and the crossing edges in the other.
    for (int x1 : pa->x_set)
        for (int x2 : pa->x_set)
            if (x1 < x2) CHECK(cs.in_red(x1, x2) != cs.in_red(pa->y_set[0], pa->y_set[1]));
}

TEST_CASE("path and odd cycle conversions round trip") {
    const ListColoring c = random_coloring(10, 99, 1);
    const auto c5 = cycle(5);
    const auto w = find_balanced_copy(c, c5, {});
    REQUIRE(w.has_value());
    const BalancedWitness path = path_from_odd_cycle(c, *w);
    CHECK(path.edges.size() == 4);
    CHECK(path.red_count() == path.blue_count());
    const BalancedWitness back = odd_cycle_from_path(c, path);
    CHECK(verify_witness(c, c5, back));

    BalancedWitness bogus = *w;
    bogus.edges.pop_back();
    CHECK_THROWS_AS(path_from_odd_cycle(c, bogus), std::invalid_argument);
    CHECK_THROWS_AS(odd_cycle_from_path(c, *w), std::invalid_argument);
}

TEST_CASE("C4k+2 engine dispatches the planted cases") {
    const auto c6 = cycle(6);
    auto run = [&](const ListColoring& c) {
        const EngineResult r = find_balanced_c4k2(c, 1);
        REQUIRE(r.witness.has_value());
        CHECK(verify_witness(c, c6, *r.witness));
        return r.case_label;
    };

    CHECK(run(clique_split_coloring(12, 6)) == "case1");
    CHECK(run(type_b_coloring(8, 4, {{0, 1}})) == "case2.1");
    CHECK(run(type_b_coloring(8, 4, {{0, 4}})) == "case2.2");
    CHECK(run(type_b_coloring(12, 4, {{0, 8}})) == "case3");
    CHECK(run(type_b_coloring(12, 4, {{8, 9}})) == "case4.2");

    ListColoring c41 = type_b_coloring(10, 4, {{8, 9}});
    c41.set(0, 8, EdgeList::Red);
    CHECK(run(c41) == "case4.1");
}

TEST_CASE("C4k engine on structured hosts") {
    const auto c4 = cycle(4);
    const EngineResult r = find_balanced_c4k(clique_split_coloring(12, 6), 1);
    REQUIRE(r.witness.has_value());
    CHECK(verify_witness(clique_split_coloring(12, 6), c4, *r.witness));

    // The extremal split coloring has no balanced C8; the engine must not
    // fabricate one.
    const EngineResult none = find_balanced_c4k(split_coloring_c4k(12, 2), 2);
    CHECK(!none.witness.has_value());
    CHECK(none.case_label == "none");
}

TEST_CASE("engines agree with the generic finder on random colorings") {
    const auto c4 = cycle(4);
    const auto c6 = cycle(6);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const ListColoring c = random_coloring(12, seed, 2);
        const auto generic4 = find_balanced_copy(c, c4, {});
        const EngineResult e4 = find_balanced_c4k(c, 1);
        CHECK(e4.witness.has_value() == generic4.has_value());
        if (e4.witness) CHECK(verify_witness(c, c4, *e4.witness));

        const auto generic6 = find_balanced_copy(c, c6, {});
        const EngineResult e6 = find_balanced_c4k2(c, 1);
        CHECK(e6.witness.has_value() == generic6.has_value());
        if (e6.witness) CHECK(verify_witness(c, c6, *e6.witness));
    }
}
