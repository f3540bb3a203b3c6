#include <doctest.h>

#include <random>
#include <stdexcept>

#include "balance/graph.hpp"
#include "naive_oracles.hpp"

using namespace balance;

namespace {

SmallGraph named(NamedGraph::Kind k, int size = 0, std::vector<int> lens = {}) {
    return make_named({k, size, std::move(lens)});
}

SmallGraph random_graph(int n, double p, std::mt19937_64& rng) {
    SmallGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("named graph shapes") {
    const auto c5 = named(NamedGraph::Kind::Cycle, 5);
    CHECK(c5.order() == 5);
    CHECK(c5.edge_count() == 5);

    const auto p4 = named(NamedGraph::Kind::Path, 4);
    CHECK(p4.order() == 5);
    CHECK(p4.edge_count() == 4);

    const auto k5 = named(NamedGraph::Kind::Complete, 5);
    CHECK(k5.edge_count() == 10);

    CHECK(named(NamedGraph::Kind::FourPan).edge_count() == 5);
    CHECK(named(NamedGraph::Kind::FourPanComplement).edge_count() == 5);
    CHECK(named(NamedGraph::Kind::Bull).edge_count() == 5);
    CHECK(named(NamedGraph::Kind::Cricket).edge_count() == 5);
    CHECK(named(NamedGraph::Kind::Diamond).order() == 4);
    CHECK(named(NamedGraph::Kind::Diamond).edge_count() == 5);

    const auto lf = named(NamedGraph::Kind::LinearForest, 0, {3, 1, 1});
    CHECK(lf.order() == 8);
    CHECK(lf.edge_count() == 5);
}

TEST_CASE("co-4-pan is the complement of the 4-pan") {
    const auto pan = named(NamedGraph::Kind::FourPan);
    SmallGraph comp(5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!pan.has_edge(u, v)) comp.add_edge(u, v);
    CHECK(is_isomorphic(comp, named(NamedGraph::Kind::FourPanComplement)));
}

TEST_CASE("token parsing") {
    CHECK(make_named(*parse_named_token("c5")) == named(NamedGraph::Kind::Cycle, 5));
    CHECK(make_named(*parse_named_token("p4")) == named(NamedGraph::Kind::Path, 4));
    CHECK(make_named(*parse_named_token("k5")) == named(NamedGraph::Kind::Complete, 5));
    CHECK(make_named(*parse_named_token("4pan")) == named(NamedGraph::Kind::FourPan));
    CHECK(make_named(*parse_named_token("co4pan")) == named(NamedGraph::Kind::FourPanComplement));
    CHECK(make_named(*parse_named_token("bull")) == named(NamedGraph::Kind::Bull));
    CHECK(make_named(*parse_named_token("cricket")) == named(NamedGraph::Kind::Cricket));
    CHECK(make_named(*parse_named_token("diamond")) == named(NamedGraph::Kind::Diamond));
    CHECK(make_named(*parse_named_token("lf:3+1+1")) ==
          named(NamedGraph::Kind::LinearForest, 0, {3, 1, 1}));
    CHECK(!parse_named_token("q7"));
    CHECK(!parse_named_token("lf:"));
    CHECK(!parse_named_token(""));
}

TEST_CASE("girth") {
    for (int m = 3; m <= 20; ++m) CHECK(girth(named(NamedGraph::Kind::Cycle, m)) == m);
    CHECK(!girth(named(NamedGraph::Kind::Path, 6)).has_value());
    CHECK(!girth(named(NamedGraph::Kind::LinearForest, 0, {3, 2})).has_value());
    CHECK(girth(named(NamedGraph::Kind::FourPan)) == 4);
    CHECK(girth(named(NamedGraph::Kind::Bull)) == 3);
    CHECK(girth(named(NamedGraph::Kind::Diamond)) == 3);
    CHECK(girth(named(NamedGraph::Kind::Complete, 6)) == 3);
}

TEST_CASE("graph6 against frozen external values") {
    // Strings produced independently by a reference implementation.
    CHECK(to_graph6(named(NamedGraph::Kind::Cycle, 5)) == "Dhc");
    CHECK(to_graph6(named(NamedGraph::Kind::Complete, 4)) == "C~");
    CHECK(to_graph6(named(NamedGraph::Kind::Path, 4)) == "DhC");
    CHECK(to_graph6(named(NamedGraph::Kind::Diamond)) == "C|");
    CHECK(to_graph6(named(NamedGraph::Kind::Bull)) == "D{O");
    CHECK(to_graph6(named(NamedGraph::Kind::FourPan)) == "Dl_");
    CHECK(to_graph6(named(NamedGraph::Kind::Cricket)) == "DxG");
    CHECK(to_graph6(named(NamedGraph::Kind::FourPanComplement)) == "DxC");
    CHECK(to_graph6(named(NamedGraph::Kind::Cycle, 12)) == "KhCGGC@?G?o@");
}

TEST_CASE("graph6 round trip, including the long form") {
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 5, 10, 30, 62, 63, 64}) {
        const auto g = random_graph(n, 0.4, rng);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    CHECK_THROWS_AS(from_graph6("D"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
}

TEST_CASE("embedding counts match the naive enumerator") {
    const auto c6 = named(NamedGraph::Kind::Cycle, 6);
    const auto p2 = named(NamedGraph::Kind::Path, 2);
    const long naive_count = naive::count_embeddings(c6, p2);
    CHECK(naive_count == 12);  // 6 center choices, 2 endpoint orders
    CHECK(enumerate_embeddings(c6, p2, [](const std::vector<int>&) { return true; }) ==
          naive_count);

    std::mt19937_64 rng(5);
    const std::vector<SmallGraph> patterns{named(NamedGraph::Kind::Cycle, 3),
                                           named(NamedGraph::Kind::Path, 3),
                                           named(NamedGraph::Kind::Cycle, 4)};
    for (int i = 0; i < 6; ++i) {
        const auto host = random_graph(6, 0.5, rng);
        for (const auto& pat : patterns) {
            CHECK(enumerate_embeddings(host, pat, [](const std::vector<int>&) { return true; }) ==
                  naive::count_embeddings(host, pat));
        }
    }
}

TEST_CASE("embedding visitor can abort") {
    const auto k5 = named(NamedGraph::Kind::Complete, 5);
    const auto c3 = named(NamedGraph::Kind::Cycle, 3);
    long seen = 0;
    enumerate_embeddings(k5, c3, [&](const std::vector<int>&) { return ++seen < 4; });
    CHECK(seen == 4);
}

TEST_CASE("embeds with a required vertex") {
    SmallGraph g(5);  // triangle 0-1-2 plus isolated path 3-4
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    const auto c3 = named(NamedGraph::Kind::Cycle, 3);
    CHECK(embeds(g, c3));
    CHECK(embeds(g, c3, 1));
    CHECK(!embeds(g, c3, 3));
}

TEST_CASE("isomorphism behaves like an equivalence relation on samples") {
    const auto c5 = named(NamedGraph::Kind::Cycle, 5);
    SmallGraph relabeled(5);  // C5 under the permutation i -> 2i mod 5
    for (int i = 0; i < 5; ++i) relabeled.add_edge((2 * i) % 5, (2 * (i + 1)) % 5);
    CHECK(is_isomorphic(c5, relabeled));
    CHECK(is_isomorphic(relabeled, c5));
    CHECK(!is_isomorphic(c5, named(NamedGraph::Kind::Bull)));
    CHECK(!is_isomorphic(named(NamedGraph::Kind::Cricket), named(NamedGraph::Kind::Bull)));

    // Same degree sequence, different graphs: C6 vs two triangles.
    SmallGraph two_triangles(6);
    for (int b : {0, 3}) {
        two_triangles.add_edge(b, b + 1);
        two_triangles.add_edge(b + 1, b + 2);
        two_triangles.add_edge(b, b + 2);
    }
    CHECK(!is_isomorphic(named(NamedGraph::Kind::Cycle, 6), two_triangles));
    CHECK(iso_invariant(c5) == iso_invariant(relabeled));
}
