#include <doctest.h>

#include <random>

#include "idgraph/error.hpp"
#include "idgraph/graph.hpp"
#include "oracle.hpp"

using namespace idgraph;

namespace {

bool isomorphic(const Graph& a, const Graph& b) {
    return a.n() == b.n() && a.edge_count() == b.edge_count() && oracle::canonical_code(a) == oracle::canonical_code(b);
}

void check_invariants(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v)) {
            CHECK(u != v);
            CHECK(0 <= u);
            CHECK(u < g.n());
            CHECK(g.adjacent(u, v));
        }
}

}  // namespace

TEST_CASE("neighborhoods") {
    Graph p3 = path_graph(3);
    CHECK(open_nbhd(p3, 1) == VertexSet{0, 2});
    CHECK(open_nbhd(empty_graph(2), 0).empty());
    CHECK(open_nbhd(complete_graph(3), 0) == VertexSet{1, 2});
    CHECK(closed_nbhd(p3, 1) == VertexSet{0, 1, 2});
    CHECK(closed_nbhd(empty_graph(2), 0) == VertexSet{0});
    CHECK(closed_nbhd(cycle_graph(4), 0) == VertexSet{0, 1, 3});
    CHECK_THROWS_AS(open_nbhd(p3, 3), Error);
    try {
        closed_nbhd(p3, -1);
        FAIL("expected InvalidVertex");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidVertex);
    }
}

TEST_CASE("edges are validated") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
    check_invariants(g);
}

TEST_CASE("bfs distances") {
    CHECK(bfs_distances(path_graph(3), 0) == DistanceVector{0, 1, 2});
    CHECK(bfs_distances(empty_graph(2), 0) == DistanceVector{0, kInfinite});
    CHECK(bfs_distances(cycle_graph(4), 0) == DistanceVector{0, 1, 2, 1});
    CHECK_THROWS_AS(bfs_distances(path_graph(2), 5), Error);
}

TEST_CASE("diameter") {
    CHECK(diameter(cycle_graph(4)) == 2);
    CHECK(diameter(path_graph(5)) == 4);
    // square of a path on 7 vertices
    std::vector<VertexPair> es;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7 && j - i <= 2; ++j) es.emplace_back(i, j);
    CHECK(diameter(Graph(7, es)) == 3);
    try {
        diameter(empty_graph(2));
        FAIL("expected Disconnected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Disconnected);
    }
}

TEST_CASE("twins") {
    CHECK(closed_twins(complete_graph(2)) == std::vector<VertexPair>{{0, 1}});
    CHECK(closed_twins(cycle_graph(4)).empty());
    CHECK(closed_twins(empty_graph(2)).empty());
    CHECK(open_twins(empty_graph(2)) == std::vector<VertexPair>{{0, 1}});
    CHECK(open_twins(path_graph(3)) == std::vector<VertexPair>{{0, 2}});
    CHECK(open_twins(path_graph(4)).empty());
}

TEST_CASE("union and join") {
    Graph k1(1), k2 = complete_graph(2), e2 = empty_graph(2);
    CHECK(disjoint_union(k1, k1) == e2);
    Graph u = disjoint_union(k2, k1);
    CHECK(u.n() == 3);
    CHECK(u.edge_count() == 1);
    CHECK(disjoint_union(e2, e2) == empty_graph(4));
    CHECK(isomorphic(complete_join(e2, e2), cycle_graph(4)));
    CHECK(complete_join(k1, k1) == k2);
    CHECK(isomorphic(complete_join(k1, e2), path_graph(3)));
}

TEST_CASE("complement") {
    CHECK(complement(empty_graph(3)) == complete_graph(3));
    // the complement of a 4-cycle is a perfect matching
    CHECK(isomorphic(complement(cycle_graph(4)), disjoint_union(complete_graph(2), complete_graph(2))));
    CHECK(complement(complement(path_graph(4))) == path_graph(4));
}

TEST_CASE("components") {
    auto c = connected_components(empty_graph(3));
    CHECK(c == std::vector<VertexSet>{{0}, {1}, {2}});
    CHECK(connected_components(cycle_graph(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
    CHECK(connected_components(disjoint_union(complete_graph(2), Graph(1))) == std::vector<VertexSet>{{0, 1}, {2}});
}

TEST_CASE("random graph properties") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        int n1 = 1 + static_cast<int>(rng() % 5), n2 = 1 + static_cast<int>(rng() % 4);
        Graph a = oracle::random_graph(n1, 0.5, rng), b = oracle::random_graph(n2, 0.4, rng);
        check_invariants(a);
        CHECK(complement(complement(a)) == a);
        Graph u = disjoint_union(a, b), j = complete_join(a, b);
        check_invariants(j);
        CHECK(u.n() == n1 + n2);
        CHECK(j.n() == n1 + n2);
        CHECK(u.edge_count() == a.edge_count() + b.edge_count());
        CHECK(j.edge_count() == a.edge_count() + b.edge_count() + static_cast<std::size_t>(n1 * n2));
        CHECK(diameter(j) <= 2);
        // twins against the definition
        CHECK(closed_twins(u).empty() == !oracle::has_closed_twins(u));
        CHECK(open_twins(j).empty() == !oracle::has_open_twins(j));
    }
}

TEST_CASE("bfs matches floyd-warshall") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 400; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = oracle::random_graph(n, 0.3, rng);
        auto fw = oracle::floyd(oracle::Mat(g));
        for (int s = 0; s < n; ++s) {
            auto d = bfs_distances(g, s);
            for (int v = 0; v < n; ++v) CHECK((fw[s][v] >= oracle::kInf ? kInfinite : fw[s][v]) == d[v]);
        }
        CHECK(is_connected(g) == oracle::connected(g));
        if (oracle::connected(g)) CHECK(diameter(g) == oracle::diameter(g));
    }
}

TEST_CASE("induced subgraph and bipartiteness") {
    Graph c5 = cycle_graph(5);
    CHECK_FALSE(is_bipartite(c5));
    CHECK(is_bipartite(cycle_graph(6)));
    Graph p = induced_subgraph(c5, {0, 1, 2, 3});
    CHECK(p == path_graph(4));
    CHECK(star_graph(3).edge_count() == 3);
}
