#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "idgraph/cograph.hpp"
#include "idgraph/error.hpp"
#include "idgraph/io.hpp"
#include "idgraph/models.hpp"
#include "idgraph/verify.hpp"
#include "oracle.hpp"

using namespace idgraph;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Parse;
}

IntervalModel intervals(std::initializer_list<std::pair<Rational, Rational>> xs) {
    IntervalModel m;
    for (auto& [l, r] : xs) m.intervals.push_back({l, r});
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational::parse("-7/14") == Rational(-1, 2));
    CHECK(Rational::parse("5").str() == "5");
    CHECK(Rational(3, 6).str() == "1/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("interval graphs") {
    CHECK(interval_graph(intervals({{0, 2}, {1, 3}})) == complete_graph(2));
    CHECK(interval_graph(intervals({{0, 1}, {1, 2}})) == empty_graph(2));
    CHECK(code_of([] { interval_graph(intervals({{1, 1}})); }) == ErrorCode::DegenerateInterval);
    CHECK(code_of([] { interval_graph(intervals({{2, 1}})); }) == ErrorCode::DegenerateInterval);

    // all ]i,j[ with 1 <= i < j <= 5; the unit ones form an identifying code
    IntervalModel f;
    std::vector<int> code;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            if (j == i + 1) code.push_back(f.n());
            f.intervals.push_back({i, j});
        }
    Graph g = interval_graph(f);
    CHECK(g.n() == 10);
    CHECK(is_identifying_code(g, VertexSet(code)));
}

TEST_CASE("unit models") {
    CHECK(is_unit_model(intervals({{0, 1}, {Rational(1, 2), Rational(3, 2)}})));
    CHECK_FALSE(is_unit_model(intervals({{0, 2}})));
}

TEST_CASE("permutation graphs") {
    PermutationModel a{{{0, 1}, {1, 0}}};
    CHECK(permutation_graph(a) == complete_graph(2));
    PermutationModel b{{{0, 0}, {1, 1}}};
    CHECK(permutation_graph(b) == empty_graph(2));
    PermutationModel c{{{0, 1}, {1, 2}, {2, 0}}};
    // segment 2 crosses both others
    CHECK(permutation_graph(c) == Graph(3, {{0, 2}, {1, 2}}));
    PermutationModel d{{{0, 1}, {0, 2}}};
    CHECK(code_of([&] { permutation_graph(d); }) == ErrorCode::DuplicateIndex);
    CHECK(rank_compress({{Rational(1, 2), 3}, {Rational(1, 3), 5}}).segments == std::vector<Segment>{{1, 0}, {0, 1}});
}

TEST_CASE("cotree compilation") {
    Graph c4 = cotree_to_graph(parse_cotree("(J (U 0 1) (U 2 3))"));
    CHECK(c4 == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    CHECK(cotree_to_graph(parse_cotree("0")) == Graph(1));
    CHECK(cotree_to_graph(parse_cotree("(U 0 1 2)")) == empty_graph(3));
    CHECK(code_of([] { parse_cotree("(U 0 2)"); }) == ErrorCode::MalformedCotree);
    CHECK(code_of([] { parse_cotree("(U 0 0)"); }) == ErrorCode::MalformedCotree);
    CHECK(code_of([] { parse_cotree("(U 0)"); }) == ErrorCode::MalformedCotree);
    CHECK(code_of([] { parse_cotree("(X 0 1)"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_cotree("(U 0 1"); }) == ErrorCode::Parse);
}

TEST_CASE("canonical cotrees merge same-kind chains") {
    Cotree t = parse_cotree("(U (U 0 1) (J 2 (J 3 4)))").canonical();
    CHECK(cotree_to_string(t) == "(U 0 1 (J 2 3 4))");
    CHECK(cotree_to_graph(t) == cotree_to_graph(parse_cotree("(U (U 0 1) (J 2 (J 3 4)))")));
    Cotree u = cotree_union(parse_cotree("(U 0 1)"), parse_cotree("0"));
    CHECK(cotree_to_string(u) == "(U 0 1 2)");
    Cotree j = cotree_join(parse_cotree("0"), parse_cotree("(U 0 1)"));
    CHECK(cotree_to_graph(j) == Graph(3, {{0, 1}, {0, 2}}));
    CHECK(cotree_to_graph(complement_cotree(j)) == complement(cotree_to_graph(j)));
}

TEST_CASE("cograph recognition") {
    Cotree t = cograph_recognize(cycle_graph(4));
    const auto& root = t.node(t.root());
    CHECK(root.kind == CotreeKind::Join);
    CHECK(root.children.size() == 2);
    for (int c : root.children) CHECK(t.node(c).kind == CotreeKind::Union);
    CHECK(cotree_to_graph(t) == cycle_graph(4));
    CHECK(code_of([] { cograph_recognize(path_graph(4)); }) == ErrorCode::NotCograph);
    CHECK(cotree_to_string(cograph_recognize(empty_graph(3))) == "(U 0 1 2)");
}

TEST_CASE("recognition round trip on every cotree up to 10 leaves") {
    std::size_t total = 0;
    for (int n = 1; n <= 10; ++n)
        for (const auto& t : enumerate_cotrees(n)) {
            Graph g = cotree_to_graph(t);
            Cotree r = cograph_recognize(g);
            CHECK(cotree_to_graph(r) == g);
            ++total;
        }
    CHECK(total == 1 + 2 + 4 + 10 + 24 + 66 + 180 + 522 + 1532 + 4624);
}

TEST_CASE("random interval models") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 1000; ++it) {
        int n = 1 + static_cast<int>(rng() % 20);
        IntervalModel m = oracle::random_interval_model(n, it % 2 == 0, rng);
        Graph g = interval_graph(m);
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) {
                CHECK(u != v);
                CHECK(g.adjacent(u, v));
            }
        IntervalModel shifted = m;
        Rational off(17, 3);
        for (auto& iv : shifted.intervals) iv = {iv.left + off, iv.right + off};
        CHECK(interval_graph(shifted) == g);
        bool all_one = std::all_of(m.intervals.begin(), m.intervals.end(),
                                   [](const Interval& iv) { return iv.right - iv.left == Rational(1); });
        CHECK(is_unit_model(m) == all_one);
        if (it % 2 == 0) CHECK(all_one);
    }
}

TEST_CASE("random permutation models are symmetric in the two lines") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 1000; ++it) {
        int n = 1 + static_cast<int>(rng() % 15);
        PermutationModel m = oracle::random_permutation_model(n, rng), s = m;
        for (auto& seg : s.segments) std::swap(seg.t, seg.b);
        CHECK(permutation_graph(m) == permutation_graph(s));
    }
}

TEST_CASE("model files") {
    std::istringstream gi("# a path\ngraph 3\ne 0 1\ne 1 2\n");
    CHECK(read_graph(gi) == path_graph(3));
    std::istringstream bad_edge("graph 3\ne 0 3\n");
    CHECK(code_of([&] { read_graph(bad_edge); }) == ErrorCode::Parse);
    std::istringstream dup("graph 3\ne 0 1\ne 0 1\n");
    CHECK(code_of([&] { read_graph(dup); }) == ErrorCode::Parse);

    std::istringstream ii("intervals 2\n0 0 2\n1 1/2 5/2\n");
    AnyModel m = read_model(ii);
    REQUIRE(std::holds_alternative<IntervalModel>(m));
    CHECK(std::get<IntervalModel>(m).intervals[1].left == Rational(1, 2));
    CHECK(compile(m) == complete_graph(2));

    std::istringstream pi("permutation 3\n0 0 1\n1 1 2\n2 2 0\n");
    AnyModel p = read_model(pi);
    CHECK(std::holds_alternative<PermutationModel>(p));

    std::istringstream ci("# comment\n(J (U 0 1) (U 2 3))\n");
    AnyModel c = read_model(ci);
    CHECK(std::holds_alternative<Cotree>(c));

    std::istringstream junk("hello 3\n");
    CHECK(code_of([&] { read_model(junk); }) == ErrorCode::Parse);

    // writers round-trip
    for (const AnyModel& x : {AnyModel(path_graph(4)), m, p, c}) {
        std::ostringstream out;
        write_model(out, x);
        std::istringstream back(out.str());
        CHECK(compile(read_model(back)) == compile(x));
    }
    CHECK(parse_vertex_list("3,1") == VertexSet{1, 3});
    CHECK(parse_vertex_list("-").empty());
    CHECK(format_vertex_list({}) == "-");
    CHECK(format_vertex_list({0, 4}) == "0,4");
    CHECK(code_of([] { parse_vertex_list("1,a"); }) == ErrorCode::Parse);
}
