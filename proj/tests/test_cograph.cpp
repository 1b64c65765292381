#include <doctest.h>

#include <algorithm>
#include <random>

#include "idgraph/cograph.hpp"
#include "idgraph/error.hpp"
#include "idgraph/io.hpp"
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

Cotree T(const char* s) { return parse_cotree(s); }

// Same cotree with every child list reversed.
Cotree reversed(const Cotree& t) {
    std::vector<CotreeNode> nodes = t.nodes();
    for (auto& nd : nodes) std::reverse(nd.children.begin(), nd.children.end());
    return Cotree::from_nodes(nodes, t.root());
}

}  // namespace

TEST_CASE("OLD recurrence is gated until validated") {
    CHECK_FALSE(old_dp_enabled());
    CHECK(code_of([] { sep_old_dp(T("(J 0 1)")); }) == ErrorCode::NotValidated);
    CHECK(code_of([] { gamma_old_cograph(T("(J 0 1)")); }) == ErrorCode::NotValidated);
    validate_old_dp(6);
    CHECK_FALSE(old_dp_enabled());
    int checked = validate_old_dp(9);
    CHECK(checked > 0);
    CHECK(old_dp_enabled());
    CHECK(gamma_old_cograph(T("(J 0 1)")) == 2);
    Cotree c4 = T("(J (U 0 1) (U 2 3))");
    CHECK(code_of([&] { sep_old_dp(c4); }) == ErrorCode::OpenTwinsPresent);
    // open-twin-free examples against the brute force
    for (const char* s : {"(J 0 1)", "(J 0 (U 1 (J 2 3)))", "(J (U 0 (J 1 2)) (U 3 (J 4 5)))"}) {
        Cotree t = T(s);
        Graph g = cotree_to_graph(t);
        CHECK(gamma_old_cograph(t) == oracle::gamma(g, oracle::Kind::OLD));
        CHECK(sep_old_dp(t).k == oracle::gamma(g, oracle::Kind::SEP_OLD));
        VertexSet w = witness_cograph(t, ProblemKind::OLD);
        CHECK(is_open_locating_dominating(g, w));
        CHECK(static_cast<int>(w.size()) == gamma_old_cograph(t));
    }
    CHECK(code_of([] { gamma_old_cograph(T("(U 0 (J 1 2))")); }) == ErrorCode::IsolatedVertex);
}

TEST_CASE("identifying code recurrence") {
    CHECK(sep_id_dp(T("0")) == CographSummary{0, true, true});
    CHECK(sep_id_dp(T("(U 0 1)")) == CographSummary{1, true, true});
    CHECK(sep_id_dp(T("(J (U 0 1) (U 2 3))")).k == 3);
    CHECK(gamma_id_cograph(T("(U 0 1)")) == 2);
    CHECK(gamma_id_cograph(T("(J (U 0 1) (U 2 3))")) == 3);
    CHECK(gamma_id_cograph(T("(J 0 (U 1 2 3))")) == 3);
    CHECK(code_of([] { sep_id_dp(T("(J 0 1)")); }) == ErrorCode::TwinsPresent);
    CHECK(code_of([] { gamma_id_cograph(T("(U 2 (J 0 1))")); }) == ErrorCode::TwinsPresent);
}

TEST_CASE("locating-dominating recurrence") {
    CHECK(sep_ld_dp(T("0")) == CographSummary{0, true, true});
    CHECK(sep_ld_dp(T("(U 0 1)")) == CographSummary{1, true, false});
    CHECK(sep_ld_dp(T("(J 0 1)")) == CographSummary{1, false, true});
    // star with three leaves; expected values from the brute force
    Cotree star = T("(J 0 (U 1 2 3))");
    Graph g = cotree_to_graph(star);
    auto [e, u] = oracle::emp_univ(g, oracle::Kind::SEP_LD);
    CHECK(sep_ld_dp(star) == CographSummary{oracle::gamma(g, oracle::Kind::SEP_LD), e, u});
    CHECK(sep_ld_dp(star) == CographSummary{2, true, true});
    CHECK(gamma_ld_cograph(star) == 3);
    CHECK(dim_cograph(T("(J 0 1)")) == 1);
    CHECK(gamma_ld_cograph(T("(J 0 1)")) == 1);
    CHECK(dim_cograph(T("(J (U 0 1) (U 2 3))")) == 2);
    CHECK(dim_cograph(T("0")) == 0);
    CHECK(gamma_ld_cograph(T("0")) == 1);
    CHECK(code_of([] { dim_cograph(T("(U 0 1)")); }) == ErrorCode::Disconnected);
}

TEST_CASE("witnesses") {
    CHECK(witness_cograph(T("(U 0 1)"), ProblemKind::IC) == VertexSet{0, 1});
    VertexSet star = witness_cograph(T("(J 0 (U 1 2 3))"), ProblemKind::IC);
    CHECK(star.size() == 3);
    CHECK(is_identifying_code(cotree_to_graph(T("(J 0 (U 1 2 3))")), star));
    Cotree c4 = T("(J (U 0 1) (U 2 3))");
    VertexSet w = witness_cograph(c4, ProblemKind::LD);
    CHECK(w.size() == 2);
    CHECK(is_locating_dominating(cotree_to_graph(c4), w));
    CHECK(code_of([] { witness_cograph(T("(J 0 1)"), ProblemKind::IC); }) == ErrorCode::TwinsPresent);
}

TEST_CASE("flag rules are listed") {
    const auto& r = flag_rules();
    CHECK(r.size() >= 8);
    int amended = 0;
    for (const auto& x : r) amended += std::string(x.text).find("amended") != std::string::npos;
    CHECK(amended == 1);
}

TEST_CASE("recurrences match the brute force on every cograph with at most 8 vertices") {
    int graphs = 0;
    for (int n = 1; n <= 8; ++n)
        for (const Cotree& t : enumerate_cotrees(n)) {
            Graph g = cotree_to_graph(t);
            ++graphs;
            auto [le, lu] = oracle::emp_univ(g, oracle::Kind::SEP_LD);
            int sld = oracle::gamma(g, oracle::Kind::SEP_LD);
            CographSummary ld = sep_ld_dp(t);
            CHECK(ld == CographSummary{sld, le, lu});
            CHECK(sep_ld_dp(reversed(t)) == ld);
            CHECK(gamma_ld_cograph(t) == oracle::gamma(g, oracle::Kind::LD));
            if (oracle::connected(g)) CHECK(dim_cograph(t) == oracle::gamma(g, oracle::Kind::RS));
            VertexSet wl = witness_cograph(t, ProblemKind::LD);
            CHECK(is_locating_dominating(g, wl));
            CHECK(static_cast<int>(wl.size()) == gamma_ld_cograph(t));

            bool twins = oracle::has_closed_twins(g);
            CHECK(cotree_closed_twin(t).has_value() == twins);
            CHECK(cotree_open_twin(t).has_value() == oracle::has_open_twins(g));
            if (twins) continue;
            auto [ie, iu] = oracle::emp_univ(g, oracle::Kind::SEP_ID);
            CographSummary id = sep_id_dp(t);
            CHECK(id == CographSummary{oracle::gamma(g, oracle::Kind::SEP_ID), ie, iu});
            CHECK(sep_id_dp(reversed(t)) == id);
            CHECK(gamma_id_cograph(t) == oracle::gamma(g, oracle::Kind::IC));
            VertexSet wi = witness_cograph(t, ProblemKind::IC);
            CHECK(is_identifying_code(g, wi));
            CHECK(static_cast<int>(wi.size()) == gamma_id_cograph(t));
        }
    CHECK(graphs == 809);
}

TEST_CASE("complement swaps the LD flags") {
    for (int n = 1; n <= 10; ++n)
        for (const Cotree& t : enumerate_cotrees(n)) {
            CographSummary a = sep_ld_dp(t), b = sep_ld_dp(complement_cotree(t));
            CHECK(a.k == b.k);
            CHECK(a.emp == b.univ);
            CHECK(a.univ == b.emp);
        }
}

TEST_CASE("random cotrees") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 300; ++it) {
        int n = 1 + static_cast<int>(rng() % 30);
        Cotree t = random_cotree(n, rng);
        CHECK(t.leaf_count() == n);
        t.validate();
        Cotree f = random_twin_free_cotree(n == 2 ? 3 : n, rng);
        CHECK(closed_twins(cotree_to_graph(f)).empty());
        CHECK_NOTHROW(sep_id_dp(f));
    }
}

TEST_CASE("enumeration counts") {
    const std::size_t expect[] = {1, 2, 4, 10, 24, 66, 180, 522, 1532, 4624};
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_cotrees(n).size() == expect[n - 1]);
    // no two enumerated cotrees on 6 leaves give isomorphic graphs
    std::set<std::uint64_t> codes;
    for (const Cotree& t : enumerate_cotrees(6)) codes.insert(oracle::canonical_code(cotree_to_graph(t)));
    CHECK(codes.size() == 66);
}
