#include <doctest.h>

#include "rwl/graph.hpp"
#include "rwl/oracle.hpp"
#include "rwl/torus.hpp"

using namespace rwl;
using namespace rwl::torus;

TEST_CASE("initial conditions")
{
    CHECK(a_rec(1, 1) == 1);
    CHECK(a_rec(2, 1) == 4);
    CHECK(a_rec(2, 2) == 2);
    CHECK(b_rec(1, 0, 0) == 0);
    CHECK(b_rec(2, 0, 0) == 2);
    CHECK(b_rec(2, 1, 0) == 1);
    CHECK(b_rec(2, 0, 1) == 1);
    CHECK(b_rec(2, 1, 1) == 0);
}

TEST_CASE("full row labeled leaves n! completions")
{
    for (int n = 3; n <= 8; ++n) {
        CHECK(a_rec(n, n) == factorial(n));
    }
}

TEST_CASE("recurrences equal closed forms")
{
    CHECK(a_closed(2, 1) == 4);
    CHECK(b_closed(2, 1, 0) == 1);
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(a_rec(n, k) == a_closed(n, k));
        }
        for (int s = 0; s <= n - 1; ++s) {
            for (int t = 0; t <= n - 1; ++t) {
                CAPTURE(n);
                CAPTURE(s);
                CAPTURE(t);
                REQUIRE(b_rec(n, s, t) == b_closed(n, s, t));
                REQUIRE(b_rec(n, s, t) == b_rec(n, t, s));
                if (s + t >= n) {
                    REQUIRE(b_rec(n, s, t) == 0);
                }
            }
        }
        REQUIRE(count_torus(n) == 2 * n * a_rec(n, 1));
    }
}

TEST_CASE("torus totals")
{
    CHECK(count_torus(1) == 2);
    CHECK(count_torus(2) == 16);
    CHECK(count_torus(3) == 360);
    CHECK(count_torus(4) == 8640);
    CHECK(count_torus(5) == 235200);
    for (int n = 1; n <= 9; ++n) {
        CAPTURE(n);
        REQUIRE(count_torus(n) == oracle::count_labelings(build_family(Torus{n})));
    }
}

TEST_CASE("partial states match the oracle")
{
    CHECK([] {
        auto st = torus_partial_state_graph(3, AShape{3});
        return oracle::count_completions(st.graph, st.labeled);
    }() == 6);
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            auto st = torus_partial_state_graph(n, AShape{k});
            REQUIRE(st.labeled.size() == static_cast<std::size_t>(k));
            CAPTURE(n);
            CAPTURE(k);
            REQUIRE(oracle::count_completions(st.graph, st.labeled) == a_rec(n, k));
        }
        for (int s = 0; s <= n - 1; ++s) {
            for (int t = 0; s + t <= n - 1; ++t) {
                auto st = torus_partial_state_graph(n, BShape{s, t});
                REQUIRE(st.labeled.size() == static_cast<std::size_t>(s + t + 2));
                // Exactly one rung joins the two labeled runs.
                int rungs = 0;
                for (Vertex u : st.labeled) {
                    for (Vertex v : st.labeled) {
                        if (u < v && st.graph.adjacent(u, v) &&
                            st.graph.coord_of(u)->row != st.graph.coord_of(v)->row) {
                            ++rungs;
                        }
                    }
                }
                CAPTURE(n);
                CAPTURE(s);
                CAPTURE(t);
                REQUIRE(rungs == 1);
                REQUIRE(oracle::count_completions(st.graph, st.labeled) == b_rec(n, s, t));
            }
        }
    }
}

TEST_CASE("out-of-range indices")
{
    CHECK_THROWS_AS(a_rec(0, 1), Error);
    CHECK_THROWS_AS(a_rec(3, 0), Error);
    CHECK_THROWS_AS(a_rec(3, 4), Error);
    CHECK_THROWS_AS(b_rec(3, -1, 0), Error);
    CHECK_THROWS_AS(b_rec(3, 3, 0), Error);
    CHECK_THROWS_AS(a_closed(1, 1), Error);
    CHECK_THROWS_AS(b_closed(1, 0, 0), Error);
    CHECK_THROWS_AS(count_torus(0), Error);
    CHECK_THROWS_WITH_AS(torus_partial_state_graph(4, AShape{5}), "invalid shape", Error);
    CHECK_THROWS_WITH_AS(torus_partial_state_graph(4, BShape{2, 2}), "invalid shape", Error);
    CHECK_THROWS_AS(torus_partial_state_graph(40, AShape{1}), Error);
}
