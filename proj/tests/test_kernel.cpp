#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pftil/kernel.hpp"
#include "pftil/sequences.hpp"
#include "pftil/tables.hpp"

using namespace pftil;

TEST_CASE("pair-count kernel on the half graph") {
    PathGraph g = build_ds_graph(8);
    CHECK(q_v(g, 1, 2) == 6);
    CHECK(q_v(g, 1, 3) == 18);
    CHECK(q_v(g, 4, 8) == 16830);
    CHECK(q_v(g, 5, 5) == 0);
    CHECK(q_v(g, 2, 1) == -6);
    CHECK_THROWS_AS(q_v(g, 0, 1), IndexError);
    CHECK_THROWS_AS(q_v(g, 1, 9), IndexError);
}

TEST_CASE("paired kernel closed forms") {
    PathGraph g = build_ds_graph(12);
    for (int j = 2; j <= 12; ++j) CHECK(q_vstar(g, 1, j) == 2);
    for (int j = 3; j <= 12; ++j) CHECK(q_vstar(g, 2, j) == 4 * j - 10);
    for (int j = 4; j <= 12; ++j)
        CHECK(q_vstar(g, 3, j) == 2 * (2 * j * j - 10 * j + 13));
    CHECK(q_vstar(g, 4, 4) == 0);
    CHECK(q_vstar(g, 5, 4) == -q_vstar(g, 4, 5));
}

TEST_CASE("matrix B matches its 8x8 reference") {
    IntSkewMatrix b = build_B(8);
    const IntSkewMatrix& want = known_b8();
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j) CHECK(b.upper(i, j) == want.upper(i, j));
    CHECK(b.get(3, 3) == 0);
    CHECK(b.get(3, 1) == -18);
}

TEST_CASE("matrix A examples") {
    IntSkewMatrix a = build_A(6);
    CHECK(a.upper(1, 2) == 2);
    CHECK(a.upper(2, 4) == 6);
    CHECK(a.upper(3, 4) == 10);
    CHECK(a.upper(4, 5) == 34);
    CHECK(a.upper(4, 6) == 110);
    // The alternating Schroder sum for the same entry.
    CHECK(2 * (schroder(3, 4) - schroder(2, 3) + schroder(1, 2) - schroder(0, 1)) ==
          110);
}

TEST_CASE("three constructions agree up to n = 12") {
    IntSkewMatrix r = build_A(12, BuildMethod::Recurrence);
    IntSkewMatrix s = build_A(12, BuildMethod::SchroderSum);
    IntSkewMatrix g = build_A(12, BuildMethod::Graph);
    CHECK(r == s);
    CHECK(s == g);
}

TEST_CASE("graph kernel entries are stable in the ambient order") {
    for (int n = 2; n <= 8; ++n) {
        PathGraph small = build_ds_graph(n);
        PathGraph large = build_ds_graph(n + 2);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                CHECK(q_vstar(small, i, j) == q_vstar(large, i, j));
    }
}

TEST_CASE("two-parameter matrix") {
    PolySkewMatrix a = build_A_kt(6);
    CHECK(a.upper(1, 5) == BivariatePolynomial::t());

    BivariatePolynomial want(BigInt(2), 0, 1);  // 2t - k
    want.addTerm({1, 0}, -1);
    CHECK(a.upper(2, 3) == want);

    IntSkewMatrix plain = build_A(6);
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            CHECK(a.upper(i, j).eval(2, 2) == plain.upper(i, j));
}

TEST_CASE("translation invariance of the paired kernel") {
    for (int m = 4; m <= 10; ++m) {
        PathGraph g = build_dsbar_graph(m);
        for (int v = 0; v < g.vertexCount(); ++v)
            for (int w = v + 1; w < g.vertexCount(); ++w) {
                GridPoint p = g.point(v), q = g.point(w);
                if (p.a + p.b != q.a + q.b) continue;
                GridPoint p2{p.a, p.b - 2}, q2{q.a, q.b - 2};
                if (!g.hasVertex(p2) || !g.hasVertex(q2)) continue;
                CHECK(q_vstar_points(g, p, q) == q_vstar_points(g, p2, q2));
            }
    }
}

TEST_CASE("three-term identity for the second x-point") {
    for (int m = 4; m <= 10; ++m) {
        PathGraph g = build_dsbar_graph(m);
        for (int j = 3; j <= m; ++j)
            CHECK(q_vstar(g, 2, j) == q_vstar(g, 2, j - 1) + q_vstar(g, 1, j - 1) +
                                          q_vstar(g, 1, j) - 2);
    }
}

TEST_CASE("x-point recurrence, interior and superdiagonal branches") {
    for (int m = 4; m <= 10; ++m) {
        PathGraph g = build_dsbar_graph(m);
        for (int i = 2; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                int sign = (i % 2 == 1) ? 2 : -2;
                CHECK(q_vstar(g, i, j) == q_vstar(g, i - 1, j - 1) +
                                              q_vstar(g, i, j - 1) +
                                              q_vstar(g, i - 1, j) + sign);
                if (j == i + 1) {
                    // The middle term vanishes in the superdiagonal case.
                    CHECK(q_vstar(g, i, j - 1) == 0);
                    CHECK(q_vstar(g, i, i + 1) ==
                          q_vstar(g, i - 1, i) + q_vstar(g, i - 1, i + 1) + sign);
                }
            }
    }
}

TEST_CASE("source path counts split through the two x-neighbors") {
    for (int n = 4; n <= 8; ++n) {
        PathGraph g = build_ds_graph(n);
        for (int i = 3; i <= n; ++i) {
            std::vector<BigInt> u = path_counts(g, {-i, i - n - 1});
            std::vector<BigInt> lo = path_counts(g, {-(i - 2), (i - 2) - n + 1});
            std::vector<BigInt> hi = path_counts(g, {-(i - 1), (i - 1) - n + 1});
            for (std::size_t l = 0; l < u.size(); ++l)
                CHECK(u[l] == lo[l] + hi[l]);
        }
    }
}

TEST_CASE("every built matrix is skew-symmetric on read") {
    IntSkewMatrix a = build_A(7);
    IntSkewMatrix b = build_B(7);
    PolySkewMatrix akt = build_A_kt(7);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            CHECK(a.get(i, j) == -a.get(j, i));
            CHECK(b.get(i, j) == -b.get(j, i));
            CHECK(akt.get(i, j) == -akt.get(j, i));
        }
}
