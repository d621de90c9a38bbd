#include <random>
#include <sstream>

#include "pftil/conjecture.hpp"
#include "pftil/sequences.hpp"
#include "pftil/tables.hpp"

namespace pftil {

namespace {

struct Battery {
    CheckReport report;
    bool corrupt_one = false;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        if (corrupt_one) {
            report.checks.push_back({name + " [corrupted]", false, "injected corruption"});
            corrupt_one = false;
            return;
        }
        report.checks.push_back({name, pass, detail});
    }

    template <typename T>
    void expectEq(const std::string& name, const T& actual, const T& expected) {
        std::ostringstream os;
        bool pass = actual == expected;
        if (!pass) os << "expected " << expected << ", got " << actual;
        add(name, pass, os.str());
    }

    void expectEqBig(const std::string& name, const BigInt& actual, const BigInt& expected) {
        bool pass = actual == expected;
        add(name, pass, pass ? "" : "expected " + expected.str() + ", got " + actual.str());
    }
};

void table_checks(Battery& b) {
    // Matrix B against its published 8x8 instance.
    {
        IntSkewMatrix got = build_B(8);
        const IntSkewMatrix& want = known_b8();
        int bad = 0;
        std::string first;
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j)
                if (got.upper(i, j) != want.upper(i, j) && ++bad == 1)
                    first = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        b.add("matrix-B8 (28 entries)", bad == 0,
              bad ? "first mismatch at " + first : "");
    }

    // Diagonal symmetry class counts through pf(B) with a phantom point for
    // odd n.
    for (int n = 1; n <= 7; ++n) {
        IntSkewMatrix m = build_B(n);
        std::vector<BigInt> c = phantom_column(n);
        BigInt got = pf_minor(m, IndexSet::full(n), OddMode::Phantom, &c);
        b.expectEqBig("diagonal-count n=" + std::to_string(n), got,
                      known_diagonal_counts()[static_cast<std::size_t>(n - 1)]);
    }

    // Integer o-sequence against its table.
    {
        OSequenceInt seq = extract_o_int(8);
        for (int n = 0; n <= 8; ++n)
            b.expectEqBig("o_int n=" + std::to_string(n),
                          seq.values[static_cast<std::size_t>(n)],
                          known_o_int()[static_cast<std::size_t>(n)]);
    }

    // Polynomial o-sequence against its table.
    {
        OSequencePoly seq = extract_o_poly(8);
        for (int n = 0; n <= 8; ++n) {
            bool pass = seq.values[static_cast<std::size_t>(n)] ==
                        known_o_poly()[static_cast<std::size_t>(n)];
            b.add("o_poly n=" + std::to_string(n), pass,
                  pass ? ""
                       : "expected " + known_o_poly()[static_cast<std::size_t>(n)].str() +
                             ", got " + seq.values[static_cast<std::size_t>(n)].str());
        }
    }

    // The eight listed t-ratios of the decomposition of A(k,t).
    {
        PolySkewMatrix a = build_A_kt(16);
        PfaffianDecomposition<BivariatePolynomial> d = pf_decompose(a);
        for (int l = 1; l <= 8; ++l) {
            const RationalFunction& got = d.t[static_cast<std::size_t>(l - 1)];
            const RationalFunction& want = known_t_ratios()[static_cast<std::size_t>(l - 1)];
            bool pass = got.eq(want);
            b.add("t-ratio l=" + std::to_string(l), pass,
                  pass ? "" : "expected " + want.str() + ", got " + got.str());
        }
    }

    // Closed forms of the first three rows of A.
    {
        IntSkewMatrix a = build_A(12);
        bool r1 = true, r2 = true, r3 = true;
        for (int j = 2; j <= 12; ++j) r1 = r1 && a.upper(1, j) == 2;
        for (int j = 3; j <= 12; ++j) r2 = r2 && a.upper(2, j) == 4 * j - 10;
        for (int j = 4; j <= 12; ++j)
            r3 = r3 && a.upper(3, j) == 2 * (2 * j * j - 10 * j + 13);
        b.add("A row 1 = 2", r1);
        b.add("A row 2 = 4j-10", r2);
        b.add("A row 3 = 2(2j^2-10j+13)", r3);
    }

    // Path-count tables on the half graph: rows u_1, u_2 and the Delannoy
    // form of the general row.
    {
        PathGraph g = build_ds_graph(3);
        std::vector<BigInt> u1 = path_counts_from(g, g.source(1));
        std::vector<BigInt> u2 = path_counts_from(g, g.source(2));
        b.add("DS(3) row u_1", u1 == std::vector<BigInt>({1, 1, 0, 0, 0, 0}));
        b.add("DS(3) row u_2", u2 == std::vector<BigInt>({0, 2, 1, 1, 0, 0}));
    }
    {
        bool ok = true;
        for (int n = 4; n <= 6 && ok; ++n) {
            PathGraph g = build_ds_graph(n);
            for (int j = 3; j <= n && ok; ++j) {
                std::vector<BigInt> row = path_counts_from(g, g.source(j));
                ok = ok && row[0] == 0;
                for (int s = 1; s <= n && ok; ++s) {
                    BigInt even = delannoy(j - s, s - 1) + delannoy(j - s - 1, s - 1);
                    ok = ok && row[static_cast<std::size_t>(2 * s - 1)] == even;
                    if (2 * s < 2 * n) {
                        BigInt odd =
                            delannoy(j - s - 1, s - 1) + delannoy(j - s - 2, s - 1);
                        ok = ok && row[static_cast<std::size_t>(2 * s)] == odd;
                    }
                }
            }
        }
        b.add("DS(n) row u_j Delannoy form (n<=6)", ok);
    }

    // Path counts from the x-points of the augmented half graph.
    {
        PathGraph g = build_dsbar_graph(4);
        std::vector<BigInt> x1 = path_counts_from(g, g.source(1));
        std::vector<BigInt> x2 = path_counts_from(g, g.source(2));
        b.add("DSbar row x_1", x1 == std::vector<BigInt>({1, 1, 0, 0, 0, 0, 0, 0}));
        b.add("DSbar row x_2", x2 == std::vector<BigInt>({1, 3, 1, 1, 0, 0, 0, 0}));
    }
    {
        bool ok = true;
        for (int m = 1; m <= 8 && ok; ++m) {
            PathGraph g = build_dsbar_graph(m);
            for (int i = 1; i <= m && ok; ++i) {
                std::vector<BigInt> row = path_counts_from(g, g.source(i));
                for (int l = 1; l <= 2 * m && ok; ++l) {
                    BigInt want = l <= 2 * i ? delannoy((2 * i - l) / 2, l / 2) : BigInt(0);
                    ok = ok && row[static_cast<std::size_t>(l - 1)] == want;
                }
            }
        }
        b.add("DSbar x_i -> v_l Delannoy counts (m<=8)", ok);
    }

    // Delannoy and Schroder basics.
    {
        bool ok = true;
        for (int q = 0; q <= 12; ++q) ok = ok && delannoy(0, q) == 1 && delannoy(q, 0) == 1;
        ok = ok && delannoy(-1, 3) == 0 && delannoy(3, -1) == 0;
        b.add("Delannoy boundary values", ok);
    }
    {
        bool ok = true;
        for (int p = 0; p <= 12 && ok; ++p)
            for (int q = 0; q <= 12 && ok; ++q)
                ok = delannoy(p, q) == delannoy_closed_form(p, q) &&
                     delannoy(p, q) == delannoy(q, p);
        b.add("Delannoy recurrence = closed form, symmetric (<=12)", ok);
    }
    {
        bool ok = true;
        for (int q = 0; q <= 12; ++q) ok = ok && schroder(0, q) == 1;
        b.add("Schroder top row", ok);
    }

    // Whole-diamond counts: the LGV determinant against 2^{n(n+1)/2}.
    for (int n = 1; n <= 6; ++n)
        b.expectEqBig("aztec-count n=" + std::to_string(n), lgv_det(build_ad_graph(n)),
                      aztec_total(n));

    // No paired family exists on an odd number of sources.
    b.expectEqBig("odd paired family count",
                  count_families(build_ds_graph(3), {1, 2, 3}, FamilyMode::Paired),
                  BigInt(0));

    // Translation invariance of pair counts on the augmented half graph.
    {
        bool ok = true;
        for (int m = 4; m <= 6 && ok; ++m) {
            PathGraph g = build_dsbar_graph(m);
            for (int v = 0; v < g.vertexCount() && ok; ++v)
                for (int w = v + 1; w < g.vertexCount() && ok; ++w) {
                    GridPoint p = g.point(v), q = g.point(w);
                    if (p.a + p.b != q.a + q.b) continue;  // same lattice line
                    GridPoint p2{p.a, p.b - 2}, q2{q.a, q.b - 2};
                    if (!g.hasVertex(p2) || !g.hasVertex(q2)) continue;
                    ok = q_vstar_points(g, p, q) == q_vstar_points(g, p2, q2);
                }
        }
        b.add("pair-count translation invariance (m<=6)", ok);
    }

    // Closed forms for pair counts from the first two x-points, and the
    // three-term identity tying them together.
    {
        bool ok1 = true, ok2 = true, ok3 = true;
        for (int m = 4; m <= 8; ++m) {
            PathGraph g = build_dsbar_graph(m);
            for (int j = 2; j <= m; ++j)
                ok1 = ok1 && q_vstar(g, 1, j) == 2 * (j - 1);
            for (int j = 3; j <= m; ++j) {
                ok2 = ok2 && q_vstar(g, 2, j) == 2 * (j - 2) * (j - 1);
                ok3 = ok3 && q_vstar(g, 2, j) == q_vstar(g, 2, j - 1) +
                                                     q_vstar(g, 1, j - 1) +
                                                     q_vstar(g, 1, j) - 2;
            }
        }
        b.add("x-pair closed form row 1", ok1);
        b.add("x-pair closed form row 2", ok2);
        b.add("x-pair three-term identity", ok3);
    }

    // The pair-count recurrence on the x-points, both branches.
    {
        bool ok = true;
        for (int m = 4; m <= 8 && ok; ++m) {
            PathGraph g = build_dsbar_graph(m);
            for (int i = 2; i <= m && ok; ++i)
                for (int j = i + 1; j <= m && ok; ++j) {
                    BigInt want = q_vstar(g, i - 1, j - 1) + q_vstar(g, i, j - 1) +
                                  q_vstar(g, i - 1, j) + ((i % 2 == 1) ? 2 : -2);
                    ok = q_vstar(g, i, j) == want;
                }
        }
        b.add("x-pair recurrence (m<=8)", ok);
    }

    // Splitting a source's paths through its two neighbors.
    {
        bool ok = true;
        for (int n = 4; n <= 7 && ok; ++n) {
            PathGraph g = build_ds_graph(n);
            for (int i = 3; i <= n && ok; ++i) {
                GridPoint u{-i, i - n - 1};
                GridPoint x_lo{-(i - 2), (i - 2) - n + 1};  // E neighbor of u_i
                GridPoint x_hi{-(i - 1), (i - 1) - n + 1};  // NE neighbor
                std::vector<BigInt> a = path_counts(g, u);
                std::vector<BigInt> c = path_counts(g, x_lo);
                std::vector<BigInt> d = path_counts(g, x_hi);
                for (std::size_t l = 0; l < a.size() && ok; ++l)
                    ok = a[l] == c[l] + d[l];
            }
        }
        b.add("source path partition identity (n<=7)", ok);
    }
}

void property_checks(Battery& b) {
    // Expansion agrees with elimination, and pf^2 = det, on random skew
    // matrices of small even order.
    {
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<int> entry(-9, 9);
        bool ok = true;
        for (int trial = 0; trial < 40 && ok; ++trial) {
            int order = 2 + 2 * (trial % 5);
            IntSkewMatrix m(order);
            for (int i = 1; i <= order; ++i)
                for (int j = i + 1; j <= order; ++j) m.set(i, j, entry(rng));
            BigInt pe = pf_expand(m), pl = pf_eliminate(m);
            ok = pe == pl;
            if (ok) {
                std::vector<std::vector<BigInt>> dense(static_cast<std::size_t>(order));
                for (int i = 1; i <= order; ++i)
                    for (int j = 1; j <= order; ++j)
                        dense[static_cast<std::size_t>(i - 1)].push_back(m.get(i, j));
                ok = pe * pe == det_exact(dense);
            }
        }
        b.add("pfaffian engines agree, pf^2 = det (random)", ok);
    }

    // Oracle anchors at desk scale.
    b.expectEqBig("tilings(2, all)", enumerate_tilings(2, TilingClass::All), BigInt(8));
    b.expectEqBig("tilings(3, diagonal)",
                  enumerate_tilings(3, TilingClass::DiagSymmetric), BigInt(24));
    b.expectEqBig("tilings(4, off-diagonal)",
                  enumerate_tilings(4, TilingClass::OffDiagSymmetric), BigInt(12));
    b.expectEqBig("families = pf(A_[4])",
                  count_families(build_ds_graph(4), {1, 2, 3, 4}, FamilyMode::Paired),
                  pf_eliminate(build_A(4)));
    b.expectEqBig("odd source set has no paired family",
                  count_families(build_ds_graph(4), {1, 2, 3}, FamilyMode::Paired),
                  BigInt(0));

    // The generalized matrix at k = t = 2 is the plain matrix.
    {
        PolySkewMatrix akt = build_A_kt(8);
        IntSkewMatrix a = build_A(8);
        bool ok = true;
        for (int i = 1; i <= 8 && ok; ++i)
            for (int j = i + 1; j <= 8 && ok; ++j)
                ok = akt.upper(i, j).eval(2, 2) == a.upper(i, j);
        b.add("A(2,2) = A", ok);
    }

    // Three constructions of A.
    {
        IntSkewMatrix r = build_A(8, BuildMethod::Recurrence);
        IntSkewMatrix s = build_A(8, BuildMethod::SchroderSum);
        IntSkewMatrix g = build_A(8, BuildMethod::Graph);
        b.add("A construction triple agreement (n=8)", r == s && s == g);
    }
}

}  // namespace

CheckReport verify_tables() {
    Battery b;
    table_checks(b);
    return b.report;
}

CheckReport selfcheck(bool corrupt) {
    Battery b;
    b.corrupt_one = corrupt;
    table_checks(b);
    property_checks(b);
    return b.report;
}

}  // namespace pftil
