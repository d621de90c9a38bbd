#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "pftil/lattice.hpp"
#include "pftil/pfaffian.hpp"
#include "pftil/sequences.hpp"

using namespace pftil;

namespace {

std::vector<BigInt> row(const PathGraph& g, int source_label) {
    return path_counts_from(g, g.source(source_label));
}

// All paths from vertex `from` ending exactly at target label `tl`.
void paths_to(const PathGraph& g, int v, int tl, Path& cur, std::vector<Path>& out) {
    cur.push_back(v);
    if (g.isTarget(v) && g.targetLabelOf(v) == tl) out.push_back(cur);
    for (const auto& e : g.edgesFrom(v)) paths_to(g, e.to, tl, cur, out);
    cur.pop_back();
}

std::vector<Path> enumerate_paths(const PathGraph& g, int from, int target_label) {
    std::vector<Path> out;
    Path cur;
    paths_to(g, from, target_label, cur, out);
    return out;
}

bool share_vertex(const Path& p, const Path& q) {
    std::set<int> s(p.begin(), p.end());
    for (int v : q)
        if (s.count(v)) return true;
    return false;
}

int interior_vertices(const PathGraph& g) {
    AztecRegion r(g.order());
    int count = 0;
    for (int v = 0; v < g.vertexCount(); ++v) {
        GridPoint p = g.point(v);
        if (r.contains({p.a, p.b})) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("full graph shape and LGV counts") {
    CHECK(lgv_det(build_ad_graph(1)) == 2);
    CHECK(lgv_det(build_ad_graph(2)) == 8);
    CHECK(lgv_det(build_ad_graph(3)) == 64);
    for (int n = 1; n <= 5; ++n) {
        PathGraph g = build_ad_graph(n);
        // One marked point per black square, plus the n exit points the
        // paths leave through on the SE side.
        CHECK(interior_vertices(g) == n * (n + 1));
        CHECK(g.vertexCount() == n * (n + 1) + n);
        CHECK(g.sourceCount() == n);
        CHECK(g.targetCount() == n);
    }
    CHECK_THROWS_AS(build_ad_graph(0), DomainError);
}

TEST_CASE("half graph path-count rows") {
    PathGraph g2 = build_ds_graph(2);
    CHECK(row(g2, 1) == std::vector<BigInt>({1, 1, 0, 0}));

    PathGraph g3 = build_ds_graph(3);
    CHECK(row(g3, 1) == std::vector<BigInt>({1, 1, 0, 0, 0, 0}));
    CHECK(row(g3, 2) == std::vector<BigInt>({0, 2, 1, 1, 0, 0}));
    CHECK(total_path_count(g3, g3.source(3)) == 10);
}

TEST_CASE("path counts from a target vertex") {
    // Exit targets of the full graph have no outgoing steps: exact indicator.
    PathGraph full = build_ad_graph(3);
    for (int l = 1; l <= full.targetCount(); ++l) {
        std::vector<BigInt> c = path_counts_from(full, full.target(l));
        for (int m = 1; m <= full.targetCount(); ++m)
            CHECK(c[static_cast<std::size_t>(m - 1)] == (m == l ? 1 : 0));
    }
    // Half-graph targets may lie on longer paths; the count at the vertex
    // itself is the single empty path.
    PathGraph g = build_ds_graph(3);
    for (int l = 1; l <= g.targetCount(); ++l)
        CHECK(path_counts_from(g, g.target(l))[static_cast<std::size_t>(l - 1)] == 1);
    CHECK_THROWS_AS(path_counts(g, GridPoint{5, 5}), VertexNotInGraphError);
}

TEST_CASE("augmented half graph reproduces the Delannoy counts") {
    PathGraph g4 = build_dsbar_graph(4);
    CHECK(row(g4, 1) == std::vector<BigInt>({1, 1, 0, 0, 0, 0, 0, 0}));
    CHECK(row(g4, 2) == std::vector<BigInt>({1, 3, 1, 1, 0, 0, 0, 0}));
    for (int m = 1; m <= 8; ++m) {
        PathGraph g = build_dsbar_graph(m);
        for (int i = 1; i <= m; ++i) {
            std::vector<BigInt> r = row(g, i);
            for (int l = 1; l <= 2 * m; ++l) {
                BigInt want = l <= 2 * i ? delannoy((2 * i - l) / 2, l / 2) : BigInt(0);
                CHECK(r[static_cast<std::size_t>(l - 1)] == want);
            }
        }
    }
}

TEST_CASE("deletion and edge-augmentation give the same graph") {
    // The SW boundary of DS(m) plus the southeast edges u_{i+1} -> u_i is
    // the deletion graph shifted one row up: check the edge sets match
    // under the translation (a,b) -> (a,b-1).
    for (int m = 2; m <= 6; ++m) {
        PathGraph bar = build_dsbar_graph(m);
        PathGraph half = build_ds_graph(m);
        std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> bar_edges,
            aug_edges;
        for (int v = 0; v < bar.vertexCount(); ++v)
            for (const auto& e : bar.edgesFrom(v)) {
                GridPoint p = bar.point(v), q = bar.point(e.to);
                bar_edges.insert({{p.a, p.b - 1}, {q.a, q.b - 1}});
            }
        for (int v = 0; v < half.vertexCount(); ++v)
            for (const auto& e : half.edgesFrom(v)) {
                GridPoint p = half.point(v), q = half.point(e.to);
                aug_edges.insert({{p.a, p.b}, {q.a, q.b}});
            }
        for (int i = 1; i < m; ++i) {
            GridPoint hi = half.point(half.source(i + 1));
            GridPoint lo = half.point(half.source(i));
            aug_edges.insert({{hi.a, hi.b}, {lo.a, lo.b}});
        }
        CHECK(bar_edges == aug_edges);
    }
}

TEST_CASE("family counts on small graphs") {
    CHECK(count_families(build_ds_graph(2), {1, 2}, FamilyMode::Paired) == 2);
    CHECK(count_families(build_ds_graph(3), {1, 2, 3}, FamilyMode::Paired) == 0);
    CHECK(count_families(build_ds_graph(2), {1, 2}, FamilyMode::Free) == 6);
}

TEST_CASE("exhaustive tiling counts") {
    CHECK(enumerate_tilings(2, TilingClass::All) == 8);
    CHECK(enumerate_tilings(2, TilingClass::OffDiagSymmetric) == 2);
    CHECK(enumerate_tilings(4, TilingClass::DiagSymmetric) == 132);
    for (int n = 1; n <= 4; ++n)
        CHECK(enumerate_tilings(n, TilingClass::All) == aztec_total(n));
}

TEST_CASE("tiling counts match family counts in all three classes") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> all;
        for (int i = 1; i <= n; ++i) all.push_back(i);
        CHECK(enumerate_tilings(n, TilingClass::All) ==
              count_families(build_ad_graph(n), all, FamilyMode::Free));
        CHECK(enumerate_tilings(n, TilingClass::DiagSymmetric) ==
              count_families(build_ds_graph(n), all, FamilyMode::Free));
        CHECK(enumerate_tilings(n, TilingClass::OffDiagSymmetric) ==
              count_families(build_ds_graph(n), all, FamilyMode::Paired));
    }
}

TEST_CASE("full-graph roundtrip over every tiling") {
    for (int n = 1; n <= 3; ++n) {
        PathGraph g = build_ad_graph(n);
        IndexSet kept = IndexSet::full(n);
        std::function<void(const DominoTiling&)> visit = [&](const DominoTiling& t) {
            Family f = full_paths_of_tiling(g, t);
            DominoTiling back = tiling_of_full_paths(g, kept, f);
            CHECK(back.dominoes() == t.dominoes());
        };
        enumerate_tilings(n, TilingClass::All, kept, &visit);
    }
}

TEST_CASE("the brick tiling maps to all-E paths") {
    PathGraph g = build_ad_graph(2);
    std::vector<DominoTiling::Domino> bricks = {
        {{-1, 1}, {0, 1}},  {{-2, 0}, {-1, 0}},  {{0, 0}, {1, 0}},
        {{-2, -1}, {-1, -1}}, {{0, -1}, {1, -1}}, {{-1, -2}, {0, -2}},
    };
    DominoTiling t(AztecRegion(2), bricks);
    Family f = full_paths_of_tiling(g, t);
    for (const Path& p : f)
        for (std::size_t s = 0; s + 1 < p.size(); ++s)
            CHECK(g.point(p[s + 1]).a == g.point(p[s]).a + 2);
}

TEST_CASE("half-graph roundtrip over symmetric tilings, with and without dents") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<IndexSet> keeps = {IndexSet::full(n)};
        if (n == 3) keeps.push_back(IndexSet({1, 3}));
        if (n == 4) keeps.push_back(IndexSet({2, 4}));
        if (n >= 2) keeps.push_back(IndexSet({n}));
        for (const IndexSet& kept : keeps) {
            PathGraph g = build_ds_graph(n);
            std::function<void(const DominoTiling&)> visit = [&](const DominoTiling& t) {
                Family f = half_paths_of_tiling(g, t);
                DominoTiling back = tiling_of_half_paths(g, kept, f);
                CHECK(back.dominoes() == t.dominoes());
            };
            enumerate_tilings(n, TilingClass::DiagSymmetric, kept, &visit);
        }
    }
}

TEST_CASE("endpoint parity matches the straddling-domino rule") {
    for (int n = 2; n <= 4; ++n) {
        PathGraph g = build_ds_graph(n);
        std::function<void(const DominoTiling&)> visit = [&](const DominoTiling& t) {
            Family f = half_paths_of_tiling(g, t);
            for (const Path& p : f) {
                GridPoint end = g.point(p.back());
                if (end.a == -1) {
                    auto d = t.dominoAt({-1, end.b});
                    CHECK(d.second == Square{0, end.b});  // astride the diagonal
                } else {
                    CHECK(end.a == 0);
                }
            }
        };
        enumerate_tilings(n, TilingClass::DiagSymmetric, IndexSet::full(n), &visit);
    }
}

TEST_CASE("cell assignment zero iff both-or-neither endpoints are used") {
    for (int n = 2; n <= 4; ++n) {
        PathGraph g = build_ds_graph(n);
        std::function<void(const DominoTiling&)> visit = [&](const DominoTiling& t) {
            Family f = half_paths_of_tiling(g, t);
            std::set<int> used;
            for (const Path& p : f) used.insert(g.targetLabelOf(p.back()));
            std::vector<int> cells = t.cellAssignments();
            for (int i = 1; i <= n; ++i) {
                int hits = static_cast<int>(used.count(2 * i - 1)) +
                           static_cast<int>(used.count(2 * i));
                CHECK((cells[static_cast<std::size_t>(i - 1)] == 0) == (hits != 1));
            }
        };
        enumerate_tilings(n, TilingClass::DiagSymmetric, IndexSet::full(n), &visit);
    }
}

TEST_CASE("explicit cell assignments") {
    // Two horizontal dominoes stacked in a diagonal cell score +1.
    std::vector<DominoTiling::Domino> stacked = {
        {{-1, -2}, {0, -2}}, {{-1, -1}, {0, -1}}, {{-2, -1}, {-2, 0}},
        {{1, -1}, {1, 0}},   {{-1, 0}, {0, 0}},   {{-1, 1}, {0, 1}},
    };
    DominoTiling t(AztecRegion(2), stacked);
    CHECK(t.cellAssignments() == std::vector<int>({1, 1}));
    CHECK(t.isDiagonallySymmetric());
    CHECK_FALSE(t.isOffDiagonallySymmetric());

    // The brick tiling keeps exactly one complete domino per cell.
    std::vector<DominoTiling::Domino> bricks = {
        {{-1, 1}, {0, 1}},  {{-2, 0}, {-1, 0}},  {{0, 0}, {1, 0}},
        {{-2, -1}, {-1, -1}}, {{0, -1}, {1, -1}}, {{-1, -2}, {0, -2}},
    };
    DominoTiling brick(AztecRegion(2), bricks);
    CHECK(brick.cellAssignments() == std::vector<int>({0, 0}));
    CHECK(brick.isOffDiagonallySymmetric());
}

TEST_CASE("invalid tilings are rejected") {
    CHECK_THROWS_AS(DominoTiling(AztecRegion(1), {}), InvalidTilingError);
    CHECK_THROWS_AS(DominoTiling(AztecRegion(1), {{{-1, 0}, {0, 0}},
                                                  {{-1, 0}, {-1, -1}},
                                                  {{0, -1}, {-1, -1}}}),
                    InvalidTilingError);
    CHECK_THROWS_AS(DominoTiling(AztecRegion(1), {{{-1, 0}, {0, 1}}}), InvalidTilingError);
}

TEST_CASE("compatibility: crossing path pairs always intersect") {
    for (int n = 2; n <= 4; ++n) {
        PathGraph g = build_ds_graph(n);
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int l = 1; l < 2 * n; ++l)
                    for (int k = l + 1; k <= 2 * n; ++k) {
                        // p: u_i -> v_k, q: u_j -> v_l with i<j, k>l.
                        auto ps = enumerate_paths(g, g.source(i), k);
                        auto qs = enumerate_paths(g, g.source(j), l);
                        for (const Path& p : ps)
                            for (const Path& q : qs) CHECK(share_vertex(p, q));
                    }
    }
}

TEST_CASE("dented regions remove the labeled boundary squares symmetrically") {
    AztecRegion r(3, IndexSet({1, 3}));
    CHECK_FALSE(r.contains(r.swSquare(2)));
    CHECK_FALSE(r.contains(AztecRegion::mirror(r.swSquare(2))));
    CHECK(r.contains(r.swSquare(1)));
    CHECK(r.contains(r.swSquare(3)));
    CHECK(r.squares().size() == 24 - 2);
    CHECK_THROWS_AS(AztecRegion(3, IndexSet({4})), DomainError);
}
