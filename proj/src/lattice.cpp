#include "pftil/lattice.hpp"

#include <algorithm>

namespace pftil {

// ---------------------------------------------------------------------------
// AztecRegion
// ---------------------------------------------------------------------------

AztecRegion::AztecRegion(int n, IndexSet kept) : n_(n), kept_(std::move(kept)) {
    if (n < 1) throw DomainError("region order must be >= 1");
    if (kept_.max() > n) throw DomainError("kept labels must lie in [n]");
    std::set<int> keep(kept_.begin(), kept_.end());
    for (int l = 1; l <= n; ++l) {
        if (keep.count(l)) continue;
        Square sw = swSquare(l);
        removed_.insert(sw);
        removed_.insert(mirror(sw));
    }
}

bool AztecRegion::inFullDiamond(Square s) const {
    return std::abs(2 * s.a + 1) + std::abs(2 * s.b + 1) <= 2 * n_;
}

bool AztecRegion::contains(Square s) const {
    return inFullDiamond(s) && removed_.count(s) == 0;
}

std::vector<Square> AztecRegion::squares() const {
    std::vector<Square> out;
    for (int b = -n_; b <= n_ - 1; ++b)
        for (int a = -n_; a <= n_ - 1; ++a)
            if (contains({a, b})) out.push_back({a, b});
    std::sort(out.begin(), out.end(),
              [](Square x, Square y) { return std::pair(x.b, x.a) < std::pair(y.b, y.a); });
    return out;
}

// ---------------------------------------------------------------------------
// DominoTiling
// ---------------------------------------------------------------------------

namespace {
DominoTiling::Domino normalize(Square s1, Square s2) {
    if (s2 < s1) std::swap(s1, s2);
    return {s1, s2};
}

bool adjacent(Square s1, Square s2) {
    int da = std::abs(s1.a - s2.a), db = std::abs(s1.b - s2.b);
    return da + db == 1;
}
}  // namespace

DominoTiling::DominoTiling(AztecRegion region, std::vector<Domino> dominoes)
    : region_(std::move(region)), dominoes_(std::move(dominoes)) {
    std::size_t covered = 0;
    for (std::size_t k = 0; k < dominoes_.size(); ++k) {
        Domino& d = dominoes_[k];
        d = normalize(d.first, d.second);
        if (!adjacent(d.first, d.second))
            throw InvalidTilingError("domino squares are not adjacent");
        for (Square s : {d.first, d.second}) {
            if (!region_.contains(s))
                throw InvalidTilingError("domino leaves the region");
            if (!owner_.emplace(s, k).second)
                throw InvalidTilingError("overlapping dominoes");
            ++covered;
        }
    }
    if (covered != region_.squares().size())
        throw InvalidTilingError("tiling does not cover the region");
    std::sort(dominoes_.begin(), dominoes_.end());
    owner_.clear();
    for (std::size_t k = 0; k < dominoes_.size(); ++k) {
        owner_.emplace(dominoes_[k].first, k);
        owner_.emplace(dominoes_[k].second, k);
    }
}

DominoTiling::Domino DominoTiling::dominoAt(Square s) const {
    auto it = owner_.find(s);
    if (it == owner_.end()) throw InvalidTilingError("square not covered");
    return dominoes_[it->second];
}

bool DominoTiling::isDiagonallySymmetric() const {
    for (const Domino& d : dominoes_) {
        Domino m = normalize(AztecRegion::mirror(d.first), AztecRegion::mirror(d.second));
        if (!std::binary_search(dominoes_.begin(), dominoes_.end(), m)) return false;
    }
    return true;
}

std::vector<int> DominoTiling::cellAssignments() const {
    const int n = region_.n();
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        // Cell i spans columns -1,0 and rows 2i-2-n, 2i-1-n.
        std::set<Square> cell;
        for (int a : {-1, 0})
            for (int b : {2 * i - 2 - n, 2 * i - 1 - n})
                if (region_.contains({a, b})) cell.insert({a, b});
        int complete = 0;
        for (const Domino& d : dominoes_)
            if (cell.count(d.first) && cell.count(d.second)) ++complete;
        out.push_back(complete - 1);
    }
    return out;
}

bool DominoTiling::isOffDiagonallySymmetric() const {
    if (!isDiagonallySymmetric()) return false;
    for (int v : cellAssignments())
        if (v != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exhaustive tiling enumeration
// ---------------------------------------------------------------------------

namespace {

struct TilingSearch {
    const AztecRegion& region;
    std::vector<Square> squares;           // (b,a) order
    std::map<Square, std::size_t> index;
    std::vector<bool> covered;
    std::vector<DominoTiling::Domino> placed;
    TilingClass cls;
    const std::function<void(const DominoTiling&)>* visit;
    BigInt count = 0;

    TilingSearch(const AztecRegion& r, TilingClass c,
                 const std::function<void(const DominoTiling&)>* v)
        : region(r), squares(r.squares()), covered(squares.size(), false), cls(c),
          visit(v) {
        for (std::size_t k = 0; k < squares.size(); ++k) index.emplace(squares[k], k);
    }

    bool freeSquare(Square s) const {
        auto it = index.find(s);
        return it != index.end() && !covered[it->second];
    }

    void place(Square s1, Square s2, std::size_t from) {
        covered[index.at(s1)] = true;
        covered[index.at(s2)] = true;
        placed.emplace_back(s1, s2);
        run(from);
        placed.pop_back();
        covered[index.at(s1)] = false;
        covered[index.at(s2)] = false;
    }

    void run(std::size_t from) {
        while (from < squares.size() && covered[from]) ++from;
        if (from == squares.size()) {
            DominoTiling t(region, placed);
            bool ok = true;
            if (cls == TilingClass::DiagSymmetric)
                ok = t.isDiagonallySymmetric();
            else if (cls == TilingClass::OffDiagSymmetric)
                ok = t.isOffDiagonallySymmetric();
            if (ok) {
                ++count;
                if (visit) (*visit)(t);
            }
            return;
        }
        Square s = squares[from];
        // Everything below and left of the first empty square is covered, so
        // the two candidates are its right and top neighbors.
        if (freeSquare({s.a + 1, s.b})) place(s, {s.a + 1, s.b}, from);
        if (freeSquare({s.a, s.b + 1})) place(s, {s.a, s.b + 1}, from);
    }
};

}  // namespace

BigInt enumerate_tilings(int n, TilingClass cls, const IndexSet& kept,
                         const std::function<void(const DominoTiling&)>* visit) {
    AztecRegion region(n, kept);
    TilingSearch search(region, cls, visit);
    search.run(0);
    return search.count;
}

BigInt enumerate_tilings(int n, TilingClass cls) {
    return enumerate_tilings(n, cls, IndexSet::full(n), nullptr);
}

// ---------------------------------------------------------------------------
// Path graphs
// ---------------------------------------------------------------------------

int PathGraph::vertexId(GridPoint p) const {
    auto it = id_.find(p);
    if (it == id_.end())
        throw VertexNotInGraphError("no path vertex at (" + std::to_string(p.a) + "," +
                                    std::to_string(p.b) + ")");
    return it->second;
}

int PathGraph::source(int label) const {
    if (label < 1 || label > sourceCount())
        throw IndexError("source label " + std::to_string(label) + " out of range");
    return sources_[static_cast<std::size_t>(label - 1)];
}

int PathGraph::target(int label) const {
    if (label < 1 || label > targetCount())
        throw IndexError("target label " + std::to_string(label) + " out of range");
    return targets_[static_cast<std::size_t>(label - 1)];
}

namespace {

struct GraphParts {
    std::vector<GridPoint> pts;
    std::map<GridPoint, int> id;
    std::vector<std::vector<PathGraph::Edge>> adj;
    std::vector<int> sources;
    std::vector<int> targets;
    std::vector<int> target_label;
};

// Shared scaffolding: index the point set (sorted by (a,b), which is a
// topological order since every step increases a) and add the realizable
// steps.  An edge exists exactly when the domino it encodes fits in the
// undented region and its far endpoint is a vertex.
GraphParts finish_graph(const AztecRegion& region, std::vector<GridPoint> pts,
                        const std::vector<GridPoint>& sources,
                        const std::vector<GridPoint>& targets) {
    std::sort(pts.begin(), pts.end());
    std::map<GridPoint, int> id;
    for (std::size_t k = 0; k < pts.size(); ++k) id.emplace(pts[k], static_cast<int>(k));

    std::vector<std::vector<PathGraph::Edge>> adj(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const GridPoint p = pts[k];
        auto try_edge = [&](Step step, Square s2, GridPoint to) {
            if (!region.contains({p.a, p.b}) || !region.contains(s2)) return;
            auto it = id.find(to);
            if (it == id.end()) return;
            adj[k].push_back({step, it->second});
        };
        try_edge(Step::E, {p.a + 1, p.b}, {p.a + 2, p.b});
        try_edge(Step::SE, {p.a, p.b - 1}, {p.a + 1, p.b - 1});
        try_edge(Step::NE, {p.a, p.b + 1}, {p.a + 1, p.b + 1});
    }

    GraphParts parts;
    for (GridPoint s : sources) parts.sources.push_back(id.at(s));
    parts.target_label.assign(pts.size(), 0);
    for (std::size_t k = 0; k < targets.size(); ++k) {
        int v = id.at(targets[k]);
        parts.targets.push_back(v);
        parts.target_label[static_cast<std::size_t>(v)] = static_cast<int>(k) + 1;
    }
    parts.pts = std::move(pts);
    parts.id = std::move(id);
    parts.adj = std::move(adj);
    return parts;
}

}  // namespace

PathGraph build_ad_graph(int n) {
    if (n < 1) throw DomainError("graph order must be >= 1");
    AztecRegion region(n);
    std::vector<GridPoint> pts;
    std::vector<GridPoint> exits;
    for (int a = -n; a <= n; ++a) {
        for (int b = -n - 1; b <= n; ++b) {
            if (!region.isBlack({a, b})) continue;
            const bool inside = region.contains({a, b});
            const bool touches = region.contains({a - 1, b});
            if (!inside && !touches) continue;
            pts.push_back({a, b});
            if (!inside) exits.push_back({a, b});  // paths leave on the SE side here
        }
    }
    std::sort(exits.begin(), exits.end(),
              [](GridPoint x, GridPoint y) { return x.b < y.b; });
    std::vector<GridPoint> sources;
    for (int i = 1; i <= n; ++i) sources.push_back({-i, i - n - 1});

    GraphParts parts = finish_graph(region, std::move(pts), sources, exits);
    PathGraph g;
    g.kind_ = PathGraph::Kind::Full;
    g.order_ = n;
    g.points_ = std::move(parts.pts);
    g.id_ = std::move(parts.id);
    g.adj_ = std::move(parts.adj);
    g.sources_ = std::move(parts.sources);
    g.targets_ = std::move(parts.targets);
    g.target_label_ = std::move(parts.target_label);
    return g;
}

namespace {

// The half graph's 2n target points: v_{2i} on the diagonal column a = 0 and
// v_{2i-1} one unit left of it, interleaved bottom to top.
std::vector<GridPoint> half_targets(int n, const std::vector<GridPoint>& pts) {
    std::vector<GridPoint> col0, colm1;
    for (GridPoint p : pts) {
        if (p.a == 0) col0.push_back(p);
        if (p.a == -1) colm1.push_back(p);
    }
    auto by_b = [](GridPoint x, GridPoint y) { return x.b < y.b; };
    std::sort(col0.begin(), col0.end(), by_b);
    std::sort(colm1.begin(), colm1.end(), by_b);
    std::vector<GridPoint> targets;
    for (std::size_t i = 0; i < col0.size(); ++i) {
        targets.push_back(colm1[i]);
        targets.push_back(col0[i]);
    }
    return targets;
}

}  // namespace

PathGraph build_ds_graph(int n) {
    if (n < 1) throw DomainError("graph order must be >= 1");
    AztecRegion region(n);
    std::vector<GridPoint> pts;
    for (int a = -n; a <= 0; ++a)
        for (int b = -n - 1; b <= n; ++b)
            if (region.isBlack({a, b}) && region.contains({a, b})) pts.push_back({a, b});

    std::vector<GridPoint> sources;
    for (int i = 1; i <= n; ++i) sources.push_back({-i, i - n - 1});

    GraphParts parts = finish_graph(region, pts, sources, half_targets(n, pts));
    PathGraph g;
    g.kind_ = PathGraph::Kind::Half;
    g.order_ = n;
    g.points_ = std::move(parts.pts);
    g.id_ = std::move(parts.id);
    g.adj_ = std::move(parts.adj);
    g.sources_ = std::move(parts.sources);
    g.targets_ = std::move(parts.targets);
    g.target_label_ = std::move(parts.target_label);
    return g;
}

PathGraph build_dsbar_graph(int m) {
    if (m < 1) throw DomainError("graph order must be >= 1");
    const int n = m + 1;
    AztecRegion region(n);

    // Delete the u_i and v_2 from DS(m+1); what is left is the augmented
    // half graph of order m with x-points along the new SW boundary.
    std::set<GridPoint> deleted;
    for (int i = 1; i <= n; ++i) deleted.insert({-i, i - n - 1});
    deleted.insert({0, 1 - n});  // v_2

    std::vector<GridPoint> pts;
    for (int a = -n; a <= 0; ++a)
        for (int b = -n - 1; b <= n; ++b) {
            GridPoint p{a, b};
            if (region.isBlack({a, b}) && region.contains({a, b}) && !deleted.count(p))
                pts.push_back(p);
        }

    std::vector<GridPoint> sources;
    for (int j = 1; j <= m; ++j) sources.push_back({-j, j - m});

    GraphParts parts = finish_graph(region, pts, sources, half_targets(m, pts));
    PathGraph g;
    g.kind_ = PathGraph::Kind::HalfAux;
    g.order_ = m;
    g.points_ = std::move(parts.pts);
    g.id_ = std::move(parts.id);
    g.adj_ = std::move(parts.adj);
    g.sources_ = std::move(parts.sources);
    g.targets_ = std::move(parts.targets);
    g.target_label_ = std::move(parts.target_label);
    return g;
}

// ---------------------------------------------------------------------------
// Path counting
// ---------------------------------------------------------------------------

std::vector<BigInt> path_counts_from(const PathGraph& g, int vertex) {
    if (vertex < 0 || vertex >= g.vertexCount())
        throw VertexNotInGraphError("vertex id out of range");
    std::vector<BigInt> ways(static_cast<std::size_t>(g.vertexCount()), 0);
    ways[static_cast<std::size_t>(vertex)] = 1;
    for (int v = vertex; v < g.vertexCount(); ++v) {
        if (ways[static_cast<std::size_t>(v)] == 0) continue;
        for (const auto& e : g.edgesFrom(v))
            ways[static_cast<std::size_t>(e.to)] += ways[static_cast<std::size_t>(v)];
    }
    std::vector<BigInt> counts;
    counts.reserve(static_cast<std::size_t>(g.targetCount()));
    for (int l = 1; l <= g.targetCount(); ++l)
        counts.push_back(ways[static_cast<std::size_t>(g.target(l))]);
    return counts;
}

std::vector<BigInt> path_counts(const PathGraph& g, GridPoint from) {
    return path_counts_from(g, g.vertexId(from));
}

BigInt total_path_count(const PathGraph& g, int vertex) {
    BigInt acc = 0;
    for (const BigInt& c : path_counts_from(g, vertex)) acc += c;
    return acc;
}

// ---------------------------------------------------------------------------
// Non-intersecting family enumeration
// ---------------------------------------------------------------------------

namespace {

struct FamilySearch {
    const PathGraph& g;
    const std::vector<int>& labels;
    FamilyMode mode;
    std::vector<bool> used;
    Family current;
    Path path;
    const std::function<void(const Family&)>& emit;

    FamilySearch(const PathGraph& gg, const std::vector<int>& ll, FamilyMode mm,
                 const std::function<void(const Family&)>& e)
        : g(gg), labels(ll), mode(mm),
          used(static_cast<std::size_t>(gg.vertexCount()), false), emit(e) {}

    bool pairedOk() const {
        std::vector<int> hit(static_cast<std::size_t>(g.targetCount()) + 1, 0);
        for (const Path& p : current) hit[static_cast<std::size_t>(g.targetLabelOf(p.back()))] = 1;
        for (int l = 1; l + 1 <= g.targetCount(); l += 2)
            if (hit[static_cast<std::size_t>(l)] !=
                hit[static_cast<std::size_t>(l + 1)])
                return false;
        return true;
    }

    void nextSource(std::size_t idx) {
        if (idx == labels.size()) {
            if (mode == FamilyMode::Free || pairedOk()) emit(current);
            return;
        }
        int s = g.source(labels[idx]);
        if (used[static_cast<std::size_t>(s)]) return;  // another path runs through it
        extend(s, idx);
    }

    void extend(int v, std::size_t idx) {
        used[static_cast<std::size_t>(v)] = true;
        path.push_back(v);
        if (g.isTarget(v)) {
            current.push_back(path);
            Path saved;
            saved.swap(path);
            nextSource(idx + 1);
            saved.swap(path);
            current.pop_back();
        }
        for (const auto& e : g.edgesFrom(v))
            if (!used[static_cast<std::size_t>(e.to)]) extend(e.to, idx);
        path.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
};

}  // namespace

std::vector<Family> enumerate_families(const PathGraph& g,
                                       const std::vector<int>& source_labels,
                                       FamilyMode mode) {
    if (mode == FamilyMode::Paired && g.targetCount() % 2 != 0)
        throw DomainError("paired mode needs an even number of targets");
    std::vector<Family> out;
    std::function<void(const Family&)> emit = [&](const Family& f) { out.push_back(f); };
    FamilySearch search(g, source_labels, mode, emit);
    search.nextSource(0);
    return out;
}

BigInt count_families(const PathGraph& g, const std::vector<int>& source_labels,
                      FamilyMode mode) {
    if (mode == FamilyMode::Paired && g.targetCount() % 2 != 0)
        throw DomainError("paired mode needs an even number of targets");
    BigInt count = 0;
    std::function<void(const Family&)> emit = [&](const Family&) { ++count; };
    FamilySearch search(g, source_labels, mode, emit);
    search.nextSource(0);
    return count;
}

// ---------------------------------------------------------------------------
// Tiling <-> path bijections
// ---------------------------------------------------------------------------

namespace {

// The step encoded by the domino covering the black square at vertex p,
// or nullopt when the domino is horizontal with the black square on the
// right (no step; such squares lie on no path).
std::optional<Step> step_of_domino(const DominoTiling& t, GridPoint p) {
    auto [s1, s2] = t.dominoAt({p.a, p.b});
    if (s1.b == s2.b) {  // horizontal
        if (s1.a == p.a) return Step::E;  // black on the left
        return std::nullopt;              // black on the right: no step
    }
    if (s2.b == p.b) return Step::SE;  // black on top
    return Step::NE;                   // black on the bottom
}

GridPoint step_to(GridPoint p, Step s) {
    switch (s) {
        case Step::E: return {p.a + 2, p.b};
        case Step::SE: return {p.a + 1, p.b - 1};
        case Step::NE: return {p.a + 1, p.b + 1};
    }
    throw Error("unreachable");
}

DominoTiling::Domino domino_of_step(GridPoint p, Step s) {
    switch (s) {
        case Step::E: return {{p.a, p.b}, {p.a + 1, p.b}};
        case Step::SE: return {{p.a, p.b - 1}, {p.a, p.b}};
        case Step::NE: return {{p.a, p.b}, {p.a, p.b + 1}};
    }
    throw Error("unreachable");
}

}  // namespace

Family full_paths_of_tiling(const PathGraph& full, const DominoTiling& t) {
    if (full.kind() != PathGraph::Kind::Full)
        throw DomainError("full-graph bijection needs the full graph");
    const AztecRegion& region = t.region();
    Family f;
    for (int i : region.kept()) {
        GridPoint p{-i, i - region.n() - 1};
        Path path{full.vertexId(p)};
        while (region.contains({p.a, p.b})) {
            auto s = step_of_domino(t, p);
            if (!s)
                throw InvalidTilingError("path stalls inside the region");
            p = step_to(p, *s);
            path.push_back(full.vertexId(p));
        }
        f.push_back(std::move(path));
    }
    return f;
}

DominoTiling tiling_of_full_paths(const PathGraph& full, const IndexSet& kept,
                                  const Family& f) {
    if (full.kind() != PathGraph::Kind::Full)
        throw DomainError("full-graph bijection needs the full graph");
    AztecRegion region(full.order(), kept);
    std::vector<DominoTiling::Domino> dominoes;
    std::set<Square> covered;
    auto add = [&](DominoTiling::Domino d) {
        dominoes.push_back(d);
        covered.insert(d.first);
        covered.insert(d.second);
    };
    for (const Path& path : f)
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            GridPoint p = full.point(path[k]);
            GridPoint q = full.point(path[k + 1]);
            Step s = q.a == p.a + 2 ? Step::E : (q.b == p.b - 1 ? Step::SE : Step::NE);
            add(domino_of_step(p, s));
        }
    // Black squares not on any path take the horizontal domino whose black
    // square is on the right; the whites in between are then all used up.
    for (Square s : region.squares())
        if (region.isBlack(s) && !covered.count(s)) add({{s.a - 1, s.b}, s});
    return DominoTiling(region, dominoes);
}

Family half_paths_of_tiling(const PathGraph& half, const DominoTiling& t) {
    if (half.kind() != PathGraph::Kind::Half)
        throw DomainError("half-graph bijection needs the half graph");
    const AztecRegion& region = t.region();
    Family f;
    for (int i : region.kept()) {
        GridPoint p{-i, i - region.n() - 1};
        Path path{half.vertexId(p)};
        while (p.a < 0) {
            auto [s1, s2] = t.dominoAt({p.a, p.b});
            if (s1.b == s2.b && s1.a == p.a - 1)
                throw InvalidTilingError("path stalls inside the half region");
            if (s1.b == s2.b && p.a == -1) break;  // domino astride the diagonal
            auto s = step_of_domino(t, p);
            p = step_to(p, *s);
            path.push_back(half.vertexId(p));
        }
        f.push_back(std::move(path));
    }
    return f;
}

DominoTiling tiling_of_half_paths(const PathGraph& half, const IndexSet& kept,
                                  const Family& f) {
    if (half.kind() != PathGraph::Kind::Half)
        throw DomainError("half-graph bijection needs the half graph");
    AztecRegion region(half.order(), kept);
    std::set<DominoTiling::Domino> left;  // dominoes strictly left of the diagonal
    std::vector<DominoTiling::Domino> dominoes;
    std::set<Square> covered;
    auto add = [&](DominoTiling::Domino d) {
        dominoes.push_back(d);
        covered.insert(d.first);
        covered.insert(d.second);
    };
    for (const Path& path : f) {
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            GridPoint p = half.point(path[k]);
            GridPoint q = half.point(path[k + 1]);
            Step s = q.a == p.a + 2 ? Step::E : (q.b == p.b - 1 ? Step::SE : Step::NE);
            left.insert(domino_of_step(p, s));
        }
        GridPoint end = half.point(path.back());
        if (end.a == -1)  // odd endpoint: horizontal domino astride the diagonal
            add({{-1, end.b}, {0, end.b}});
    }
    for (const auto& d : left) {
        add(d);
        add(normalize(AztecRegion::mirror(d.first), AztecRegion::mirror(d.second)));
    }
    for (Square s : region.squares())
        if (region.isBlack(s) && !covered.count(s)) {
            if (covered.count({s.a - 1, s.b}))
                throw InvalidTilingError("family does not extend to a tiling");
            add({{s.a - 1, s.b}, s});
        }
    return DominoTiling(region, dominoes);
}

}  // namespace pftil
