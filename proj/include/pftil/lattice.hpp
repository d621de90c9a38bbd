#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pftil/bigint.hpp"
#include "pftil/skew.hpp"

namespace pftil {

// Unit square [a,a+1] x [b,b+1] of the square lattice.
struct Square {
    int a = 0;
    int b = 0;
    auto operator<=>(const Square&) const = default;
};

// Path vertex: the left-edge midpoint of the black unit square s(a,b),
// i.e. the geometric point (a, b + 1/2).
struct GridPoint {
    int a = 0;
    int b = 0;
    auto operator<=>(const GridPoint&) const = default;
};

enum class Step { E, SE, NE };  // (a,b) -> (a+2,b), (a+1,b-1), (a+1,b+1)

// The Aztec diamond AD(n), optionally dented: for every label l not in
// `kept`, the southwestern boundary square number l (bottom to top) and its
// mirror across the vertical diagonal are removed.
class AztecRegion {
  public:
    AztecRegion(int n, IndexSet kept);
    explicit AztecRegion(int n) : AztecRegion(n, IndexSet::full(n)) {}

    int n() const { return n_; }
    const IndexSet& kept() const { return kept_; }

    bool contains(Square s) const;
    bool isBlack(Square s) const { return mod2(s.a + s.b) == mod2(n_ - 1); }
    static Square mirror(Square s) { return {-1 - s.a, s.b}; }

    // Squares of the (dented) region sorted by (b, a).
    std::vector<Square> squares() const;

    // SW-boundary square with label l (1-based, bottom to top).
    Square swSquare(int l) const { return {-l, l - n_ - 1}; }

  private:
    static int mod2(int v) { return ((v % 2) + 2) % 2; }
    bool inFullDiamond(Square s) const;

    int n_;
    IndexSet kept_;
    std::set<Square> removed_;
};

// A set of non-overlapping dominoes covering a region exactly.
class DominoTiling {
  public:
    using Domino = std::pair<Square, Square>;  // ordered pair, first < second

    DominoTiling(AztecRegion region, std::vector<Domino> dominoes);

    const AztecRegion& region() const { return region_; }
    const std::vector<Domino>& dominoes() const { return dominoes_; }

    bool covers(Square s) const { return owner_.count(s) > 0; }
    // The domino covering s; throws InvalidTilingError if s is uncovered.
    Domino dominoAt(Square s) const;

    bool isDiagonallySymmetric() const;

    // Entries of the n cells along the vertical diagonal, bottom to top:
    // (number of complete dominoes in the cell) - 1.
    std::vector<int> cellAssignments() const;
    bool isOffDiagonallySymmetric() const;

  private:
    AztecRegion region_;
    std::vector<Domino> dominoes_;
    std::map<Square, std::size_t> owner_;
};

enum class TilingClass { All, DiagSymmetric, OffDiagSymmetric };

// Exhaustive tiling search over the (dented) region, scanning squares in
// (b,a) order and branching on the two ways to cover the first empty
// square.  Deterministic; the callback sees tilings in DFS order.
BigInt enumerate_tilings(int n, TilingClass cls, const IndexSet& kept,
                         const std::function<void(const DominoTiling&)>* visit = nullptr);
BigInt enumerate_tilings(int n, TilingClass cls);

// -------------------------------------------------------------------------
// Path graphs.
//
// Marking the left-edge midpoint of every black unit square of AD(n) and
// joining them by the realizable domino steps gives the DAG on the
// triangular lattice used throughout:
//   Full:  the whole diamond; sources u_1..u_n on the SW boundary, targets
//          w_1..w_n where the paths exit on the SE boundary.
//   Half:  columns a <= 0 only; targets v_1..v_{2n} with v_{2i} on the
//          diagonal column a=0 and v_{2i-1} on a=-1, bottom to top.
//   HalfAux: the half graph of order m+1 with the points u_i and v_2
//          deleted; sources relabeled x_1..x_m along the new SW boundary.
// -------------------------------------------------------------------------
class PathGraph {
  public:
    enum class Kind { Full, Half, HalfAux };

    struct Edge {
        Step step;
        int to;  // vertex id
    };

    Kind kind() const { return kind_; }
    int order() const { return order_; }  // n (or m for HalfAux)

    int vertexCount() const { return static_cast<int>(points_.size()); }
    const GridPoint& point(int v) const { return points_[static_cast<std::size_t>(v)]; }
    const std::vector<Edge>& edgesFrom(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    // Vertex id of a grid point; throws VertexNotInGraphError.
    int vertexId(GridPoint p) const;
    bool hasVertex(GridPoint p) const { return id_.count(p) > 0; }

    // 1-based source/target labels to vertex ids.
    int sourceCount() const { return static_cast<int>(sources_.size()); }
    int targetCount() const { return static_cast<int>(targets_.size()); }
    int source(int label) const;
    int target(int label) const;
    bool isTarget(int v) const { return target_label_[static_cast<std::size_t>(v)] != 0; }
    int targetLabelOf(int v) const { return target_label_[static_cast<std::size_t>(v)]; }

    // For HalfAux graphs the sources are the x-points.
    const std::vector<int>& xpoints() const { return sources_; }

    friend PathGraph build_ad_graph(int n);
    friend PathGraph build_ds_graph(int n);
    friend PathGraph build_dsbar_graph(int m);

  private:
    Kind kind_ = Kind::Full;
    int order_ = 0;
    std::vector<GridPoint> points_;        // topologically sorted (by a, then b)
    std::map<GridPoint, int> id_;
    std::vector<std::vector<Edge>> adj_;
    std::vector<int> sources_;             // vertex ids, label order
    std::vector<int> targets_;
    std::vector<int> target_label_;        // 0 if not a target, else 1-based label
};

PathGraph build_ad_graph(int n);
PathGraph build_ds_graph(int n);
PathGraph build_dsbar_graph(int m);

// Exact path counts from one vertex to every target, by DAG dynamic
// programming in topological order.
std::vector<BigInt> path_counts(const PathGraph& g, GridPoint from);
std::vector<BigInt> path_counts_from(const PathGraph& g, int vertex);

// Total number of paths from `vertex` to any target.
BigInt total_path_count(const PathGraph& g, int vertex);

// -------------------------------------------------------------------------
// Families of non-intersecting paths.
// -------------------------------------------------------------------------

using Path = std::vector<int>;  // vertex ids, source first
using Family = std::vector<Path>;

enum class FamilyMode {
    Free,    // endpoints are any distinct targets
    Paired,  // for every l, v_{2l-1} and v_{2l} are both used or neither
};

// All families of vertex-disjoint paths, one per listed source (1-based
// source labels), each ending at a target.  Deterministic DFS order.
std::vector<Family> enumerate_families(const PathGraph& g,
                                       const std::vector<int>& source_labels,
                                       FamilyMode mode);
BigInt count_families(const PathGraph& g, const std::vector<int>& source_labels,
                      FamilyMode mode);

// -------------------------------------------------------------------------
// Tiling <-> path bijections.
// -------------------------------------------------------------------------

// Any tiling of AD(n;I) to its family on the full graph (paths from u_i,
// i in I, to the SE exit points).
Family full_paths_of_tiling(const PathGraph& full, const DominoTiling& t);
DominoTiling tiling_of_full_paths(const PathGraph& full, const IndexSet& kept,
                                  const Family& f);

// A diagonally symmetric tiling to its family of half paths on DS(n): a
// path ends on the diagonal column at v_{2i} when the symmetric path meets
// the diagonal at that lattice point, and at v_{2i-1} when it crosses the
// diagonal through an E step (a horizontal domino astride the diagonal).
Family half_paths_of_tiling(const PathGraph& half, const DominoTiling& t);
DominoTiling tiling_of_half_paths(const PathGraph& half, const IndexSet& kept,
                                  const Family& f);

}  // namespace pftil
