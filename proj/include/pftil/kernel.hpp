#pragma once

#include "pftil/lattice.hpp"
#include "pftil/skew.hpp"

namespace pftil {

// Q_V(u_i,u_j): the number of pairs of non-intersecting paths from the
// i-th and j-th sources of g to any two distinct targets, as the double
// sum over target pairs (k,l), k < l, of 2x2 path-count determinants.
// Antisymmetric in (i,j); zero on the diagonal.
BigInt q_v(const PathGraph& g, int i, int j);

// Q_{V*}(u_i,u_j): as q_v but the two ending points must form one of the
// pairs v_l^* = {v_{2l-1}, v_{2l}}; the sum runs over the pairs only.
BigInt q_vstar(const PathGraph& g, int i, int j);

// Q_{V*} between two arbitrary vertices of g (lattice translation checks).
BigInt q_vstar_points(const PathGraph& g, GridPoint p, GridPoint q);

enum class BuildMethod {
    Recurrence,   // a_{1,j} = 2; interior 3-term sum; +-2 on the superdiagonal
    SchroderSum,  // a_{i,j} = 2 sum_{l=1}^{i} (-1)^{l-1} s_{i-l, j-l-1}
    Graph,        // a_{i,j} = Q_{V*}(u_i,u_j) on the half graph
};

// The skew-symmetric matrix A whose Pfaffian minors count off-diagonally
// symmetric tilings.  All three methods build the same matrix.
IntSkewMatrix build_A(int n, BuildMethod method = BuildMethod::Recurrence);

// The matrix B = [Q_V(u_i,u_j)] on the half graph of order n, whose
// Pfaffian minors count diagonally symmetric tilings.
IntSkewMatrix build_B(int n);

// Total path counts from every source of the half graph of order n; the
// phantom column used for odd-size diagonal counts.
std::vector<BigInt> phantom_column(int n);

// The two-parameter matrix A(k,t): a_{1,j} = t, interior recurrence as for
// A, and k(-1)^{i-1} in place of 2(-1)^{i-1} on the superdiagonal.  A(2,2)
// equals A.
PolySkewMatrix build_A_kt(int n);

}  // namespace pftil
