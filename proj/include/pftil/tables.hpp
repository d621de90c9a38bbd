#pragma once

#include <vector>

#include "pftil/poly.hpp"
#include "pftil/skew.hpp"

namespace pftil {

// Reference data used by the self-check battery and the golden tests.

// First nine terms 1, 1, 3, 13, 149, ... of the integer sequence o_n with
// |O(2n)| = 2^n o_{n-1} o_n.
const std::vector<BigInt>& known_o_int();

// First nine terms of the polynomial sequence o_n(k,t) with
// pf(A_[2n](k,t)) = t o_{n-1}(k,t) o_n(k,t).
const std::vector<BivariatePolynomial>& known_o_poly();

// Diagonally symmetric tiling counts |D(n)| for n = 1..7.
const std::vector<BigInt>& known_diagonal_counts();

// Diagonally and anti-diagonally symmetric counts for n = 1..8 (unused by
// the Pfaffian machinery; kept for reference output only).
const std::vector<BigInt>& known_diag_antidiag_counts();

// The 8x8 matrix B of pair counts Q_V(u_i,u_j).
const IntSkewMatrix& known_b8();

// The first eight diagonal-block values t_l of the decomposition of
// A(k,t), as num/den pairs.
const std::vector<RationalFunction>& known_t_ratios();

}  // namespace pftil
