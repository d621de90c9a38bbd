// Test-only oracles, kept independent of the library's computation paths:
// Pfaffians by direct perfect-matching summation, determinants by
// permutation expansion, Schroder counts by exhaustive path walking.
#pragma once

#include <random>
#include <vector>

#include "pftil/poly.hpp"
#include "pftil/skew.hpp"

namespace pftil::testing {

// Sign of the permutation (1..2n) -> (s_1..s_2n) by inversion count.
inline int permutation_sign(const std::vector<int>& s) {
    int inv = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// pf(A) = sum over perfect matchings sigma, with sigma_{2i-1} < sigma_{2i}
// and sigma_1 < sigma_3 < ..., of sgn(sigma) prod a_{sigma_{2i-1},sigma_{2i}}.
template <typename Ring>
Ring pf_matchings(const SkewMatrix<Ring>& m) {
    const int n = m.order();
    if (n == 0) return Ring(BigInt(1));
    Ring total{};
    std::vector<int> flat;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    auto rec = [&](auto&& self) -> void {
        int lo = 0;
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<std::size_t>(v)]) {
                lo = v;
                break;
            }
        if (lo == 0) {
            std::vector<int> perm(flat.begin(), flat.end());
            Ring prod = Ring(BigInt(permutation_sign(perm)));
            for (std::size_t p = 0; p + 1 < flat.size(); p += 2)
                prod = prod * m.get(flat[p], flat[p + 1]);
            total += prod;
            return;
        }
        used[static_cast<std::size_t>(lo)] = true;
        for (int v = lo + 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            flat.push_back(lo);
            flat.push_back(v);
            self(self);
            flat.pop_back();
            flat.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
        used[static_cast<std::size_t>(lo)] = false;
    };
    rec(rec);
    return total;
}

// Determinant by Leibniz expansion; fine up to order ~7.
inline BigInt det_permutations(const std::vector<std::vector<BigInt>>& m) {
    const std::size_t n = m.size();
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    BigInt total = 0;
    do {
        BigInt prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod *= m[i][static_cast<std::size_t>(perm[i])];
        std::vector<int> p1(perm.begin(), perm.end());
        total += BigInt(permutation_sign(p1)) * prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Lattice paths (0,0) -> (p,q) with steps (1,0), (0,1), (1,1), never below
// y = x, counted one by one.
inline BigInt schroder_brute(int p, int q) {
    if (p < 0 || p > q) return 0;
    BigInt count = 0;
    auto walk = [&](auto&& self, int x, int y) -> void {
        if (y < x) return;
        if (x == p && y == q) {
            ++count;
            return;
        }
        if (x < p) self(self, x + 1, y);
        if (y < q) self(self, x, y + 1);
        if (x < p && y < q) self(self, x + 1, y + 1);
    };
    walk(walk, 0, 0);
    return count;
}

// Unconstrained Delannoy paths, same walker without the diagonal test.
inline BigInt delannoy_brute(int p, int q) {
    if (p < 0 || q < 0) return 0;
    BigInt count = 0;
    auto walk = [&](auto&& self, int x, int y) -> void {
        if (x == p && y == q) {
            ++count;
            return;
        }
        if (x < p) self(self, x + 1, y);
        if (y < q) self(self, x, y + 1);
        if (x < p && y < q) self(self, x + 1, y + 1);
    };
    walk(walk, 0, 0);
    return count;
}

inline BigInt random_bigint(std::mt19937& rng, int digits) {
    std::uniform_int_distribution<int> d(0, 9);
    std::string s = rng() % 2 ? "" : "-";
    s += static_cast<char>('1' + d(rng) % 9);
    for (int i = 1; i < digits; ++i) s += static_cast<char>('0' + d(rng));
    return BigInt(s);
}

// Sparse random polynomial with large coefficients (up to 10^20).
inline BivariatePolynomial random_poly(std::mt19937& rng, int max_terms = 6,
                                       unsigned max_exp = 5) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> digits(1, 20);
    BivariatePolynomial p;
    const int terms = nt(rng);
    for (int i = 0; i < terms; ++i)
        p.addTerm({e(rng), e(rng)}, random_bigint(rng, digits(rng)));
    return p;
}

}  // namespace pftil::testing
