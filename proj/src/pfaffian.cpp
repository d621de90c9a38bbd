#include "pftil/pfaffian.hpp"

#include "pftil/lattice.hpp"

namespace pftil {

BigInt pf_eliminate(const IntSkewMatrix& m) {
    const int n = m.order();
    if (n % 2 != 0) throw OddOrderError("pfaffian of odd order is undefined");
    if (n == 0) return 1;

    std::vector<std::vector<BigRational>> a(
        static_cast<std::size_t>(n), std::vector<BigRational>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                BigRational(m.get(i, j));

    int sign = 1;
    BigRational prod = 1;
    for (int k = 0; k + 1 < n; k += 2) {
        // Pick any nonzero pivot in row k and move it next to the block.
        int piv = -1;
        for (int j = k + 1; j < n; ++j)
            if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) return 0;  // row k is zero beyond the processed block
        if (piv != k + 1) {
            // Simultaneous row and column transposition flips the sign.
            std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(k + 1)]);
            for (auto& row : a)
                std::swap(row[static_cast<std::size_t>(piv)],
                          row[static_cast<std::size_t>(k + 1)]);
            sign = -sign;
        }
        const BigRational p = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k + 1)];
        prod *= p;
        for (int i = k + 2; i < n; ++i) {
            const BigRational& aki = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            const BigRational& ak1i =
                a[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(i)];
            if (aki == 0 && ak1i == 0) continue;
            for (int j = i + 1; j < n; ++j) {
                const BigRational& akj =
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                const BigRational& ak1j =
                    a[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(j)];
                BigRational delta = (aki * ak1j - akj * ak1i) / p;
                if (delta == 0) continue;
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= delta;
                a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] += delta;
            }
        }
    }
    BigRational result = prod;
    if (sign < 0) result = -result;
    if (boost::multiprecision::denominator(result) != 1)
        throw Error("pfaffian elimination produced a non-integer");
    return boost::multiprecision::numerator(result);
}

BigInt det_exact(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw ShapeMismatchError("determinant needs a square matrix");
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = BigRational(m[i][j]);

    int sign = 1;
    BigRational prod = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        prod *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            BigRational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    BigRational result = prod;
    if (sign < 0) result = -result;
    if (boost::multiprecision::denominator(result) != 1)
        throw Error("determinant elimination produced a non-integer");
    return boost::multiprecision::numerator(result);
}

BigInt lgv_det(const PathGraph& g) {
    if (g.sourceCount() != g.targetCount())
        throw ShapeMismatchError("LGV determinant needs |sources| = |targets|");
    const int n = g.sourceCount();
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        m[static_cast<std::size_t>(i - 1)] = path_counts_from(g, g.source(i));
    return det_exact(std::move(m));
}

}  // namespace pftil
