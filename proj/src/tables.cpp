#include "pftil/tables.hpp"

namespace pftil {

namespace {

// Sparse constructor: list of (coeff, e_k, e_t) terms.
BivariatePolynomial poly(std::initializer_list<std::tuple<const char*, unsigned, unsigned>> ts) {
    BivariatePolynomial p;
    for (const auto& [c, ek, et] : ts) p.addTerm({ek, et}, BigInt(c));
    return p;
}

}  // namespace

const std::vector<BigInt>& known_o_int() {
    static const std::vector<BigInt> v = {
        1, 1, 3, 13, 149,
        BigInt(3) * 887,
        BigInt(5) * 29 * 823,
        BigInt(29) * 193 * 1549,
        BigInt(3) * 29 * 263 * 67049,
    };
    return v;
}

const std::vector<BivariatePolynomial>& known_o_poly() {
    static const std::vector<BivariatePolynomial> v = {
        poly({{"1", 0, 0}}),
        poly({{"1", 0, 0}}),
        poly({{"-1", 1, 0}, {"4", 0, 1}}),
        poly({{"-3", 1, 0}, {"16", 0, 1}}),
        poly({{"13", 2, 0}, {"-120", 1, 1}, {"256", 0, 2}}),
        poly({{"149", 2, 0}, {"-1584", 1, 1}, {"4096", 0, 2}}),
        poly({{"-2661", 3, 0}, {"38540", 2, 1}, {"-178688", 1, 2}, {"262144", 0, 3}}),
        poly({{"-119335", 3, 0}, {"1899616", 2, 1}, {"-9887744", 1, 2}, {"16777216", 0, 3}}),
        poly({{"8669753", 4, 0},
              {"-171171824", 3, 1},
              {"1234228224", 2, 2},
              {"-3832545280", 1, 3},
              {"4294967296", 0, 4}}),
    };
    return v;
}

const std::vector<BigInt>& known_diagonal_counts() {
    static const std::vector<BigInt> v = {2, 6, 24, 132, 1048, 11960, 190912};
    return v;
}

const std::vector<BigInt>& known_diag_antidiag_counts() {
    static const std::vector<BigInt> v = {2, 4, 10, 28, 96, 384, 1848, 10432};
    return v;
}

const IntSkewMatrix& known_b8() {
    static const IntSkewMatrix b = [] {
        const long rows[8][8] = {
            {0, 6, 18, 46, 114, 278, 674, 1630},
            {-6, 0, 18, 70, 202, 526, 1314, 3222},
            {-18, -18, 0, 94, 378, 1134, 3042, 7742},
            {-46, -70, -94, 0, 466, 1966, 6114, 16830},
            {-114, -202, -378, -466, 0, 2438, 10530, 33502},
            {-278, -526, -1134, -1966, -2438, 0, 12962, 56982},
            {-674, -1314, -3042, -6114, -10530, -12962, 0, 69950},
            {-1630, -3222, -7742, -16830, -33502, -56982, -69950, 0},
        };
        IntSkewMatrix m(8);
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j) m.set(i, j, rows[i - 1][j - 1]);
        return m;
    }();
    return b;
}

const std::vector<RationalFunction>& known_t_ratios() {
    static const std::vector<RationalFunction> v = [] {
        const BivariatePolynomial one = BivariatePolynomial::one();
        std::vector<RationalFunction> t;
        t.emplace_back(BivariatePolynomial::t(), one);
        t.emplace_back(poly({{"-1", 1, 0}, {"4", 0, 1}}), one);
        t.emplace_back(poly({{"-3", 1, 0}, {"16", 0, 1}}), one);
        t.emplace_back(poly({{"13", 2, 0}, {"-120", 1, 1}, {"256", 0, 2}}),
                       poly({{"-1", 1, 0}, {"4", 0, 1}}));
        t.emplace_back(poly({{"149", 2, 0}, {"-1584", 1, 1}, {"4096", 0, 2}}),
                       poly({{"-3", 1, 0}, {"16", 0, 1}}));
        t.emplace_back(poly({{"-2661", 3, 0},
                             {"38540", 2, 1},
                             {"-178688", 1, 2},
                             {"262144", 0, 3}}),
                       poly({{"13", 2, 0}, {"-120", 1, 1}, {"256", 0, 2}}));
        t.emplace_back(poly({{"-119335", 3, 0},
                             {"1899616", 2, 1},
                             {"-9887744", 1, 2},
                             {"16777216", 0, 3}}),
                       poly({{"149", 2, 0}, {"-1584", 1, 1}, {"4096", 0, 2}}));
        t.emplace_back(poly({{"8669753", 4, 0},
                             {"-171171824", 3, 1},
                             {"1234228224", 2, 2},
                             {"-3832545280", 1, 3},
                             {"4294967296", 0, 4}}),
                       poly({{"-2661", 3, 0},
                             {"38540", 2, 1},
                             {"-178688", 1, 2},
                             {"262144", 0, 3}}));
        return t;
    }();
    return v;
}

}  // namespace pftil
