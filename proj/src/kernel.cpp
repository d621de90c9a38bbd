#include "pftil/kernel.hpp"

#include "pftil/sequences.hpp"

namespace pftil {

namespace {

void check_source(const PathGraph& g, int i) {
    if (i < 1 || i > g.sourceCount())
        throw IndexError("source index " + std::to_string(i) + " out of range");
}

}  // namespace

BigInt q_v(const PathGraph& g, int i, int j) {
    check_source(g, i);
    check_source(g, j);
    if (i == j) return 0;
    if (i > j) return -q_v(g, j, i);
    std::vector<BigInt> ri = path_counts_from(g, g.source(i));
    std::vector<BigInt> rj = path_counts_from(g, g.source(j));
    // sum_{k<l} det = sum_l rj[l] * prefix(ri)[l-1] - ri[l] * prefix(rj)[l-1]
    BigInt acc = 0, pref_i = 0, pref_j = 0;
    for (std::size_t l = 0; l < ri.size(); ++l) {
        acc += rj[l] * pref_i - ri[l] * pref_j;
        pref_i += ri[l];
        pref_j += rj[l];
    }
    return acc;
}

namespace {

BigInt paired_sum(const std::vector<BigInt>& ri, const std::vector<BigInt>& rj) {
    BigInt acc = 0;
    for (std::size_t l = 0; l + 1 < ri.size(); l += 2)
        acc += ri[l] * rj[l + 1] - ri[l + 1] * rj[l];
    return acc;
}

}  // namespace

BigInt q_vstar(const PathGraph& g, int i, int j) {
    check_source(g, i);
    check_source(g, j);
    if (g.targetCount() % 2 != 0)
        throw DomainError("q_vstar needs paired targets");
    if (i == j) return 0;
    if (i > j) return -q_vstar(g, j, i);
    return paired_sum(path_counts_from(g, g.source(i)),
                      path_counts_from(g, g.source(j)));
}

BigInt q_vstar_points(const PathGraph& g, GridPoint p, GridPoint q) {
    if (g.targetCount() % 2 != 0)
        throw DomainError("q_vstar needs paired targets");
    if (p == q) return 0;
    return paired_sum(path_counts(g, p), path_counts(g, q));
}

IntSkewMatrix build_A(int n, BuildMethod method) {
    if (n < 1) throw DomainError("matrix order must be >= 1");
    IntSkewMatrix a(n);
    switch (method) {
        case BuildMethod::Recurrence: {
            // Evaluated in increasing i then j; every referenced entry is
            // already present.
            auto at = [&](int i, int j) { return a.get(i, j); };
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    if (i == 1)
                        a.set(i, j, 2);
                    else if (j > i + 1)
                        a.set(i, j, at(i - 1, j) + at(i, j - 1) + at(i - 1, j - 1));
                    else
                        a.set(i, j, at(i - 1, j) + at(i - 1, j - 1) +
                                        ((i % 2 == 1) ? 2 : -2));
                }
            break;
        }
        case BuildMethod::SchroderSum: {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    BigInt acc = 0;
                    for (int l = 1; l <= i; ++l) {
                        BigInt term = schroder(i - l, j - l - 1);
                        acc += (l % 2 == 1) ? term : -term;
                    }
                    a.set(i, j, 2 * acc);
                }
            break;
        }
        case BuildMethod::Graph: {
            // The ambient half graph must extend past the largest label so
            // the entries have stabilized.
            PathGraph g = build_ds_graph(n + 1);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) a.set(i, j, q_vstar(g, i, j));
            break;
        }
    }
    return a;
}

IntSkewMatrix build_B(int n) {
    if (n < 1) throw DomainError("matrix order must be >= 1");
    PathGraph g = build_ds_graph(n);
    IntSkewMatrix b(n);
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        rows[static_cast<std::size_t>(i - 1)] = path_counts_from(g, g.source(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto& ri = rows[static_cast<std::size_t>(i - 1)];
            const auto& rj = rows[static_cast<std::size_t>(j - 1)];
            BigInt acc = 0, pref_i = 0, pref_j = 0;
            for (std::size_t l = 0; l < ri.size(); ++l) {
                acc += rj[l] * pref_i - ri[l] * pref_j;
                pref_i += ri[l];
                pref_j += rj[l];
            }
            b.set(i, j, acc);
        }
    return b;
}

std::vector<BigInt> phantom_column(int n) {
    PathGraph g = build_ds_graph(n);
    std::vector<BigInt> c;
    for (int i = 1; i <= n; ++i) c.push_back(total_path_count(g, g.source(i)));
    return c;
}

PolySkewMatrix build_A_kt(int n) {
    if (n < 1) throw DomainError("matrix order must be >= 1");
    using Poly = BivariatePolynomial;
    PolySkewMatrix a(n);
    auto at = [&](int i, int j) { return a.get(i, j); };
    const Poly k = Poly::k();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (i == 1)
                a.set(i, j, Poly::t());
            else if (j > i + 1)
                a.set(i, j, at(i - 1, j) + at(i, j - 1) + at(i - 1, j - 1));
            else
                a.set(i, j, at(i - 1, j) + at(i - 1, j - 1) +
                                ((i % 2 == 1) ? k : -k));
        }
    return a;
}

}  // namespace pftil
