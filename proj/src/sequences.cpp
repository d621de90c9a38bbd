#include "pftil/sequences.hpp"

namespace pftil {

BigInt DelannoyTable::operator()(long p, long q) {
    if (p < 0 || q < 0) return 0;
    if (p == 0 || q == 0) return 1;
    std::lock_guard<std::mutex> lock(mu_);
    // Fill bottom-up so the recursion depth stays flat.
    for (long i = 1; i <= p; ++i) {
        for (long j = 1; j <= q; ++j) {
            auto key = std::make_pair(i, j);
            if (memo_.count(key)) continue;
            auto at = [&](long a, long b) -> BigInt {
                if (a == 0 || b == 0) return 1;
                return memo_.at({a, b});
            };
            memo_.emplace(key, at(i - 1, j) + at(i, j - 1) + at(i - 1, j - 1));
        }
    }
    return memo_.at({p, q});
}

BigInt SchroderTriangle::operator()(long p, long q) {
    if (p < 0 || p > q)
        throw DomainError("schroder(p,q) requires 0 <= p <= q, got p=" +
                          std::to_string(p) + " q=" + std::to_string(q));
    if (p == 0) return 1;
    std::lock_guard<std::mutex> lock(mu_);
    for (long i = 1; i <= p; ++i) {
        for (long j = i; j <= q; ++j) {
            auto key = std::make_pair(i, j);
            if (memo_.count(key)) continue;
            auto at = [&](long a, long b) -> BigInt {
                if (a == 0) return 1;
                return memo_.at({a, b});
            };
            BigInt v = (j == i) ? at(i - 1, j) + at(i - 1, j - 1)
                                : at(i - 1, j) + at(i, j - 1) + at(i - 1, j - 1);
            memo_.emplace(key, v);
        }
    }
    return memo_.at({p, q});
}

namespace {
DelannoyTable g_delannoy;
SchroderTriangle g_schroder;
}  // namespace

BigInt delannoy(long p, long q) { return g_delannoy(p, q); }
BigInt schroder(long p, long q) { return g_schroder(p, q); }

BigInt delannoy_closed_form(long p, long q) {
    if (p < 0 || q < 0) return 0;
    BigInt acc = 0;
    for (long i = 0; i <= p; ++i)
        acc += binomial(p, i) * binomial(q, i) * pow2(static_cast<unsigned>(i));
    return acc;
}

BigInt aztec_total(int n) {
    if (n < 1) throw DomainError("aztec_total requires n >= 1");
    return pow2(static_cast<unsigned>(n) * (n + 1) / 2);
}

}  // namespace pftil
