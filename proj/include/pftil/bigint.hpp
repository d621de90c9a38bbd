#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pftil/errors.hpp"

namespace pftil {

// All counts in the library are exact; every integer is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Field of fractions of BigInt.  cpp_rational keeps the value in lowest
// terms with a positive denominator, which is exactly the invariant we need.
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of i+1 consecutive integers
    }
    return r;
}

// Quotient of an exact division; throws if b does not divide a.
inline BigInt div_exact(const BigInt& a, const BigInt& b) {
    if (b == 0) throw DomainError("division by zero");
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0)
        throw NotDivisibleError(a.str() + " is not divisible by " + b.str());
    return q;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt bigint_from_string(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw DomainError("not a decimal integer: '" + s + "'");
    }
}

}  // namespace pftil
