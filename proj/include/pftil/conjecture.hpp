#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pftil/kernel.hpp"
#include "pftil/pfaffian.hpp"

namespace pftil {

enum class Provenance { TableVerified, Extended };

// The integer sequence o_n defined (conjecturally) by
// pf(A_[2n]) = 2^n o_{n-1} o_n, o_0 = o_1 = 1.
struct OSequenceInt {
    std::vector<BigInt> values;          // o_0 .. o_N
    std::vector<Provenance> provenance;  // per index
};

// The polynomial sequence o_n(k,t) with pf(A_[2n](k,t)) = t o_{n-1} o_n.
struct OSequencePoly {
    std::vector<BivariatePolynomial> values;
    std::vector<Provenance> provenance;
};

// Persistent store for extracted sequence values, so that repeated sweeps
// extend rather than recompute.  A version mismatch discards the file.
class OCache {
  public:
    static constexpr int kFormatVersion = 1;

    static OCache load(const std::string& path);  // missing file -> empty cache
    void save(const std::string& path) const;

    std::map<int, BigInt> ints;
    std::map<int, BivariatePolynomial> polys;
};

// Pfaffian of a polynomial skew matrix: expansion up to order 16; larger
// orders with entries homogeneous of degree one go through integer
// evaluation and exact interpolation of the (homogeneous) result.
BivariatePolynomial pf_poly(const PolySkewMatrix& m);

// The evaluation-interpolation route on its own.  Requires every entry
// homogeneous of degree 1, which makes the Pfaffian homogeneous of degree
// order/2: order/2 + 1 integer Pfaffians pin it down exactly.
BivariatePolynomial pf_poly_by_evaluation(const PolySkewMatrix& m);

// Peel o_n out of pf(A_[2n]) = 2^n o_{n-1} o_n for n = 1..max_n.  Inexact
// division raises ConjectureViolated carrying n, the Pfaffian and the
// attempted divisor.
OSequenceInt extract_o_int(int max_n, OCache* cache = nullptr);

// Polynomial analogue via pf(A_[2n](k,t)) = t o_{n-1}(k,t) o_n(k,t).
OSequencePoly extract_o_poly(int max_n, OCache* cache = nullptr);

// -------------------------------------------------------------------------
// Self-check battery.
// -------------------------------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // expected-vs-actual when failing, else brief note
};

struct CheckReport {
    std::vector<CheckResult> checks;
    bool allPass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Every reference-table comparison: the B matrix, diagonal counts, both
// o-sequences, the t-ratios, kernel closed forms, path-count tables.
CheckReport verify_tables();

// verify_tables plus the module property suites at reduced sizes.  When
// `corrupt` is set one comparison is deliberately perturbed (test hook for
// the exit-code contract).
CheckReport selfcheck(bool corrupt = false);

}  // namespace pftil
