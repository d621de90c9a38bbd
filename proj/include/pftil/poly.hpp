#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pftil/bigint.hpp"

namespace pftil {

// Exponent pair of a monomial k^ek * t^et.
struct Monomial {
    unsigned ek = 0;
    unsigned et = 0;

    unsigned degree() const { return ek + et; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with k > t: compare total degree first, then
// the exponent of k.  This is the term order used for exact division and
// for the sign normalization of rational functions.
struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.ek < y.ek;
    }
};

// Sparse exact polynomial in Z[k,t].  The term map never stores a zero
// coefficient, so structural equality of the maps is polynomial equality.
class BivariatePolynomial {
  public:
    using TermMap = std::map<Monomial, BigInt, GrlexLess>;

    BivariatePolynomial() = default;
    explicit BivariatePolynomial(const BigInt& c);
    BivariatePolynomial(const BigInt& c, unsigned ek, unsigned et);

    static BivariatePolynomial zero() { return BivariatePolynomial(); }
    static BivariatePolynomial one() { return BivariatePolynomial(BigInt(1)); }
    static BivariatePolynomial k() { return {BigInt(1), 1, 0}; }
    static BivariatePolynomial t() { return {BigInt(1), 0, 1}; }

    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Leading term under grlex; only valid on nonzero polynomials.
    const Monomial& leadingMonomial() const;
    const BigInt& leadingCoeff() const;
    unsigned degree() const;  // total degree; 0 for the zero polynomial

    // The exponent d when every term has total degree d.
    std::optional<unsigned> homogeneousDegree() const;

    // gcd of the absolute values of all coefficients (0 for the zero
    // polynomial).
    BigInt content() const;

    BivariatePolynomial operator-() const;
    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator-(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const BivariatePolynomial& o);

    bool operator==(const BivariatePolynomial& o) const = default;

    // Exact quotient under grlex long division; throws NotDivisibleError if
    // any division step leaves a remainder or a non-integral coefficient.
    BivariatePolynomial divExact(const BivariatePolynomial& divisor) const;

    // Divide every coefficient by c (must divide exactly).
    BivariatePolynomial divContent(const BigInt& c) const;

    BigInt eval(const BigInt& k0, const BigInt& t0) const;

    BigInt coeff(unsigned ek, unsigned et) const;
    void addTerm(const Monomial& m, const BigInt& c);

    // Human-readable form, descending grlex, e.g. "13k^2-120kt+256t^2".
    std::string str() const;

  private:
    TermMap terms_;
};

BivariatePolynomial operator*(const BigInt& c, const BivariatePolynomial& p);

// A ratio of polynomials kept unreduced: no polynomial gcd is ever taken.
// Normalization removes the common integer content and makes the leading
// coefficient of the denominator positive; equality is decided by
// cross-multiplication, so it is independent of representation.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(BivariatePolynomial::one()) {}
    RationalFunction(BivariatePolynomial num, BivariatePolynomial den);
    explicit RationalFunction(const BivariatePolynomial& p)
        : RationalFunction(p, BivariatePolynomial::one()) {}

    const BivariatePolynomial& num() const { return num_; }
    const BivariatePolynomial& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    // r1.num * r2.den == r2.num * r1.den.
    bool eq(const RationalFunction& o) const;

    // Exact polynomial value num/den; throws NotDivisibleError if the ratio
    // is not a polynomial.
    BivariatePolynomial toPolynomial() const;

    std::string str() const;

  private:
    void normalize();

    BivariatePolynomial num_;
    BivariatePolynomial den_;
};

}  // namespace pftil
