#include "pftil/poly.hpp"

#include <sstream>

namespace pftil {

BivariatePolynomial::BivariatePolynomial(const BigInt& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

BivariatePolynomial::BivariatePolynomial(const BigInt& c, unsigned ek, unsigned et) {
    if (c != 0) terms_[{ek, et}] = c;
}

const Monomial& BivariatePolynomial::leadingMonomial() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const BigInt& BivariatePolynomial::leadingCoeff() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

unsigned BivariatePolynomial::degree() const {
    return terms_.empty() ? 0u : terms_.rbegin()->first.degree();
}

std::optional<unsigned> BivariatePolynomial::homogeneousDegree() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

BigInt BivariatePolynomial::content() const {
    BigInt g = 0;
    for (const auto& [m, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
}

void BivariatePolynomial::addTerm(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt BivariatePolynomial::coeff(unsigned ek, unsigned et) const {
    auto it = terms_.find({ek, et});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    r += o;
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    r -= o;
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    BivariatePolynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.addTerm({ma.ek + mb.ek, ma.et + mb.et}, ca * cb);
    return r;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o) {
    *this = *this * o;
    return *this;
}

BivariatePolynomial operator*(const BigInt& c, const BivariatePolynomial& p) {
    return BivariatePolynomial(c) * p;
}

BivariatePolynomial BivariatePolynomial::divExact(const BivariatePolynomial& divisor) const {
    if (divisor.isZero()) throw DomainError("polynomial division by zero");
    BivariatePolynomial q;
    BivariatePolynomial r = *this;
    const Monomial& lb = divisor.leadingMonomial();
    const BigInt& cb = divisor.leadingCoeff();
    while (!r.isZero()) {
        const Monomial& lr = r.leadingMonomial();
        if (lr.ek < lb.ek || lr.et < lb.et)
            throw NotDivisibleError("leading monomial not divisible: " + r.str() +
                                    " by " + divisor.str());
        BigInt qc, rem;
        boost::multiprecision::divide_qr(r.leadingCoeff(), cb, qc, rem);
        if (rem != 0)
            throw NotDivisibleError("non-integral coefficient dividing " + str() +
                                    " by " + divisor.str());
        BivariatePolynomial step(qc, lr.ek - lb.ek, lr.et - lb.et);
        q += step;
        r -= step * divisor;
    }
    return q;
}

BivariatePolynomial BivariatePolynomial::divContent(const BigInt& c) const {
    if (c == 0) throw DomainError("content division by zero");
    BivariatePolynomial r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, div_exact(v, c));
    return r;
}

BigInt BivariatePolynomial::eval(const BigInt& k0, const BigInt& t0) const {
    using boost::multiprecision::pow;
    BigInt acc = 0;
    for (const auto& [m, c] : terms_)
        acc += c * pow(k0, m.ek) * pow(t0, m.et);
    return acc;
}

std::string BivariatePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending grlex matches the usual mathematical layout.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt a = boost::multiprecision::abs(c);
        if (c < 0)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        const bool has_var = m.ek > 0 || m.et > 0;
        if (a != 1 || !has_var) os << a.str();
        if (m.ek > 0) {
            os << "k";
            if (m.ek > 1) os << "^" << m.ek;
        }
        if (m.et > 0) {
            os << "t";
            if (m.et > 1) os << "^" << m.et;
        }
    }
    return os.str();
}

RationalFunction::RationalFunction(BivariatePolynomial num, BivariatePolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.isZero()) throw DomainError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.isZero()) {
        den_ = BivariatePolynomial::one();
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
        num_ = num_.divContent(g);
        den_ = den_.divContent(g);
    }
    if (den_.leadingCoeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunction RationalFunction::operator-() const {
    return {-num_, den_};
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.isZero()) throw DomainError("rational function division by zero");
    return {num_ * o.den_, den_ * o.num_};
}

bool RationalFunction::eq(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

BivariatePolynomial RationalFunction::toPolynomial() const {
    return num_.divExact(den_);
}

std::string RationalFunction::str() const {
    if (den_ == BivariatePolynomial::one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace pftil
