#include "pftil/conjecture.hpp"

#include <fstream>

#include <json.hpp>

#include "pftil/sequences.hpp"
#include "pftil/serialize.hpp"
#include "pftil/tables.hpp"

namespace pftil {

// ---------------------------------------------------------------------------
// Cache
// ---------------------------------------------------------------------------

OCache OCache::load(const std::string& path) {
    OCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return cache;  // unreadable: start over
    }
    if (!j.is_object() || j.value("version", -1) != kFormatVersion) return cache;
    if (j.contains("int"))
        for (auto& [key, val] : j["int"].items())
            cache.ints[std::stoi(key)] = bigint_from_string(val.get<std::string>());
    if (j.contains("poly"))
        for (auto& [key, val] : j["poly"].items())
            cache.polys[std::stoi(key)] = poly_from_json(val);
    return cache;
}

void OCache::save(const std::string& path) const {
    nlohmann::json j;
    j["version"] = kFormatVersion;
    j["int"] = nlohmann::json::object();
    for (const auto& [n, v] : ints) j["int"][std::to_string(n)] = v.str();
    j["poly"] = nlohmann::json::object();
    for (const auto& [n, p] : polys) j["poly"][std::to_string(n)] = poly_to_json(p);
    std::ofstream out(path);
    if (!out) throw Error("cannot write cache file " + path);
    out << j.dump() << "\n";
}

// ---------------------------------------------------------------------------
// Polynomial Pfaffians at large order
// ---------------------------------------------------------------------------

// The entries of A(k,t) are homogeneous of degree 1, so pf of an order-2n
// minor is homogeneous of degree n: substitute t = 1 and k = 0..n, take
// integer Pfaffians, and solve the Vandermonde system exactly.
BivariatePolynomial pf_poly_by_evaluation(const PolySkewMatrix& m) {
    const int order = m.order();
    const int deg = order / 2;
    for (int i = 1; i <= order; ++i)
        for (int j = i + 1; j <= order; ++j) {
            const BivariatePolynomial& e = m.upper(i, j);
            if (e.isZero()) continue;
            auto d = e.homogeneousDegree();
            if (!d || *d != 1)
                throw DomainError("evaluation route needs entries homogeneous of degree 1");
        }
    std::vector<BigInt> values;
    for (int x = 0; x <= deg; ++x) {
        IntSkewMatrix e(order);
        for (int i = 1; i <= order; ++i)
            for (int j = i + 1; j <= order; ++j)
                e.set(i, j, m.upper(i, j).eval(x, 1));
        values.push_back(pf_eliminate(e));
    }
    // Solve sum_i c_i x^i = values[x] for x = 0..deg.
    const std::size_t sz = static_cast<std::size_t>(deg) + 1;
    std::vector<std::vector<BigRational>> a(sz, std::vector<BigRational>(sz + 1));
    for (std::size_t r = 0; r < sz; ++r) {
        BigInt p = 1;
        for (std::size_t c = 0; c < sz; ++c) {
            a[r][c] = BigRational(p);
            p *= static_cast<int>(r);
        }
        a[r][sz] = BigRational(values[r]);
    }
    for (std::size_t k = 0; k < sz; ++k) {
        std::size_t piv = k;
        while (a[piv][k] == 0) ++piv;  // Vandermonde on distinct nodes: exists
        std::swap(a[piv], a[k]);
        for (std::size_t i = 0; i < sz; ++i) {
            if (i == k || a[i][k] == 0) continue;
            BigRational f = a[i][k] / a[k][k];
            for (std::size_t c = k; c <= sz; ++c) a[i][c] -= f * a[k][c];
        }
    }
    BivariatePolynomial result;
    for (std::size_t i = 0; i < sz; ++i) {
        BigRational c = a[i][sz] / a[i][i];
        if (boost::multiprecision::denominator(c) != 1)
            throw Error("interpolation produced a non-integer coefficient");
        result.addTerm({static_cast<unsigned>(i), static_cast<unsigned>(deg - i)},
                       boost::multiprecision::numerator(c));
    }
    return result;
}

BivariatePolynomial pf_poly(const PolySkewMatrix& m) {
    if (m.order() % 2 != 0) throw OddOrderError("pfaffian of odd order is undefined");
    if (m.order() <= 16) return pf_expand(m);
    BivariatePolynomial p = pf_poly_by_evaluation(m);
    // Cross-check the evaluation route against the integer engine at the
    // point that recovers the plain matrix A.
    IntSkewMatrix at22(m.order());
    for (int i = 1; i <= m.order(); ++i)
        for (int j = i + 1; j <= m.order(); ++j) at22.set(i, j, m.upper(i, j).eval(2, 2));
    if (p.eval(2, 2) != pf_eliminate(at22))
        throw Error("polynomial pfaffian disagrees with integer evaluation");
    return p;
}

// ---------------------------------------------------------------------------
// Sequence extraction
// ---------------------------------------------------------------------------

OSequenceInt extract_o_int(int max_n, OCache* cache) {
    if (max_n < 1) throw DomainError("max_n must be >= 1");
    OSequenceInt seq;
    seq.values = {1, 1};  // o_0 = o_1 = 1

    IntSkewMatrix a = build_A(2 * max_n);
    for (int n = 2; n <= max_n; ++n) {
        BigInt o_n;
        bool cached = false;
        if (cache) {
            auto it = cache->ints.find(n);
            if (it != cache->ints.end()) {
                o_n = it->second;
                cached = true;
            }
        }
        if (!cached) {
            BigInt pf = pf_eliminate(a.minor(IndexSet::full(2 * n)));
            BigInt divisor = pow2(static_cast<unsigned>(n)) *
                             seq.values[static_cast<std::size_t>(n - 1)];
            BigInt q, r;
            boost::multiprecision::divide_qr(pf, divisor, q, r);
            if (r != 0) throw ConjectureViolated(n, pf.str(), divisor.str());
            o_n = q;
        }
        seq.values.push_back(o_n);
        if (cache) cache->ints[n] = o_n;
    }
    const auto& table = known_o_int();
    for (std::size_t i = 0; i < seq.values.size(); ++i)
        seq.provenance.push_back(i < table.size() && seq.values[i] == table[i]
                                     ? Provenance::TableVerified
                                     : Provenance::Extended);
    return seq;
}

OSequencePoly extract_o_poly(int max_n, OCache* cache) {
    if (max_n < 1) throw DomainError("max_n must be >= 1");
    OSequencePoly seq;
    seq.values = {BivariatePolynomial::one(), BivariatePolynomial::one()};

    PolySkewMatrix a = build_A_kt(2 * max_n);
    // One expander serves every prefix minor that fits the expansion route.
    std::optional<PfaffianExpander<BivariatePolynomial>> shared;
    if (a.order() <= 62) shared.emplace(a);
    const BivariatePolynomial t = BivariatePolynomial::t();

    for (int n = 2; n <= max_n; ++n) {
        BivariatePolynomial o_n;
        bool cached = false;
        if (cache) {
            auto it = cache->polys.find(n);
            if (it != cache->polys.end()) {
                o_n = it->second;
                cached = true;
            }
        }
        if (!cached) {
            BivariatePolynomial pf =
                (2 * n <= 16 && shared) ? shared->pfOf(IndexSet::full(2 * n))
                                        : pf_poly(a.minor(IndexSet::full(2 * n)));
            BivariatePolynomial divisor = t * seq.values[static_cast<std::size_t>(n - 1)];
            try {
                o_n = pf.divExact(divisor);
            } catch (const NotDivisibleError&) {
                throw ConjectureViolated(n, pf.str(), divisor.str());
            }
        }
        seq.values.push_back(o_n);
        if (cache) cache->polys[n] = o_n;
    }
    const auto& table = known_o_poly();
    for (std::size_t i = 0; i < seq.values.size(); ++i)
        seq.provenance.push_back(i < table.size() && seq.values[i] == table[i]
                                     ? Provenance::TableVerified
                                     : Provenance::Extended);
    return seq;
}

}  // namespace pftil
