#include "pftil/serialize.hpp"

#include <sstream>

namespace pftil {

nlohmann::json poly_to_json(const BivariatePolynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms())  // map order is ascending graded-lex
        arr.push_back({m.ek, m.et, c.str()});
    return arr;
}

BivariatePolynomial poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DomainError("polynomial JSON must be an array of triples");
    BivariatePolynomial p;
    for (const auto& triple : j) {
        if (!triple.is_array() || triple.size() != 3)
            throw DomainError("polynomial term must be [e_k, e_t, coeff]");
        p.addTerm({triple[0].get<unsigned>(), triple[1].get<unsigned>()},
                  bigint_from_string(triple[2].get<std::string>()));
    }
    return p;
}

nlohmann::json ratfunc_to_json(const RationalFunction& r) {
    return {{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}};
}

nlohmann::json matrix_to_json(const IntSkewMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 1; i <= m.order(); ++i)
        for (int j = i + 1; j <= m.order(); ++j)
            entries.push_back({i, j, m.upper(i, j).str()});
    return {{"order", m.order()}, {"ring", "int"}, {"entries", entries}};
}

nlohmann::json matrix_to_json(const PolySkewMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 1; i <= m.order(); ++i)
        for (int j = i + 1; j <= m.order(); ++j)
            entries.push_back({i, j, poly_to_json(m.upper(i, j))});
    return {{"order", m.order()}, {"ring", "poly"}, {"entries", entries}};
}

IntSkewMatrix int_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("ring", "") != "int")
        throw DomainError("expected an integer matrix JSON object");
    IntSkewMatrix m(j.at("order").get<int>());
    for (const auto& e : j.at("entries"))
        m.set(e[0].get<int>(), e[1].get<int>(), bigint_from_string(e[2].get<std::string>()));
    return m;
}

namespace {

template <typename M, typename Str>
std::string csv_impl(const M& m, Str&& cell) {
    std::ostringstream os;
    for (int i = 1; i <= m.order(); ++i) {
        for (int j = 1; j <= m.order(); ++j) {
            if (j > 1) os << ",";
            os << cell(m.get(i, j));
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string matrix_to_csv(const IntSkewMatrix& m) {
    return csv_impl(m, [](const BigInt& v) { return v.str(); });
}

std::string matrix_to_csv(const PolySkewMatrix& m) {
    return csv_impl(m, [](const BivariatePolynomial& v) { return v.str(); });
}

namespace {

template <typename Ring>
nlohmann::json decomposition_impl(const PfaffianDecomposition<Ring>& d,
                                  nlohmann::json (*field)(const typename FieldTraits<Ring>::F&)) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& v : d.t) t.push_back(field(v));
    nlohmann::json r = nlohmann::json::array();
    for (const auto& [ij, v] : d.r) r.push_back({ij.first, ij.second, field(v)});
    return {{"order", d.order}, {"t", t}, {"r", r}};
}

nlohmann::json rational_to_json(const BigRational& v) {
    return {{"num", boost::multiprecision::numerator(v).str()},
            {"den", boost::multiprecision::denominator(v).str()}};
}

nlohmann::json ratfunc_field_to_json(const RationalFunction& v) {
    return ratfunc_to_json(v);
}

}  // namespace

nlohmann::json decomposition_to_json(const PfaffianDecomposition<BigInt>& d) {
    return decomposition_impl<BigInt>(d, &rational_to_json);
}

nlohmann::json decomposition_to_json(const PfaffianDecomposition<BivariatePolynomial>& d) {
    return decomposition_impl<BivariatePolynomial>(d, &ratfunc_field_to_json);
}

}  // namespace pftil
