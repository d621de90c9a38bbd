// Python bindings for the main operations: sequence tables, Pfaffian
// counts, matrix builders, the o-sequence sweeps and the self-check.
// Arbitrary-precision values cross the boundary as python ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pftil/conjecture.hpp"
#include "pftil/sequences.hpp"
#include "pftil/svg.hpp"

namespace py = pybind11;
using namespace pftil;

namespace {

py::int_ to_py(const BigInt& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

BigInt from_py(const py::int_& v) {
    return BigInt(py::str(static_cast<const py::object&>(v)).cast<std::string>());
}

IndexSet keep_or_full(int n, const std::optional<std::vector<int>>& keep) {
    return keep ? IndexSet(*keep) : IndexSet::full(n);
}

TilingClass parse_class(const std::string& cls) {
    if (cls == "all") return TilingClass::All;
    if (cls == "diagonal") return TilingClass::DiagSymmetric;
    if (cls == "off-diagonal") return TilingClass::OffDiagSymmetric;
    throw DomainError("class must be all, diagonal or off-diagonal");
}

py::list int_matrix(const IntSkewMatrix& m) {
    py::list rows;
    for (int i = 1; i <= m.order(); ++i) {
        py::list row;
        for (int j = 1; j <= m.order(); ++j) row.append(to_py(m.get(i, j)));
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_pftil, m) {
    m.doc() = "Exact Pfaffian enumeration of symmetric Aztec-diamond tilings";

    py::register_exception<ConjectureViolated>(m, "ConjectureViolated");
    py::register_local_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("delannoy", [](long p, long q) { return to_py(delannoy(p, q)); },
          py::arg("p"), py::arg("q"));
    m.def("schroder", [](long p, long q) { return to_py(schroder(p, q)); },
          py::arg("p"), py::arg("q"));
    m.def("aztec_total", [](int n) { return to_py(aztec_total(n)); }, py::arg("n"));

    m.def(
        "count_off_diagonal",
        [](int n, std::optional<std::vector<int>> keep) {
            return to_py(pf_minor(build_A(n), keep_or_full(n, keep), OddMode::Zero));
        },
        py::arg("n"), py::arg("keep") = py::none(),
        "Number of off-diagonally symmetric tilings of the order-n diamond "
        "with the given kept boundary labels (all labels by default).");

    m.def(
        "count_diagonal",
        [](int n, std::optional<std::vector<int>> keep) {
            std::vector<BigInt> c = phantom_column(n);
            return to_py(
                pf_minor(build_B(n), keep_or_full(n, keep), OddMode::Phantom, &c));
        },
        py::arg("n"), py::arg("keep") = py::none());

    m.def(
        "count_tilings",
        [](int n, const std::string& cls) {
            return to_py(enumerate_tilings(n, parse_class(cls)));
        },
        py::arg("n"), py::arg("cls") = "all",
        "Brute-force tiling count (exhaustive search; keep n small).");

    m.def(
        "matrix_a",
        [](int n, const std::string& method) {
            BuildMethod bm = BuildMethod::Recurrence;
            if (method == "schroder") bm = BuildMethod::SchroderSum;
            else if (method == "graph") bm = BuildMethod::Graph;
            else if (method != "recurrence") throw DomainError("unknown method");
            return int_matrix(build_A(n, bm));
        },
        py::arg("n"), py::arg("method") = "recurrence");

    m.def("matrix_b", [](int n) { return int_matrix(build_B(n)); }, py::arg("n"));

    m.def(
        "matrix_a_kt",
        [](int n) {
            PolySkewMatrix a = build_A_kt(n);
            py::list rows;
            for (int i = 1; i <= n; ++i) {
                py::list row;
                for (int j = 1; j <= n; ++j) row.append(a.get(i, j).str());
                rows.append(row);
            }
            return rows;
        },
        py::arg("n"));

    m.def(
        "pfaffian",
        [](const std::vector<std::vector<py::int_>>& rows) {
            const int n = static_cast<int>(rows.size());
            IntSkewMatrix m(n);
            for (int i = 0; i < n; ++i) {
                if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
                    throw DomainError("matrix must be square");
                for (int j = 0; j < n; ++j) {
                    BigInt v = from_py(rows[static_cast<std::size_t>(i)]
                                           [static_cast<std::size_t>(j)]);
                    if (i == j && v != 0) throw DomainError("diagonal must be zero");
                    if (i < j) m.set(i + 1, j + 1, v);
                    else if (i > j && v != -m.get(j + 1, i + 1))
                        throw DomainError("matrix must be skew-symmetric");
                }
            }
            return to_py(pf_eliminate(m));
        },
        py::arg("rows"), "Exact Pfaffian of a skew-symmetric integer matrix.");

    m.def(
        "lgv_aztec", [](int n) { return to_py(lgv_det(build_ad_graph(n))); },
        py::arg("n"));

    m.def(
        "o_sequence_int",
        [](int max_n) {
            OSequenceInt seq = extract_o_int(max_n);
            py::list out;
            for (const BigInt& v : seq.values) out.append(to_py(v));
            return out;
        },
        py::arg("max_n"));

    m.def(
        "o_sequence_poly",
        [](int max_n) {
            OSequencePoly seq = extract_o_poly(max_n);
            py::list out;
            for (const auto& p : seq.values) out.append(p.str());
            return out;
        },
        py::arg("max_n"));

    m.def(
        "tiling_svg",
        [](int n, const std::string& cls) {
            std::string svg;
            std::function<void(const DominoTiling&)> visit =
                [&](const DominoTiling& t) {
                    if (svg.empty()) svg = tiling_to_svg(t);
                };
            enumerate_tilings(n, parse_class(cls), IndexSet::full(n), &visit);
            return svg;
        },
        py::arg("n"), py::arg("cls") = "all");

    m.def("selfcheck", [] {
        CheckReport report = selfcheck(false);
        py::list out;
        for (const auto& c : report.checks)
            out.append(py::make_tuple(c.name, c.pass, c.detail));
        return out;
    });
}
