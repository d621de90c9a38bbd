// pftil: exact enumeration of symmetric domino tilings of Aztec diamonds
// through Pfaffians, with brute-force oracles and product-form sweeps.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pftil/conjecture.hpp"
#include "pftil/sequences.hpp"
#include "pftil/serialize.hpp"
#include "pftil/svg.hpp"

using namespace pftil;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct UsageError : Error {
    using Error::Error;
};

void write_out(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << content;
}

IndexSet parse_keep(const std::string& spec, int n) {
    if (spec.empty()) return IndexSet::full(n);
    std::vector<int> labels;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            labels.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad --keep entry '" + item + "'");
        }
    }
    IndexSet idx{labels};  // throws DomainError unless strictly increasing
    if (idx.max() > n) throw UsageError("--keep labels must lie in 1.." + std::to_string(n));
    return idx;
}

std::string default_cache_path() {
    if (const char* env = std::getenv("PFTIL_CACHE")) return env;
    return "pftil-cache.json";
}

int cmd_count(const std::string& cls, int n, const std::string& keep,
              const std::string& out) {
    IndexSet idx = parse_keep(keep, n);
    BigInt value;
    if (cls == "aztec") {
        if (!keep.empty()) throw UsageError("--keep does not apply to the aztec class");
        value = aztec_total(n);
    } else if (cls == "off-diagonal") {
        value = pf_minor(build_A(n), idx, OddMode::Zero);
    } else if (cls == "diagonal") {
        std::vector<BigInt> c = phantom_column(n);
        value = pf_minor(build_B(n), idx, OddMode::Phantom, &c);
    } else {
        throw UsageError("unknown class '" + cls + "'");
    }
    write_out(value.str() + "\n", out);
    return kExitOk;
}

int cmd_matrix(const std::string& kind, int n, const std::string& format,
               const std::string& out) {
    if (format != "json" && format != "csv")
        throw UsageError("format must be json or csv");
    std::string content;
    if (kind == "A") {
        IntSkewMatrix r = build_A(n, BuildMethod::Recurrence);
        IntSkewMatrix s = build_A(n, BuildMethod::SchroderSum);
        IntSkewMatrix g = build_A(n, BuildMethod::Graph);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (r.upper(i, j) != s.upper(i, j) || r.upper(i, j) != g.upper(i, j))
                    throw ConstructionMismatchError(
                        "constructions disagree at (" + std::to_string(i) + "," +
                        std::to_string(j) + "): recurrence " + r.upper(i, j).str() +
                        ", triangle sum " + s.upper(i, j).str() + ", graph " +
                        g.upper(i, j).str());
        content = format == "csv" ? matrix_to_csv(r) : matrix_to_json(r).dump() + "\n";
    } else if (kind == "B") {
        IntSkewMatrix b = build_B(n);
        content = format == "csv" ? matrix_to_csv(b) : matrix_to_json(b).dump() + "\n";
    } else if (kind == "Akt") {
        PolySkewMatrix a = build_A_kt(n);
        content = format == "csv" ? matrix_to_csv(a) : matrix_to_json(a).dump() + "\n";
    } else {
        throw UsageError("unknown matrix kind '" + kind + "'");
    }
    write_out(content, out);
    return kExitOk;
}

int cmd_oracle(int n, const std::string& cls, const std::string& engine,
               const std::string& keep, const std::string& render, bool force,
               const std::string& out) {
    IndexSet idx = parse_keep(keep, n);
    BigInt count = 0;
    std::string svg;
    if (engine == "paths") {
        if (n > 8 && !force)
            throw SizeGuardError("path enumeration above n = 8 needs --force");
        PathGraph g = cls == "all" ? build_ad_graph(n) : build_ds_graph(n);
        FamilyMode mode;
        if (cls == "all") {
            if (!keep.empty())
                throw UsageError(
                    "--keep with class 'all' is only supported by --engine dominoes");
            mode = FamilyMode::Free;
        } else if (cls == "diagonal") {
            mode = FamilyMode::Free;
        } else if (cls == "off-diagonal") {
            mode = FamilyMode::Paired;
        } else {
            throw UsageError("unknown class '" + cls + "'");
        }
        std::vector<Family> fams = enumerate_families(g, idx.labels(), mode);
        count = static_cast<long>(fams.size());
        if (!render.empty() && !fams.empty()) svg = family_to_svg(g, fams.front());
    } else if (engine == "dominoes") {
        if (n > 5 && !force)
            throw SizeGuardError("domino enumeration above n = 5 needs --force");
        TilingClass tc;
        if (cls == "all")
            tc = TilingClass::All;
        else if (cls == "diagonal")
            tc = TilingClass::DiagSymmetric;
        else if (cls == "off-diagonal")
            tc = TilingClass::OffDiagSymmetric;
        else
            throw UsageError("unknown class '" + cls + "'");
        std::optional<DominoTiling> sample;
        std::function<void(const DominoTiling&)> visit = [&](const DominoTiling& t) {
            if (!sample) sample = t;
        };
        count = enumerate_tilings(n, tc, idx, render.empty() ? nullptr : &visit);
        if (!render.empty() && sample) svg = tiling_to_svg(*sample);
    } else {
        throw UsageError("unknown engine '" + engine + "'");
    }
    if (!render.empty() && !svg.empty()) write_out(svg, render);
    write_out(count.str() + "\n", out);
    return kExitOk;
}

int cmd_conjecture(const std::string& kind, int max_n, const std::string& cache_path,
                   bool no_cache, const std::string& out) {
    OCache cache;
    std::string path = cache_path.empty() ? default_cache_path() : cache_path;
    if (!no_cache) cache = OCache::load(path);
    OCache* cp = no_cache ? nullptr : &cache;
    std::ostringstream os;
    try {
        if (kind == "int") {
            OSequenceInt seq = extract_o_int(max_n, cp);
            for (std::size_t i = 0; i < seq.values.size(); ++i)
                os << "o_" << i << " = " << seq.values[i].str()
                   << (seq.provenance[i] == Provenance::TableVerified ? "  [table]" : "")
                   << "\n";
        } else if (kind == "poly") {
            OSequencePoly seq = extract_o_poly(max_n, cp);
            for (std::size_t i = 0; i < seq.values.size(); ++i)
                os << "o_" << i << "(k,t) = " << seq.values[i].str()
                   << (seq.provenance[i] == Provenance::TableVerified ? "  [table]" : "")
                   << "\n";
        } else {
            throw UsageError("conjecture kind must be 'int' or 'poly'");
        }
    } catch (const ConjectureViolated& e) {
        if (cp) cache.save(path);
        std::cerr << "product form FAILS at n = " << e.n << "\n"
                  << "  pfaffian = " << e.pfaffian << "\n"
                  << "  divisor  = " << e.divisor << " does not divide it\n";
        return kExitVerification;
    }
    if (cp) cache.save(path);
    write_out(os.str(), out);
    return kExitOk;
}

int cmd_decompose(const std::string& kind, int n, const std::string& out) {
    nlohmann::json j;
    if (kind == "A")
        j = decomposition_to_json(pf_decompose(build_A(n)));
    else if (kind == "B")
        j = decomposition_to_json(pf_decompose(build_B(n)));
    else if (kind == "Akt")
        j = decomposition_to_json(pf_decompose(build_A_kt(n)));
    else
        throw UsageError("unknown matrix kind '" + kind + "'");
    write_out(j.dump() + "\n", out);
    return kExitOk;
}

int cmd_seq(const std::string& kind, int max_p, int max_q, const std::string& out) {
    std::ostringstream os;
    if (kind == "delannoy") {
        for (int p = 0; p <= max_p; ++p) {
            for (int q = 0; q <= max_q; ++q) {
                if (q) os << ",";
                os << delannoy(p, q).str();
            }
            os << "\n";
        }
    } else if (kind == "schroder") {
        for (int p = 0; p <= max_p; ++p) {
            if (p > max_q) break;
            for (int q = p; q <= max_q; ++q) {
                if (q > p) os << ",";
                os << schroder(p, q).str();
            }
            os << "\n";
        }
    } else {
        throw UsageError("seq kind must be 'delannoy' or 'schroder'");
    }
    write_out(os.str(), out);
    return kExitOk;
}

int cmd_selfcheck(const std::string& out) {
    const bool corrupt = std::getenv("PFTIL_SELFCHECK_CORRUPT") != nullptr;
    CheckReport report = selfcheck(corrupt);
    std::ostringstream os;
    int failed = 0;
    for (const auto& c : report.checks) {
        os << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
        if (!c.pass) ++failed;
    }
    os << "checks run: " << report.checks.size() << ", failed: " << failed << "\n";
    write_out(os.str(), out);
    return failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Pfaffian counts of symmetric Aztec-diamond tilings"};
    app.require_subcommand(1);

    std::string cls, keep, kind, format = "json", engine = "paths", render, out,
                cache_path;
    int n = 0, max_n = 0, max_p = 10, max_q = 10;
    bool force = false, no_cache = false;

    CLI::App* count = app.add_subcommand("count", "Pfaffian-based tiling counts");
    count->add_option("--class", cls, "off-diagonal | diagonal | aztec")->required();
    count->add_option("--n", n, "diamond order")->required()->check(CLI::PositiveNumber);
    count->add_option("--keep", keep, "kept SW boundary labels, e.g. 1,2,4");
    count->add_option("--out", out, "write to file instead of stdout");

    CLI::App* matrix = app.add_subcommand("matrix", "export A, B or A(k,t)");
    matrix->add_option("--kind", kind, "A | B | Akt")->required();
    matrix->add_option("--n", n, "matrix order")->required()->check(CLI::PositiveNumber);
    matrix->add_option("--format", format, "json | csv");
    matrix->add_option("--out", out, "write to file instead of stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force enumeration");
    oracle->add_option("--n", n, "diamond order")->required()->check(CLI::PositiveNumber);
    oracle->add_option("--class", cls, "all | diagonal | off-diagonal")->required();
    oracle->add_option("--engine", engine, "paths | dominoes");
    oracle->add_option("--keep", keep, "kept SW boundary labels");
    oracle->add_option("--render", render, "write one sample configuration as SVG");
    oracle->add_flag("--force", force, "lift the size guard");
    oracle->add_option("--out", out, "write to file instead of stdout");

    CLI::App* conj = app.add_subcommand("conjecture", "extract the o-sequences");
    conj->add_option("kind", kind, "int | poly")->required();
    conj->add_option("--max-n", max_n, "extend the sequence to o_{max_n}");
    conj->add_option("--cache", cache_path,
                     "cache file (default pftil-cache.json, or $PFTIL_CACHE)");
    conj->add_flag("--no-cache", no_cache, "do not read or write the cache");
    conj->add_option("--out", out, "write to file instead of stdout");

    CLI::App* dec = app.add_subcommand("decompose", "T/R decomposition of a matrix");
    dec->add_option("--kind", kind, "A | B | Akt")->required();
    dec->add_option("--n", n, "matrix order (even)")->required()->check(CLI::PositiveNumber);
    dec->add_option("--out", out, "write to file instead of stdout");

    CLI::App* seq = app.add_subcommand("seq", "print sequence tables as CSV");
    seq->add_option("--kind", kind, "delannoy | schroder")->required();
    seq->add_option("--max-p", max_p, "largest p (default 10)");
    seq->add_option("--max-q", max_q, "largest q (default 10)");
    seq->add_option("--out", out, "write to file instead of stdout");

    CLI::App* check = app.add_subcommand("selfcheck", "run the verification battery");
    check->add_option("--out", out, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(cls, n, keep, out);
        if (matrix->parsed()) return cmd_matrix(kind, n, format, out);
        if (oracle->parsed())
            return cmd_oracle(n, cls, engine, keep, render, force, out);
        if (conj->parsed()) {
            if (max_n == 0) max_n = kind == "poly" ? 8 : 25;
            return cmd_conjecture(kind, max_n, cache_path, no_cache, out);
        }
        if (dec->parsed()) return cmd_decompose(kind, n, out);
        if (seq->parsed()) return cmd_seq(kind, max_p, max_q, out);
        if (check->parsed()) return cmd_selfcheck(out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConstructionMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const SingularPrincipalMinorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
