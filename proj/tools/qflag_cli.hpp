#ifndef QFLAG_TOOLS_QFLAG_CLI_HPP
#define QFLAG_TOOLS_QFLAG_CLI_HPP

#include "qflag/qflag.hpp"
#include "qflag/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflag::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;
inline constexpr int kDefaultMaxN = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int max_n_from_env() {
    const char* raw = std::getenv("QFLAG_MAX_N");
    if (raw == nullptr || *raw == '\0') return kDefaultMaxN;
    try {
        std::size_t used = 0;
        const int v = std::stoi(raw, &used);
        if (used != std::string(raw).size() || v < 2 || v > 8) throw UsageError("");
        return v;
    } catch (const std::exception&) {
        throw UsageError("QFLAG_MAX_N must be an integer in 2..8, got '" + std::string(raw) + "'");
    }
}

inline void check_n(int n, int max_n) {
    if (n < 2) throw UsageError("--n must be at least 2");
    if (n > max_n) throw UsageError("--n " + std::to_string(n) + " exceeds QFLAG_MAX_N=" + std::to_string(max_n));
}

/// "s1s2", "1,2", "12" or "e"; 1-based generators, returned 0-based.
inline std::vector<int> parse_word(const std::string& text) {
    std::vector<int> word;
    if (text == "e" || text.empty()) return word;
    for (char c : text) {
        if (c == 's' || c == ',' || c == ' ') continue;
        if (c < '1' || c > '9') throw UsageError("invalid reduced word '" + text + "'");
        word.push_back(c - '1');
    }
    return word;
}

inline std::size_t parse_element(const SymmetricGroup& g, const std::string& text, bool as_word) {
    try {
        if (as_word) return g.index_of(permutation_from_word(parse_word(text), g.n()));
        return g.index_of(parse_permutation(text, g.n()));
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

inline std::vector<std::string> permutation_names(const SymmetricGroup& g) {
    std::vector<std::string> names;
    for (std::size_t w = 0; w < g.size(); ++w) names.push_back(g.name(w));
    return names;
}

inline std::shared_ptr<const WeylGroup> group_for_type(const std::string& type, const std::string& cartan_json, int max_n) {
    CartanMatrix cartan;
    try {
        if (!cartan_json.empty()) {
            cartan = CartanMatrix(Json::parse(cartan_json).get<IntMatrix>());
        } else {
            cartan = cartan_preset(type);
        }
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid type or Cartan matrix: ") + e.what());
    }
    if (static_cast<int>(cartan.rank()) + 1 > max_n)
        throw UsageError("rank " + std::to_string(cartan.rank()) + " exceeds QFLAG_MAX_N=" + std::to_string(max_n));
    try {
        return std::make_shared<const WeylGroup>(build_root_system(cartan));
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

struct Options {
    std::string format;
    int n = 0;
    std::string u, v, w;
    std::string via = "presentation";
    bool word = false;
    std::string what;
    std::string suite;
    std::string type;
    std::string cartan;
};

inline int cmd_product(const Options& o, int max_n, std::ostream& out, std::ostream& err) {
    check_n(o.n, max_n);
    const QuantumFlag qf(o.n, max_n);
    const SymmetricGroup& g = qf.group();
    const std::size_t u = parse_element(g, o.u, o.word), v = parse_element(g, o.v, o.word);
    const auto names = permutation_names(g);

    std::optional<QSchubertVector> presentation, chevalley;
    if (o.via != "chevalley") presentation = qf.quantum_product(u, v);
    if (o.via != "presentation") {
        const ChevalleyProduct product(std::make_shared<const WeylGroup>(g.weyl()));
        chevalley = product.multiply(u, v);
    }
    const QSchubertVector& result = presentation ? *presentation : *chevalley;
    const bool mismatch = presentation && chevalley && !(*presentation == *chevalley);

    if (o.format == "json") {
        Json j = json_document();
        j["command"] = "product";
        j["n"] = o.n;
        j["u"] = names[u];
        j["v"] = names[v];
        j["via"] = o.via;
        j["result"] = to_json(result, names);
        if (mismatch) {
            j["mismatch"] = {{"presentation", to_json(*presentation, names)}, {"chevalley", to_json(*chevalley, names)}};
        }
        out << j.dump(2) << "\n";
    } else {
        out << schubert_text(result, names) << "\n";
    }
    if (mismatch) {
        err << "cross-check mismatch\n  presentation: " << schubert_text(*presentation, names)
            << "\n  chevalley:    " << schubert_text(*chevalley, names) << "\n";
        return kExitMismatch;
    }
    return kExitPass;
}

inline int cmd_quantize(const Options& o, int max_n, std::ostream& out) {
    check_n(o.n, max_n);
    const QuantumFlag qf(o.n, max_n);
    const std::size_t w = parse_element(qf.group(), o.w, o.word);
    const Polynomial p = qf.quantize_schubert(w);
    if (o.format == "json") {
        Json j = json_document();
        j["command"] = "quantize";
        j["n"] = o.n;
        j["w"] = qf.group().name(w);
        j["polynomial"] = to_string(p);
        j["degree"] = to_string(graded_degree(p));
        out << j.dump(2) << "\n";
    } else {
        out << to_string(p) << "\n";
    }
    return kExitPass;
}

inline int cmd_table(const Options& o, int max_n, std::ostream& out) {
    check_n(o.n, max_n);
    const QuantumFlag qf(o.n, max_n);
    const SymmetricGroup& g = qf.group();
    Json j = json_document();
    j["command"] = "table";
    j["n"] = o.n;
    j["what"] = o.what;
    std::string text;
    if (o.what == "schubert" || o.what == "qgiambelli") {
        Json entries = Json::object();
        for (std::size_t w = 0; w < g.size(); ++w) {
            const Polynomial p = o.what == "schubert" ? qf.borel().schubert(w) : qf.quantize_schubert(w);
            entries[g.name(w)] = to_string(p);
            text += g.name(w) + " -> " + to_string(p) + "\n";
        }
        j["entries"] = std::move(entries);
    } else {
        j["basis"] = qf.standard_names();
        j["convention"] = kMultiplierConvention;
        Json matrices = Json::array();
        for (int k = 1; k <= o.n - 1; ++k) {
            const OperatorMatrix m = qf.omega_matrix(k);
            matrices.push_back({{"k", k}, {"rows", to_json(m)}});
            text += "Omega_" + std::to_string(k) + "\n";
            for (std::size_t r = 0; r < m.size(); ++r) {
                for (std::size_t c = 0; c < m.size(); ++c) text += (c ? "\t" : "  ") + to_string(m(r, c));
                text += "\n";
            }
        }
        j["matrices"] = std::move(matrices);
    }
    if (o.format == "text")
        out << text;
    else
        out << j.dump(2) << "\n";
    return kExitPass;
}

inline int cmd_verify(const Options& o, int max_n, std::ostream& out) {
    const bool by_type = !o.type.empty() || !o.cartan.empty();
    if (by_type == (o.n != 0)) throw UsageError("verify needs exactly one of --type/--cartan or --n");
    if (!o.type.empty() && !o.cartan.empty()) throw UsageError("--type and --cartan are exclusive");

    // type A_{n-1} subject for the Fl_n suites
    int n = o.n;
    std::shared_ptr<const WeylGroup> g;
    std::string subject;
    if (by_type) {
        g = group_for_type(o.type, o.cartan, max_n);
        subject = o.type.empty() ? "cartan " + o.cartan : o.type;
        const auto& a = g->root_system().cartan;
        bool type_a = true;
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < a.rank(); ++j) {
                const int expected = i == j ? 2 : (i + 1 == j || j + 1 == i ? -1 : 0);
                type_a = type_a && a(i, j) == expected;
            }
        if (type_a) n = static_cast<int>(a.rank()) + 1;
    } else {
        check_n(n, max_n);
        g = type_a_group(n);
        subject = "A" + std::to_string(n - 1);
    }
    auto needs_fl = [&] {
        if (n == 0) throw UsageError("suite " + o.suite + " is only defined for type A");
    };

    VerifyReport report;
    if (o.suite == "flatness") {
        report = VerifyReport("flatness", subject);
        report.merge(flatness_check(*g, subject));
        if (o.n != 0) report.merge(flatness_check_presentation(QuantumFlag(n, max_n)));
    } else if (o.suite == "degree2") {
        report = degree2_relation_check(*g, subject);
    } else if (o.suite == "heisenberg") {
        needs_fl();
        report = verify_identities(n);
    } else if (o.suite == "quantization") {
        needs_fl();
        report = quantization_check(QuantumFlag(n, max_n));
    } else if (o.suite == "classical-limit") {
        needs_fl();
        report = classical_limit_check(QuantumFlag(n, max_n));
    } else {
        throw UsageError("unknown suite '" + o.suite + "'");
    }

    if (o.format == "json")
        out << to_json(report).dump(2) << "\n";
    else
        out << report_text(report);
    return report.pass() ? kExitPass : kExitVerifyFailure;
}

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact quantum cohomology of flag manifolds"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* product = app.add_subcommand("product", "Quantum product of two Schubert classes of Fl_n");
    product->add_option("--n", o.n, "Flag manifold Fl_n")->required();
    product->add_option("--u", o.u, "First class (one-line permutation)")->required();
    product->add_option("--v", o.v, "Second class (one-line permutation)")->required();
    product->add_option("--via", o.via, "Product route")->check(CLI::IsMember({"presentation", "chevalley", "both"}));
    product->add_flag("--word", o.word, "Read classes as reduced words such as s1s2");

    auto* quantize = app.add_subcommand("quantize", "Quantum Giambelli polynomial of a Schubert class");
    quantize->add_option("--n", o.n, "Flag manifold Fl_n")->required();
    quantize->add_option("--w", o.w, "Class (one-line permutation)")->required();
    quantize->add_flag("--word", o.word, "Read the class as a reduced word");

    auto* table = app.add_subcommand("table", "Tables of Schubert, quantum Giambelli or Omega data");
    table->add_option("--n", o.n, "Flag manifold Fl_n")->required();
    table->add_option("--what", o.what, "Table kind")->required()->check(
        CLI::IsMember({"schubert", "qgiambelli", "omega"}));

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "flatness|degree2|heisenberg|quantization|classical-limit")->required();
    verify->add_option("--type", o.type, "Preset type such as A3, B2, G2");
    verify->add_option("--n", o.n, "Flag manifold Fl_n (type A_{n-1})");
    verify->add_option("--cartan", o.cartan, "Cartan matrix as a JSON integer array");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        const int max_n = max_n_from_env();
        if (*product) {
            if (o.format.empty()) o.format = "text";
            return cmd_product(o, max_n, out, err);
        }
        if (*quantize) {
            if (o.format.empty()) o.format = "text";
            return cmd_quantize(o, max_n, out);
        }
        if (*table) {
            if (o.format.empty()) o.format = "json";
            return cmd_table(o, max_n, out);
        }
        if (o.format.empty()) o.format = "text";
        return cmd_verify(o, max_n, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qflag::cli

#endif  // QFLAG_TOOLS_QFLAG_CLI_HPP
