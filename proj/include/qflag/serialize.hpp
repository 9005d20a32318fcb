#ifndef QFLAG_SERIALIZE_HPP
#define QFLAG_SERIALIZE_HPP

// JSON and text renderings shared by the command-line tool and the tests.

#include "qflag/chevalley.hpp"
#include "qflag/heisenberg.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/rational.hpp"
#include "qflag/report.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace qflag {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "qflag/1";

inline Json json_document() {
    Json j;
    j["schema"] = kSchema;
    return j;
}

/// Nonzero coefficients as {name: polynomial text}, in basis order.
inline Json to_json(const QSchubertVector& v, const std::vector<std::string>& names) {
    Json j = Json::object();
    for (std::size_t w = 0; w < v.size(); ++w)
        if (!v[w].is_zero()) j[names[w]] = to_string(v[w]);
    return j;
}

/// {"Q^I P^J h^m": "p/q"} in descending monomial order.
inline Json to_json(const HeisenbergElement& e) {
    Json j = Json::object();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) j[to_string(it->first)] = to_string(it->second);
    return j;
}

inline Json to_json(const OperatorMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const VerifyReport& report) {
    Json j = json_document();
    j["suite"] = report.suite();
    j["subject"] = report.subject();
    j["pass"] = report.pass();
    j["conventions"] = report.conventions();
    Json families = Json::array();
    for (const auto& f : report.families()) families.push_back({{"name", f.name}, {"pass", f.pass}, {"checked", f.checked}});
    j["families"] = std::move(families);
    j["failure_count"] = report.failure_count();
    Json failures = Json::array();
    for (const auto& f : report.failures()) {
        auto index = [](int v) { return v < 0 ? Json(nullptr) : Json(v); };
        failures.push_back({{"family", f.family},
                            {"i", index(f.i)},
                            {"j", index(f.j)},
                            {"row", f.row},
                            {"col", f.col},
                            {"lhs", f.lhs},
                            {"rhs", f.rhs}});
    }
    j["failures"] = std::move(failures);
    return j;
}

/// "sigma[312] + q1·sigma[123]", longest classes first.
inline std::string schubert_text(const QSchubertVector& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t w = v.size(); w-- > 0;) {
        const Polynomial& c = v[w];
        if (c.is_zero()) continue;
        std::string coeff;
        bool negative = false;
        if (c.size() == 1) {
            const auto& [m, r] = *c.terms().begin();
            negative = r < 0;
            const Rational mag = negative ? Rational(-r) : r;
            coeff = to_string(Polynomial::term(m, mag));
            if (coeff == "1") coeff.clear();
        } else {
            coeff = "(" + to_string(c) + ")";
        }
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (!coeff.empty()) out += coeff + "·";
        out += "sigma[" + names[w] + "]";
    }
    return out.empty() ? "0" : out;
}

inline std::string report_text(const VerifyReport& report) {
    std::string out = "suite " + report.suite() + " (" + report.subject() + "): " + (report.pass() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : report.conventions()) out += "  convention: " + c + "\n";
    for (const auto& f : report.families())
        out += "  " + std::string(f.pass ? "ok   " : "FAIL ") + f.name + " [" + std::to_string(f.checked) + " checks]\n";
    for (const auto& f : report.failures()) {
        out += "  failure in " + f.family + ":";
        if (f.i >= 0) out += " i=" + std::to_string(f.i);
        if (f.j >= 0) out += " j=" + std::to_string(f.j);
        if (!f.row.empty()) out += " row=" + f.row;
        if (!f.col.empty()) out += " col=" + f.col;
        out += " lhs=" + f.lhs + " rhs=" + f.rhs + "\n";
    }
    if (report.failure_count() > report.failures().size())
        out += "  (" + std::to_string(report.failure_count() - report.failures().size()) + " further failures)\n";
    return out;
}

}  // namespace qflag

#endif  // QFLAG_SERIALIZE_HPP
