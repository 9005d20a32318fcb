#ifndef QFLAG_SUITES_HPP
#define QFLAG_SUITES_HPP

// Verification suites tying the classical, Chevalley and presentation layers together.

#include "qflag/borel.hpp"
#include "qflag/chevalley.hpp"
#include "qflag/flag_presentation.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/report.hpp"
#include "qflag/root_system.hpp"

#include <cstddef>
#include <memory>
#include <string>

namespace qflag {

inline std::shared_ptr<const WeylGroup> type_a_group(int n) {
    return std::make_shared<const WeylGroup>(build_root_system(cartan_preset("A" + std::to_string(n - 1))));
}

/// Monk matrix of sigma_{s_i} (i 0-based) from Schubert polynomial cup products.
inline OperatorMatrix cup_product_monk_matrix(const BorelCohomology& borel, std::size_t i) {
    const SymmetricGroup& g = borel.group();
    const std::size_t si = g.weyl().index_of_word({static_cast<int>(i)});
    OperatorMatrix m(g.size());
    for (std::size_t w = 0; w < g.size(); ++w)
        for (const auto& [v, c] : borel.cup_product(si, w).schubert_coeffs) m(v, w) = Polynomial(c);
    return m;
}

inline OperatorMatrix set_q_zero(const OperatorMatrix& m) {
    return m.transform([](const Polynomial& p) { return set_zero(p, Variable::Kind::Q); });
}

/// q -> 0 of the quantum Chevalley operators, of the Omega_k and of the quantum
/// Giambelli polynomials against the classical data of Fl_n.
inline VerifyReport classical_limit_check(const QuantumFlag& qf) {
    const int n = qf.n();
    const BorelCohomology& borel = qf.borel();
    const auto g = type_a_group(n);
    const auto names = weyl_names(*g);
    VerifyReport report("classical-limit", "n=" + std::to_string(n));
    report.add_convention(kChevalleyConvention);
    report.add_convention(kMultiplierConvention);

    report.begin_family("omega_i at q=0 equals Monk matrix from cup products");
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i)
        detail::compare_matrices(report, set_q_zero(chevalley_operator_matrix(*g, i)), cup_product_monk_matrix(borel, i),
                                 static_cast<int>(i) + 1, -1, names);

    report.begin_family("Omega_k at q=0 equals classical multiplication by lambda_k");
    for (int k = 1; k <= n - 1; ++k) {
        const OperatorMatrix omega = set_q_zero(qf.omega_matrix(k));
        const RationalMatrix classical = qf.classical_lambda_matrix(k);
        const auto std_names = qf.standard_names();
        for (std::size_t r = 0; r < omega.size(); ++r)
            for (std::size_t c = 0; c < omega.size(); ++c) {
                report.count_check();
                const Polynomial rhs(classical(r, c));
                if (omega(r, c) != rhs) report.fail({"", k, -1, std_names[r], std_names[c], to_string(omega(r, c)), to_string(rhs)});
            }
    }

    report.begin_family("quantum Giambelli at q=0 equals Schubert polynomial mod I_n, same degree");
    for (std::size_t w = 0; w < qf.group().size(); ++w) {
        report.count_check();
        const Polynomial quantized = qf.quantize_schubert(w);
        const Polynomial lhs = borel.normal_form(set_zero(quantized, Variable::Kind::Q));
        const Polynomial rhs = borel.normal_form(borel.schubert(w));
        const GradingReport deg = graded_degree(quantized);
        const int expected = 2 * static_cast<int>(qf.group().weyl().length(w));
        if (lhs != rhs || !deg.homogeneous || deg.degree != expected)
            report.fail({"", -1, -1, qf.group().name(w), "", to_string(lhs) + " [" + to_string(deg) + "]",
                         to_string(rhs) + " [degree " + std::to_string(expected) + "]"});
    }
    return report;
}

inline VerifyReport classical_limit_check(int n) { return classical_limit_check(QuantumFlag(n)); }

/// Omega flatness in the presentation plus agreement of the presentation and
/// Chevalley routes on all divisor-times-class products.
inline VerifyReport quantization_check(const QuantumFlag& qf) {
    const int n = qf.n();
    VerifyReport report("quantization", "n=" + std::to_string(n));
    report.merge(flatness_check_presentation(qf));

    const auto g = type_a_group(n);
    report.begin_family("presentation product equals quantum Chevalley on divisors");
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
        const std::size_t si = g->index_of_word({static_cast<int>(i)});
        for (std::size_t w = 0; w < g->size(); ++w) {
            report.count_check();
            const QSchubertVector lhs = qf.quantum_product(si, w);
            const QSchubertVector rhs = quantum_chevalley(*g, i, w);
            for (std::size_t v = 0; v < g->size(); ++v)
                if (lhs[v] != rhs[v]) {
                    report.fail({"", static_cast<int>(i) + 1, -1, g->name(w), g->name(v), to_string(lhs[v]), to_string(rhs[v])});
                    break;
                }
        }
    }
    return report;
}

inline VerifyReport quantization_check(int n) { return quantization_check(QuantumFlag(n)); }

/// Presentation and Chevalley-only products agree on every pair (u, v).
inline VerifyReport full_product_check(const QuantumFlag& qf) {
    const auto g = type_a_group(qf.n());
    const ChevalleyProduct chevalley(g);
    VerifyReport report("product-agreement", "n=" + std::to_string(qf.n()));
    report.begin_family("presentation product equals Chevalley product");
    for (std::size_t v = 0; v < g->size(); ++v) {
        const auto column = chevalley.multiply_all(QSchubertVector::basis(g->size(), v));
        for (std::size_t u = 0; u < g->size(); ++u) {
            report.count_check();
            const QSchubertVector lhs = qf.quantum_product(u, v);
            if (!(lhs == column[u])) report.fail({"", -1, -1, g->name(u), g->name(v), "presentation", "chevalley"});
        }
    }
    return report;
}

/// Every quantum structure constant is a polynomial in q with nonnegative integer coefficients.
inline VerifyReport positivity_check(const WeylGroup& g, const std::string& subject = "") {
    const ChevalleyProduct product(std::make_shared<const WeylGroup>(g));
    VerifyReport report("positivity", subject);
    report.begin_family("nonnegative integer structure constants");
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto column = product.multiply_all(QSchubertVector::basis(g.size(), v));
        for (std::size_t u = 0; u < g.size(); ++u)
            for (std::size_t w = 0; w < g.size(); ++w) {
                report.count_check();
                for (const auto& [m, c] : column[u][w].terms())
                    if (c < 0 || !is_integer(c)) {
                        report.fail({"", -1, -1, g.name(u) + "*" + g.name(v), g.name(w), to_string(column[u][w]), ">= 0"});
                        break;
                    }
            }
    }
    return report;
}

}  // namespace qflag

#endif  // QFLAG_SUITES_HPP
