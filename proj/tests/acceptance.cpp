// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "qflag/qflag.hpp"
#include "qflag/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qflag;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what;
        pass = false;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds) {
        o.pass = false;
        o.detail += (o.detail.empty() ? "" : "; ") + std::string("runtime over limit");
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.3f s%s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
                limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(limit_seconds)) + " s").c_str() : "",
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

WeylGroup preset_group(const std::string& t) { return WeylGroup(build_root_system(cartan_preset(t))); }

bool nonnegative_integer_coefficients(const Polynomial& p) {
    for (const auto& [m, c] : p.terms())
        if (c < 0 || !is_integer(c)) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "degree-two relation for A1, A2, A3, A4, B2, G2", 10, [] {
        Outcome o;
        for (std::string t : {"A1", "A2", "A3", "A4", "B2", "G2"})
            o.require(degree2_relation_check(preset_group(t), t).pass(), t);
        return o;
    });

    criterion(2, "Dubrovin flatness for A2, A3, B2, G2, A4", 300, [] {
        Outcome o;
        for (std::string t : {"A2", "A3", "B2", "G2", "A4"}) {
            const auto start = std::chrono::steady_clock::now();
            o.require(flatness_check(preset_group(t), t).pass(), t);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (t != "A4") o.require(secs < 10, t + " not within seconds");
        }
        return o;
    });

    criterion(3, "classical limit of omega_i equals cup-product Monk matrix, n <= 4", 0, [] {
        Outcome o;
        for (int n = 2; n <= 4; ++n) {
            BorelCohomology b(n);
            const WeylGroup& g = b.group().weyl();
            for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
                const OperatorMatrix omega = chevalley_operator_matrix(g, i);
                const std::size_t si = g.index_of_word({static_cast<int>(i)});
                for (std::size_t w = 0; w < g.size(); ++w) {
                    const CohomologyClass cup = b.cup_product(si, w);
                    for (std::size_t v = 0; v < g.size(); ++v) {
                        auto it = cup.schubert_coeffs.find(v);
                        const Polynomial expected = it == cup.schubert_coeffs.end() ? Polynomial() : Polynomial(it->second);
                        o.require(set_zero(omega(v, w), Variable::Kind::Q) == expected,
                                  "n=" + std::to_string(n) + " entry (" + g.name(v) + ", " + g.name(w) + ")");
                    }
                }
            }
        }
        return o;
    });

    criterion(4, "presentation flatness and divisor products agree with Chevalley, n = 3, 4", 120, [] {
        Outcome o;
        for (int n = 3; n <= 4; ++n) {
            QuantumFlag qf(n);
            o.require(flatness_check_presentation(qf).pass(), "Omega flatness n=" + std::to_string(n));
            const WeylGroup& g = qf.group().weyl();
            for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
                const std::size_t si = g.index_of_word({static_cast<int>(i)});
                for (std::size_t w = 0; w < g.size(); ++w)
                    o.require(qf.quantum_product(si, w) == quantum_chevalley(g, i, w),
                              "n=" + std::to_string(n) + " s" + std::to_string(i + 1) + " * " + g.name(w));
            }
        }
        return o;
    });

    criterion(5, "Heisenberg identity battery, n <= 4", 120, [] {
        Outcome o;
        for (int n = 2; n <= 4; ++n) {
            VerifyReport r = verify_identities(n);
            for (const auto& f : r.families())
                if (f.name != "E_i^n . 1 = 0") o.require(f.pass && f.checked > 0, "n=" + std::to_string(n) + " " + f.name);
        }
        return o;
    });

    criterion(6, "annihilation E_i^n . 1 = 0, n = 2, 3, 4", 60, [] {
        Outcome o;
        for (int n = 2; n <= 4; ++n) {
            TodaElements e(n);
            DModule m(type_a_group(n));
            for (int i = 1; i <= n; ++i)
                o.require(m.act(e.get(i, n), m.unit()).is_zero(), "n=" + std::to_string(n) + " i=" + std::to_string(i));
        }
        return o;
    });

    criterion(7, "straightening equals Groebner normal form on all pairs of standard monomials, n = 3", 0, [] {
        Outcome o;
        QuantumFlag qf(3);
        const auto& basis = qf.standard_basis();
        std::size_t pairs = 0;
        for (const auto& a : basis)
            for (const auto& b : basis) {
                EExpression e = EExpression::standard(a) * EExpression::standard(b);
                const Polynomial input = e.expand(qf.elementary());
                const Polynomial output = qf.expand(qf.straighten(e));
                o.require(qf.quantum_normal_form(input) == qf.quantum_normal_form(output),
                          "E" + index_string(a) + " * E" + index_string(b));
                ++pairs;
            }
        o.require(pairs == 36, "expected 36 ordered pairs");
        return o;
    });

    criterion(8, "spot values", 0, [] {
        Outcome o;
        const Polynomial x1 = Polynomial::x(1), q1 = Polynomial::q(1), q2 = Polynomial::q(2);
        QuantumFlag fl3(3);
        const SymmetricGroup& g3 = fl3.group();
        o.require(fl3.quantize_schubert(g3.index_of("312")) == x1.pow(2) - q1, "Fl3 quantum Giambelli of 312");
        QSchubertVector top(g3.size());
        top[g3.index_of("231")] = q1;
        top[g3.index_of("123")] = q1 * q2;
        const std::size_t s1 = g3.index_of("213"), w0 = g3.index_of("321");
        o.require(fl3.quantum_product(s1, w0) == top, "Fl3 s1 * w0 via presentation");
        o.require(quantum_chevalley(g3.weyl(), 0, w0) == top, "Fl3 s1 * w0 via Chevalley");
        QuantumFlag fl2(2);
        QSchubertVector sq(2);
        sq[fl2.group().index_of("12")] = q1;
        o.require(fl2.quantum_product(1, 1) == sq, "Fl2 s * s");
        return o;
    });

    criterion(9, "nonnegative integer structure constants, n = 3, 4", 0, [] {
        Outcome o;
        for (int n = 3; n <= 4; ++n) {
            QuantumFlag qf(n);
            const std::size_t size = qf.group().size();
            for (std::size_t u = 0; u < size; ++u)
                for (std::size_t v = u; v < size; ++v) {
                    const QSchubertVector c = qf.quantum_product(u, v);
                    for (std::size_t w = 0; w < size; ++w)
                        o.require(nonnegative_integer_coefficients(c[w]),
                                  "n=" + std::to_string(n) + " " + qf.group().name(u) + "*" + qf.group().name(v));
                }
            o.require(positivity_check(qf.group().weyl(), "n=" + std::to_string(n)).pass(),
                      "Chevalley-route positivity n=" + std::to_string(n));
        }
        return o;
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures);
    return failures == 0 ? 0 : 1;
}
