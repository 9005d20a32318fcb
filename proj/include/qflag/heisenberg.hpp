#ifndef QFLAG_HEISENBERG_HPP
#define QFLAG_HEISENBERG_HPP

// The algebra D over Q[h] generated by Q_i, P_i with
//     [Q_i, Q_j] = [P_i, P_j] = 0,   [P_i, Q_j] = delta_ij h Q_j,
// stored in normal order (all Q's left of all P's), its Toda elements, and
// the D-module structure Q_i.a = q_i a, P_i.a = sigma_{s_i} o a + h q_i d/dq_i a.

#include "qflag/chevalley.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/report.hpp"
#include "qflag/root_system.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflag {

/// Q^I P^J h^m.
struct HeisenbergMonomial {
    std::array<std::uint8_t, kMaxIndex> q{};
    std::array<std::uint8_t, kMaxIndex> p{};
    std::uint8_t h = 0;

    int degree() const {
        int d = 2 * h;
        for (int i = 0; i < kMaxIndex; ++i) d += 4 * q[static_cast<std::size_t>(i)] + 2 * p[static_cast<std::size_t>(i)];
        return d;
    }

    friend auto operator<=>(const HeisenbergMonomial&, const HeisenbergMonomial&) = default;
    friend bool operator==(const HeisenbergMonomial&, const HeisenbergMonomial&) = default;
};

inline std::string to_string(const HeisenbergMonomial& m) {
    std::string out;
    auto emit = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (!out.empty()) out += '*';
        out += name;
        if (e > 1) out += "^" + std::to_string(e);
    };
    for (int i = 0; i < kMaxIndex; ++i) emit("Q" + std::to_string(i + 1), m.q[static_cast<std::size_t>(i)]);
    for (int i = 0; i < kMaxIndex; ++i) emit("P" + std::to_string(i + 1), m.p[static_cast<std::size_t>(i)]);
    emit("h", m.h);
    return out.empty() ? "1" : out;
}

namespace detail {

inline std::uint8_t narrow_exponent(int e) {
    if (e < 0 || e > 255) throw std::overflow_error("Heisenberg exponent out of range");
    return static_cast<std::uint8_t>(e);
}

inline Rational binomial(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace detail

class HeisenbergElement {
public:
    using TermMap = std::map<HeisenbergMonomial, Rational>;

    HeisenbergElement() = default;
    explicit HeisenbergElement(const Rational& c) { add_term(HeisenbergMonomial{}, c); }

    static HeisenbergElement Q(int i) { return generator(i, true); }
    static HeisenbergElement P(int i) { return generator(i, false); }
    static HeisenbergElement hbar() {
        HeisenbergMonomial m;
        m.h = 1;
        return term(m, Rational(1));
    }
    static HeisenbergElement term(const HeisenbergMonomial& m, const Rational& c) {
        HeisenbergElement e;
        e.add_term(m, c);
        return e;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const HeisenbergMonomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    HeisenbergElement& operator+=(const HeisenbergElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    HeisenbergElement& operator-=(const HeisenbergElement& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    HeisenbergElement& operator*=(const Rational& c) {
        if (c == 0) terms_.clear();
        for (auto& t : terms_) t.second *= c;
        return *this;
    }

    friend HeisenbergElement operator+(HeisenbergElement a, const HeisenbergElement& b) { return a += b; }
    friend HeisenbergElement operator-(HeisenbergElement a, const HeisenbergElement& b) { return a -= b; }
    friend HeisenbergElement operator-(HeisenbergElement a) { return a *= Rational(-1); }
    friend HeisenbergElement operator*(HeisenbergElement a, const Rational& c) { return a *= c; }
    friend HeisenbergElement operator*(const Rational& c, HeisenbergElement a) { return a *= c; }

    /// Normal-ordered product, using P_i^a Q_i^b = Q_i^b (P_i + b h)^a.
    friend HeisenbergElement operator*(const HeisenbergElement& x, const HeisenbergElement& y) {
        HeisenbergElement r;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) multiply_monomials(r, mx, my, cx * cy);
        return r;
    }

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;

private:
    static HeisenbergElement generator(int i, bool is_q) {
        if (i < 1 || i > kMaxIndex) throw std::out_of_range("Heisenberg generator index out of range");
        HeisenbergMonomial m;
        (is_q ? m.q : m.p)[static_cast<std::size_t>(i) - 1] = 1;
        return term(m, Rational(1));
    }

    static void multiply_monomials(HeisenbergElement& out, const HeisenbergMonomial& x, const HeisenbergMonomial& y,
                                   const Rational& c) {
        // (Q^I P^J h^m)(Q^K P^L h^r) = Q^{I+K} prod_i (P_i + k_i h)^{j_i} P^L h^{m+r}
        HeisenbergMonomial base;
        for (std::size_t i = 0; i < kMaxIndex; ++i) {
            base.q[i] = detail::narrow_exponent(x.q[i] + y.q[i]);
            base.p[i] = y.p[i];
        }
        base.h = detail::narrow_exponent(x.h + y.h);
        std::vector<std::pair<HeisenbergMonomial, Rational>> partial{{base, c}};
        for (std::size_t i = 0; i < kMaxIndex; ++i) {
            const int j = x.p[i];
            if (j == 0) continue;
            const int k = y.q[i];
            std::vector<std::pair<HeisenbergMonomial, Rational>> next;
            for (const auto& [m, coeff] : partial) {
                if (k == 0) {
                    HeisenbergMonomial t = m;
                    t.p[i] = detail::narrow_exponent(t.p[i] + j);
                    next.emplace_back(t, coeff);
                    continue;
                }
                mpz_class kpow = 1;  // k^{j - r}, built from r = j downwards
                for (int r = j; r >= 0; --r) {
                    HeisenbergMonomial t = m;
                    t.p[i] = detail::narrow_exponent(t.p[i] + r);
                    t.h = detail::narrow_exponent(t.h + (j - r));
                    next.emplace_back(t, coeff * detail::binomial(j, r) * Rational(kpow));
                    kpow *= k;
                }
            }
            partial = std::move(next);
        }
        for (const auto& [m, coeff] : partial) out.add_term(m, coeff);
    }

    TermMap terms_;
};

inline HeisenbergElement commutator(const HeisenbergElement& a, const HeisenbergElement& b) { return a * b - b * a; }

/// Homogeneous degree under deg Q = 4, deg P = deg h = 2; nullopt if mixed,
/// GradingReport::kNegativeInfinity for zero.
inline GradingReport graded_degree(const HeisenbergElement& e) {
    if (e.is_zero()) return {true, GradingReport::kNegativeInfinity};
    int d = e.terms().begin()->first.degree();
    for (const auto& [m, c] : e.terms())
        if (m.degree() != d) return {false, std::nullopt};
    return {true, d};
}

inline std::string to_string(const HeisenbergElement& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool unit = m == HeisenbergMonomial{};
        out += detail::coefficient_prefix(c, first, unit);
        if (!unit) out += to_string(m);
        first = false;
    }
    return out;
}

/// Toda elements E_i^k of the rank n-1 algebra, 0 <= i <= k <= n, built by
///     E_i^k = E_i^{k-1} + X_k E_{i-1}^{k-1} + Q_{k-1} E_{i-2}^{k-2},  X_k = P_{k-1} - P_k,
/// with P_0 = P_n = 0.
class TodaElements {
public:
    explicit TodaElements(int n) : n_(n) {
        if (n < 2 || n > kMaxIndex + 1) throw std::out_of_range("n out of range for Toda elements");
        rows_.resize(static_cast<std::size_t>(n) + 1);
        rows_[0] = {HeisenbergElement(Rational(1))};
        for (int k = 1; k <= n; ++k) {
            const HeisenbergElement xk = x(k);
            rows_[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(k) + 1);
            for (int i = 0; i <= k; ++i) {
                HeisenbergElement e = get(i, k - 1);
                const HeisenbergElement& lower = get(i - 1, k - 1);
                if (!lower.is_zero()) {
                    // X_k commutes with E^{k-1}: no Q_{k-1} occurs there
                    if (xk * lower != lower * xk) throw std::logic_error("X_k does not commute with E^{k-1}");
                    e += xk * lower;
                }
                if (k >= 2) {
                    const HeisenbergElement& lower2 = get(i - 2, k - 2);
                    if (!lower2.is_zero()) {
                        const HeisenbergElement qk = HeisenbergElement::Q(k - 1);
                        if (qk * lower2 != lower2 * qk) throw std::logic_error("Q_{k-1} does not commute with E^{k-2}");
                        e += qk * lower2;
                    }
                }
                rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = std::move(e);
            }
        }
    }

    int n() const { return n_; }

    /// P_j, or zero for j = 0 and j >= n.
    HeisenbergElement p(int j) const { return (j <= 0 || j >= n_) ? HeisenbergElement() : HeisenbergElement::P(j); }

    /// X_k = P_{k-1} - P_k.
    HeisenbergElement x(int k) const { return p(k - 1) - p(k); }

    const HeisenbergElement& get(int i, int k) const {
        static const HeisenbergElement zero;
        if (k < 0 || k > n_) throw std::out_of_range("Toda superscript out of range");
        if (i < 0 || i > k) return zero;
        return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }

private:
    int n_;
    std::vector<std::vector<HeisenbergElement>> rows_;
};

/// E_i^k in the rank n-1 algebra; requires 0 <= i <= k <= n.
inline HeisenbergElement toda_E(int i, int k, int n) {
    if (k < 0 || k > n || i < 0 || i > k) throw std::out_of_range("toda_E requires 0 <= i <= k <= n");
    return TodaElements(n).get(i, k);
}

/// D_1 = sum <a_i^vee, a_j^vee> P_i P_j - sum <a_i^vee, a_i^vee> Q_i.
inline HeisenbergElement toda_D1(const RootSystem& rs) {
    HeisenbergElement d;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        const int ii = static_cast<int>(i) + 1;
        for (std::size_t j = 0; j < rs.rank(); ++j)
            d += HeisenbergElement::P(ii) * HeisenbergElement::P(static_cast<int>(j) + 1) * coroot_inner(rs, i, j);
        d -= HeisenbergElement::Q(ii) * coroot_inner(rs, i, i);
    }
    return d;
}

/// h -> 0, Q_k -> q_k, P_k -> lambda_k = -(x_1 + ... + x_k).
inline Polynomial classical_limit(const HeisenbergElement& e) {
    Polynomial r;
    for (const auto& [m, c] : e.terms()) {
        if (m.h > 0) continue;
        Polynomial t(c);
        for (int i = 0; i < kMaxIndex; ++i) {
            const auto qi = m.q[static_cast<std::size_t>(i)], pi = m.p[static_cast<std::size_t>(i)];
            if (qi) t *= Polynomial::q(i + 1).pow(qi);
            if (pi) {
                Polynomial lambda;
                for (int j = 1; j <= i + 1; ++j) lambda -= Polynomial::x(j);
                t *= lambda.pow(pi);
            }
        }
        r += t;
    }
    return r;
}

/// Element of H*(G/B) (x) Q[q, h], indexed by the Weyl order.
using DModuleState = QSchubertVector;

/// The D-module H*(G/B) (x) Q[q, h] built from the quantum Chevalley product.
class DModule {
public:
    explicit DModule(std::shared_ptr<const WeylGroup> g) : g_(std::move(g)), omegas_(chevalley_operator_matrices(*g_)) {}

    const WeylGroup& group() const { return *g_; }

    DModuleState unit() const { return QSchubertVector::basis(g_->size(), g_->identity()); }

    /// P_i.a (i 1-based).
    DModuleState apply_p(int i, const DModuleState& a) const {
        if (i < 1 || static_cast<std::size_t>(i) > g_->rank()) throw std::out_of_range("P index out of range");
        DModuleState out = omegas_[static_cast<std::size_t>(i) - 1].apply(a);
        const Polynomial h = Polynomial::hbar();
        for (std::size_t w = 0; w < a.size(); ++w)
            if (!a[w].is_zero()) out[w] += h * q_partial(a[w], i);
        return out;
    }

    /// D.a, acting monomial by monomial with the P factors applied first.
    DModuleState act(const HeisenbergElement& d, const DModuleState& a) const {
        DModuleState out(g_->size());
        // memoize P^J.a over the distinct P-parts
        std::map<std::array<std::uint8_t, kMaxIndex>, DModuleState> p_cache;
        for (const auto& [m, c] : d.terms()) {
            auto it = p_cache.find(m.p);
            if (it == p_cache.end()) {
                DModuleState v = a;
                for (int i = 0; i < kMaxIndex; ++i)
                    for (int e = 0; e < m.p[static_cast<std::size_t>(i)]; ++e) v = apply_p(i + 1, v);
                it = p_cache.emplace(m.p, std::move(v)).first;
            }
            Monomial scalar;
            for (int i = 0; i < kMaxIndex; ++i)
                if (m.q[static_cast<std::size_t>(i)]) scalar.set(Variable::q(i + 1), m.q[static_cast<std::size_t>(i)]);
            scalar.set(Variable::hbar(), m.h);
            out.add_scaled(it->second, Polynomial::term(scalar, c));
        }
        return out;
    }

private:
    std::shared_ptr<const WeylGroup> g_;
    std::vector<OperatorMatrix> omegas_;
};

/// D.a for the type A_{n-1} D-module.
inline DModuleState dmodule_action(const HeisenbergElement& d, const DModuleState& a, int n) {
    auto g = std::make_shared<const WeylGroup>(build_root_system(cartan_preset("A" + std::to_string(n - 1))));
    return DModule(g).act(d, a);
}

/// Exact battery of identities among the Toda elements of Fl_n.
inline VerifyReport verify_identities(int n) {
    const TodaElements e(n);
    VerifyReport report("heisenberg", "n=" + std::to_string(n));
    auto check = [&](const HeisenbergElement& lhs, const HeisenbergElement& rhs, int i, int j, const std::string& where) {
        report.count_check();
        if (lhs != rhs) report.fail({"", i, j, where, "", to_string(lhs), to_string(rhs)});
    };
    auto label = [](int k) { return "k=" + std::to_string(k); };

    report.begin_family("commuting E^k");
    for (int k = 1; k <= n; ++k)
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) check(commutator(e.get(i, k), e.get(j, k)), {}, i, j, label(k));

    report.begin_family("[E_{j+1}^{k+1}, E_i^k] = [E_{i+1}^{k+1}, E_j^k]");
    for (int k = 0; k + 1 <= n; ++k)
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                check(commutator(e.get(j + 1, k + 1), e.get(i, k)), commutator(e.get(i + 1, k + 1), e.get(j, k)), i, j,
                      label(k));

    report.begin_family("[X_k, E_j^l] = [Q_k, E_j^l] = 0 for l <= k-1");
    for (int k = 1; k <= n; ++k)
        for (int l = 0; l <= k - 1; ++l)
            for (int j = 0; j <= l; ++j) {
                check(commutator(e.x(k), e.get(j, l)), {}, k, j, "X, l=" + std::to_string(l));
                if (k <= n - 1) check(commutator(HeisenbergElement::Q(k), e.get(j, l)), {}, k, j, "Q, l=" + std::to_string(l));
            }

    report.begin_family("noncommutative straightening");
    for (int k = 1; k <= n - 1; ++k) {
        const HeisenbergElement qk = HeisenbergElement::Q(k);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                HeisenbergElement lhs = e.get(i, k) * e.get(j + 1, k + 1) + e.get(i + 1, k) * e.get(j, k) +
                                        qk * e.get(i - 1, k - 1) * e.get(j, k);
                HeisenbergElement rhs = e.get(j, k) * e.get(i + 1, k + 1) + e.get(j + 1, k) * e.get(i, k) +
                                        qk * e.get(j - 1, k - 1) * e.get(i, k);
                check(lhs, rhs, i, j, label(k));
            }
    }

    const RootSystem rs = build_root_system(cartan_preset("A" + std::to_string(n - 1)));
    report.begin_family("[D_1, E_i^n] = 0");
    const HeisenbergElement d1 = toda_D1(rs);
    for (int i = 0; i <= n; ++i) check(commutator(d1, e.get(i, n)), {}, i, -1, label(n));

    report.begin_family("E_i^n . 1 = 0");
    const DModule module(std::make_shared<const WeylGroup>(rs));
    for (int i = 1; i <= n; ++i) {
        report.count_check();
        DModuleState result = module.act(e.get(i, n), module.unit());
        for (std::size_t w = 0; w < result.size(); ++w)
            if (!result[w].is_zero()) {
                report.fail({"", i, -1, module.group().name(w), "", to_string(result[w]), "0"});
                break;
            }
    }
    return report;
}

}  // namespace qflag

#endif  // QFLAG_HEISENBERG_HPP
