#ifndef QFLAG_FLAG_PRESENTATION_HPP
#define QFLAG_FLAG_PRESENTATION_HPP

// Quantum cohomology of Fl_n as Q[x_1..x_n, q_1..q_{n-1}] / <E_1^n, ..., E_n^n>,
// where E_i^k are the quantum elementary polynomials
//     E_i^k = E_i^{k-1} + x_k E_{i-1}^{k-1} + q_{k-1} E_{i-2}^{k-2},
// with E_j^k = 0 unless 0 <= j <= k and E_0^0 = 1.
//
// The quotient is free over Q[q] on the quantum standard monomials
// E_I = E_{i_1}^1 ... E_{i_{n-1}}^{n-1}, 0 <= i_j <= j. Products of E's are
// rewritten into that basis by quantum straightening.

#include "qflag/borel.hpp"
#include "qflag/chevalley.hpp"
#include "qflag/groebner.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/report.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

inline constexpr const char* kMultiplierConvention =
    "Omega_k is multiplication by y_k = lambda_k = -(x_1+...+x_k) = -E_1^k";

/// Table of E_i^k for 0 <= i <= k <= n.
class QuantumElementary {
public:
    explicit QuantumElementary(int n) : n_(n) {
        if (n < 1 || n > kMaxIndex) throw std::out_of_range("n out of range for quantum elementary polynomials");
        rows_.resize(static_cast<std::size_t>(n) + 1);
        rows_[0] = {Polynomial(1)};
        for (int k = 1; k <= n; ++k) {
            rows_[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(k) + 1);
            for (int i = 0; i <= k; ++i) {
                Polynomial e = get(i, k - 1);
                e += Polynomial::x(k) * get(i - 1, k - 1);
                if (k >= 2) e += Polynomial::q(k - 1) * get(i - 2, k - 2);
                rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = std::move(e);
            }
        }
    }

    int n() const { return n_; }

    /// E_i^k, zero outside 0 <= i <= k.
    const Polynomial& get(int i, int k) const {
        static const Polynomial zero;
        if (k < 0 || k > n_) throw std::out_of_range("superscript out of range");
        if (i < 0 || i > k) return zero;
        return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }

private:
    int n_;
    std::vector<std::vector<Polynomial>> rows_;
};

/// E_i^k as a polynomial; requires 0 <= i <= k <= n.
inline Polynomial qelementary(int i, int k, int n) {
    if (k < 0 || k > n || i < 0 || i > k)
        throw std::out_of_range("qelementary requires 0 <= i <= k <= n");
    return QuantumElementary(n).get(i, k);
}

/// Factor E_i^k of a formal product.
struct EFactor {
    int k = 0;  // superscript
    int i = 0;  // subscript
    friend auto operator<=>(const EFactor&, const EFactor&) = default;
};

/// Finite Q[q]-combination of formal commutative products of E's.
class EExpression {
public:
    using Product = std::vector<EFactor>;  // sorted

    static EExpression factor(int i, int k, const Polynomial& coeff = Polynomial(1)) {
        EExpression e;
        e.add({{k, i}}, coeff);
        return e;
    }
    static EExpression constant(const Polynomial& coeff) {
        EExpression e;
        e.add({}, coeff);
        return e;
    }
    static EExpression standard(const StdMonomialIndex& idx, const Polynomial& coeff = Polynomial(1)) {
        Product p;
        for (std::size_t j = 0; j < idx.size(); ++j) p.push_back({static_cast<int>(j) + 1, idx[j]});
        EExpression e;
        e.add(std::move(p), coeff);
        return e;
    }

    void add(Product p, const Polynomial& coeff) {
        if (coeff.is_zero()) return;
        std::sort(p.begin(), p.end());
        auto [it, inserted] = terms_.try_emplace(std::move(p), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<Product, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    EExpression& operator+=(const EExpression& o) {
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }

    friend EExpression operator*(const EExpression& a, const EExpression& b) {
        EExpression r;
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_) {
                Product p = pa;
                p.insert(p.end(), pb.begin(), pb.end());
                r.add(std::move(p), ca * cb);
            }
        return r;
    }

    friend EExpression operator*(const Polynomial& c, EExpression e) {
        EExpression r;
        for (auto& [p, coeff] : e.terms_) r.add(p, c * coeff);
        return r;
    }

    /// Expands every E into its polynomial.
    Polynomial expand(const QuantumElementary& table) const {
        Polynomial r;
        for (const auto& [p, c] : terms_) {
            Polynomial term = c;
            for (const auto& f : p) term *= table.get(f.i, f.k);
            r += term;
        }
        return r;
    }

private:
    std::map<Product, Polynomial> terms_;
};

/// Coordinates in the quantum standard monomial basis, ordered as standard_indices(n).
struct QStdVector {
    int n = 0;
    std::vector<Polynomial> coeffs;

    friend bool operator==(const QStdVector&, const QStdVector&) = default;
};

class straightening_budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Drops E_0 factors; returns false if the product is zero in the quotient
// (a subscript outside 0..k, or a factor E_i^n with i >= 1).
inline bool normalize_product(EExpression::Product& p, int n) {
    EExpression::Product kept;
    for (const auto& f : p) {
        if (f.i < 0 || f.i > f.k || f.k < 0) return false;
        if (f.i == 0) continue;
        if (f.k >= n) return false;
        kept.push_back(f);
    }
    std::sort(kept.begin(), kept.end());
    p = std::move(kept);
    return true;
}

}  // namespace detail

/// Rewrites `expr` into quantum standard monomials using the commutative
/// straightening identity
///   E_i^k E_{j+1}^{k+1} + E_{i+1}^k E_j^k + q_k E_{i-1}^{k-1} E_j^k
///     = E_j^k E_{i+1}^{k+1} + E_{j+1}^k E_i^k + q_k E_{j-1}^{k-1} E_i^k
/// and E_i^n = 0 for i >= 1. Two factors E_a^k E_b^k (a >= b >= 1) are replaced via
/// (i, j) = (a, b - 1); every step raises the q-degree, moves a factor to a
/// higher superscript, or makes the column more unbalanced, so it terminates.
inline QStdVector straighten(const EExpression& expr, int n, std::size_t step_budget = 1000000) {
    const auto basis = standard_indices(n);
    QStdVector out{n, std::vector<Polynomial>(basis.size())};

    std::map<EExpression::Product, Polynomial> work;
    auto push = [&](EExpression::Product p, const Polynomial& coeff) {
        if (coeff.is_zero() || !detail::normalize_product(p, n)) return;
        auto [it, inserted] = work.try_emplace(std::move(p), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) work.erase(it);
        }
    };
    for (const auto& [p, c] : expr.terms()) push(p, c);

    std::size_t steps = 0;
    while (!work.empty()) {
        if (++steps > step_budget) throw straightening_budget_exceeded("straightening step budget exhausted");
        auto node = work.extract(work.begin());
        const EExpression::Product& p = node.key();
        const Polynomial& coeff = node.mapped();

        // first column holding two factors
        std::size_t dup = p.size();
        for (std::size_t t = 0; t + 1 < p.size(); ++t)
            if (p[t].k == p[t + 1].k) {
                dup = t;
                break;
            }
        if (dup == p.size()) {
            StdMonomialIndex idx(static_cast<std::size_t>(n) - 1, 0);
            for (const auto& f : p) idx[static_cast<std::size_t>(f.k) - 1] = f.i;
            auto it = std::lower_bound(basis.begin(), basis.end(), idx);
            out.coeffs[static_cast<std::size_t>(it - basis.begin())] += coeff;
            continue;
        }

        const int k = p[dup].k;
        const int b = p[dup].i;      // sorted: p[dup].i <= p[dup + 1].i
        const int a = p[dup + 1].i;
        EExpression::Product rest;
        for (std::size_t t = 0; t < p.size(); ++t)
            if (t != dup && t != dup + 1) rest.push_back(p[t]);
        auto with = [&](std::initializer_list<EFactor> extra) {
            EExpression::Product r = rest;
            r.insert(r.end(), extra.begin(), extra.end());
            return r;
        };
        const Polynomial qk = Polynomial::q(k) * coeff;
        push(with({{k, a}, {k + 1, b}}), coeff);
        push(with({{k, b - 1}, {k + 1, a + 1}}), -coeff);
        push(with({{k, a + 1}, {k, b - 1}}), coeff);
        push(with({{k - 1, a - 1}, {k, b - 1}}), qk);
        push(with({{k - 1, b - 2}, {k, a}}), -qk);
    }
    return out;
}

/// Per-n cache of the quantum presentation: E tables, Omega matrices,
/// quantized Schubert classes and the Groebner oracle.
class QuantumFlag {
public:
    explicit QuantumFlag(int n, int max_n = BorelCohomology::kDefaultMaxN)
        : borel_(std::make_shared<BorelCohomology>(n, max_n)), elementary_(n) {}

    int n() const { return borel_->n(); }
    const BorelCohomology& borel() const { return *borel_; }
    const SymmetricGroup& group() const { return borel_->group(); }
    const QuantumElementary& elementary() const { return elementary_; }
    const std::vector<StdMonomialIndex>& standard_basis() const { return borel_->standard_basis(); }

    /// E_I as a polynomial.
    Polynomial standard_monomial(const StdMonomialIndex& idx) const {
        return EExpression::standard(idx).expand(elementary_);
    }

    QStdVector straighten(const EExpression& e) const { return qflag::straighten(e, n()); }

    Polynomial expand(const QStdVector& v) const {
        Polynomial r;
        const auto& basis = standard_basis();
        for (std::size_t t = 0; t < basis.size(); ++t)
            if (!v.coeffs[t].is_zero()) r += v.coeffs[t] * standard_monomial(basis[t]);
        return r;
    }

    /// Matrix of multiplication by y_k = -E_1^k (k 1-based) in the E_I basis.
    OperatorMatrix omega_matrix(int k) const {
        if (k < 1 || k > n() - 1) throw std::out_of_range("omega index out of range");
        const auto& basis = standard_basis();
        OperatorMatrix m(basis.size());
        const EExpression multiplier = EExpression::factor(1, k, Polynomial(-1));
        for (std::size_t c = 0; c < basis.size(); ++c) {
            QStdVector col = straighten(multiplier * EExpression::standard(basis[c]));
            for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = std::move(col.coeffs[r]);
        }
        return m;
    }

    std::vector<OperatorMatrix> omega_matrices() const {
        std::vector<OperatorMatrix> out;
        for (int k = 1; k <= n() - 1; ++k) out.push_back(omega_matrix(k));
        return out;
    }

    /// Classical multiplication by lambda_k = -e_1^k in the e_I basis, via Schubert expansion.
    RationalMatrix classical_lambda_matrix(int k) const {
        const auto& basis = standard_basis();
        const RationalMatrix& to_e = borel_->inverse_transition();  // sigma_w -> e_I
        RationalMatrix m(basis.size(), basis.size());
        const Polynomial lambda = -elementary_symmetric(1, k);
        for (std::size_t c = 0; c < basis.size(); ++c) {
            CohomologyClass cls = borel_->expand_schubert(lambda * std_elementary_monomial(basis[c], n()));
            for (const auto& [w, coeff] : cls.schubert_coeffs)
                for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) += coeff * to_e(w, r);
        }
        return m;
    }

    /// sigma_w written in the E_I basis: the row T(w, .) of the classical transition.
    EExpression quantized_expression(std::size_t w) const {
        const RationalMatrix& t = borel_->inverse_transition();
        const auto& basis = standard_basis();
        EExpression e;
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (t(w, c) != 0) e += EExpression::standard(basis[c], Polynomial(t(w, c)));
        return e;
    }

    /// Quantum Giambelli polynomial: sigma_w expanded in e_I, then e_I -> E_I.
    Polynomial quantize_schubert(std::size_t w) const { return quantized_expression(w).expand(elementary_); }

    /// Product in the presentation, pulled back to the quantum Schubert basis.
    QSchubertVector quantum_product(std::size_t u, std::size_t v) const {
        return to_schubert(straighten(quantized_expression(u) * quantized_expression(v)));
    }

    /// E_L = sum_w M(L, w) hat-sigma_w, since quantization is linear on the e_I.
    QSchubertVector to_schubert(const QStdVector& x) const {
        const RationalMatrix& m = borel_->transition_matrix();
        QSchubertVector out(group().size());
        for (std::size_t l = 0; l < x.coeffs.size(); ++l) {
            if (x.coeffs[l].is_zero()) continue;
            for (std::size_t w = 0; w < group().size(); ++w)
                if (m(l, w) != 0) out[w] += x.coeffs[l] * m(l, w);
        }
        return out;
    }

    /// Reduced lex Groebner basis of <E_1^n, ..., E_n^n> (x's above q's).
    const std::vector<Polynomial>& quantum_ideal_basis() const {
        std::call_once(cache_->once, [this] {
            std::vector<Polynomial> gens;
            for (int i = 1; i <= n(); ++i) gens.push_back(elementary_.get(i, n()));
            cache_->groebner = groebner_basis(gens);
        });
        return cache_->groebner;
    }

    Polynomial quantum_normal_form(const Polynomial& f) const { return reduce(f, quantum_ideal_basis()); }

    std::vector<std::string> standard_names() const {
        std::vector<std::string> names;
        for (const auto& idx : standard_basis()) names.push_back("E" + index_string(idx));
        return names;
    }

private:
    struct OracleCache {
        std::once_flag once;
        std::vector<Polynomial> groebner;
    };

    std::shared_ptr<BorelCohomology> borel_;
    QuantumElementary elementary_;
    std::shared_ptr<OracleCache> cache_ = std::make_shared<OracleCache>();
};

/// Exact q_i d/dq_i Omega_j = q_j d/dq_j Omega_i and [Omega_i, Omega_j] = 0.
inline VerifyReport flatness_check_presentation(const QuantumFlag& qf) {
    auto report = flatness_check_matrices(qf.omega_matrices(), qf.standard_names(), "flatness-presentation",
                                          "Fl" + std::to_string(qf.n()), "Omega matrices");
    report.add_convention(kMultiplierConvention);
    return report;
}

inline VerifyReport flatness_check_presentation(int n) { return flatness_check_presentation(QuantumFlag(n)); }

}  // namespace qflag

#endif  // QFLAG_FLAG_PRESENTATION_HPP
