#ifndef QFLAG_BOREL_HPP
#define QFLAG_BOREL_HPP

// Classical cohomology of Fl_n = SL(n)/B in the Borel presentation
// Q[x_1..x_n]/I_n: Schubert polynomials, normal forms, cup products and the
// standard elementary monomial basis.

#include "qflag/groebner.hpp"
#include "qflag/linear_algebra.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/root_system.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflag {

/// One-line notation, values 1..n.
using Permutation = std::vector<int>;

inline std::string permutation_string(const Permutation& p) {
    std::string s;
    for (int v : p) s += std::to_string(v);
    return s;
}

/// Parses one-line notation such as "312" (single digits, so n <= 9).
inline Permutation parse_permutation(const std::string& text, int n) {
    if (static_cast<int>(text.size()) != n)
        throw std::invalid_argument("permutation '" + text + "' must have exactly " + std::to_string(n) + " digits");
    Permutation p;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (char c : text) {
        int v = c - '0';
        if (c < '1' || v > n || used[static_cast<std::size_t>(v)])
            throw std::invalid_argument("'" + text + "' is not a permutation of 1.." + std::to_string(n));
        used[static_cast<std::size_t>(v)] = true;
        p.push_back(v);
    }
    return p;
}

/// w = s_{i_1} ... s_{i_k} (0-based letters) as a one-line permutation.
inline Permutation permutation_from_word(const std::vector<int>& word, int n) {
    Permutation p(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k + 1;
    for (int i : word) {
        if (i < 0 || i + 1 >= n) throw std::out_of_range("simple reflection index out of range for S_n");
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
    }
    return p;
}

/// W(A_{n-1}) together with its identification with S_n.
class SymmetricGroup {
public:
    explicit SymmetricGroup(int n)
        : n_(check_n(n)), weyl_(build_root_system(cartan_preset("A" + std::to_string(n - 1)))) {
        for (std::size_t k = 0; k < weyl_.size(); ++k) {
            perms_.push_back(permutation_from_word(weyl_[k].canonical_word, n_));
            index_.emplace(perms_.back(), k);
        }
    }

    int n() const { return n_; }
    std::size_t size() const { return weyl_.size(); }
    const WeylGroup& weyl() const { return weyl_; }

    const Permutation& permutation(std::size_t w) const { return perms_[w]; }
    std::size_t index_of(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("not a permutation of size " + std::to_string(n_));
        return it->second;
    }
    std::size_t index_of(const std::string& one_line) const { return index_of(parse_permutation(one_line, n_)); }

    std::string name(std::size_t w) const { return permutation_string(perms_[w]); }

    /// Index of w s_i (i 0-based).
    std::size_t times_simple(std::size_t w, int i) const {
        return weyl_.reflect(w, weyl_.simple_root_index(static_cast<std::size_t>(i)));
    }

private:
    static int check_n(int n) {
        if (n < 2 || n > kMaxIndex) throw std::out_of_range("n must be in 2.." + std::to_string(kMaxIndex));
        return n;
    }

    int n_;
    WeylGroup weyl_;
    std::vector<Permutation> perms_;
    std::map<Permutation, std::size_t> index_;
};

/// (f - s_i f) / (x_i - x_{i+1}), i 1-based.
inline Polynomial divided_difference(const Polynomial& f, int i, int n) {
    if (i < 1 || i > n - 1) throw std::out_of_range("divided difference index out of range");
    const Variable xi = Variable::x(i), xj = Variable::x(i + 1);
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        int a = m[xi], b = m[xj];
        if (a == b) continue;
        Monomial base = m;
        int hi = std::max(a, b), lo = std::min(a, b);
        Rational sign = a > b ? Rational(1) : Rational(-1);
        Variable big = a > b ? xi : xj, small = a > b ? xj : xi;
        for (int t = 0; t < hi - lo; ++t) {
            base.set(big, hi - 1 - t);
            base.set(small, lo + t);
            r.add_term(base, sign * c);
        }
    }
    return r;
}

/// e_i(x_1..x_k).
inline Polynomial elementary_symmetric(int i, int k) {
    if (i < 0 || i > k) return Polynomial();
    // e_i^k = e_i^{k-1} + x_k e_{i-1}^{k-1}
    std::vector<Polynomial> row{Polynomial(1)};
    for (int m = 1; m <= k; ++m) {
        std::vector<Polynomial> next(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
            if (j <= m - 1) next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
            if (j >= 1) next[static_cast<std::size_t>(j)] += Polynomial::x(m) * row[static_cast<std::size_t>(j) - 1];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(i)];
}

/// h_d(x_from..x_to).
inline Polynomial complete_homogeneous(int d, int from, int to) {
    if (d < 0) return Polynomial();
    // h_d(x_from..x_m) = h_d(x_from..x_{m-1}) + x_m h_{d-1}(x_from..x_m)
    std::vector<Polynomial> h(static_cast<std::size_t>(d) + 1);
    h[0] = Polynomial(1);
    for (int m = from; m <= to; ++m)
        for (int e = 1; e <= d; ++e) h[static_cast<std::size_t>(e)] += Polynomial::x(m) * h[static_cast<std::size_t>(e) - 1];
    return h[static_cast<std::size_t>(d)];
}

/// Groebner basis {h_{n-k+1}(x_1..x_k)} of the ideal of nonconstant symmetric
/// polynomials for lex x_n > ... > x_1; leading terms x_k^{n-k+1}.
inline std::vector<Polynomial> symmetric_ideal_basis(int n) {
    std::vector<Polynomial> basis;
    for (int k = 1; k <= n; ++k) basis.push_back(complete_homogeneous(n - k + 1, 1, k));
    return basis;
}

namespace detail {

/// Lex order with x_n > ... > x_1, ties broken by the stored order.
struct ReverseVariableOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (int k = kMaxIndex; k >= 1; --k) {
            const int ea = a[Variable::x(k)], eb = b[Variable::x(k)];
            if (ea != eb) return ea > eb;
        }
        return b < a;
    }
};

}  // namespace detail

/// Normal form modulo the symmetric ideal, supported on x^a with a_k <= n-k.
inline Polynomial normal_form(const Polynomial& f, int n) {
    const std::vector<Polynomial> basis = symmetric_ideal_basis(n);
    std::map<Monomial, Rational, detail::ReverseVariableOrder> work(f.terms().begin(), f.terms().end());
    Polynomial r;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Monomial& m = node.key();
        int k = 1;
        while (k <= n && m[Variable::x(k)] < n - k + 1) ++k;
        if (k > n) {
            r.add_term(m, node.mapped());
            continue;
        }
        Monomial lead;
        lead.set(Variable::x(k), n - k + 1);
        const Monomial cofactor = m / lead;
        for (const auto& [t, d] : basis[static_cast<std::size_t>(k) - 1].terms()) {
            if (t == lead) continue;
            auto [it, inserted] = work.try_emplace(t * cofactor, -node.mapped() * d);
            if (!inserted) {
                it->second -= node.mapped() * d;
                if (it->second == 0) work.erase(it);
            }
        }
    }
    return r;
}

struct SchubertTable {
    int n = 0;
    std::map<Permutation, Polynomial> table;
};

/// Indices (i_1..i_{n-1}) with 0 <= i_j <= j.
using StdMonomialIndex = std::vector<int>;

inline bool is_standard_index(const StdMonomialIndex& idx, int n) {
    if (static_cast<int>(idx.size()) != n - 1) return false;
    for (std::size_t j = 0; j < idx.size(); ++j)
        if (idx[j] < 0 || idx[j] > static_cast<int>(j) + 1) return false;
    return true;
}

inline std::string index_string(const StdMonomialIndex& idx) {
    std::string s = "(";
    for (std::size_t j = 0; j < idx.size(); ++j) s += (j ? "," : "") + std::to_string(idx[j]);
    return s + ")";
}

/// All standard indices in lex order; there are n! of them.
inline std::vector<StdMonomialIndex> standard_indices(int n) {
    std::vector<StdMonomialIndex> out{StdMonomialIndex{}};
    for (int j = 1; j <= n - 1; ++j) {
        std::vector<StdMonomialIndex> next;
        for (const auto& prefix : out)
            for (int v = 0; v <= j; ++v) {
                auto idx = prefix;
                idx.push_back(v);
                next.push_back(std::move(idx));
            }
        out = std::move(next);
    }
    return out;
}

/// e_{i_1}^1 ... e_{i_{n-1}}^{n-1}.
inline Polynomial std_elementary_monomial(const StdMonomialIndex& idx, int n) {
    if (!is_standard_index(idx, n)) throw std::invalid_argument("invalid standard index " + index_string(idx));
    Polynomial r(1);
    for (std::size_t j = 0; j < idx.size(); ++j) r *= elementary_symmetric(idx[j], static_cast<int>(j) + 1);
    return r;
}

/// Coefficients in the Schubert basis, keyed by Weyl index.
struct CohomologyClass {
    int n = 0;
    std::map<std::size_t, Rational> schubert_coeffs;

    void add(std::size_t w, const Rational& c) {
        if (c == 0) return;
        auto& slot = schubert_coeffs[w];
        slot += c;
        if (slot == 0) schubert_coeffs.erase(w);
    }
    friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

/// Cached classical data for Fl_n.
class BorelCohomology {
public:
    static constexpr int kDefaultMaxN = 6;

    explicit BorelCohomology(int n, int max_n = kDefaultMaxN) : group_(check(n, max_n)) {
        const int nn = group_.n();
        const std::size_t size = group_.size();
        schubert_.resize(size);
        std::vector<bool> done(size, false);
        Polynomial top(1);
        for (int k = 1; k < nn; ++k) top *= Polynomial::x(k).pow(static_cast<unsigned>(nn - k));
        schubert_[group_.weyl().longest()] = top;
        done[group_.weyl().longest()] = true;
        // elements are ordered by length, so walk downwards
        for (std::size_t w = size; w-- > 0;) {
            if (!done[w]) throw std::logic_error("Schubert recursion did not reach element " + group_.name(w));
            for (int i = 0; i + 1 < nn; ++i) {
                std::size_t u = group_.times_simple(w, i);
                if (group_.weyl().length(u) >= group_.weyl().length(w) || done[u]) continue;
                schubert_[u] = divided_difference(schubert_[w], i + 1, nn);
                done[u] = true;
            }
        }
        std_ = standard_indices(nn);
        for (std::size_t w = 0; w < size; ++w) {
            // x^{code(w)} is the lex-smallest monomial of the Schubert polynomial
            const Monomial& tm = schubert_[w].trailing_monomial();
            if (!lead_.emplace(tm, w).second)
                throw std::logic_error("Schubert polynomials with equal code monomials");
        }
    }

    int n() const { return group_.n(); }
    const SymmetricGroup& group() const { return group_; }
    const Polynomial& schubert(std::size_t w) const { return schubert_[w]; }

    SchubertTable table() const {
        SchubertTable t{n(), {}};
        for (std::size_t w = 0; w < group_.size(); ++w) t.table.emplace(group_.permutation(w), schubert_[w]);
        return t;
    }

    Polynomial normal_form(const Polynomial& f) const { return qflag::normal_form(f, n()); }

    /// Triangular elimination against Schubert code monomials.
    CohomologyClass expand_schubert(const Polynomial& f) const {
        CohomologyClass out{n(), {}};
        Polynomial r = normal_form(f);
        while (!r.is_zero()) {
            auto it = lead_.find(r.trailing_monomial());
            if (it == lead_.end())
                throw std::logic_error("internal consistency: residual " + to_string(r) + " after Schubert expansion");
            const Polynomial& s = schubert_[it->second];
            Rational c = r.trailing_coefficient() / s.trailing_coefficient();
            out.add(it->second, c);
            r.add_scaled(s, -c);
        }
        return out;
    }

    CohomologyClass cup_product(std::size_t u, std::size_t v) const {
        return expand_schubert(schubert_[u] * schubert_[v]);
    }

    const std::vector<StdMonomialIndex>& standard_basis() const { return std_; }

    std::size_t standard_position(const StdMonomialIndex& idx) const {
        const auto& b = standard_basis();
        auto it = std::lower_bound(b.begin(), b.end(), idx);
        if (it == b.end() || *it != idx) throw std::invalid_argument("invalid standard index " + index_string(idx));
        return static_cast<std::size_t>(it - b.begin());
    }

    /// Row I, column w: e_I = sum_w M(I, w) sigma_w.
    const RationalMatrix& transition_matrix() const {
        build_transition();
        return cache_->transition;
    }

    /// Row w, column I: sigma_w = sum_I T(w, I) e_I.
    const RationalMatrix& inverse_transition() const {
        build_transition();
        return cache_->inverse;
    }

private:
    static int check(int n, int max_n) {
        if (n < 2 || n > max_n)
            throw std::out_of_range("n = " + std::to_string(n) + " outside supported range 2.." + std::to_string(max_n));
        return n;
    }

    // transition matrices are built on first use (n! x n! inversion)
    struct TransitionCache {
        std::once_flag once;
        RationalMatrix transition;
        RationalMatrix inverse;
    };

    void build_transition() const {
        std::call_once(cache_->once, [this] {
            RationalMatrix m(std_.size(), group_.size());
            for (std::size_t r = 0; r < std_.size(); ++r)
                for (const auto& [w, c] : expand_schubert(std_elementary_monomial(std_[r], n())).schubert_coeffs)
                    m(r, w) = c;
            auto inv = m.inverse();
            if (!inv) throw std::logic_error("transition matrix is singular");
            cache_->transition = std::move(m);
            cache_->inverse = std::move(*inv);
        });
    }

    SymmetricGroup group_;
    std::vector<Polynomial> schubert_;
    std::map<Monomial, std::size_t> lead_;
    std::vector<StdMonomialIndex> std_;
    std::shared_ptr<TransitionCache> cache_ = std::make_shared<TransitionCache>();
};

inline SchubertTable schubert_polynomials(int n, int max_n = BorelCohomology::kDefaultMaxN) {
    return BorelCohomology(n, max_n).table();
}

}  // namespace qflag

#endif  // QFLAG_BOREL_HPP
