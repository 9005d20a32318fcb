#ifndef QFLAG_POLYNOMIAL_HPP
#define QFLAG_POLYNOMIAL_HPP

// Sparse multivariate polynomials with exact rational coefficients over the
// variables x_1..x_8, q_1..q_8, h (hbar) and lambda_1..lambda_8.
// Grading: deg x = deg lambda = deg h = 2, deg q = 4.

#include "qflag/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflag {

/// Largest supported index for x, q and lambda variables.
inline constexpr int kMaxIndex = 8;

struct Variable {
    enum class Kind : std::uint8_t { X, Q, Hbar, Lambda };

    Kind kind = Kind::X;
    int index = 1;  // 1-based; ignored for Hbar

    static Variable x(int i) { return checked(Kind::X, i); }
    static Variable q(int i) { return checked(Kind::Q, i); }
    static Variable hbar() { return {Kind::Hbar, 0}; }
    static Variable lambda(int i) { return checked(Kind::Lambda, i); }

    /// Position in the exponent array. Slot order defines the lex order
    /// x1 > x2 > ... > x8 > q1 > ... > q8 > h > lambda1 > ... > lambda8.
    int slot() const {
        switch (kind) {
            case Kind::X: return index - 1;
            case Kind::Q: return kMaxIndex + index - 1;
            case Kind::Hbar: return 2 * kMaxIndex;
            case Kind::Lambda: return 2 * kMaxIndex + index;
        }
        return 0;
    }

    int weight() const { return kind == Kind::Q ? 4 : 2; }

    std::string name() const {
        switch (kind) {
            case Kind::X: return "x" + std::to_string(index);
            case Kind::Q: return "q" + std::to_string(index);
            case Kind::Hbar: return "h";
            case Kind::Lambda: return "lambda" + std::to_string(index);
        }
        return "?";
    }

    static Variable from_slot(int slot) {
        if (slot < kMaxIndex) return x(slot + 1);
        if (slot < 2 * kMaxIndex) return q(slot - kMaxIndex + 1);
        if (slot == 2 * kMaxIndex) return hbar();
        return lambda(slot - 2 * kMaxIndex);
    }

    friend auto operator<=>(const Variable& a, const Variable& b) { return a.slot() <=> b.slot(); }
    friend bool operator==(const Variable& a, const Variable& b) { return a.slot() == b.slot(); }

private:
    static Variable checked(Kind k, int i) {
        if (i < 1 || i > kMaxIndex)
            throw std::out_of_range("variable index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(kMaxIndex));
        return {k, i};
    }
};

/// Exponent vector. Comparison is lexicographic on slots, so a larger
/// monomial has a larger exponent in the first slot where they differ.
struct Monomial {
    static constexpr int kSlots = 3 * kMaxIndex + 1;
    std::array<std::uint8_t, kSlots> exps{};

    static Monomial of(Variable v, int power = 1) {
        Monomial m;
        m.set(v, power);
        return m;
    }

    int operator[](Variable v) const { return exps[static_cast<std::size_t>(v.slot())]; }
    int at_slot(int s) const { return exps[static_cast<std::size_t>(s)]; }

    void set(Variable v, int power) {
        if (power < 0 || power > std::numeric_limits<std::uint8_t>::max())
            throw std::overflow_error("monomial exponent out of range");
        exps[static_cast<std::size_t>(v.slot())] = static_cast<std::uint8_t>(power);
    }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
    }

    int weighted_degree() const {
        int d = 0;
        for (int s = 0; s < kSlots; ++s) d += at_slot(s) * Variable::from_slot(s).weight();
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (auto e : exps) d += e;
        return d;
    }

    bool divides(const Monomial& other) const {
        for (int s = 0; s < kSlots; ++s)
            if (at_slot(s) > other.at_slot(s)) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int s = 0; s < kSlots; ++s) {
            int e = a.at_slot(s) + b.at_slot(s);
            if (e > std::numeric_limits<std::uint8_t>::max())
                throw std::overflow_error("monomial exponent overflow");
            r.exps[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(e);
        }
        return r;
    }

    /// Requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int s = 0; s < kSlots; ++s)
            r.exps[static_cast<std::size_t>(s)] = static_cast<std::uint8_t>(a.at_slot(s) - b.at_slot(s));
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int s = 0; s < kSlots; ++s) r.exps[static_cast<std::size_t>(s)] = std::max(a.exps[s], b.exps[s]);
        return r;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline std::string to_string(const Monomial& m) {
    std::string out;
    for (int s = 0; s < Monomial::kSlots; ++s) {
        int e = m.at_slot(s);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += Variable::from_slot(s).name();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

class Polynomial {
public:
    /// Stored lex-descending, so begin() is the lex leading term.
    using TermMap = std::map<Monomial, Rational, std::greater<Monomial>>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c) { add_term(Monomial{}, c); }
    explicit Polynomial(long c) : Polynomial(Rational(c)) {}

    static Polynomial variable(Variable v) { return term(Monomial::of(v), Rational(1)); }
    static Polynomial x(int i) { return variable(Variable::x(i)); }
    static Polynomial q(int i) { return variable(Variable::q(i)); }
    static Polynomial hbar() { return variable(Variable::hbar()); }
    static Polynomial lambda(int i) { return variable(Variable::lambda(i)); }
    static Polynomial term(const Monomial& m, const Rational& c) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

    Rational constant_term() const { return coefficient(Monomial{}); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
        return terms_.begin()->first;
    }
    const Monomial& trailing_monomial() const {
        if (terms_.empty()) throw std::logic_error("trailing monomial of zero polynomial");
        return terms_.rbegin()->first;
    }
    const Rational& trailing_coefficient() const {
        if (terms_.empty()) throw std::logic_error("trailing coefficient of zero polynomial");
        return terms_.rbegin()->second;
    }
    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool depends_on(Variable v) const {
        return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[v] > 0; });
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second *= c;
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    /// Adds c * m * o without materializing the product.
    void add_scaled(const Polynomial& o, const Rational& c, const Monomial& m = {}) {
        if (c == 0) return;
        for (const auto& [om, oc] : o.terms_) add_term(om * m, oc * c);
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r(1);
        for (unsigned k = 0; k < e; ++k) r *= *this;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

/// q_i * d/dq_i, i.e. d/dt_i under q_i = exp(t_i).
inline Polynomial q_partial(const Polynomial& f, int i) {
    Variable qi = Variable::q(i);
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        int e = m[qi];
        if (e != 0) r.add_term(m, c * e);
    }
    return r;
}

struct GradingReport {
    /// Degree reported for the zero polynomial.
    static constexpr int kNegativeInfinity = std::numeric_limits<int>::min();

    bool homogeneous = true;
    std::optional<int> degree;  // empty iff mixed

    bool is_zero_sentinel() const { return degree && *degree == kNegativeInfinity; }
};

inline GradingReport graded_degree(const Polynomial& f) {
    if (f.is_zero()) return {true, GradingReport::kNegativeInfinity};
    int d = f.terms().begin()->first.weighted_degree();
    for (const auto& [m, c] : f.terms())
        if (m.weighted_degree() != d) return {false, std::nullopt};
    return {true, d};
}

inline std::string to_string(const GradingReport& g) {
    if (!g.homogeneous) return "mixed";
    if (g.is_zero_sentinel()) return "-inf";
    return std::to_string(*g.degree);
}

using Assignment = std::map<Variable, Polynomial>;

/// Replaces every variable in `assignment` by its image; other variables stay.
inline Polynomial substitute(const Polynomial& f, const Assignment& assignment) {
    // cache powers of each image
    std::map<Variable, std::vector<Polynomial>> powers;
    auto power_of = [&](Variable v, int e) -> const Polynomial& {
        auto& table = powers[v];
        if (table.empty()) table.emplace_back(1);
        while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * assignment.at(v));
        return table[static_cast<std::size_t>(e)];
    };
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        Monomial kept = m;
        Polynomial factor(c);
        for (const auto& [v, image] : assignment) {
            int e = m[v];
            if (e == 0) continue;
            kept.set(v, 0);
            factor = factor * power_of(v, e);
        }
        r.add_scaled(factor, Rational(1), kept);
    }
    return r;
}

/// x_1 = -lambda_1, x_k = lambda_{k-1} - lambda_k, x_n = lambda_{n-1};
/// inverse to lambda_to_x modulo x_1 + ... + x_n.
inline Assignment x_to_lambda(int n) {
    Assignment a;
    for (int k = 1; k <= n; ++k) {
        Polynomial image;
        if (k >= 2) image += Polynomial::lambda(k - 1);
        if (k <= n - 1) image -= Polynomial::lambda(k);
        a.emplace(Variable::x(k), image);
    }
    return a;
}

/// lambda_k = -(x_1 + ... + x_k).
inline Assignment lambda_to_x(int n) {
    Assignment a;
    for (int k = 1; k <= n - 1; ++k) {
        Polynomial image;
        for (int j = 1; j <= k; ++j) image -= Polynomial::x(j);
        a.emplace(Variable::lambda(k), image);
    }
    return a;
}

/// Sets every variable of the given kind to zero.
inline Polynomial set_zero(const Polynomial& f, Variable::Kind kind) {
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        bool keep = true;
        for (int s = 0; s < Monomial::kSlots; ++s)
            if (m.at_slot(s) > 0 && Variable::from_slot(s).kind == kind) keep = false;
        if (keep) r.add_term(m, c);
    }
    return r;
}

/// Exchanges x_i and x_j.
inline Polynomial swap_x(const Polynomial& f, int i, int j) {
    Variable a = Variable::x(i), b = Variable::x(j);
    Polynomial r;
    for (const auto& [m, c] : f.terms()) {
        Monomial s = m;
        s.set(a, m[b]);
        s.set(b, m[a]);
        r.add_term(s, c);
    }
    return r;
}

namespace detail {

// graded-lex descending: weighted degree first, then lex
inline bool graded_lex_greater(const Monomial& a, const Monomial& b) {
    int da = a.weighted_degree(), db = b.weighted_degree();
    if (da != db) return da > db;
    return a > b;
}

inline std::string coefficient_prefix(const Rational& c, bool first, bool unit_monomial) {
    std::string out;
    Rational mag = abs(c);
    if (first) {
        if (c < 0) out += "-";
    } else {
        out += c < 0 ? " - " : " + ";
    }
    if (unit_monomial) return out + to_string(mag);
    if (mag != 1) out += to_string(mag) + "*";
    return out;
}

}  // namespace detail

/// Canonical text form: terms in graded-lex descending order, e.g. "x1^2 - q1".
inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, Rational>> sorted(f.terms().begin(), f.terms().end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return detail::graded_lex_greater(a.first, b.first); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
        out += detail::coefficient_prefix(c, first, m.is_one());
        if (!m.is_one()) out += to_string(m);
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

}  // namespace qflag

#endif  // QFLAG_POLYNOMIAL_HPP
