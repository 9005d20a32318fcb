#ifndef QFLAG_GROEBNER_HPP
#define QFLAG_GROEBNER_HPP

// Lex-order multivariate division and Buchberger's algorithm.
// The monomial order is the slot order of Monomial: x1 > ... > x8 > q1 > ... > q8 > h.

#include "qflag/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qflag {

/// Remainder of f on division by `basis` (full reduction, lex order).
inline Polynomial reduce(Polynomial f, const std::vector<Polynomial>& basis) {
    Polynomial remainder;
    while (!f.is_zero()) {
        const Monomial lm = f.leading_monomial();
        const Rational lc = f.leading_coefficient();
        bool divided = false;
        for (const auto& g : basis) {
            if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
            f.add_scaled(g, -lc / g.leading_coefficient(), lm / g.leading_monomial());
            divided = true;
            break;
        }
        if (!divided) {
            remainder.add_term(lm, lc);
            f.add_term(lm, -lc);
        }
    }
    return remainder;
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial s;
    s.add_scaled(f, Rational(1) / f.leading_coefficient(), l / f.leading_monomial());
    s.add_scaled(g, Rational(-1) / g.leading_coefficient(), l / g.leading_monomial());
    return s;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (int s = 0; s < Monomial::kSlots; ++s)
        if (a.at_slot(s) > 0 && b.at_slot(s) > 0) return false;
    return true;
}

inline Polynomial monic(Polynomial f) {
    if (!f.is_zero()) f *= Rational(1) / f.leading_coefficient();
    return f;
}

}  // namespace detail

/// Reduced lex Groebner basis of the ideal generated by `generators`.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                              std::size_t pair_budget = 1000000) {
    std::vector<Polynomial> basis;
    for (const auto& g : generators)
        if (!g.is_zero()) basis.push_back(detail::monic(g));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > pair_budget) throw std::runtime_error("Groebner basis: pair budget exhausted");
        // smallest lcm first (normal strategy)
        std::size_t best = 0;
        auto lcm_of = [&](const auto& p) {
            return Monomial::lcm(basis[p.first].leading_monomial(), basis[p.second].leading_monomial());
        };
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (lcm_of(pairs[k]) < lcm_of(pairs[best])) best = k;
        auto [i, j] = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        if (detail::coprime(basis[i].leading_monomial(), basis[j].leading_monomial())) continue;
        Polynomial r = reduce(detail::s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(detail::monic(std::move(r)));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }

    // minimalize
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !basis[j].leading_monomial().divides(basis[i].leading_monomial())) continue;
            // ties broken by index so exactly one copy survives
            redundant = basis[j].leading_monomial() != basis[i].leading_monomial() || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // interreduce
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial head = Polynomial::term(minimal[i].leading_monomial(), minimal[i].leading_coefficient());
        minimal[i] = detail::monic(head + reduce(minimal[i] - head, others));
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.leading_monomial() > b.leading_monomial(); });
    return minimal;
}

}  // namespace qflag

#endif  // QFLAG_GROEBNER_HPP
