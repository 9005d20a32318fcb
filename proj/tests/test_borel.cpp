#include "qflag/borel.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qflag;

namespace {

Polynomial x(int i) { return Polynomial::x(i); }

// Oracle: (f - s_i f) / (x_i - x_{i+1}) by exact division against the binomial.
Polynomial divided_difference_oracle(const Polynomial& f, int i) {
    Polynomial num = f - swap_x(f, i, i + 1);
    Polynomial quotient;
    const Polynomial divisor = x(i) - x(i + 1);
    while (!num.is_zero()) {
        Monomial lm = num.leading_monomial();
        Monomial step = lm / Monomial::of(Variable::x(i));
        Polynomial t = Polynomial::term(step, num.leading_coefficient());
        quotient += t;
        num -= t * divisor;
    }
    return quotient;
}

Polynomial random_x_polynomial(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-4, 4), exp(0, 3);
    Polynomial p;
    for (int t = 0; t < 4; ++t) {
        Monomial m;
        for (int v = 1; v <= n; ++v) m.set(Variable::x(v), exp(rng));
        p.add_term(m, Rational(coeff(rng)));
    }
    return p;
}

CohomologyClass single(int n, std::size_t w) {
    CohomologyClass c{n, {}};
    c.add(w, Rational(1));
    return c;
}

}  // namespace

TEST(DividedDifference, KnownValues) {
    EXPECT_EQ(divided_difference(x(1), 1, 3), Polynomial(1));
    EXPECT_EQ(divided_difference(x(1).pow(2) * x(2), 1, 3), x(1) * x(2));
    EXPECT_EQ(divided_difference(x(2), 1, 3), Polynomial(-1));
    EXPECT_THROW(divided_difference(x(1), 3, 3), std::out_of_range);
}

TEST(DividedDifference, MatchesDivisionOracle) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial f = random_x_polynomial(rng, 4);
        for (int i = 1; i <= 3; ++i) EXPECT_EQ(divided_difference(f, i, 4), divided_difference_oracle(f, i));
    }
}

TEST(DividedDifference, NilCoxeterRelations) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_x_polynomial(rng, 4);
        for (int i = 1; i <= 3; ++i) EXPECT_TRUE(divided_difference(divided_difference(f, i, 4), i, 4).is_zero());
        for (int i = 1; i <= 2; ++i) {
            auto d = [](const Polynomial& g, int k) { return divided_difference(g, k, 4); };
            EXPECT_EQ(d(d(d(f, i), i + 1), i), d(d(d(f, i + 1), i), i + 1));
        }
        // distant generators commute
        auto d = [](const Polynomial& g, int k) { return divided_difference(g, k, 4); };
        EXPECT_EQ(d(d(f, 1), 3), d(d(f, 3), 1));
    }
}

TEST(SchubertPolynomials, N3Table) {
    SchubertTable t = schubert_polynomials(3);
    EXPECT_EQ(t.table.size(), 6u);
    // oracle: divided differences of x1^2 x2 by hand
    const Polynomial top = x(1).pow(2) * x(2);
    EXPECT_EQ(t.table.at({3, 2, 1}), top);
    EXPECT_EQ(t.table.at({2, 1, 3}), divided_difference_oracle(divided_difference_oracle(top, 1), 2));
    EXPECT_EQ(t.table.at({2, 1, 3}), x(1));
    EXPECT_EQ(t.table.at({1, 3, 2}), x(1) + x(2));
    EXPECT_EQ(t.table.at({3, 1, 2}), x(1).pow(2));
    EXPECT_EQ(t.table.at({2, 3, 1}), x(1) * x(2));
    EXPECT_EQ(t.table.at({1, 2, 3}), Polynomial(1));
}

TEST(SchubertPolynomials, InvariantsUpToN5) {
    for (int n = 2; n <= 5; ++n) {
        BorelCohomology b(n);
        const SymmetricGroup& g = b.group();
        Polynomial top(1);
        for (int k = 1; k < n; ++k) top *= x(k).pow(static_cast<unsigned>(n - k));
        EXPECT_EQ(b.schubert(g.weyl().longest()), top);
        EXPECT_EQ(b.schubert(g.weyl().identity()), Polynomial(1));
        std::set<Monomial> codes;
        for (std::size_t w = 0; w < g.size(); ++w) {
            GradingReport d = graded_degree(b.schubert(w));
            EXPECT_TRUE(d.homogeneous);
            EXPECT_EQ(d.degree, 2 * g.weyl().length(w));
            codes.insert(b.schubert(w).trailing_monomial());
        }
        EXPECT_EQ(codes.size(), g.size());
    }
}

TEST(SchubertPolynomials, IndependentOfReducedWord) {
    // every descent i of w gives d_i S_w = S_{w s_i}
    for (int n = 2; n <= 4; ++n) {
        BorelCohomology b(n);
        const SymmetricGroup& g = b.group();
        for (std::size_t w = 0; w < g.size(); ++w)
            for (int i = 0; i + 1 < n; ++i) {
                std::size_t u = g.times_simple(w, i);
                Polynomial d = divided_difference(b.schubert(w), i + 1, n);
                if (g.weyl().length(u) < g.weyl().length(w))
                    EXPECT_EQ(d, b.schubert(u));
                else
                    EXPECT_TRUE(d.is_zero());
            }
    }
}

TEST(SchubertPolynomials, RangeChecked) {
    EXPECT_THROW(schubert_polynomials(1), std::out_of_range);
    EXPECT_THROW(schubert_polynomials(7), std::out_of_range);
    EXPECT_NO_THROW(schubert_polynomials(3, 3));
}

TEST(NormalForm, KnownValues) {
    EXPECT_TRUE(normal_form(x(1) + x(2) + x(3), 3).is_zero());
    EXPECT_FALSE(normal_form(x(1).pow(2), 3).is_zero());
    EXPECT_TRUE(normal_form(x(1).pow(2) * x(2) * x(1), 3).is_zero());
}

TEST(NormalForm, StaircaseSupportAndIdealMembers) {
    const int n = 4;
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f = random_x_polynomial(rng, n);
        Polynomial r = normal_form(f, n);
        for (const auto& [m, c] : r.terms())
            for (int k = 1; k <= n; ++k) EXPECT_LE(m[Variable::x(k)], n - k);
        EXPECT_EQ(normal_form(f + elementary_symmetric(2, n) * random_x_polynomial(rng, n), n), r);
    }
    for (int i = 1; i <= n; ++i) EXPECT_TRUE(normal_form(elementary_symmetric(i, n), n).is_zero());
}

TEST(ExpandSchubert, KnownValues) {
    BorelCohomology b(3);
    const SymmetricGroup& g = b.group();
    EXPECT_EQ(b.expand_schubert(x(1)), single(3, g.index_of("213")));
    EXPECT_EQ(b.expand_schubert(x(1) * (x(1) + x(2)) - x(1) * x(2)), single(3, g.index_of("312")));
    EXPECT_EQ(b.expand_schubert(Polynomial(1)), single(3, g.weyl().identity()));
}

TEST(CupProduct, KnownValues) {
    BorelCohomology b(3);
    const SymmetricGroup& g = b.group();
    const std::size_t s1 = g.index_of("213"), s2 = g.index_of("132");
    CohomologyClass expected{3, {}};
    expected.add(g.index_of("231"), Rational(1));  // s1s2
    expected.add(g.index_of("312"), Rational(1));  // s2s1
    EXPECT_EQ(b.cup_product(s1, s2), expected);
    EXPECT_EQ(b.cup_product(s1, s1), single(3, g.index_of("312")));
    for (std::size_t w = 0; w < g.size(); ++w) EXPECT_EQ(b.cup_product(g.weyl().identity(), w), single(3, w));
}

TEST(CupProduct, GradedNonnegativeIntegers) {
    for (int n = 3; n <= 4; ++n) {
        BorelCohomology b(n);
        const SymmetricGroup& g = b.group();
        const int top = n * (n - 1) / 2;
        for (std::size_t u = 0; u < g.size(); ++u)
            for (std::size_t v = u; v < g.size(); ++v) {
                CohomologyClass c = b.cup_product(u, v);
                const int total = g.weyl().length(u) + g.weyl().length(v);
                if (total > top) {
                    EXPECT_TRUE(c.schubert_coeffs.empty());
                }
                for (const auto& [w, coeff] : c.schubert_coeffs) {
                    EXPECT_EQ(g.weyl().length(w), total);
                    EXPECT_TRUE(is_integer(coeff));
                    EXPECT_GT(coeff, 0);
                }
            }
    }
}

TEST(CupProduct, MonkRuleEmerges) {
    // sigma_{s_i} sigma_w = sum lambda_i(alpha^vee) sigma_{w s_alpha} over l(w s_alpha) = l(w) + 1
    for (int n = 2; n <= 4; ++n) {
        BorelCohomology b(n);
        const SymmetricGroup& g = b.group();
        const WeylGroup& weyl = g.weyl();
        const RootSystem& rs = weyl.root_system();
        for (int i = 0; i + 1 < n; ++i) {
            const std::size_t si = weyl.index_of_word({i});
            for (std::size_t w = 0; w < g.size(); ++w) {
                CohomologyClass monk{n, {}};
                for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
                    std::size_t v = weyl.reflect(w, r);
                    if (weyl.length(v) == weyl.length(w) + 1) monk.add(v, Rational(pairing_lambda(rs, i, r)));
                }
                EXPECT_EQ(b.cup_product(si, w), monk) << "n=" << n << " i=" << i << " w=" << g.name(w);
            }
        }
    }
}

TEST(StandardMonomials, KnownValues) {
    EXPECT_EQ(std_elementary_monomial({1, 1}, 3), x(1) * (x(1) + x(2)));
    EXPECT_EQ(std_elementary_monomial({0, 2}, 3), x(1) * x(2));
    EXPECT_EQ(std_elementary_monomial({0, 0, 0}, 4), Polynomial(1));
    EXPECT_THROW(std_elementary_monomial({2, 0}, 3), std::invalid_argument);
    EXPECT_FALSE(is_standard_index({0, 3}, 3));
    EXPECT_EQ(standard_indices(4).size(), 24u);
}

TEST(TransitionMatrix, InvertibleAndConsistent) {
    for (int n = 2; n <= 4; ++n) {
        BorelCohomology b(n);
        const RationalMatrix& m = b.transition_matrix();
        const RationalMatrix& inv = b.inverse_transition();
        ASSERT_EQ(m.rows(), b.group().size());
        EXPECT_EQ(m * inv, RationalMatrix::identity(m.rows()));
        EXPECT_EQ(inv * m, RationalMatrix::identity(m.rows()));
        // rows of M expand e_I in the Schubert basis
        const auto& basis = b.standard_basis();
        for (std::size_t r = 0; r < basis.size(); ++r) {
            Polynomial rebuilt;
            for (std::size_t w = 0; w < b.group().size(); ++w) rebuilt += b.schubert(w) * m(r, w);
            EXPECT_EQ(b.normal_form(rebuilt), b.normal_form(std_elementary_monomial(basis[r], n)));
        }
    }
}

TEST(TransitionMatrix, N3Entries) {
    // x1^2 = e_(1,1) - e_(0,2): row S_312 of the inverse
    BorelCohomology b(3);
    const RationalMatrix& inv = b.inverse_transition();
    const std::size_t w = b.group().index_of("312");
    EXPECT_EQ(inv(w, b.standard_position({1, 1})), 1);
    EXPECT_EQ(inv(w, b.standard_position({0, 2})), -1);
    Rational others = 0;
    for (std::size_t c = 0; c < inv.cols(); ++c) others += abs(inv(w, c));
    EXPECT_EQ(others, 2);
}

TEST(SymmetricGroup, OneLineNotation) {
    SymmetricGroup g(3);
    EXPECT_EQ(g.name(g.index_of("312")), "312");
    EXPECT_EQ(g.weyl().name(g.index_of("312")), "s2s1");
    EXPECT_EQ(g.weyl().name(g.index_of("231")), "s1s2");
    EXPECT_EQ(permutation_from_word({1, 0}, 3), (Permutation{3, 1, 2}));
    EXPECT_THROW(parse_permutation("113", 3), std::invalid_argument);
    EXPECT_THROW(parse_permutation("12", 3), std::invalid_argument);
}
