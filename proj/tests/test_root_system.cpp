#include "qflag/root_system.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

using namespace qflag;

namespace {

using Vec = std::vector<int>;
using Mat = std::vector<std::vector<int>>;

// Oracle: s_i(v) = v - (sum_j a_ij v_j) alpha_i, closure of simple roots.
std::set<Vec> closure_oracle(const Mat& a) {
    const std::size_t l = a.size();
    std::set<Vec> seen;
    std::queue<Vec> work;
    for (std::size_t i = 0; i < l; ++i) {
        Vec e(l, 0);
        e[i] = 1;
        work.push(e);
        seen.insert(e);
    }
    while (!work.empty()) {
        Vec v = work.front();
        work.pop();
        for (std::size_t i = 0; i < l; ++i) {
            int pairing = 0;
            for (std::size_t j = 0; j < l; ++j) pairing += a[i][j] * v[j];
            Vec w = v;
            w[i] -= pairing;
            if (seen.insert(w).second) work.push(w);
        }
    }
    std::set<Vec> positive;
    for (const auto& v : seen)
        if (std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; })) positive.insert(v);
    return positive;
}

Mat multiply(const Mat& x, const Mat& y) {
    Mat r(x.size(), std::vector<int>(x.size(), 0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = 0; k < x.size(); ++k)
            for (std::size_t j = 0; j < x.size(); ++j) r[i][j] += x[i][k] * y[k][j];
    return r;
}

// Oracle: matrix of s_i acting on simple-root coordinates (column j = s_i(alpha_j)).
Mat reflection_oracle(const Mat& a, std::size_t i) {
    const std::size_t l = a.size();
    Mat s(l, std::vector<int>(l, 0));
    for (std::size_t j = 0; j < l; ++j) {
        s[j][j] = 1;
        s[i][j] -= a[i][j];
    }
    return s;
}

// Oracle: BFS on the Cayley graph; distance from the identity is the length.
std::map<Mat, int> cayley_oracle(const Mat& a) {
    const std::size_t l = a.size();
    Mat id(l, std::vector<int>(l, 0));
    for (std::size_t i = 0; i < l; ++i) id[i][i] = 1;
    std::map<Mat, int> dist{{id, 0}};
    std::queue<Mat> work;
    work.push(id);
    while (!work.empty()) {
        Mat g = work.front();
        work.pop();
        for (std::size_t i = 0; i < l; ++i) {
            Mat h = multiply(g, reflection_oracle(a, i));
            if (dist.emplace(h, dist[g] + 1).second) work.push(h);
        }
    }
    return dist;
}

Vec flatten(const Mat& m) {
    Vec r;
    for (const auto& row : m) r.insert(r.end(), row.begin(), row.end());
    return r;
}

std::set<Vec> library_roots(const RootSystem& rs) {
    return {rs.positive_roots.begin(), rs.positive_roots.end()};
}

}  // namespace

TEST(CartanMatrix, ValidatesEntries) {
    EXPECT_THROW(CartanMatrix(Mat{{2, -1}, {0, 2}}), invalid_cartan);
    EXPECT_THROW(CartanMatrix(Mat{{1, 0}, {0, 2}}), invalid_cartan);
    EXPECT_THROW(CartanMatrix(Mat{{2, 1}, {1, 2}}), invalid_cartan);
    EXPECT_THROW(CartanMatrix(Mat{{2, -1, 0}, {-1, 2}}), invalid_cartan);
    EXPECT_NO_THROW(CartanMatrix(Mat{{2}}));
}

TEST(CartanMatrix, PresetsResolve) {
    EXPECT_EQ(cartan_preset("A2").entries(), (Mat{{2, -1}, {-1, 2}}));
    EXPECT_EQ(cartan_preset("B2").entries(), (Mat{{2, -1}, {-2, 2}}));
    EXPECT_EQ(cartan_preset("A1").entries(), (Mat{{2}}));
    EXPECT_EQ(cartan_preset("A4").rank(), 4u);
    EXPECT_EQ(cartan_preset("G2").rank(), 2u);
    EXPECT_ANY_THROW(cartan_preset("E8x"));
}

TEST(BuildRootSystem, A2Roots) {
    RootSystem rs = build_root_system(cartan_preset("A2"));
    EXPECT_EQ(library_roots(rs), (std::set<Vec>{{1, 0}, {0, 1}, {1, 1}}));
    EXPECT_EQ(rs.heights, (std::vector<int>{1, 1, 2}));
}

TEST(BuildRootSystem, A1HasOneRoot) {
    RootSystem rs = build_root_system(cartan_preset("A1"));
    ASSERT_EQ(rs.positive_roots.size(), 1u);
    EXPECT_EQ(rs.heights[0], 1);
}

TEST(BuildRootSystem, MatchesClosureOracle) {
    for (std::string t : {"A1", "A2", "A3", "A4", "B2", "G2"}) {
        RootSystem rs = build_root_system(cartan_preset(t));
        EXPECT_EQ(library_roots(rs), closure_oracle(cartan_preset(t).entries())) << t;
    }
    EXPECT_EQ(build_root_system(cartan_preset("B2")).positive_roots.size(), 4u);
    EXPECT_EQ(build_root_system(cartan_preset("G2")).positive_roots.size(), 6u);
    EXPECT_EQ(build_root_system(cartan_preset("A3")).positive_roots.size(), 6u);
}

TEST(BuildRootSystem, CorootsAreDualRootsWithHeights) {
    for (std::string t : {"A3", "B2", "G2"}) {
        RootSystem rs = build_root_system(cartan_preset(t));
        std::set<Vec> coroots(rs.positive_coroots.begin(), rs.positive_coroots.end());
        EXPECT_EQ(coroots, closure_oracle(cartan_preset(t).transpose().entries())) << t;
        for (std::size_t k = 0; k < rs.positive_coroots.size(); ++k) {
            int sum = 0;
            for (int m : rs.positive_coroots[k]) sum += m;
            EXPECT_EQ(rs.heights[k], sum);
        }
        for (std::size_t i = 0; i < rs.rank(); ++i) EXPECT_EQ(rs.heights[rs.root_index(rs.positive_roots[i])], 1);
    }
}

TEST(BuildRootSystem, OrderedByHeight) {
    RootSystem rs = build_root_system(cartan_preset("G2"));
    for (std::size_t k = 1; k < rs.positive_roots.size(); ++k) {
        auto h = [&](std::size_t r) {
            int s = 0;
            for (int c : rs.positive_roots[r]) s += c;
            return s;
        };
        EXPECT_LE(h(k - 1), h(k));
    }
}

TEST(BuildRootSystem, RejectsNonFiniteType) {
    EXPECT_THROW(build_root_system(CartanMatrix(Mat{{2, -2}, {-2, 2}})), not_finite_type);
    EXPECT_THROW(build_root_system(CartanMatrix(Mat{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), not_finite_type);
}

TEST(EnumerateWeyl, Orders) {
    const std::map<std::string, std::size_t> orders{{"A1", 2}, {"A2", 6}, {"A3", 24}, {"A4", 120}, {"B2", 8}, {"G2", 12}};
    for (const auto& [t, order] : orders) EXPECT_EQ(enumerate_weyl(build_root_system(cartan_preset(t))).size(), order) << t;
}

TEST(EnumerateWeyl, A2LengthMultiset) {
    auto elems = enumerate_weyl(build_root_system(cartan_preset("A2")));
    std::multiset<int> lengths;
    for (const auto& w : elems) lengths.insert(w.length);
    EXPECT_EQ(lengths, (std::multiset<int>{0, 1, 1, 2, 2, 3}));
    EXPECT_EQ(word_to_string(elems.front().canonical_word), "e");
}

TEST(EnumerateWeyl, A1AndB2) {
    auto a1 = enumerate_weyl(build_root_system(cartan_preset("A1")));
    ASSERT_EQ(a1.size(), 2u);
    EXPECT_EQ(a1[0].length, 0);
    EXPECT_EQ(word_to_string(a1[1].canonical_word), "s1");
    auto b2 = enumerate_weyl(build_root_system(cartan_preset("B2")));
    EXPECT_EQ(b2.size(), 8u);
    EXPECT_EQ(b2.back().length, 4);
}

TEST(EnumerateWeyl, MatchesCayleyGraphOracle) {
    for (std::string t : {"A2", "A3", "B2", "G2"}) {
        RootSystem rs = build_root_system(cartan_preset(t));
        std::map<Vec, int> oracle;
        for (const auto& [m, d] : cayley_oracle(rs.cartan.entries())) oracle[flatten(m)] = d;
        auto elems = enumerate_weyl(rs);
        ASSERT_EQ(elems.size(), oracle.size()) << t;
        std::set<Vec> actions;
        for (const auto& w : elems) {
            auto it = oracle.find(w.action);
            ASSERT_NE(it, oracle.end()) << t;
            EXPECT_EQ(w.length, it->second) << t;
            EXPECT_EQ(static_cast<int>(w.canonical_word.size()), w.length);
            actions.insert(w.action);
        }
        EXPECT_EQ(actions.size(), elems.size());
    }
}

TEST(EnumerateWeyl, LengthIsInversionCount) {
    for (std::string t : {"A3", "B2", "G2"}) {
        RootSystem rs = build_root_system(cartan_preset(t));
        for (const auto& w : enumerate_weyl(rs)) {
            int negatives = 0;
            for (const auto& root : rs.positive_roots) {
                Vec image = w.apply(root);
                if (std::all_of(image.begin(), image.end(), [](int c) { return c <= 0; })) ++negatives;
            }
            EXPECT_EQ(negatives, w.length);
        }
    }
}

TEST(EnumerateWeyl, DeterministicOrderAndLexMinimalWords) {
    RootSystem rs = build_root_system(cartan_preset("A3"));
    auto elems = enumerate_weyl(rs);
    for (std::size_t k = 1; k < elems.size(); ++k) {
        EXPECT_TRUE(elems[k - 1].length < elems[k].length ||
                    (elems[k - 1].length == elems[k].length && elems[k - 1].canonical_word < elems[k].canonical_word));
    }
    // the longest element of A3 has lex-minimal reduced word s1s2s1s3s2s1
    EXPECT_EQ(word_to_string(elems.back().canonical_word), "s1s2s1s3s2s1");
    EXPECT_EQ(elems.back().length, 6);
}

TEST(Reflect, KnownValues) {
    RootSystem rs = build_root_system(cartan_preset("A2"));
    WeylGroup g(rs);
    const std::size_t a1 = rs.root_index({1, 0}), a12 = rs.root_index({1, 1});
    WeylElement s1 = reflect(rs, weyl_from_word(rs, {}), a1);
    EXPECT_EQ(s1, weyl_from_word(rs, {0}));
    EXPECT_EQ(s1.length, 1);

    // oracle: s2 s1 s_{alpha1} computed by matrix products
    const Mat& a = rs.cartan.entries();
    Mat lhs = multiply(multiply(reflection_oracle(a, 1), reflection_oracle(a, 0)), reflection_oracle(a, 0));
    WeylElement r = reflect(rs, weyl_from_word(rs, {1, 0}), a1);
    EXPECT_EQ(r.action, flatten(lhs));
    EXPECT_EQ(r, weyl_from_word(rs, {1}));
    EXPECT_EQ(r.length, 1);

    WeylElement e = reflect(rs, g[g.longest()], a12);
    EXPECT_EQ(e.length, 0);
    EXPECT_EQ(g.reflect(g.longest(), a12), g.identity());
    EXPECT_THROW(reflect(rs, s1, 99), std::out_of_range);
}

TEST(Reflect, IsAnInvolution) {
    for (std::string t : {"A3", "B2", "G2"}) {
        WeylGroup g(build_root_system(cartan_preset(t)));
        for (std::size_t w = 0; w < g.size(); ++w)
            for (std::size_t r = 0; r < g.root_system().positive_roots.size(); ++r)
                EXPECT_EQ(g.reflect(g.reflect(w, r), r), w);
    }
}

TEST(PairingLambda, KnownValues) {
    RootSystem rs = build_root_system(cartan_preset("A2"));
    EXPECT_EQ(pairing_lambda(rs, 0, rs.root_index({1, 0})), 1);
    EXPECT_EQ(pairing_lambda(rs, 0, rs.root_index({0, 1})), 0);
    EXPECT_EQ(pairing_lambda(rs, 0, rs.root_index({1, 1})), 1);
    EXPECT_THROW(pairing_lambda(rs, 5, 0), std::out_of_range);
}

TEST(PairingLambda, DualOfSimpleCoroots) {
    for (std::string t : {"B2", "G2", "A3"}) {
        RootSystem rs = build_root_system(cartan_preset(t));
        for (std::size_t i = 0; i < rs.rank(); ++i)
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                Vec simple(rs.rank(), 0);
                simple[j] = 1;
                EXPECT_EQ(pairing_lambda(rs, i, rs.root_index(simple)), i == j ? 1 : 0);
            }
    }
}

TEST(CorootInner, SimplyLacedExamples) {
    RootSystem a2 = build_root_system(cartan_preset("A2"));
    EXPECT_EQ(coroot_inner(a2, 0, 0), 2);
    EXPECT_EQ(coroot_inner(a2, 0, 1), -1);
    RootSystem a1 = build_root_system(cartan_preset("A1"));
    EXPECT_EQ(coroot_inner(a1, 0, 0), 2);
}

TEST(CorootInner, B2MatchesSymmetrizerOracle) {
    RootSystem rs = build_root_system(cartan_preset("B2"));
    // oracle: d_i a_ij = d_j a_ji with short roots of squared length 2;
    // alpha_1 is long, so d = (2, 1) and <a_i, a_j> = d_i a_ij
    const Mat& a = rs.cartan.entries();
    const int d[2] = {2, 1};
    auto inner = [&](int i, int j) { return Rational(d[i] * a[i][j]); };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rational expected = Rational(4) * inner(i, j) / (inner(i, i) * inner(j, j));
            EXPECT_EQ(coroot_inner(rs, i, j), expected);
        }
    // coroot of the long root has squared length 1, coroot of the short root 2
    EXPECT_EQ(coroot_inner(rs, 0, 0), 1);
    EXPECT_EQ(coroot_inner(rs, 1, 1), 2);
    EXPECT_EQ(coroot_inner(rs, 0, 1), -1);
}

TEST(CorootInner, SymmetricPositiveDefinite) {
    for (std::string t : {"A1", "A2", "A3", "A4", "B2", "G2"}) {
        RootSystem rs = build_root_system(cartan_preset(t));
        const std::size_t l = rs.rank();
        std::vector<std::vector<Rational>> gram(l, std::vector<Rational>(l));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) {
                gram[i][j] = coroot_inner(rs, i, j);
                EXPECT_EQ(coroot_inner(rs, i, j), coroot_inner(rs, j, i));
            }
        // Gaussian elimination: all pivots positive iff positive definite
        for (std::size_t p = 0; p < l; ++p) {
            ASSERT_GT(gram[p][p], 0) << t;
            for (std::size_t r = p + 1; r < l; ++r) {
                Rational f = gram[r][p] / gram[p][p];
                for (std::size_t c = p; c < l; ++c) gram[r][c] -= f * gram[p][c];
            }
        }
    }
}

TEST(CorootInner, SymmetrizerCondition) {
    for (std::string t : {"B2", "G2", "A3"}) {
        RootSystem rs = build_root_system(cartan_preset(t));
        for (std::size_t i = 0; i < rs.rank(); ++i)
            for (std::size_t j = 0; j < rs.rank(); ++j)
                EXPECT_EQ(rs.symmetrizer[i] * rs.cartan(i, j), rs.symmetrizer[j] * rs.cartan(j, i));
        EXPECT_EQ(*std::min_element(rs.symmetrizer.begin(), rs.symmetrizer.end()), 1);
    }
}

TEST(WeylGroup, IndexingAndWords) {
    WeylGroup g(build_root_system(cartan_preset("B2")));
    EXPECT_EQ(g.identity(), 0u);
    EXPECT_EQ(g.length(g.longest()), 4);
    for (std::size_t w = 0; w < g.size(); ++w) {
        EXPECT_EQ(g.index_of(g[w]), w);
        EXPECT_EQ(g.index_of_word(g[w].canonical_word), w);
    }
    EXPECT_EQ(g.name(g.index_of_word({1, 0})), "s2s1");
    // s1 s2 s1 s2 = s2 s1 s2 s1 in B2
    EXPECT_EQ(g.index_of_word({0, 1, 0, 1}), g.index_of_word({1, 0, 1, 0}));
}
