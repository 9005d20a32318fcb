#ifndef QFLAG_ROOT_SYSTEM_HPP
#define QFLAG_ROOT_SYSTEM_HPP

// Finite root systems from Cartan matrices, and their Weyl groups.
//
// Conventions: a_ij = <alpha_i^vee, alpha_j>, so s_i(alpha_j) = alpha_j - a_ij alpha_i.
// Roots are integer vectors in the simple-root basis, coroots integer vectors
// in the simple-coroot basis. Indices are 0-based throughout the C++ API.

#include "qflag/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qflag {

using IntVector = std::vector<int>;
using IntMatrix = std::vector<IntVector>;

class not_finite_type : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_cartan : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CartanMatrix {
public:
    CartanMatrix() = default;

    explicit CartanMatrix(IntMatrix entries) : a_(std::move(entries)) { validate(); }

    std::size_t rank() const { return a_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const IntMatrix& entries() const { return a_; }

    CartanMatrix transpose() const {
        IntMatrix t(rank(), IntVector(rank()));
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) t[i][j] = a_[j][i];
        return CartanMatrix(std::move(t));
    }

    friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

private:
    void validate() const {
        if (a_.empty()) throw invalid_cartan("Cartan matrix must have rank >= 1");
        for (const auto& row : a_)
            if (row.size() != a_.size()) throw invalid_cartan("Cartan matrix must be square");
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if (a_[i][i] != 2) throw invalid_cartan("Cartan diagonal entries must be 2");
            for (std::size_t j = 0; j < a_.size(); ++j) {
                if (i == j) continue;
                if (a_[i][j] > 0) throw invalid_cartan("Cartan off-diagonal entries must be <= 0");
                if ((a_[i][j] == 0) != (a_[j][i] == 0))
                    throw invalid_cartan("Cartan matrix must satisfy a_ij = 0 iff a_ji = 0");
            }
        }
    }

    IntMatrix a_;
};

/// Standard Cartan matrices: "A1".."A8", "B2", "G2".
inline CartanMatrix cartan_preset(const std::string& name) {
    if (name == "B2") return CartanMatrix({{2, -1}, {-2, 2}});
    if (name == "G2") return CartanMatrix({{2, -1}, {-3, 2}});
    if (name.size() >= 2 && name[0] == 'A') {
        int l = 0;
        try {
            std::size_t used = 0;
            l = std::stoi(name.substr(1), &used);
            if (used != name.size() - 1) l = 0;
        } catch (const std::exception&) {
            l = 0;
        }
        if (l >= 1 && l <= 8) {
            IntMatrix a(static_cast<std::size_t>(l), IntVector(static_cast<std::size_t>(l), 0));
            for (int i = 0; i < l; ++i) {
                a[i][i] = 2;
                if (i + 1 < l) a[i][i + 1] = a[i + 1][i] = -1;
            }
            return CartanMatrix(std::move(a));
        }
    }
    throw std::invalid_argument("unknown Cartan type '" + name + "'");
}

struct RootSystem {
    /// Closure aborts past this many positive roots.
    static constexpr std::size_t kClosureBound = 500;

    CartanMatrix cartan;
    std::vector<IntVector> positive_roots;    // simple-root coordinates
    std::vector<IntVector> positive_coroots;  // simple-coroot coordinates, same indexing
    std::vector<int> heights;                 // coroot heights
    std::vector<Rational> symmetrizer;        // d_i with d_i a_ij = d_j a_ji, short roots d = 1

    std::size_t rank() const { return cartan.rank(); }
    std::size_t num_positive_roots() const { return positive_roots.size(); }

    /// Index of a positive root given its coordinates, or npos.
    std::size_t root_index(const IntVector& coords) const {
        auto it = std::find(positive_roots.begin(), positive_roots.end(), coords);
        return it == positive_roots.end() ? npos : static_cast<std::size_t>(it - positive_roots.begin());
    }

    /// Symmetrized form <beta, gamma> on root-basis coordinates.
    Rational root_inner(const IntVector& beta, const IntVector& gamma) const {
        Rational s = 0;
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                if (beta[i] != 0 && gamma[j] != 0) s += symmetrizer[i] * cartan(i, j) * beta[i] * gamma[j];
        return s;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

namespace detail {

inline bool is_positive(const IntVector& v) {
    bool nonzero = false;
    for (int c : v) {
        if (c < 0) return false;
        if (c > 0) nonzero = true;
    }
    return nonzero;
}

inline bool is_negative(const IntVector& v) {
    bool nonzero = false;
    for (int c : v) {
        if (c > 0) return false;
        if (c < 0) nonzero = true;
    }
    return nonzero;
}

// <alpha_i^vee, beta> for beta in root coordinates
inline int simple_coroot_pairing(const CartanMatrix& a, std::size_t i, const IntVector& beta) {
    int s = 0;
    for (std::size_t j = 0; j < a.rank(); ++j) s += a(i, j) * beta[j];
    return s;
}

inline std::vector<Rational> symmetrize(const CartanMatrix& a) {
    const std::size_t l = a.rank();
    std::vector<Rational> d(l, Rational(0));
    for (std::size_t start = 0; start < l; ++start) {
        if (d[start] != 0) continue;
        std::vector<std::size_t> component{start};
        d[start] = 1;
        for (std::size_t head = 0; head < component.size(); ++head) {
            std::size_t i = component[head];
            for (std::size_t j = 0; j < l; ++j) {
                if (i == j || a(i, j) == 0) continue;
                Rational dj = d[i] * a(i, j) / a(j, i);
                if (d[j] == 0) {
                    d[j] = dj;
                    component.push_back(j);
                } else if (d[j] != dj) {
                    throw not_finite_type("Cartan matrix is not symmetrizable");
                }
            }
        }
        Rational smallest = d[component.front()];
        for (std::size_t i : component) smallest = std::min(smallest, d[i]);
        for (std::size_t i : component) d[i] /= smallest;
    }
    return d;
}

inline std::vector<IntVector> positive_root_closure(const CartanMatrix& a) {
    const std::size_t l = a.rank();
    std::set<IntVector> seen;
    std::vector<IntVector> queue;
    for (std::size_t i = 0; i < l; ++i) {
        IntVector e(l, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t i = 0; i < l; ++i) {
            IntVector beta = queue[head];
            int c = simple_coroot_pairing(a, i, beta);
            if (c == 0) continue;
            beta[i] -= c;
            if (!is_positive(beta) || seen.count(beta)) continue;
            seen.insert(beta);
            queue.push_back(beta);
            if (queue.size() > RootSystem::kClosureBound)
                throw not_finite_type("not finite type: more than " + std::to_string(RootSystem::kClosureBound) +
                                      " positive roots");
        }
    }
    auto height = [](const IntVector& v) { return std::accumulate(v.begin(), v.end(), 0); };
    std::sort(queue.begin(), queue.end(), [&](const IntVector& x, const IntVector& y) {
        int hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x > y;
    });
    return queue;
}

}  // namespace detail

inline RootSystem build_root_system(const CartanMatrix& cartan) {
    RootSystem rs;
    rs.cartan = cartan;
    rs.symmetrizer = detail::symmetrize(cartan);
    rs.positive_roots = detail::positive_root_closure(cartan);
    for (const auto& alpha : rs.positive_roots) {
        // alpha^vee = sum_i c_i (d_i / d_alpha) alpha_i^vee
        Rational d_alpha = rs.root_inner(alpha, alpha) / 2;
        if (d_alpha <= 0) throw not_finite_type("not finite type: non-positive root norm");
        IntVector m(rs.rank());
        int height = 0;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            Rational mi = Rational(alpha[i]) * rs.symmetrizer[i] / d_alpha;
            if (!is_integer(mi)) throw not_finite_type("not finite type: non-integral coroot");
            m[i] = static_cast<int>(mi.get_num().get_si());
            height += m[i];
        }
        rs.positive_coroots.push_back(std::move(m));
        rs.heights.push_back(height);
    }
    return rs;
}

/// lambda_i(alpha^vee) = m_i for the positive root with index `root`.
inline int pairing_lambda(const RootSystem& rs, std::size_t i, std::size_t root) {
    if (i >= rs.rank()) throw std::out_of_range("fundamental weight index out of range");
    if (root >= rs.num_positive_roots()) throw std::out_of_range("positive root index out of range");
    return rs.positive_coroots[root][i];
}

/// <alpha_i^vee, alpha_j^vee> = 4 <alpha_i, alpha_j> / (<alpha_i, alpha_i> <alpha_j, alpha_j>).
inline Rational coroot_inner(const RootSystem& rs, std::size_t i, std::size_t j) {
    if (i >= rs.rank() || j >= rs.rank()) throw std::out_of_range("simple root index out of range");
    Rational aij = rs.symmetrizer[i] * rs.cartan(i, j);
    return 4 * aij / ((2 * rs.symmetrizer[i]) * (2 * rs.symmetrizer[j]));
}

/// Weyl group element, identified by its action matrix on simple-root
/// coordinates (column j is the image of alpha_j).
struct WeylElement {
    std::size_t rank = 0;
    IntVector action;  // row-major rank x rank
    int length = 0;
    std::vector<int> canonical_word;  // lex-minimal reduced word, 0-based letters

    IntVector apply(const IntVector& v) const {
        IntVector r(rank, 0);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j) r[i] += action[i * rank + j] * v[j];
        return r;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action == b.action; }
};

inline std::string word_to_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (int i : word) s += "s" + std::to_string(i + 1);
    return s;
}

namespace detail {

inline IntVector multiply_actions(const IntVector& a, const IntVector& b, std::size_t l) {
    IntVector r(l * l, 0);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t k = 0; k < l; ++k) {
            int aik = a[i * l + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < l; ++j) r[i * l + j] += aik * b[k * l + j];
        }
    return r;
}

inline IntVector identity_action(std::size_t l) {
    IntVector r(l * l, 0);
    for (std::size_t i = 0; i < l; ++i) r[i * l + i] = 1;
    return r;
}

inline IntVector simple_reflection_action(const CartanMatrix& a, std::size_t i) {
    const std::size_t l = a.rank();
    IntVector r = identity_action(l);
    for (std::size_t j = 0; j < l; ++j) r[i * l + j] -= a(i, j);
    return r;
}

// s_alpha(beta) = beta - <alpha^vee, beta> alpha
inline IntVector root_reflection_action(const RootSystem& rs, std::size_t root) {
    const std::size_t l = rs.rank();
    const IntVector& alpha = rs.positive_roots[root];
    const IntVector& m = rs.positive_coroots[root];
    IntVector r = identity_action(l);
    for (std::size_t j = 0; j < l; ++j) {
        int pairing = 0;
        for (std::size_t i = 0; i < l; ++i) pairing += m[i] * rs.cartan(i, j);
        for (std::size_t i = 0; i < l; ++i) r[i * l + j] -= pairing * alpha[i];
    }
    return r;
}

inline int inversion_count(const RootSystem& rs, const IntVector& action) {
    WeylElement tmp{rs.rank(), action, 0, {}};
    int n = 0;
    for (const auto& alpha : rs.positive_roots)
        if (is_negative(tmp.apply(alpha))) ++n;
    return n;
}

// Greedy on left descents yields the lex-minimal reduced word.
inline std::vector<int> lex_min_reduced_word(const RootSystem& rs, IntVector action) {
    std::vector<int> word;
    int len = inversion_count(rs, action);
    while (len > 0) {
        bool found = false;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            IntVector next = multiply_actions(simple_reflection_action(rs.cartan, i), action, rs.rank());
            int next_len = inversion_count(rs, next);
            if (next_len < len) {
                word.push_back(static_cast<int>(i));
                action = std::move(next);
                len = next_len;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no left descent for element of positive length");
    }
    return word;
}

}  // namespace detail

inline WeylElement make_weyl_element(const RootSystem& rs, IntVector action) {
    WeylElement w;
    w.rank = rs.rank();
    w.length = detail::inversion_count(rs, action);
    w.canonical_word = detail::lex_min_reduced_word(rs, action);
    w.action = std::move(action);
    return w;
}

inline WeylElement weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
    IntVector action = detail::identity_action(rs.rank());
    for (int i : word) {
        if (i < 0 || static_cast<std::size_t>(i) >= rs.rank()) throw std::out_of_range("reflection index out of range");
        action = detail::multiply_actions(action, detail::simple_reflection_action(rs.cartan, static_cast<std::size_t>(i)),
                                          rs.rank());
    }
    return make_weyl_element(rs, std::move(action));
}

/// All of W, ordered by length and then lex on the canonical word.
inline std::vector<WeylElement> enumerate_weyl(const RootSystem& rs) {
    const std::size_t l = rs.rank();
    std::vector<IntVector> simple;
    for (std::size_t i = 0; i < l; ++i) simple.push_back(detail::simple_reflection_action(rs.cartan, i));

    std::vector<WeylElement> out;
    std::vector<WeylElement> layer{{l, detail::identity_action(l), 0, {}}};
    std::set<IntVector> seen{layer.front().action};
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end(),
                  [](const WeylElement& a, const WeylElement& b) { return a.canonical_word < b.canonical_word; });
        // candidates for the next layer: u = w s_i with l(u) = l(w) + 1; keep lex-min word
        std::map<IntVector, std::vector<int>> next;
        for (const auto& w : layer) {
            for (std::size_t i = 0; i < l; ++i) {
                IntVector u = detail::multiply_actions(w.action, simple[i], l);
                if (seen.count(u)) continue;
                std::vector<int> word = w.canonical_word;
                word.push_back(static_cast<int>(i));
                auto it = next.find(u);
                if (it == next.end())
                    next.emplace(std::move(u), std::move(word));
                else if (word < it->second)
                    it->second = std::move(word);
            }
        }
        int len = layer.front().length;
        for (auto& w : layer) out.push_back(std::move(w));
        layer.clear();
        for (auto& [action, word] : next) {
            seen.insert(action);
            layer.push_back({l, action, len + 1, word});
        }
        if (out.size() + layer.size() > 100000) throw not_finite_type("Weyl group too large");
    }
    return out;
}

/// w * s_alpha for the positive root with index `root`.
inline WeylElement reflect(const RootSystem& rs, const WeylElement& w, std::size_t root) {
    if (root >= rs.num_positive_roots()) throw std::out_of_range("positive root index out of range");
    return make_weyl_element(rs, detail::multiply_actions(w.action, detail::root_reflection_action(rs, root), rs.rank()));
}

/// Enumerated Weyl group with index lookup and a precomputed table of
/// right multiplication by root reflections.
class WeylGroup {
public:
    explicit WeylGroup(RootSystem rs) : rs_(std::move(rs)), elements_(enumerate_weyl(rs_)) {
        for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k].action, k);
        const std::size_t roots = rs_.num_positive_roots();
        reflect_table_.resize(elements_.size() * roots);
        std::vector<IntVector> reflections;
        for (std::size_t a = 0; a < roots; ++a) reflections.push_back(detail::root_reflection_action(rs_, a));
        for (std::size_t k = 0; k < elements_.size(); ++k)
            for (std::size_t a = 0; a < roots; ++a)
                reflect_table_[k * roots + a] =
                    index_.at(detail::multiply_actions(elements_[k].action, reflections[a], rs_.rank()));
    }

    const RootSystem& root_system() const { return rs_; }
    std::size_t size() const { return elements_.size(); }
    std::size_t rank() const { return rs_.rank(); }
    const WeylElement& operator[](std::size_t k) const { return elements_[k]; }
    const std::vector<WeylElement>& elements() const { return elements_; }

    std::size_t identity() const { return 0; }
    std::size_t longest() const { return elements_.size() - 1; }
    int length(std::size_t k) const { return elements_[k].length; }

    std::size_t index_of(const WeylElement& w) const { return index_.at(w.action); }

    std::size_t index_of_word(const std::vector<int>& word) const { return index_of(weyl_from_word(rs_, word)); }

    /// Index of w * s_alpha.
    std::size_t reflect(std::size_t w, std::size_t root) const {
        return reflect_table_[w * rs_.num_positive_roots() + root];
    }

    /// Index of s_i as a positive-root index (simple roots come first).
    std::size_t simple_root_index(std::size_t i) const {
        IntVector e(rank(), 0);
        e[i] = 1;
        return rs_.root_index(e);
    }

    std::string name(std::size_t k) const { return word_to_string(elements_[k].canonical_word); }

private:
    RootSystem rs_;
    std::vector<WeylElement> elements_;
    std::map<IntVector, std::size_t> index_;
    std::vector<std::size_t> reflect_table_;
};

}  // namespace qflag

#endif  // QFLAG_ROOT_SYSTEM_HPP
