#ifndef QFLAG_RATIONAL_HPP
#define QFLAG_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qflag {

/// Exact arbitrary-precision rational number (GMP backed).
using Rational = mpq_class;

/// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

/// num/den in canonical form.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace qflag

#endif  // QFLAG_RATIONAL_HPP
