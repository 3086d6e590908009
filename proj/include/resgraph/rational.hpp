// Exact arithmetic substrate: arbitrary-precision integers and rationals.
// Nothing in this library ever touches floating point.

#ifndef RESGRAPH_RATIONAL_HPP
#define RESGRAPH_RATIONAL_HPP

#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "resgraph/errors.hpp"

namespace resgraph {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number. The backend keeps every value in lowest terms
/// with a positive denominator, so numerator(q) / denominator(q) is
/// always the canonical representation.
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using QVector = std::vector<Rational>;

/// num/den with sign normalization. Throws on a zero denominator.
inline Rational make_rational(Int num, Int den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q", or just "p" when the value is an integer.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/" + denominator(q).str();
    }
    return s;
}

inline std::string to_string(const Int& v) { return v.str(); }

/// Checked narrowing for interchange formats (JSON numbers, box sizes).
inline long long to_int64(const Int& v) {
    if (v < std::numeric_limits<long long>::min() ||
        v > std::numeric_limits<long long>::max()) {
        throw Error("integer too large for a 64-bit interchange field: " + v.str());
    }
    return v.convert_to<long long>();
}

inline QVector to_rational_vector(const IntVector& v) {
    QVector out;
    out.reserve(v.size());
    for (const Int& x : v) {
        out.emplace_back(x);
    }
    return out;
}

}  // namespace resgraph

#endif  // RESGRAPH_RATIONAL_HPP
