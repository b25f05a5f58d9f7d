#pragma once

// Exact arithmetic carriers used throughout the library.
//
// Two tiers: identities stated in squared/rational form are checked with
// cpp_rational (exact); expressions mixing square roots of distinct
// rationals are evaluated with 50-digit floats and compared at 1e-9.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>
#include <stdexcept>

namespace keyl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const Rat& q) {
    return Real(numerator(q)) / Real(denominator(q));
}

inline int sgn(const Rat& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

// num/den with the sign moved to the numerator; boost's cpp_rational
// rejects negative denominators outright.
inline Rat frac(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("frac: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

// Parses "p/q" or "p" into an exact rational.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return frac(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string rat_to_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

} // namespace keyl
