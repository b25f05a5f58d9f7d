#pragma once

// sign * sqrt(radicand) with a nonnegative rational radicand. Closed under
// multiplication, so products of scalar factors stay exact; sums generally
// do not, and are taken in 50-digit floats by the callers.

#include "rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <optional>

namespace keyl {

struct SqrtRat {
    int sign = 0;     // -1, 0, +1
    Rat radicand = 0; // >= 0; 0 iff sign == 0

    SqrtRat() = default;
    SqrtRat(int s, Rat r) : sign(s), radicand(std::move(r)) {
        if (radicand < 0) throw std::invalid_argument("SqrtRat: negative radicand");
        if (radicand == 0) sign = 0;
        if (sign == 0) radicand = 0;
    }

    static SqrtRat zero() { return SqrtRat(); }
    static SqrtRat one() { return SqrtRat(1, 1); }
    // sqrt(|q|) with the sign of q.
    static SqrtRat sqrt_of(const Rat& q) { return SqrtRat(sgn(q), abs(q)); }

    bool is_zero() const { return sign == 0; }

    SqrtRat operator*(const SqrtRat& o) const {
        return SqrtRat(sign * o.sign, radicand * o.radicand);
    }
    SqrtRat& operator*=(const SqrtRat& o) {
        *this = *this * o;
        return *this;
    }

    // Exact square: sign * radicand (the sign survives squaring by design so
    // products like a*b keep their relative sign information).
    Rat signed_square() const { return Rat(sign) * radicand; }
    Rat square() const { return radicand; }

    Real value() const {
        using boost::multiprecision::sqrt;
        return Real(sign) * sqrt(to_real(radicand));
    }

    // Exact rational value when the radicand is a perfect square.
    std::optional<Rat> exact_value() const {
        if (sign == 0) return Rat(0);
        Int nu = numerator(radicand), de = denominator(radicand);
        Int rn = boost::multiprecision::sqrt(nu), rd = boost::multiprecision::sqrt(de);
        if (rn * rn != nu || rd * rd != de) return std::nullopt;
        return Rat(sign) * Rat(rn, rd);
    }
};

inline SqrtRat operator-(const SqrtRat& a) { return SqrtRat(-a.sign, a.radicand); }

} // namespace keyl
