#pragma once

#include <gmpxx.h>

#include <string>

namespace locsol {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// "n/d" (or "n" when d=1); inverse of fraction_string.
Rational parse_rational(const std::string& s);
std::string fraction_string(const Rational& q);

enum class Round { Down, Up, Nearest };

// Decimal rendering with directed rounding; `places` digits after the point.
std::string decimal_string(const Rational& q, int places, Round mode = Round::Nearest);

// v_p(z) for z != 0; the p-free part is left in `unit` if given.
unsigned long valuation(const Integer& z, const Integer& p, Integer* unit = nullptr);

bool is_prime(unsigned long n);

}  // namespace locsol
