#pragma once

#include <string>
#include <utility>

#include "locsol/rational.hpp"

namespace locsol {

// m * 2^e with exact +,-,*.  Canonical form: m odd, or m = 0 (then e = 0).
class Dyadic {
  public:
    Dyadic() : m_(0), e_(0) {}
    explicit Dyadic(long v) : m_(v), e_(0) { canonicalize(); }
    Dyadic(Integer mantissa, long exponent) : m_(std::move(mantissa)), e_(exponent) { canonicalize(); }

    const Integer& mantissa() const { return m_; }
    long exponent() const { return e_; }
    bool is_zero() const { return m_ == 0; }

    Dyadic operator-() const { return Dyadic(-m_, e_); }
    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
    Dyadic operator*(const Dyadic& o) const { return Dyadic(m_ * o.m_, e_ + o.e_); }

    bool operator==(const Dyadic& o) const { return m_ == o.m_ && e_ == o.e_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    bool operator<(const Dyadic& o) const { return cmp(o) < 0; }
    bool operator<=(const Dyadic& o) const { return cmp(o) <= 0; }
    bool operator>(const Dyadic& o) const { return cmp(o) > 0; }
    bool operator>=(const Dyadic& o) const { return cmp(o) >= 0; }
    int cmp(const Dyadic& o) const;

    int sgn() const { return sign(m_); }

    // Nearest dyadic with at most `bits` mantissa bits on the given side.
    Dyadic round_down(unsigned bits) const;  // result <= *this
    Dyadic round_up(unsigned bits) const;    // result >= *this

    static Dyadic from_rational_down(const Rational& q, unsigned bits);
    static Dyadic from_rational_up(const Rational& q, unsigned bits);

    Rational to_rational() const;
    double to_double() const { return mpq_get_d(to_rational().get_mpq_t()); }

    // "m/2^k" with k >= 0 (plain integer when e >= 0); exact round trip.
    std::string to_string() const;
    static Dyadic parse(const std::string& s);

  private:
    void canonicalize();
    Integer m_;
    long e_;
};

// [lo, hi] with outward rounding to `precision` mantissa bits.
class DyadicInterval {
  public:
    DyadicInterval() : prec_(128) {}
    DyadicInterval(Dyadic lo, Dyadic hi, unsigned precision = 128);

    static DyadicInterval from_point(const Dyadic& d, unsigned precision = 128);
    static DyadicInterval from_rational(const Rational& q, unsigned precision = 128);
    static DyadicInterval from_rationals(const Rational& lo, const Rational& hi, unsigned precision = 128);

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    unsigned precision() const { return prec_; }

    DyadicInterval operator+(const DyadicInterval& o) const;
    DyadicInterval operator*(const DyadicInterval& o) const;

    bool contains(const Rational& q) const;
    bool contains(const DyadicInterval& o) const;
    Rational width() const { return (hi_ - lo_).to_rational(); }

  private:
    Dyadic lo_, hi_;
    unsigned prec_;
};

}  // namespace locsol
