#pragma once

#include <string>

#include "locsol/poly.hpp"

namespace locsol {

// Rational function in t, kept as a coprime pair of primitive integer
// polynomials with positive leading denominator coefficient.
class RatFn {
  public:
    RatFn() : num_(Poly::zero()), den_(Poly::constant(Rational(1))) {}
    RatFn(long v) : RatFn(Poly::constant(Rational(v)), Poly::constant(Rational(1))) {}
    explicit RatFn(const Rational& q) : RatFn(Poly::constant(q), Poly::constant(Rational(1))) {}
    RatFn(Poly num, Poly den);

    static RatFn t() { return RatFn(Poly::x(), Poly::constant(Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    Rational eval(const Rational& t0) const;  // pole -> std::domain_error

    std::string to_string() const;

  private:
    void normalize();
    Poly num_, den_;
};

}  // namespace locsol
