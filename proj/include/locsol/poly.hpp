#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "locsol/rational.hpp"

namespace locsol {

// Dense univariate polynomial over Q, coefficients lowest degree first.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& q) { return Poly({q}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0); }
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly reflected() const;  // p(-x)

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Euclidean division; o must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& o) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Monic gcd over Q; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

// f with repeated roots stripped: f / gcd(f, f').
Poly squarefree_part(const Poly& f);

// Integer coefficient vector with content 1 and the same roots/signs as f
// (scaled by a positive rational).
std::vector<Integer> primitive_integer_coeffs(const Poly& f);

enum class HalfLine { NonNegative, NonPositive };

// Number of distinct real roots in [0,inf) or (-inf,0].  f must be nonzero.
int count_roots_halfline(const Poly& f, HalfLine side);

// Number of distinct real roots on the whole line.  f must be nonzero.
int count_real_roots(const Poly& f);

// f(x) < 0 for every x in the closed half-line (zero polynomial: false).
bool is_negative_on_halfline(const Poly& f, HalfLine side);

// Sturm machinery on primitive integer polynomials; exposed for reuse by the
// box classifier, which feeds it pre-scaled corner quartics.
int count_positive_roots_integer(const std::vector<Integer>& coeffs);

}  // namespace locsol
