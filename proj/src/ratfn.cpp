#include "locsol/ratfn.hpp"

#include <stdexcept>

namespace locsol {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("RatFn: zero denominator");
    normalize();
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    // Scale both by one positive rational: clear denominators, then strip the
    // joint integer content, so gcd(content(num), content(den)) = 1.
    Integer lcm(1);
    for (const auto& c : num_.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : den_.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> zn(num_.coeffs().size()), zd(den_.coeffs().size());
    Integer content(0);
    for (size_t i = 0; i < zn.size(); ++i) {
        zn[i] = num_.coeffs()[i].get_num() * (lcm / num_.coeffs()[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zn[i].get_mpz_t());
    }
    for (size_t i = 0; i < zd.size(); ++i) {
        zd[i] = den_.coeffs()[i].get_num() * (lcm / den_.coeffs()[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zd[i].get_mpz_t());
    }
    int flip = sign(zd.back()) < 0 ? -1 : 1;
    std::vector<Rational> rn(zn.size()), rd(zd.size());
    for (size_t i = 0; i < zn.size(); ++i) rn[i] = Rational(zn[i] * flip / content);
    for (size_t i = 0; i < zd.size(); ++i) rd[i] = Rational(zd[i] * flip / content);
    num_ = Poly(std::move(rn));
    den_ = Poly(std::move(rd));
}

RatFn RatFn::operator-() const {
    RatFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const { return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFn RatFn::operator-(const RatFn& o) const { return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFn RatFn::operator*(const RatFn& o) const { return RatFn(num_ * o.num_, den_ * o.den_); }

RatFn RatFn::operator/(const RatFn& o) const {
    if (o.is_zero())
        throw std::domain_error("RatFn: division by zero");
    return RatFn(num_ * o.den_, den_ * o.num_);
}

Rational RatFn::eval(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (d == 0)
        throw std::domain_error("RatFn::eval: pole at t = " + fraction_string(t0));
    return num_.eval(t0) / d;
}

std::string RatFn::to_string() const {
    if (den_ == Poly::constant(Rational(1))) return num_.to_string("t");
    return "(" + num_.to_string("t") + ") / (" + den_.to_string("t") + ")";
}

}  // namespace locsol
