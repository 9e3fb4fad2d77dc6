#include "locsol/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace locsol {

void Dyadic::canonicalize() {
    if (m_ == 0) {
        e_ = 0;
        return;
    }
    unsigned long tz = mpz_scan1(m_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_fdiv_q_2exp(m_.get_mpz_t(), m_.get_mpz_t(), tz);
        e_ += static_cast<long>(tz);
    }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long e = std::min(e_, o.e_);
    Integer a = m_;
    mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e_ - e));
    Integer b = o.m_;
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(o.e_ - e));
    return Dyadic(a + b, e);
}

int Dyadic::cmp(const Dyadic& o) const {
    int sa = sgn(), sb = o.sgn();
    if (sa != sb) return sa < sb ? -1 : 1;
    Dyadic d = *this - o;
    return d.sgn();
}

Dyadic Dyadic::round_down(unsigned bits) const {
    if (is_zero()) return *this;
    size_t nb = mpz_sizeinbase(m_.get_mpz_t(), 2);
    if (nb <= bits) return *this;
    unsigned long drop = nb - bits;
    Integer m;
    mpz_fdiv_q_2exp(m.get_mpz_t(), m_.get_mpz_t(), drop);
    return Dyadic(m, e_ + static_cast<long>(drop));
}

Dyadic Dyadic::round_up(unsigned bits) const {
    if (is_zero()) return *this;
    size_t nb = mpz_sizeinbase(m_.get_mpz_t(), 2);
    if (nb <= bits) return *this;
    unsigned long drop = nb - bits;
    Integer m;
    mpz_cdiv_q_2exp(m.get_mpz_t(), m_.get_mpz_t(), drop);
    return Dyadic(m, e_ + static_cast<long>(drop));
}

namespace {

Dyadic from_rational_dir(const Rational& q, unsigned bits, bool up) {
    if (q == 0) return Dyadic();
    // Scale so the quotient carries `bits` significant bits, then round.
    long nnum = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
    long nden = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
    long s = static_cast<long>(bits) + 1 + nden - nnum;
    Integer num = q.get_num();
    Integer den = q.get_den();
    if (s >= 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(s));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(-s));
    Integer m;
    if (up)
        mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
        mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(m, -s);
}

}  // namespace

Dyadic Dyadic::from_rational_down(const Rational& q, unsigned bits) { return from_rational_dir(q, bits, false); }
Dyadic Dyadic::from_rational_up(const Rational& q, unsigned bits) { return from_rational_dir(q, bits, true); }

Rational Dyadic::to_rational() const {
    Rational q(m_);
    if (e_ >= 0) {
        Integer sc;
        mpz_ui_pow_ui(sc.get_mpz_t(), 2, static_cast<unsigned long>(e_));
        q *= Rational(sc);
    } else {
        Integer sc;
        mpz_ui_pow_ui(sc.get_mpz_t(), 2, static_cast<unsigned long>(-e_));
        q /= Rational(sc);
    }
    q.canonicalize();
    return q;
}

std::string Dyadic::to_string() const {
    if (e_ >= 0) {
        Integer m = m_;
        mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(e_));
        return m.get_str() + "/2^0";
    }
    return m_.get_str() + "/2^" + std::to_string(-e_);
}

Dyadic Dyadic::parse(const std::string& s) {
    auto pos = s.find("/2^");
    if (pos == std::string::npos)
        throw std::invalid_argument("Dyadic::parse: expected 'm/2^k' in '" + s + "'");
    Integer m;
    if (mpz_set_str(m.get_mpz_t(), s.substr(0, pos).c_str(), 10) != 0)
        throw std::invalid_argument("Dyadic::parse: bad mantissa in '" + s + "'");
    long k = std::stol(s.substr(pos + 3));
    if (k < 0)
        throw std::invalid_argument("Dyadic::parse: negative denominator exponent");
    return Dyadic(m, -k);
}

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi, unsigned precision)
    : lo_(std::move(lo)), hi_(std::move(hi)), prec_(precision) {
    if (lo_ > hi_)
        throw std::invalid_argument("DyadicInterval: lo > hi");
}

DyadicInterval DyadicInterval::from_point(const Dyadic& d, unsigned precision) {
    return DyadicInterval(d, d, precision);
}

DyadicInterval DyadicInterval::from_rational(const Rational& q, unsigned precision) {
    return DyadicInterval(Dyadic::from_rational_down(q, precision), Dyadic::from_rational_up(q, precision), precision);
}

DyadicInterval DyadicInterval::from_rationals(const Rational& lo, const Rational& hi, unsigned precision) {
    return DyadicInterval(Dyadic::from_rational_down(lo, precision), Dyadic::from_rational_up(hi, precision),
                          precision);
}

DyadicInterval DyadicInterval::operator+(const DyadicInterval& o) const {
    unsigned p = std::min(prec_, o.prec_);
    return DyadicInterval((lo_ + o.lo_).round_down(p), (hi_ + o.hi_).round_up(p), p);
}

DyadicInterval DyadicInterval::operator*(const DyadicInterval& o) const {
    unsigned p = std::min(prec_, o.prec_);
    Dyadic c[4] = {lo_ * o.lo_, lo_ * o.hi_, hi_ * o.lo_, hi_ * o.hi_};
    Dyadic lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return DyadicInterval(lo.round_down(p), hi.round_up(p), p);
}

bool DyadicInterval::contains(const Rational& q) const {
    return lo_.to_rational() <= q && q <= hi_.to_rational();
}

bool DyadicInterval::contains(const DyadicInterval& o) const {
    return lo_ <= o.lo_ && o.hi_ <= hi_;
}

}  // namespace locsol
