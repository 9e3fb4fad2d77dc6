#include "locsol/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace locsol {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::reflected() const {
    std::vector<Rational> r = c_;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
    if (o.is_zero())
        throw std::domain_error("Poly::divmod by zero");
    std::vector<Rational> rem = c_;
    int dn = o.degree();
    if (degree() < dn) return {Poly(), *this};
    std::vector<Rational> quo(degree() - dn + 1, Rational(0));
    for (int i = degree(); i >= dn; --i) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] / o.c_[dn];
        quo[i - dn] = q;
        for (int j = 0; j <= dn; ++j) rem[i - dn + j] -= q * o.c_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = c_[i];
        if (c == 0) continue;
        if (!out.empty()) {
            out += (sign(c) < 0) ? " - " : " + ";
            c = abs(c);
        } else if (sign(c) < 0) {
            out += "-";
            c = abs(c);
        }
        bool unit = (c == 1 && i > 0);
        if (!unit) out += fraction_string(c);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.lead());  // monic
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero() || f.degree() == 0) return f;
    Poly g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) return f;
    auto [q, r] = f.divmod(g);
    return q;
}

std::vector<Integer> primitive_integer_coeffs(const Poly& f) {
    if (f.is_zero()) return {};
    Integer den(1);
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> out;
    out.reserve(f.coeffs().size());
    Integer content(0);
    for (const auto& c : f.coeffs()) {
        Integer z = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        out.push_back(std::move(z));
    }
    if (content > 1)
        for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
    return out;
}

namespace {

using ZPoly = std::vector<Integer>;  // low-first, trimmed

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zderivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
    return d;
}

void zmake_primitive(ZPoly& p) {
    Integer content(0);
    for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// r = c * (a mod b) for some positive rational c; sign-faithful.
ZPoly zrem_scaled(ZPoly r, const ZPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    const Integer& lb = b.back();
    long steps = 0;
    while (static_cast<int>(r.size()) - 1 >= db) {
        int dr = static_cast<int>(r.size()) - 1;
        Integer top = r.back();
        for (int i = 0; i < dr; ++i) r[i] *= lb;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= top * b[i];
        r.pop_back();
        ztrim(r);
        ++steps;
        if (r.empty()) break;
    }
    if (sign(lb) < 0 && (steps & 1))
        for (auto& c : r) c = -c;
    return r;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    while (!b.empty()) {
        ZPoly r = zrem_scaled(a, b);
        zmake_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    zmake_primitive(a);
    return a;
}

// Exact division assuming b | a over Q; result re-primitivized.
ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b) {
    std::vector<Rational> ra(a.size()), rb(b.size());
    for (size_t i = 0; i < a.size(); ++i) ra[i] = Rational(a[i]);
    for (size_t i = 0; i < b.size(); ++i) rb[i] = Rational(b[i]);
    auto [q, rem] = Poly(std::move(ra)).divmod(Poly(std::move(rb)));
    if (!rem.is_zero())
        throw std::logic_error("zdiv_exact: inexact division");
    return primitive_integer_coeffs(q);
}

ZPoly zsquarefree(const ZPoly& p) {
    if (p.size() <= 2) return p;
    ZPoly g = zgcd(p, zderivative(p));
    if (g.size() <= 1) return p;
    return zdiv_exact(p, g);
}

std::vector<ZPoly> sturm_chain(const ZPoly& g) {
    std::vector<ZPoly> chain;
    chain.push_back(g);
    ZPoly d = zderivative(g);
    ztrim(d);
    if (d.empty()) return chain;
    chain.push_back(std::move(d));
    while (chain.back().size() > 1) {
        ZPoly r = zrem_scaled(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;  // cannot happen for squarefree input
        for (auto& c : r) c = -c;
        zmake_primitive(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int sign_at_zero(const ZPoly& p) { return sign(p.front()); }
int sign_at_pinf(const ZPoly& p) { return sign(p.back()); }
int sign_at_minf(const ZPoly& p) {
    int s = sign(p.back());
    return (p.size() % 2 == 0) ? -s : s;  // odd degree flips at -inf
}

int count_roots_open_interval(const ZPoly& squarefree, int (*at_lo)(const ZPoly&), int (*at_hi)(const ZPoly&)) {
    if (squarefree.size() <= 1) return 0;
    auto chain = sturm_chain(squarefree);
    std::vector<int> lo, hi;
    lo.reserve(chain.size());
    hi.reserve(chain.size());
    for (const auto& p : chain) {
        lo.push_back(at_lo(p));
        hi.push_back(at_hi(p));
    }
    return variations(lo) - variations(hi);
}

}  // namespace

int count_positive_roots_integer(const std::vector<Integer>& coeffs) {
    ZPoly p = coeffs;
    ztrim(p);
    if (p.empty())
        throw std::domain_error("count_positive_roots_integer: zero polynomial");
    if (p.front() == 0)
        throw std::domain_error("count_positive_roots_integer: root at 0 not stripped");
    // Descartes shortcut: 0 or 1 coefficient sign variations settle the count.
    int v = 0, last = 0;
    for (const auto& c : p) {
        int s = sign(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    if (v == 0) return 0;
    if (v == 1) return 1;
    return count_roots_open_interval(zsquarefree(p), sign_at_zero, sign_at_pinf);
}

int count_roots_halfline(const Poly& f, HalfLine side) {
    if (f.is_zero())
        throw std::domain_error("count_roots_halfline: zero polynomial");
    if (side == HalfLine::NonPositive) return count_roots_halfline(f.reflected(), HalfLine::NonNegative);
    ZPoly p = primitive_integer_coeffs(f);
    size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    int at_zero = (k > 0) ? 1 : 0;
    p.erase(p.begin(), p.begin() + static_cast<long>(k));
    if (p.size() <= 1) return at_zero;
    return at_zero + count_positive_roots_integer(p);
}

int count_real_roots(const Poly& f) {
    if (f.is_zero())
        throw std::domain_error("count_real_roots: zero polynomial");
    ZPoly p = primitive_integer_coeffs(f);
    size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    int at_zero = (k > 0) ? 1 : 0;
    p.erase(p.begin(), p.begin() + static_cast<long>(k));
    if (p.size() <= 1) return at_zero;
    return at_zero + count_roots_open_interval(zsquarefree(p), sign_at_minf, sign_at_pinf);
}

bool is_negative_on_halfline(const Poly& f, HalfLine side) {
    if (f.is_zero()) return false;
    if (side == HalfLine::NonPositive) return is_negative_on_halfline(f.reflected(), HalfLine::NonNegative);
    if (sign(f.coeff(0)) >= 0) return false;
    if (sign(f.lead()) >= 0 && f.degree() > 0) return false;
    return count_roots_halfline(f, HalfLine::NonNegative) == 0;
}

}  // namespace locsol
