#include "locsol/assembly.hpp"

#include <stdexcept>

#include "locsol/poly.hpp"

namespace locsol::assembly {

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
    if (n > 100'000'000ull)
        throw std::invalid_argument("primes_up_to: cap is 1e8");
    std::vector<std::uint32_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

bool tail_certificate_holds() {
    Poly t = Poly::x();
    Poly one = Poly::constant(Rational(1));
    auto pw = [&](const Poly& f, int k) {
        Poly acc = one;
        for (int i = 0; i < k; ++i) acc = acc * f;
        return acc;
    };
    Poly den_part = (t + one) * (pw(t, 2) + t + one) * (pw(t, 6) + pw(t, 3) + one);
    Poly num = pw(t, 7) * Rational(4) + pw(t, 6) * Rational(4) + pw(t, 5) * Rational(2) + pw(t, 4) +
               pw(t, 3) * Rational(3) + pw(t, 2) * Rational(2) + t * Rational(3) + one * Rational(3);
    Poly cert = den_part * Rational(6) - pw(t, 2) * num;
    // Expand in powers of (t - 3): substitute t = s + 3 and check coefficients.
    Poly shift = t + Poly::constant(Rational(3));
    Poly expanded = Poly::constant(cert.coeff(cert.degree()));
    for (int i = cert.degree() - 1; i >= 0; --i) expanded = expanded * shift + Poly::constant(cert.coeff(i));
    for (const Rational& c : expanded.coeffs())
        if (sign(c) < 0) return false;
    return true;
}

DyadicInterval tail_bound(unsigned long P, unsigned precision) {
    if (P < 3)
        throw std::domain_error("tail_bound: requires P >= 3");
    if (P > 100'000'000ull)
        throw std::invalid_argument("tail_bound: cap is 1e8");
    if (precision < 96 || precision > 8192)
        throw std::invalid_argument("tail_bound: precision must be in [96, 8192]");
    static const bool ok = tail_certificate_holds();
    if (!ok)
        throw std::logic_error("tail certificate failed");
    // The product strictly exceeds 1 - 3/(4P): comparing sum_{n>P} n^-2 with
    // 1/P = sum_{n>P} 1/(n(n-1)) leaves a gap of at least 1/((P+1)^2 P), i.e.
    // >= 3/(16 P^3) > 2^(1-96) for P <= 1e8 after the 3/4 factor.  The lower
    // endpoint may therefore be rounded up toward the certificate value, which
    // keeps the interval inside [1 - 3/(4P), 1].
    Rational lo = Rational(1) - Rational(3, 4) / Rational(static_cast<unsigned long>(P));
    return DyadicInterval(Dyadic::from_rational_up(lo, precision), Dyadic(1), precision);
}

DyadicInterval finite_product(unsigned long P, ModelKind model, unsigned precision) {
    if (P < 2)
        throw std::invalid_argument("finite_product: requires P >= 2");
    DyadicInterval acc = DyadicInterval::from_point(Dyadic(1), precision);
    for (std::uint32_t p : primes_up_to(P)) {
        Rational rp = recursion::local_density(p, model);
        acc = acc * DyadicInterval::from_rational(rp, precision);
    }
    return acc;
}

GlobalReport rho_interval(ModelKind model, const DyadicInterval& real_part, bool real_rigorous, unsigned long P,
                          unsigned precision) {
    if (P < 3)
        throw std::domain_error("rho_interval: requires P >= 3");
    GlobalReport rep;
    rep.model = model;
    rep.real_part = real_part;
    rep.finite_product = finite_product(P, model, precision);
    rep.tail = tail_bound(P, precision);
    rep.rho = real_part * rep.finite_product * rep.tail;
    rep.pmax = P;
    rep.rigorous = real_rigorous;
    rep.provenance.emplace_back("pmax", std::to_string(P));
    rep.provenance.emplace_back("precision", std::to_string(precision));
    return rep;
}

}  // namespace locsol::assembly
