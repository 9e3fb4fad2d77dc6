#include "locsol/fpcount.hpp"

#include <stdexcept>

namespace locsol::fpcount {

namespace {

using Quad = std::array<unsigned, 3>;   // l x^2 + m x y + n y^2
using Quart = std::array<unsigned, 5>;  // a x^4 + ... + e y^4

Quart quad_square(const Quad& s, unsigned p) {
    auto [a, b, c] = s;
    return {(a * a) % p, (2 * a * b) % p, (b * b + 2 * a * c) % p, (2 * b * c) % p, (c * c) % p};
}

Quart quad_mul(const Quad& u, const Quad& v, unsigned p) {
    return {(u[0] * v[0]) % p,
            (u[0] * v[1] + u[1] * v[0]) % p,
            (u[0] * v[2] + u[1] * v[1] + u[2] * v[0]) % p,
            (u[1] * v[2] + u[2] * v[1]) % p,
            (u[2] * v[2]) % p};
}

bool is_zero(const Quart& f) {
    for (unsigned c : f)
        if (c) return false;
    return true;
}

std::vector<bool> squares_mod(unsigned p) {
    std::vector<bool> sq(p, false);
    for (unsigned i = 0; i < p; ++i) sq[(i * i) % p] = true;
    return sq;
}

unsigned first_nonsquare(unsigned p, const std::vector<bool>& sq) {
    for (unsigned c = 2; c < p; ++c)
        if (!sq[c]) return c;
    return 0;  // p = 2: unused
}

// g == c * s^2 for some quadratic s over F_p?
bool is_scaled_square(const Quart& g, unsigned c, unsigned p) {
    for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b)
            for (unsigned cc = 0; cc < p; ++cc) {
                Quart s2 = quad_square({a, b, cc}, p);
                bool ok = true;
                for (int i = 0; i < 5; ++i)
                    if ((c * s2[i]) % p != g[i]) {
                        ok = false;
                        break;
                    }
                if (ok) return true;
            }
    return false;
}

// F_4 as {0,1,w,w+1} encoded in two bits, w^2 = w + 1.
unsigned f4mul(unsigned x, unsigned y) {
    unsigned a0 = x & 1, b0 = x >> 1, a1 = y & 1, b1 = y >> 1;
    unsigned bb = b0 & b1;
    return ((a0 & a1) ^ bb) | (((a0 & b1) ^ (a1 & b0) ^ bb) << 1);
}

FactorizationType classify_p2(const FpGBQ& q) {
    Quad h = {q.l & 1, q.m & 1, q.n & 1};
    Quart f = {q.a & 1, q.b & 1, q.c & 1, q.d & 1, q.e & 1};
    // s over F_2 with s^2 + h s = f?
    for (unsigned a = 0; a < 2; ++a)
        for (unsigned b = 0; b < 2; ++b)
            for (unsigned c = 0; c < 2; ++c) {
                Quad s = {a, b, c};
                Quart v = quad_square(s, 2);
                Quart hs = quad_mul(h, s, 2);
                bool ok = true;
                for (int i = 0; i < 5; ++i)
                    if (((v[i] + hs[i]) & 1) != f[i]) {
                        ok = false;
                        break;
                    }
                if (ok) return (h == Quad{0, 0, 0}) ? FactorizationType::RepeatedFactor
                                                    : FactorizationType::SplitDistinct;
            }
    // s over F_4: s^2 has Frobenius-squared coefficients, cross terms vanish.
    for (unsigned a = 0; a < 4; ++a)
        for (unsigned b = 0; b < 4; ++b)
            for (unsigned c = 0; c < 4; ++c) {
                unsigned s2[5] = {f4mul(a, a), 0, f4mul(b, b), 0, f4mul(c, c)};
                unsigned hs[5] = {f4mul(h[0], a),
                                  f4mul(h[0], b) ^ f4mul(h[1], a),
                                  f4mul(h[0], c) ^ f4mul(h[1], b) ^ f4mul(h[2], a),
                                  f4mul(h[1], c) ^ f4mul(h[2], b),
                                  f4mul(h[2], c)};
                bool ok = true;
                for (int i = 0; i < 5; ++i)
                    if ((s2[i] ^ hs[i]) != f[i]) {
                        ok = false;
                        break;
                    }
                if (ok) return FactorizationType::ConjugatePair;
            }
    return FactorizationType::AbsIrred;
}

CountTable make_table(std::vector<std::string> labels, std::vector<long long> counts) {
    CountTable t;
    t.labels = std::move(labels);
    t.counts = std::move(counts);
    for (long long c : t.counts) t.total += c;
    for (long long c : t.counts) {
        Rational pr(static_cast<long>(c), static_cast<long>(t.total));
        pr.canonicalize();
        t.probs.push_back(pr);
    }
    return t;
}

const std::vector<std::string> kGbqLabels = {"abs_irred", "split_distinct", "conjugate_pair", "repeated_factor"};
const std::vector<std::string> kQuarticLabels = {"no_roots", "simple_root", "one_double", "two_doubles",
                                                 "quadruple_root"};

long long ll(unsigned long v) { return static_cast<long long>(v); }

}  // namespace

FactorizationType classify_gbq_type(const FpGBQ& q) {
    unsigned p = q.p;
    if (p == 2) return classify_p2(q);
    // Complete the square: factorization of z^2 + hz - f is governed by
    // g = h^2 + 4f  (the two roots differ by sqrt(g)).
    Quad h = {q.l % p, q.m % p, q.n % p};
    Quart f = {q.a % p, q.b % p, q.c % p, q.d % p, q.e % p};
    Quart g = quad_square(h, p);
    for (int i = 0; i < 5; ++i) g[i] = (g[i] + 4 * f[i]) % p;
    if (is_zero(g)) return FactorizationType::RepeatedFactor;
    if (is_scaled_square(g, 1, p)) return FactorizationType::SplitDistinct;
    auto sq = squares_mod(p);
    if (is_scaled_square(g, first_nonsquare(p, sq), p)) return FactorizationType::ConjugatePair;
    return FactorizationType::AbsIrred;
}

bool satisfies_star(unsigned p, unsigned l, unsigned a) {
    l %= p;
    a %= p;
    if (p == 2) return l == 1 && a == 1;
    unsigned disc = (l * l + 4 * a) % p;
    if (disc == 0) return false;
    auto sq = squares_mod(p);
    return !sq[disc];
}

CountTable count_gbq_types(unsigned p, bool restrict_star) {
    if (!is_prime(p))
        throw std::invalid_argument("count_gbq_types: p must be prime");
    if (p > 3)
        throw std::invalid_argument("count_gbq_types: enumeration is capped at p <= 3; use the formula table");
    std::vector<long long> counts(4, 0);
    FpGBQ q{p, 0, 0, 0, 0, 0, 0, 0, 0};
    for (q.l = 0; q.l < p; ++q.l)
        for (q.a = 0; q.a < p; ++q.a) {
            if (restrict_star && !satisfies_star(p, q.l, q.a)) continue;
            for (q.m = 0; q.m < p; ++q.m)
                for (q.n = 0; q.n < p; ++q.n)
                    for (q.b = 0; q.b < p; ++q.b)
                        for (q.c = 0; q.c < p; ++q.c)
                            for (q.d = 0; q.d < p; ++q.d)
                                for (q.e = 0; q.e < p; ++q.e)
                                    ++counts[static_cast<int>(classify_gbq_type(q)) - 1];
        }
    return make_table(kGbqLabels, std::move(counts));
}

CountTable gbq_type_formula_counts(unsigned p, bool restrict_star) {
    unsigned long pl = p;
    unsigned long p2 = pl * pl, p3 = p2 * pl, p5 = p3 * p2, p6 = p5 * pl;
    std::vector<long long> counts;
    if (!restrict_star) {
        counts = {ll(p6 * (p2 - 1)), ll(p3 * (p3 - 1) / 2), ll(p3 * (p3 - 1) / 2), ll(p3)};
    } else {
        counts = {ll(p5 * (p2 - 1) * (pl - 1) / 2), 0, ll(p5 * (pl - 1) / 2), 0};
    }
    return make_table(kGbqLabels, std::move(counts));
}

RootPattern classify_quartic_pattern(unsigned p, const std::array<unsigned, 5>& f) {
    bool zero = true;
    for (unsigned c : f)
        if (c % p) zero = false;
    if (zero)
        throw std::domain_error("classify_quartic_pattern: zero form");
    std::vector<int> mults;
    // Multiplicity at (1:0) = number of leading zero coefficients.
    int lead_zeros = 0;
    while (lead_zeros < 5 && f[lead_zeros] % p == 0) ++lead_zeros;
    if (lead_zeros > 0) mults.push_back(lead_zeros);
    // Multiplicity at (t:1): root multiplicity of t in f(x,1), by synthetic division.
    for (unsigned t = 0; t < p; ++t) {
        std::array<unsigned, 5> u = {f[4] % p, f[3] % p, f[2] % p, f[1] % p, f[0] % p};  // low-first
        int deg = 4 - lead_zeros, mult = 0;
        while (deg >= 0) {
            // One Horner pass gives quotient by (x - t) and remainder u(t).
            std::array<unsigned, 5> quo = {0, 0, 0, 0, 0};
            unsigned acc = 0;
            for (int i = deg; i >= 1; --i) {
                acc = (acc * t + u[i]) % p;
                quo[i - 1] = acc;
            }
            unsigned rem = (acc * t + u[0]) % p;
            if (rem != 0) break;
            ++mult;
            u = quo;
            --deg;
        }
        if (mult > 0) mults.push_back(mult);
    }
    if (mults.empty()) return RootPattern::NoRoots;
    int doubles = 0;
    for (int m : mults) {
        if (m == 1) return RootPattern::SimpleRoot;
        if (m == 2) ++doubles;
        if (m == 4) return RootPattern::QuadrupleRoot;
        if (m == 3) return RootPattern::SimpleRoot;  // unreachable: a cubic factor leaves a simple root
    }
    return doubles == 2 ? RootPattern::TwoDoubles : RootPattern::OneDouble;
}

CountTable count_quartic_patterns(unsigned p, bool monic) {
    if (!is_prime(p))
        throw std::invalid_argument("count_quartic_patterns: p must be prime");
    if (p > 7)
        throw std::invalid_argument("count_quartic_patterns: enumeration is capped at p <= 7; use the formula table");
    std::vector<long long> counts(5, 0);
    std::array<unsigned, 5> f{};
    unsigned a0 = monic ? 1 : 0, a1 = monic ? 2 : p;
    for (f[0] = a0; f[0] < a1; ++f[0])
        for (f[1] = 0; f[1] < p; ++f[1])
            for (f[2] = 0; f[2] < p; ++f[2])
                for (f[3] = 0; f[3] < p; ++f[3])
                    for (f[4] = 0; f[4] < p; ++f[4]) {
                        if (!monic) {
                            // Canonical representative up to scaling: first nonzero coeff = 1.
                            int fn = 0;
                            while (fn < 5 && f[fn] == 0) ++fn;
                            if (fn == 5 || f[fn] != 1) continue;
                        }
                        ++counts[static_cast<int>(classify_quartic_pattern(p, f))];
                    }
    return make_table(kQuarticLabels, std::move(counts));
}

CountTable quartic_pattern_formula_counts(unsigned p, bool monic) {
    unsigned long pl = p;
    unsigned long p2 = pl * pl, p3 = p2 * pl, p4 = p3 * pl;
    std::vector<long long> counts;
    if (monic) {
        counts = {ll(pl * (pl - 1) * (3 * p2 + pl + 2) / 8), ll(pl * (pl - 1) * (5 * p2 + 3 * pl + 2) / 8),
                  ll(p2 * (pl - 1) / 2), ll(pl * (pl - 1) / 2), ll(pl)};
    } else {
        counts = {ll(pl * (pl - 1) * (3 * p2 + pl + 2) / 8), ll(pl * (pl + 1) * (5 * p2 + pl + 2) / 8),
                  ll(pl * (p2 - 1) / 2), ll(pl * (pl + 1) / 2), ll(pl + 1)};
    }
    CountTable t = make_table(kQuarticLabels, std::move(counts));
    long long expect = monic ? ll(p4) : ll(p4 + p3 + p2 + pl + 1);
    if (t.total != expect)
        throw std::logic_error("quartic_pattern_formula_counts: total mismatch");
    return t;
}

}  // namespace locsol::fpcount
