#include <random>

#include "doctest.h"
#include "locsol/fpcount.hpp"
#include "locsol/recursion.hpp"

using namespace locsol;
using namespace locsol::fpcount;

namespace {

// (h,f) image under z -> z + q: h' = h + 2q, f' = f - q^2 - h q (mod p).
FpGBQ shift_z(const FpGBQ& g, unsigned qa, unsigned qb, unsigned qc) {
    unsigned p = g.p;
    auto m = [p](long v) { return static_cast<unsigned>(((v % p) + p) % p); };
    unsigned q2[5] = {m(qa * qa), m(2 * qa * qb), m(qb * qb + 2 * qa * qc), m(2 * qb * qc), m(qc * qc)};
    unsigned hq[5] = {m(g.l * qa), m(g.l * qb + g.m * qa), m(g.l * qc + g.m * qb + g.n * qa),
                      m(g.m * qc + g.n * qb), m(g.n * qc)};
    FpGBQ out = g;
    out.l = m(g.l + 2 * qa);
    out.m = m(g.m + 2 * qb);
    out.n = m(g.n + 2 * qc);
    out.a = m(static_cast<long>(g.a) - q2[0] - hq[0]);
    out.b = m(static_cast<long>(g.b) - q2[1] - hq[1]);
    out.c = m(static_cast<long>(g.c) - q2[2] - hq[2]);
    out.d = m(static_cast<long>(g.d) - q2[3] - hq[3]);
    out.e = m(static_cast<long>(g.e) - q2[4] - hq[4]);
    return out;
}

// (h,f) image under (x,y) -> (x + t y, y).
FpGBQ shear_x(const FpGBQ& g, unsigned t) {
    unsigned p = g.p;
    auto m = [p](unsigned long v) { return static_cast<unsigned>(v % p); };
    FpGBQ out = g;
    // h(x+ty, y) = l x^2 + (2lt + m) xy + (l t^2 + m t + n) y^2
    out.l = g.l;
    out.m = m(2ul * g.l * t + g.m);
    out.n = m(1ul * g.l * t * t + 1ul * g.m * t + g.n);
    // f(x+ty, y): binomial expansion of a(x+ty)^4 + b(x+ty)^3 y + ...
    unsigned long t2 = 1ul * t * t, t3 = t2 * t, t4 = t3 * t;
    out.a = g.a;
    out.b = m(4ul * g.a * t + g.b);
    out.c = m(6ul * g.a * t2 + 3ul * g.b * t + g.c);
    out.d = m(4ul * g.a * t3 + 3ul * g.b * t2 + 2ul * g.c * t + g.d);
    out.e = m(1ul * g.a * t4 + 1ul * g.b * t3 + 1ul * g.c * t2 + 1ul * g.d * t + g.e);
    return out;
}

// (h,f) image under (x,y) -> (y,x): reverse both coefficient lists.
FpGBQ swap_xy(const FpGBQ& g) {
    FpGBQ out = g;
    std::swap(out.l, out.n);
    std::swap(out.a, out.e);
    std::swap(out.b, out.d);
    return out;
}

}  // namespace

TEST_CASE("gbq classification examples at p = 3") {
    CHECK(classify_gbq_type({3, 0, 0, 0, 0, 0, 1, 0, 0}) == FactorizationType::SplitDistinct);   // f = x^2 y^2
    CHECK(classify_gbq_type({3, 0, 0, 0, 0, 0, 2, 0, 0}) == FactorizationType::ConjugatePair);   // f = 2 x^2 y^2
    CHECK(classify_gbq_type({3, 0, 0, 0, 0, 0, 0, 0, 0}) == FactorizationType::RepeatedFactor);  // f = 0
    CHECK(classify_gbq_type({3, 0, 0, 0, 0, 1, 0, 0, 0}) == FactorizationType::AbsIrred);        // f = x^3 y
}

TEST_CASE("gbq count tables match the closed forms") {
    SUBCASE("p = 2, all") {
        auto t = count_gbq_types(2, false);
        CHECK(t.counts == std::vector<long long>{192, 28, 28, 8});
        CHECK(t.total == 256);
        CHECK(t.counts == gbq_type_formula_counts(2, false).counts);
    }
    SUBCASE("p = 2, condition (*)") {
        auto t = count_gbq_types(2, true);
        CHECK(t.counts == std::vector<long long>{48, 0, 16, 0});
        CHECK(t.total == 64);
        CHECK(t.counts == gbq_type_formula_counts(2, true).counts);
    }
    SUBCASE("p = 3, all") {
        auto t = count_gbq_types(3, false);
        CHECK(t.counts == std::vector<long long>{5832, 351, 351, 27});
        CHECK(t.total == 6561);
        CHECK(t.counts == gbq_type_formula_counts(3, false).counts);
    }
    SUBCASE("p = 3, condition (*)") {
        auto t = count_gbq_types(3, true);
        CHECK(t.total == 2187);  // p^7 (p-1) / 2
        CHECK(t.counts == gbq_type_formula_counts(3, true).counts);
    }
    CHECK_THROWS_AS(count_gbq_types(5, false), std::invalid_argument);
    CHECK_THROWS_AS(count_gbq_types(4, false), std::invalid_argument);
}

TEST_CASE("quartic pattern examples at p = 3") {
    // xy(x-y)(x+y) = x^3 y - x y^3
    CHECK(classify_quartic_pattern(3, {0, 1, 0, 2, 0}) == RootPattern::SimpleRoot);
    CHECK(classify_quartic_pattern(3, {0, 0, 1, 0, 0}) == RootPattern::TwoDoubles);     // x^2 y^2
    CHECK(classify_quartic_pattern(3, {1, 0, 0, 0, 0}) == RootPattern::QuadrupleRoot);  // x^4
    // (x^2+y^2)(x^2+xy-y^2) = x^4 + x^3 y + x y^3 - y^4 over F_3 (2 = -1)
    CHECK(classify_quartic_pattern(3, {1, 1, 0, 1, 2}) == RootPattern::NoRoots);
    CHECK_THROWS_AS(classify_quartic_pattern(3, {0, 0, 0, 0, 0}), std::domain_error);
}

TEST_CASE("quartic pattern tables match the closed forms") {
    SUBCASE("stated examples") {
        auto monic2 = count_quartic_patterns(2, true);
        CHECK(monic2.counts == std::vector<long long>{4, 7, 2, 1, 2});
        CHECK(monic2.total == 16);
        auto scale3 = count_quartic_patterns(3, false);
        CHECK(scale3.counts == std::vector<long long>{24, 75, 12, 6, 4});
        CHECK(scale3.total == 121);
        CHECK(count_quartic_patterns(2, false).total == 31);
    }
    for (unsigned p : {2u, 3u, 5u, 7u})
        for (bool monic : {false, true}) {
            CAPTURE(p);
            CAPTURE(monic);
            auto enumd = count_quartic_patterns(p, monic);
            auto form = quartic_pattern_formula_counts(p, monic);
            CHECK(enumd.counts == form.counts);
            CHECK(enumd.total == form.total);
        }
    CHECK_THROWS_AS(count_quartic_patterns(11, false), std::invalid_argument);
}

TEST_CASE("probability tables sum to one and match the corollary closed forms") {
    for (unsigned p : {2u, 3u}) {
        auto rep = recursion::closed_forms(p);
        auto gbq = count_gbq_types(p, false);
        Rational sum(0);
        for (const auto& q : gbq.probs) sum += q;
        CHECK(sum == 1);
        CHECK(gbq.probs[0] == rep.xi1);
        CHECK(gbq.probs[1] == rep.xi2);
        CHECK(gbq.probs[2] == rep.xi3);
        CHECK(gbq.probs[3] == rep.xi4);
        auto star = count_gbq_types(p, true);
        CHECK(star.probs[0] == rep.xi1s);
        CHECK(star.probs[2] == rep.xi3s);
    }
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        auto rep = recursion::closed_forms(p);
        auto scaled = count_quartic_patterns(p, false);
        auto monic = count_quartic_patterns(p, true);
        Rational s1(0), s2(0);
        for (const auto& q : scaled.probs) s1 += q;
        for (const auto& q : monic.probs) s2 += q;
        CHECK(s1 == 1);
        CHECK(s2 == 1);
        CHECK(scaled.probs[0] == rep.eta0);
        CHECK(scaled.probs[1] == rep.eta1);
        CHECK(scaled.probs[2] == rep.eta2);
        CHECK(scaled.probs[3] == rep.eta3);
        CHECK(scaled.probs[4] == rep.eta4);
        CHECK(monic.probs[0] == rep.etap0);
        CHECK(monic.probs[1] == rep.etap1);
        CHECK(monic.probs[2] == rep.etap2);
        CHECK(monic.probs[3] == rep.etap3);
        CHECK(monic.probs[4] == rep.etap4);
    }
}

TEST_CASE("classification is invariant under coordinate changes") {
    std::mt19937_64 rng(5);
    for (unsigned p : {2u, 3u, 5u}) {
        for (int i = 0; i < 150; ++i) {
            FpGBQ g{p,
                    static_cast<unsigned>(rng() % p),
                    static_cast<unsigned>(rng() % p),
                    static_cast<unsigned>(rng() % p),
                    static_cast<unsigned>(rng() % p),
                    static_cast<unsigned>(rng() % p),
                    static_cast<unsigned>(rng() % p),
                    static_cast<unsigned>(rng() % p),
                    static_cast<unsigned>(rng() % p)};
            auto type = classify_gbq_type(g);
            CHECK(classify_gbq_type(shift_z(g, static_cast<unsigned>(rng() % p), static_cast<unsigned>(rng() % p),
                                            static_cast<unsigned>(rng() % p))) == type);
            CHECK(classify_gbq_type(shear_x(g, static_cast<unsigned>(rng() % p))) == type);
            CHECK(classify_gbq_type(swap_xy(g)) == type);
        }
    }
}
