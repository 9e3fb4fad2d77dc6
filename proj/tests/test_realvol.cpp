#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "locsol/poly.hpp"
#include "locsol/realvol.hpp"

using namespace locsol;
using namespace locsol::realvol;

namespace {

Quartic5 quartic(long a, long b, long c, long d, long e) {
    return {Dyadic(a), Dyadic(b), Dyadic(c), Dyadic(d), Dyadic(e)};
}

DyadicBox box(std::array<long, 5> lo, std::array<long, 5> hi) {
    DyadicBox b;
    for (int i = 0; i < 5; ++i) {
        b.lo[i] = Dyadic(lo[i]);
        b.hi[i] = Dyadic(hi[i]);
    }
    return b;
}

Poly to_poly(const Quartic5& f) {
    return Poly({f.e.to_rational(), f.d.to_rational(), f.c.to_rational(), f.b.to_rational(), f.a.to_rational()});
}

Quartic5 random_quartic(std::mt19937_64& rng, int denom_bits = 8) {
    auto coeff = [&] {
        long m = static_cast<long>(rng() % (1ull << (denom_bits + 1))) - (1l << denom_bits);
        return Dyadic(Integer(m), -denom_bits);
    };
    return {coeff(), coeff(), coeff(), coeff(), coeff()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("no_real_roots examples") {
    CHECK(no_real_roots(quartic(1, 0, 0, 0, 1)));    // x^4 + 1
    CHECK(!no_real_roots(quartic(1, 0, -5, 0, 4)));  // roots +-1, +-2
    CHECK(no_real_roots(quartic(-1, 0, 0, 0, -1)));  // -x^4 - 1
    CHECK_THROWS_AS(no_real_roots(quartic(0, 0, 0, 0, -1)), std::domain_error);
}

TEST_CASE("no_real_roots agrees with the exact root count") {
    std::mt19937_64 rng(8);
    int rootless = 0;
    for (int i = 0; i < 10000; ++i) {
        Quartic5 f = random_quartic(rng);
        if (f.a.is_zero()) continue;
        bool got = no_real_roots(f);
        bool want = count_real_roots(to_poly(f)) == 0;
        CHECK_MESSAGE(got == want, "i=", i);
        rootless += got;
    }
    CHECK(rootless > 1000);
}

TEST_CASE("is_negative_definite examples and symmetries") {
    CHECK(is_negative_definite(quartic(-1, 0, 0, 0, -1)));
    CHECK(!is_negative_definite(quartic(-1, 0, 0, 0, 1)));  // f(0) = 1
    CHECK(!is_negative_definite(quartic(0, 0, 0, 0, -1)));  // boundary a = 0
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10000; ++i) {
        Quartic5 f = random_quartic(rng);
        bool nd = is_negative_definite(f);
        Quartic5 rev{f.e, f.d, f.c, f.b, f.a};
        Quartic5 neg{f.a, -f.b, f.c, -f.d, f.e};
        CHECK(is_negative_definite(rev) == nd);
        CHECK(is_negative_definite(neg) == nd);
    }
}

TEST_CASE("classify_box examples") {
    CHECK(classify_box(box({-1, 0, 0, 0, -1}, {-1, 0, 0, 0, -1})) == BoxVerdict::AllNegDef);
    CHECK(classify_box(box({0, 0, 0, 0, 0}, {1, 1, 1, 1, 1})) == BoxVerdict::NoneNegDef);
    CHECK(classify_box(box({-1, -1, -1, -1, -1}, {1, 1, 1, 1, 1})) == BoxVerdict::Undecided);
}

TEST_CASE("box labels are sound on random interior points") {
    RunOptions opt;
    opt.depth = 11;
    opt.method = Method::Scaled4D;
    opt.workers = 1;
    std::vector<std::pair<DyadicBox, BoxVerdict>> labeled;
    opt.label_sink = [&](const DyadicBox& b, BoxVerdict v) { labeled.emplace_back(b, v); };
    run_bounds(opt);
    CHECK(labeled.size() > 1000);
    std::mt19937_64 rng(10);
    int tested = 0;
    for (size_t i = 0; i < labeled.size(); i += std::max<size_t>(1, labeled.size() / 1200)) {
        const auto& [b, verdict] = labeled[i];
        ++tested;
        CHECK(classify_box(b) == verdict);  // public path matches the engine's labels
        for (int s = 0; s < 100; ++s) {
            Quartic5 f;
            Dyadic* slots[5] = {&f.a, &f.b, &f.c, &f.d, &f.e};
            for (int j = 0; j < 5; ++j) {
                // lo + (hi - lo) * k/256 with k in [0, 256]
                Dyadic t(Integer(static_cast<long>(rng() % 257)), -8);
                *slots[j] = b.lo[j] + (b.hi[j] - b.lo[j]) * t;
            }
            bool nd = is_negative_definite(f);
            if (verdict == BoxVerdict::AllNegDef) {
                // Face interiors may touch a = 0 only on a measure-zero slice.
                if (!f.a.is_zero()) CHECK_MESSAGE(nd, "AllNegDef box contains a non-negdef point");
            } else {
                CHECK_MESSAGE(!nd, "NoneNegDef box contains a negdef point");
            }
        }
    }
    CHECK(tested >= 1000);
}

TEST_CASE("exact volume accounting and face bookkeeping") {
    for (auto method : {Method::Plain5D, Method::Scaled4D}) {
        RunOptions opt;
        opt.depth = method == Method::Plain5D ? 10 : 8;
        opt.method = method;
        opt.workers = 2;
        auto rep = run_bounds(opt);
        Rational sum = rep.v1.to_rational() + rep.v2.to_rational() + rep.undecided.to_rational();
        CHECK(sum == rep.total);
        REQUIRE(!rep.faces.empty());
        for (const auto& fa : rep.faces) {
            Rational fsum = fa.v1.to_rational() + fa.v2.to_rational() + fa.undecided.to_rational();
            CHECK_MESSAGE(fsum == fa.volume, "face ", fa.name);
        }
        CHECK(rep.rho_lower <= rep.rho_upper);
    }
}

TEST_CASE("deeper runs nest and methods agree") {
    Rational known_lo = parse_rational("873954") / 1000000;
    Rational known_hi = parse_rational("874124") / 1000000;
    Rational prev_lo(0), prev_hi(1);
    for (int depth : {6, 7, 8, 9, 10}) {
        RunOptions opt;
        opt.depth = depth;
        opt.method = Method::Scaled4D;
        auto rep = run_bounds(opt);
        CHECK(rep.rho_lower >= prev_lo);
        CHECK(rep.rho_upper <= prev_hi);
        prev_lo = rep.rho_lower;
        prev_hi = rep.rho_upper;
        CHECK(rep.rho_lower <= known_lo);
        CHECK(rep.rho_upper >= known_hi);
    }
    RunOptions plain;
    plain.depth = 10;
    plain.method = Method::Plain5D;
    auto p5 = run_bounds(plain);
    // Both methods enclose the true value, so the intervals intersect.
    CHECK(p5.rho_lower <= prev_hi);
    CHECK(prev_lo <= p5.rho_upper);
    CHECK(p5.rho_lower <= known_lo);
    CHECK(p5.rho_upper >= known_hi);
}

TEST_CASE("results are independent of the worker count") {
    BoundsReport reps[2];
    for (int w : {1, 2}) {
        RunOptions opt;
        opt.depth = 9;
        opt.method = Method::Scaled4D;
        opt.workers = w;
        reps[w - 1] = run_bounds(opt);
    }
    CHECK(reps[0].v1 == reps[1].v1);
    CHECK(reps[0].v2 == reps[1].v2);
    CHECK(reps[0].undecided == reps[1].undecided);
    CHECK(reps[0].boxes_processed == reps[1].boxes_processed);
}

TEST_CASE("checkpoints round-trip bit-exactly and resumes match direct runs") {
    std::string ck1 = "/tmp/locsol_test_ck1.txt", ck2 = "/tmp/locsol_test_ck2.txt";
    RunOptions shallow;
    shallow.depth = 7;
    shallow.method = Method::Scaled4D;
    shallow.checkpoint_out = ck1;
    auto rep7 = run_bounds(shallow);

    // Bit-exact round trip: load, immediately save, compare bytes.
    RunOptions reload;
    reload.depth = 7;
    reload.method = Method::Scaled4D;
    reload.resume_from = ck1;
    reload.checkpoint_out = ck2;
    auto rep7b = run_bounds(reload);
    CHECK(rep7b.v1 == rep7.v1);
    CHECK(rep7b.v2 == rep7.v2);
    CHECK(rep7b.undecided == rep7.undecided);
    CHECK(slurp(ck1) == slurp(ck2));

    // Resuming the depth-7 frontier to depth 10 equals a direct depth-10 run.
    RunOptions deeper;
    deeper.depth = 10;
    deeper.method = Method::Scaled4D;
    deeper.resume_from = ck1;
    auto resumed = run_bounds(deeper);
    RunOptions direct;
    direct.depth = 10;
    direct.method = Method::Scaled4D;
    auto straight = run_bounds(direct);
    CHECK(resumed.v1 == straight.v1);
    CHECK(resumed.v2 == straight.v2);
    CHECK(resumed.undecided == straight.undecided);

    CHECK_THROWS_AS(
        [&] {
            RunOptions bad;
            bad.depth = 7;
            bad.method = Method::Plain5D;  // method mismatch
            bad.resume_from = ck1;
            run_bounds(bad);
        }(),
        checkpoint_error);
    std::ofstream(ck2, std::ios::trunc) << "locsol-ckpt v1 method=scaled4d depth=7\nnot a box line\n";
    RunOptions corrupt;
    corrupt.depth = 7;
    corrupt.method = Method::Scaled4D;
    corrupt.resume_from = ck2;
    CHECK_THROWS_AS(run_bounds(corrupt), checkpoint_error);
    std::remove(ck1.c_str());
    std::remove(ck2.c_str());
}

TEST_CASE("box limit raises a resource error and saves partial state") {
    std::string ck = "/tmp/locsol_test_ck_partial.txt";
    RunOptions opt;
    opt.depth = 14;
    opt.method = Method::Scaled4D;
    opt.box_limit = 50;
    opt.checkpoint_out = ck;
    CHECK_THROWS_AS(run_bounds(opt), resource_error);
    RunOptions resume;
    resume.depth = 8;
    resume.method = Method::Scaled4D;
    resume.resume_from = ck;
    resume.box_limit = 1000000;
    auto rep = run_bounds(resume);  // partial state is loadable and consistent
    Rational sum = rep.v1.to_rational() + rep.v2.to_rational() + rep.undecided.to_rational();
    CHECK(sum == rep.total);
    std::remove(ck.c_str());
}

TEST_CASE("real monte carlo: determinism, sanity, domain errors") {
    auto one = monte_carlo_real(ModelKind::PlainBQ, 50000, 5, 1);
    auto two = monte_carlo_real(ModelKind::PlainBQ, 50000, 5, 2);
    CHECK(one.soluble == two.soluble);
    // 0.87411 +- 5 sigma at n = 50000 is about +-0.0074.
    CHECK(one.estimate > parse_rational("86") / 100);
    CHECK(one.estimate < parse_rational("89") / 100);
    auto gbq = monte_carlo_real(ModelKind::GeneralizedBQ, 50000, 5, 2);
    CHECK(gbq.estimate > parse_rational("88") / 100);  // dominates the plain density; see README, Known discrepancies
    CHECK_THROWS_AS(monte_carlo_real(ModelKind::PlainBQ, 0, 1), std::domain_error);
}
