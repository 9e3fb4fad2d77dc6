// Acceptance suite: one pass/fail line per criterion, exit code = #failures.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "locsol/assembly.hpp"
#include "locsol/fpcount.hpp"
#include "locsol/padic.hpp"
#include "locsol/realvol.hpp"
#include "locsol/recursion.hpp"
#include "locsol/rng.hpp"

using namespace locsol;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string dec6(const Rational& q, Round r = Round::Nearest) { return decimal_string(q, 6, r); }

// --------------------------------------------------------------------------

void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string msg;
    auto primes = assembly::primes_up_to(97);
    for (auto p : primes) {
        std::string field;
        if (!recursion::reports_equal(recursion::solve_recursion(p), recursion::closed_forms(p), &field)) {
            ok = false;
            msg = " mismatch at p=" + std::to_string(p) + " field " + field;
            break;
        }
    }
    if (recursion::solve_recursion_symbolic().rho != recursion::r_rational_function()) {
        ok = false;
        msg += " symbolic rho != R(t)";
    }
    double dt = seconds_since(t0);
    if (dt >= 5.0) {
        ok = false;
        msg += " overtime";
    }
    report(1, ok, "recursion identity, 25 primes + symbolic R(t) [" + std::to_string(dt) + " s]" + msg);
}

void criterion2() {
    using recursion::ModelKind;
    auto r2 = recursion::closed_forms(2);
    auto r3 = recursion::closed_forms(3);
    auto r7 = recursion::closed_forms(7);
    bool ok = recursion::local_density(2, ModelKind::GeneralizedBQ) == rational(1625, 1752) &&
              recursion::local_density(2, ModelKind::PlainBQ) == rational(23087, 24528) &&
              r2.sigma4 == rational(4691, 6132) && r2.tau2 == rational(1, 2) && r2.tau3 == rational(3, 4) &&
              r3.alpha == rational(3, 4) && r3.beta == rational(1, 4) && r7.alpha == rational(7, 8) &&
              r7.beta == rational(1, 8) && r2.alphap == rational(1, 2) && r2.betap == rational(1, 2) &&
              r7.alphap == rational(1, 2) && r7.betap == rational(1, 2);
    report(2, ok, "exact constants rho'(2)=1625/1752, rho(2)=23087/24528, sigma4(2)=4691/6132, tau, alpha, beta");
}

void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string msg;
    for (unsigned p : {2u, 3u})
        for (bool star : {false, true})
            if (fpcount::count_gbq_types(p, star).counts != fpcount::gbq_type_formula_counts(p, star).counts) {
                ok = false;
                msg += " gbq p=" + std::to_string(p) + (star ? "*" : "");
            }
    for (unsigned p : {2u, 3u, 5u, 7u})
        for (bool monic : {false, true})
            if (fpcount::count_quartic_patterns(p, monic).counts !=
                fpcount::quartic_pattern_formula_counts(p, monic).counts) {
                ok = false;
                msg += " quartic p=" + std::to_string(p) + (monic ? " monic" : "");
            }
    double dt = seconds_since(t0);
    if (dt >= 60.0) {
        ok = false;
        msg += " overtime";
    }
    report(3, ok, "count tables vs closed forms [" + std::to_string(dt) + " s]" + msg);
}

void criterion4() {
    using padic::ModelKind;
    auto t0 = Clock::now();
    bool ok = true;
    std::string msg;
    const long long n = 100000;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        for (auto model : {ModelKind::GeneralizedBQ, ModelKind::PlainBQ}) {
            auto res = padic::monte_carlo_local(p, model, n, 20260810, 24, 2);
            Rational ref = recursion::local_density(p, model);
            double rf = mpq_get_d(ref.get_mpq_t());
            double est = mpq_get_d(res.soluble_frac.get_mpq_t());
            double sigma = std::sqrt(rf * (1.0 - rf) / static_cast<double>(n));
            double dev = std::abs(est - rf);
            bool here = dev <= 4 * sigma && res.undecided_frac <= rational(1, 1000);
            if (!here) ok = false;
            std::ostringstream os;
            os << " [p=" << p << (model == ModelKind::GeneralizedBQ ? " gbq" : " quartic") << " dev="
               << dev / sigma << " sigma, undecided=" << res.undecided << "]";
            msg += os.str();
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 600.0) {
        ok = false;
        msg += " overtime";
    }
    report(4, ok, "p-adic Monte Carlo within 4 sigma of the local density [" + std::to_string(dt) + " s]" + msg);
}

realvol::BoundsReport depth25_report;  // reused by criterion 7

void criterion5() {
    Rational known_lo = parse_rational("873954") / 1000000;
    Rational known_hi = parse_rational("874124") / 1000000;

    auto t0 = Clock::now();
    realvol::RunOptions opt20;
    opt20.depth = 20;
    opt20.method = realvol::Method::Scaled4D;
    auto rep20 = realvol::run_bounds(opt20);
    double dt20 = seconds_since(t0);

    t0 = Clock::now();
    realvol::RunOptions opt25;
    opt25.depth = 25;
    opt25.method = realvol::Method::Scaled4D;
    depth25_report = realvol::run_bounds(opt25);
    double dt25 = seconds_since(t0);

    Rational w20 = rep20.rho_upper - rep20.rho_lower;
    Rational w25 = depth25_report.rho_upper - depth25_report.rho_lower;
    bool ok20 = dt20 <= 300 && w20 <= rational(3, 100) && rep20.rho_lower <= known_lo && known_hi <= rep20.rho_upper;
    bool ok25 = dt25 <= 1800 && w25 <= rational(12, 1000);
    std::ostringstream os;
    os << "real-place bounds: depth 20 -> [" << dec6(rep20.rho_lower, Round::Down) << ", "
       << dec6(rep20.rho_upper, Round::Up) << "] width " << dec6(w20) << " in " << dt20 << " s; depth 25 -> ["
       << dec6(depth25_report.rho_lower, Round::Down) << ", " << dec6(depth25_report.rho_upper, Round::Up)
       << "] width " << dec6(w25) << " in " << dt25 << " s";
    report(5, ok20 && ok25, os.str());
}

void criterion6() {
    using recursion::ModelKind;
    auto t0 = Clock::now();
    auto plain = realvol::monte_carlo_real(ModelKind::PlainBQ, 1000000, 8675309, 2);
    auto gbq = realvol::monte_carlo_real(ModelKind::GeneralizedBQ, 1000000, 8675309, 2);
    double dt = seconds_since(t0);
    Rational plain_target = parse_rational("87411") / 100000;
    Rational gbq_target = parse_rational("873743") / 1000000;
    Rational tol = rational(2, 1000);
    bool ok_plain = abs(plain.estimate - plain_target) <= tol;
    bool ok_gbq = abs(gbq.estimate - gbq_target) <= tol;
    bool ok = ok_plain && ok_gbq && dt < 120;
    std::ostringstream os;
    os << "real Monte Carlo 1e6: quartic " << dec6(plain.estimate) << " vs 0.87411 ("
       << (ok_plain ? "ok" : "off") << "), gbq " << dec6(gbq.estimate) << " vs 0.873743 ("
       << (ok_gbq ? "ok" : "off") << ") [" << dt << " s]";
    if (!ok_gbq)
        os << " -- note: the gbq target 0.873743 lies below the provable minimum for this sampling "
              "(h^2+4f dominates 4f pointwise, forcing the generalized density >= the plain one ~0.8741); "
              "the measured ~0.9098 is the mathematically forced value. See README, Known discrepancies.";
    report(6, ok, os.str());
}

void criterion7() {
    using recursion::ModelKind;
    Rational target = parse_rational("75965") / 100000;
    auto t0 = Clock::now();

    auto trusted = DyadicInterval::from_rationals(parse_rational("873954") / 1000000,
                                                  parse_rational("874124") / 1000000, 128);
    auto rep_trusted = assembly::rho_interval(ModelKind::PlainBQ, trusted, true, 1000000);
    double dt_product = seconds_since(t0);
    bool ok_trusted = rep_trusted.rho.contains(target) &&
                      rep_trusted.rho.lo().to_rational() >= parse_rational("7590") / 10000 &&
                      rep_trusted.rho.hi().to_rational() <= parse_rational("7602") / 10000 && dt_product <= 120 &&
                      rep_trusted.rigorous;

    auto native = DyadicInterval::from_rationals(depth25_report.rho_lower, depth25_report.rho_upper, 128);
    auto rep_native = assembly::rho_interval(ModelKind::PlainBQ, native, true, 10000);
    Rational native_width = rep_native.rho.hi().to_rational() - rep_native.rho.lo().to_rational();
    bool ok_native = rep_native.rho.contains(target) && native_width <= rational(12, 1000) && rep_native.rigorous;

    auto mc = realvol::monte_carlo_real(ModelKind::GeneralizedBQ, 1000000, 8675309, 2);
    Rational err(mc.err4);
    auto gbq_part = DyadicInterval::from_rationals(mc.estimate - err, mc.estimate + err, 128);
    auto rep_gbq = assembly::rho_interval(ModelKind::GeneralizedBQ, gbq_part, false, 10000);
    bool gbq_contains = rep_gbq.rho.contains(parse_rational("748248") / 1000000);
    bool ok_gbq = gbq_contains && !rep_gbq.rigorous;

    std::ostringstream os;
    os << "global assembly: trusted real x P=1e6 -> [" << dec6(rep_trusted.rho.lo().to_rational(), Round::Down)
       << ", " << dec6(rep_trusted.rho.hi().to_rational(), Round::Up) << "] (" << (ok_trusted ? "ok" : "off")
       << ", product " << dt_product << " s); native depth-25 x P=1e4 -> ["
       << dec6(rep_native.rho.lo().to_rational(), Round::Down) << ", "
       << dec6(rep_native.rho.hi().to_rational(), Round::Up) << "] (" << (ok_native ? "ok" : "off")
       << "); gbq estimate -> [" << dec6(rep_gbq.rho.lo().to_rational(), Round::Down) << ", "
       << dec6(rep_gbq.rho.hi().to_rational(), Round::Up) << "] non-rigorous=" << (!rep_gbq.rigorous ? "yes" : "no")
       << " contains 0.748248: " << (gbq_contains ? "yes" : "no");
    if (!gbq_contains)
        os << " -- note: 0.748248 inherits the unattainable real-place target of criterion 6; the assembled "
              "generalized density is ~0.779. See README, Known discrepancies.";
    report(7, ok_trusted && ok_native && ok_gbq, os.str());
}

void criterion8() {
    using padic::Verdict;
    bool ok = true;
    std::string msg;

    // (a) every soluble verdict passes witness verification (1e4 samples at p=5).
    {
        CounterRng rng(424242);
        Integer bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), 5, 18);
        int soluble = 0;
        bool all_verified = true;
        for (long long i = 0; i < 10000; ++i) {
            padic::GBQInt q{rng.uniform(i, 0, bound), rng.uniform(i, 1, bound), rng.uniform(i, 2, bound),
                            rng.uniform(i, 3, bound), rng.uniform(i, 4, bound), rng.uniform(i, 5, bound),
                            rng.uniform(i, 6, bound), rng.uniform(i, 7, bound)};
            auto v = padic::decide(5, q, 8);
            if (v.kind == Verdict::Soluble) {
                ++soluble;
                if (!v.witness || !padic::verify_witness(5, q, *v.witness)) all_verified = false;
            }
        }
        if (!(all_verified && soluble > 9000)) {
            ok = false;
            msg += " witness-verification";
        }
    }

    // (b) box label soundness on >= 1e3 sampled boxes, 100 points each.
    {
        realvol::RunOptions opt;
        opt.depth = 11;
        opt.method = realvol::Method::Scaled4D;
        opt.workers = 1;
        std::vector<std::pair<realvol::DyadicBox, realvol::BoxVerdict>> labeled;
        opt.label_sink = [&](const realvol::DyadicBox& b, realvol::BoxVerdict v) { labeled.emplace_back(b, v); };
        auto rep = realvol::run_bounds(opt);
        std::mt19937_64 rng(77);
        size_t step = std::max<size_t>(1, labeled.size() / 1100);
        int tested = 0;
        bool sound = true;
        for (size_t i = 0; i < labeled.size(); i += step) {
            const auto& [b, verdict] = labeled[i];
            ++tested;
            for (int s = 0; s < 100 && sound; ++s) {
                realvol::Quartic5 f;
                Dyadic* slots[5] = {&f.a, &f.b, &f.c, &f.d, &f.e};
                for (int j = 0; j < 5; ++j) {
                    Dyadic t(Integer(static_cast<long>(rng() % 257)), -8);
                    *slots[j] = b.lo[j] + (b.hi[j] - b.lo[j]) * t;
                }
                bool nd = realvol::is_negative_definite(f);
                if (verdict == realvol::BoxVerdict::AllNegDef && !f.a.is_zero() && !nd) sound = false;
                if (verdict == realvol::BoxVerdict::NoneNegDef && nd) sound = false;
            }
        }
        if (!(sound && tested >= 1000)) {
            ok = false;
            msg += " box-soundness";
        }
        // (c) exact accounting on this run and the criterion-5 run.
        if (rep.v1.to_rational() + rep.v2.to_rational() + rep.undecided.to_rational() != rep.total) {
            ok = false;
            msg += " accounting-d10";
        }
        if (depth25_report.v1.to_rational() + depth25_report.v2.to_rational() +
                depth25_report.undecided.to_rational() !=
            depth25_report.total) {
            ok = false;
            msg += " accounting-d25";
        }
    }

    // (d) checkpoint round trip is bit-exact.
    {
        std::string ck1 = "/tmp/locsol_acc_ck1.txt", ck2 = "/tmp/locsol_acc_ck2.txt";
        realvol::RunOptions a;
        a.depth = 8;
        a.method = realvol::Method::Scaled4D;
        a.checkpoint_out = ck1;
        auto ra = realvol::run_bounds(a);
        realvol::RunOptions b;
        b.depth = 8;
        b.method = realvol::Method::Scaled4D;
        b.resume_from = ck1;
        b.checkpoint_out = ck2;
        auto rb = realvol::run_bounds(b);
        auto slurp = [](const std::string& p) {
            std::ifstream in(p);
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        if (!(ra.v1 == rb.v1 && ra.v2 == rb.v2 && slurp(ck1) == slurp(ck2))) {
            ok = false;
            msg += " checkpoint-roundtrip";
        }
        std::remove(ck1.c_str());
        std::remove(ck2.c_str());
    }

    // (e) seeded runs are independent of the worker count.
    {
        realvol::RunOptions o1, o2;
        o1.depth = o2.depth = 9;
        o1.method = o2.method = realvol::Method::Scaled4D;
        o1.workers = 1;
        o2.workers = 2;
        auto r1 = realvol::run_bounds(o1), r2 = realvol::run_bounds(o2);
        if (!(r1.v1 == r2.v1 && r1.v2 == r2.v2 && r1.undecided == r2.undecided)) {
            ok = false;
            msg += " bounds-workers";
        }
        auto m1 = padic::monte_carlo_local(3, recursion::ModelKind::GeneralizedBQ, 5000, 5, 24, 1);
        auto m2 = padic::monte_carlo_local(3, recursion::ModelKind::GeneralizedBQ, 5000, 5, 24, 2);
        if (!(m1.soluble == m2.soluble && m1.insoluble == m2.insoluble)) {
            ok = false;
            msg += " padic-mc-workers";
        }
        auto e1 = realvol::monte_carlo_real(recursion::ModelKind::PlainBQ, 40000, 5, 1);
        auto e2 = realvol::monte_carlo_real(recursion::ModelKind::PlainBQ, 40000, 5, 2);
        if (e1.soluble != e2.soluble) {
            ok = false;
            msg += " real-mc-workers";
        }
    }

    report(8, ok, "property suites: witnesses, box soundness, exact accounting, checkpoints, determinism" + msg);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures;
}
