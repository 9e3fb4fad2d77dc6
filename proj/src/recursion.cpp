#include "locsol/recursion.hpp"

#include <stdexcept>
#include <vector>

namespace locsol::recursion {

namespace {

template <class F>
F ipow(const F& x, int n) {
    F acc(1);
    for (int i = 0; i < n; ++i) acc = acc * x;
    return acc;
}

// a + b * X, for solving the one-unknown cycles by substitution.
template <class F>
struct Lin {
    F a, b;
    Lin(F a0, F b0) : a(std::move(a0)), b(std::move(b0)) {}
    explicit Lin(F a0) : a(std::move(a0)), b(F(0)) {}
    Lin operator+(const Lin& o) const { return Lin(a + o.a, b + o.b); }
    Lin operator*(const F& s) const { return Lin(a * s, b * s); }
    F solve() const { return a / (F(1) - b); }  // root of X = a + bX
};

template <class F>
struct XiEta {
    F xi1, xi2, xi3, xi4, xi1s, xi3s;
    F eta0, eta1, eta2, eta3, eta4;
    F etap0, etap1, etap2, etap3, etap4;
};

// Probability tables of the counting corollaries, as closed forms in p.
template <class F>
XiEta<F> xi_eta_tables(const F& p) {
    XiEta<F> t{};
    F one(1), two(2), p2 = p * p, p3 = p2 * p, p5 = p3 * p2;
    t.xi1 = (p2 - one) / p2;
    t.xi2 = (p3 - one) / (two * p5);
    t.xi3 = t.xi2;
    t.xi4 = one / p5;
    t.xi1s = t.xi1;
    t.xi3s = one / p2;
    F e8(8), pm = p - one, p51 = p5 - one;
    t.eta0 = p * pm * pm * (F(3) * p2 + p + two) / (e8 * p51);
    t.eta1 = p * (p2 - one) * (F(5) * p2 + p + two) / (e8 * p51);
    t.eta2 = p * pm * (p2 - one) / (two * p51);
    t.eta3 = p * (p2 - one) / (two * p51);
    t.eta4 = (p2 - one) / p51;
    t.etap0 = pm * (F(3) * p2 + p + two) / (e8 * p3);
    t.etap1 = pm * (F(5) * p2 + F(3) * p + two) / (e8 * p3);
    t.etap2 = pm / (two * p2);
    t.etap3 = pm / (two * p3);
    t.etap4 = one / p3;
    return t;
}

template <class F>
DensityReportT<F> closed_forms_impl(const F& p) {
    DensityReportT<F> r{};
    r.p = p;
    auto t = xi_eta_tables(p);
    r.xi1 = t.xi1;
    r.xi2 = t.xi2;
    r.xi3 = t.xi3;
    r.xi4 = t.xi4;
    r.xi1s = t.xi1s;
    r.xi3s = t.xi3s;
    r.eta0 = t.eta0;
    r.eta1 = t.eta1;
    r.eta2 = t.eta2;
    r.eta3 = t.eta3;
    r.eta4 = t.eta4;
    r.etap0 = t.etap0;
    r.etap1 = t.etap1;
    r.etap2 = t.etap2;
    r.etap3 = t.etap3;
    r.etap4 = t.etap4;

    F one(1), two(2), half = one / two;
    F p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p, p7 = p6 * p, p8 = p7 * p, p9 = p8 * p,
      p10 = p9 * p;
    F pp1 = p + one, p9m1 = p9 - one, p3m1 = p3 - one;

    r.alpha = p / pp1;
    r.beta = one / pp1;
    r.alphap = half;
    r.betap = half;

    r.tau0 = F(0);
    r.tau1 = one;
    r.tau2 = half;
    r.tau3 = F(3) / F(4);
    r.tau4 = (F(4) * p10 + F(8) * p9 - F(4) * p8 + F(4) * p6 - F(3) * p4 + p3 - F(5) * p - F(5)) /
             (F(8) * pp1 * p9m1);

    r.sigma1 = one;
    r.sigma2 = one;
    F pm1 = p - one;
    r.sigma3 = pm1 * pm1 *
               (two * p9 + F(3) * p8 + F(5) * p7 + F(3) * p6 + F(5) * p5 + F(3) * p4 + F(4) * p3 + F(5) * p2 +
                F(4) * p + one) /
               (two * p3m1 * p9m1);
    r.sigma3s = pm1 *
                (two * p9 + F(3) * p8 + F(5) * p7 + F(5) * p6 + F(5) * p5 + F(5) * p4 + F(4) * p3 + F(6) * p2 +
                 F(6) * p + two) /
                (two * pp1 * pp1 * p9m1);
    r.rho_star = p * pm1 *
                 (two * p9 + F(6) * p8 + F(6) * p7 + F(4) * p6 + F(3) * p5 + F(5) * p4 + F(5) * p3 + F(5) * p2 +
                  F(5) * p + two) /
                 (two * pp1 * pp1 * p9m1);
    r.lambda = (two * p10 + F(3) * p9 - p5 + two * p4 - two * p2 - F(3) * p - one) / (two * pp1 * pp1 * p9m1);
    r.sigma4p = (F(5) * p10 + F(5) * p9 - p7 + F(3) * p6 - F(4) * p5 + F(4) * p3 - F(8) * p - F(4)) /
                (F(8) * pp1 * p9m1);
    r.sigma4 = (F(5) * p10 + F(8) * p9 + p8 - p7 + two * p6 - F(3) * p5 + F(4) * p3 - F(10) * p - F(6)) /
               (F(8) * pp1 * p9m1);
    r.rho = (F(8) * p10 + F(8) * p9 - F(4) * p8 + two * p6 + p5 - two * p4 + p3 - p2 - F(8) * p - F(5)) /
            (F(8) * pp1 * p9m1);
    return r;
}

template <class F>
DensityReportT<F> solve_impl(const F& p) {
    DensityReportT<F> r{};
    r.p = p;
    auto t = xi_eta_tables(p);
    r.xi1 = t.xi1;
    r.xi2 = t.xi2;
    r.xi3 = t.xi3;
    r.xi4 = t.xi4;
    r.xi1s = t.xi1s;
    r.xi3s = t.xi3s;
    r.eta0 = t.eta0;
    r.eta1 = t.eta1;
    r.eta2 = t.eta2;
    r.eta3 = t.eta3;
    r.eta4 = t.eta4;
    r.etap0 = t.etap0;
    r.etap1 = t.etap1;
    r.etap2 = t.etap2;
    r.etap3 = t.etap3;
    r.etap4 = t.etap4;

    F one(1), two(2), half = one / two;
    F inv_p = one / p;
    F q = one - inv_p;  // 1 - 1/p

    // alpha = (1 - 1/p) + beta/p,  beta = alpha/p.
    {
        Lin<F> alpha(q, inv_p * inv_p);  // substitute beta = alpha/p
        r.alpha = alpha.solve();
        r.beta = r.alpha * inv_p;
    }
    // alpha' = (1/2)(1 - 1/p) + beta'/p,  beta' = (1/2)(1 - 1/p) + alpha'/p.
    {
        Lin<F> ap(half * q + inv_p * half * q, inv_p * inv_p);
        r.alphap = ap.solve();
        r.betap = half * q + inv_p * r.alphap;
    }

    // Conjugate-factor cycle: the lambda chain closes through rho* and sigma3*.
    //   sigma3* = ((p-1)/2p)(2p+1)/(p+1)^2 + lambda/p
    //   rho*    = xi1* + xi3* sigma3*
    //   lambda7 = rho*, lambda6 = lambda7/p, ..., lambda1 = lambda2/p, lambda = lambda1.
    F pp1 = p + one;
    F lift_two = (two * p + one) / (pp1 * pp1);  // at least one of two points lifts
    {
        Lin<F> lam(F(0), one);  // the unknown
        Lin<F> sigma3s = Lin<F>(((p - one) / (two * p)) * lift_two) + lam * inv_p;
        Lin<F> rho_star = Lin<F>(r.xi1s) + sigma3s * r.xi3s;
        Lin<F> l7 = rho_star;
        Lin<F> l6 = l7 * inv_p;
        Lin<F> l5 = Lin<F>(q) + l6 * inv_p;
        Lin<F> l4 = Lin<F>(half * q) + l5 * inv_p;
        Lin<F> l3 = Lin<F>(half * q) + l4 * inv_p;
        Lin<F> l2 = Lin<F>(q) + l3 * inv_p;
        Lin<F> l1 = l2 * inv_p;
        r.lambda = l1.solve();
        r.sigma3s = ((p - one) / (two * p)) * lift_two + r.lambda * inv_p;
        r.rho_star = r.xi1s + r.xi3s * r.sigma3s;
    }
    F p2 = p * p, p3 = p2 * p;
    r.sigma3 = (p * (p2 - one) / (two * (p3 - one))) * lift_two + ((p2 - one) / (p3 - one)) * r.lambda;

    r.sigma1 = one;
    r.sigma2 = one;
    r.tau0 = F(0);
    r.tau1 = one;
    r.tau2 = half;
    r.tau3 = F(3) / F(4);

    // Quadruple-root cycle: the nu chain closes through sigma4'.
    //   sigma4' = eta1' + eta2'/2 + eta3'(3/4) + eta4' tau4
    //   nu7 = sigma4', nu6 = (1/2)q + nu7/p, ..., nu1 = (1/2)q + nu2/p, tau4 = nu1.
    {
        Lin<F> tau4(F(0), one);
        Lin<F> n7 = Lin<F>(r.etap1 + r.etap2 * half + r.etap3 * r.tau3) + tau4 * r.etap4;
        Lin<F> n6 = Lin<F>(half * q) + n7 * inv_p;
        Lin<F> n5 = Lin<F>(q) + n6 * inv_p;
        Lin<F> n4 = Lin<F>(half * q * r.alpha + half * q) + n5 * inv_p;
        Lin<F> n3 = n4 * inv_p;
        Lin<F> n2 = Lin<F>(q) + n3 * inv_p;
        Lin<F> n1 = Lin<F>(half * q) + n2 * inv_p;
        r.tau4 = n1.solve();
        r.sigma4p = r.etap1 + r.etap2 * half + r.etap3 * r.tau3 + r.etap4 * r.tau4;
    }

    // Final cycle: rho = sum xi_i sigma_i with sigma4 = rho/p^5 + (1 - 1/p^5) sum eta_i tau_i.
    {
        F p5 = p3 * p2;
        F eta_tau = r.eta1 + r.eta2 * half + r.eta3 * r.tau3 + r.eta4 * r.tau4;
        Lin<F> rho(F(0), one);
        Lin<F> sigma4 = Lin<F>((one - one / p5) * eta_tau) + rho * (one / p5);
        Lin<F> rho_eq = Lin<F>(r.xi1 + r.xi2 + r.xi3 * r.sigma3) + sigma4 * r.xi4;
        r.rho = rho_eq.solve();
        r.sigma4 = r.rho / p5 + (one - one / p5) * eta_tau;
    }
    return r;
}

}  // namespace

template <class F>
bool reports_equal(const DensityReportT<F>& a, const DensityReportT<F>& b, std::string* mismatch) {
    auto chk = [&](const char* name, const F& x, const F& y) {
        if (x == y) return true;
        if (mismatch) *mismatch = name;
        return false;
    };
    return chk("p", a.p, b.p) && chk("xi1", a.xi1, b.xi1) && chk("xi2", a.xi2, b.xi2) && chk("xi3", a.xi3, b.xi3) &&
           chk("xi4", a.xi4, b.xi4) && chk("xi1s", a.xi1s, b.xi1s) && chk("xi3s", a.xi3s, b.xi3s) &&
           chk("eta0", a.eta0, b.eta0) && chk("eta1", a.eta1, b.eta1) && chk("eta2", a.eta2, b.eta2) &&
           chk("eta3", a.eta3, b.eta3) && chk("eta4", a.eta4, b.eta4) && chk("etap0", a.etap0, b.etap0) &&
           chk("etap1", a.etap1, b.etap1) && chk("etap2", a.etap2, b.etap2) && chk("etap3", a.etap3, b.etap3) &&
           chk("etap4", a.etap4, b.etap4) && chk("alpha", a.alpha, b.alpha) && chk("beta", a.beta, b.beta) &&
           chk("alphap", a.alphap, b.alphap) && chk("betap", a.betap, b.betap) && chk("tau0", a.tau0, b.tau0) &&
           chk("tau1", a.tau1, b.tau1) && chk("tau2", a.tau2, b.tau2) && chk("tau3", a.tau3, b.tau3) &&
           chk("tau4", a.tau4, b.tau4) && chk("lambda", a.lambda, b.lambda) &&
           chk("rho_star", a.rho_star, b.rho_star) && chk("sigma1", a.sigma1, b.sigma1) &&
           chk("sigma2", a.sigma2, b.sigma2) && chk("sigma3", a.sigma3, b.sigma3) &&
           chk("sigma3s", a.sigma3s, b.sigma3s) && chk("sigma4", a.sigma4, b.sigma4) &&
           chk("sigma4p", a.sigma4p, b.sigma4p) && chk("rho", a.rho, b.rho);
}

template bool reports_equal<Rational>(const DensityReportT<Rational>&, const DensityReportT<Rational>&, std::string*);
template bool reports_equal<RatFn>(const DensityReportT<RatFn>&, const DensityReportT<RatFn>&, std::string*);

DensityReport closed_forms(unsigned long p) {
    if (!is_prime(p))
        throw std::invalid_argument("closed_forms: p must be prime");
    return closed_forms_impl(Rational(static_cast<long>(p)));
}

DensityReport solve_recursion(unsigned long p) {
    if (!is_prime(p))
        throw std::invalid_argument("solve_recursion: p must be prime");
    return solve_impl(Rational(static_cast<long>(p)));
}

SymbolicDensityReport solve_recursion_symbolic() { return solve_impl(RatFn::t()); }
SymbolicDensityReport closed_forms_symbolic() { return closed_forms_impl(RatFn::t()); }

RatFn r_rational_function() {
    RatFn t = RatFn::t();
    RatFn num = RatFn(4) * ipow(t, 7) + RatFn(4) * ipow(t, 6) + RatFn(2) * ipow(t, 5) + ipow(t, 4) +
                RatFn(3) * ipow(t, 3) + RatFn(2) * ipow(t, 2) + RatFn(3) * t + RatFn(3);
    RatFn den = RatFn(8) * (t + RatFn(1)) * (ipow(t, 2) + t + RatFn(1)) * (ipow(t, 6) + ipow(t, 3) + RatFn(1));
    return RatFn(1) - num / den;
}

Rational r_of(unsigned long p) {
    if (!is_prime(p))
        throw std::invalid_argument("r_of: p must be prime");
    Integer t(static_cast<unsigned long>(p));
    Integer t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t, t6 = t5 * t, t7 = t6 * t;
    Integer num = 4 * t7 + 4 * t6 + 2 * t5 + t4 + 3 * t3 + 2 * t2 + 3 * t + 3;
    Integer den = 8 * (t + 1) * (t2 + t + 1) * (t6 + t3 + 1);
    Rational frac(num, den);
    frac.canonicalize();
    return Rational(1) - frac;
}

Rational local_density(unsigned long p, ModelKind model) {
    if (!is_prime(p))
        throw std::invalid_argument("local_density: p must be prime");
    if (model == ModelKind::GeneralizedBQ || p != 2) return r_of(p);
    DensityReport r = closed_forms(2);
    return Rational(3, 4) + r.sigma4 / 4;
}

std::vector<std::pair<std::string, Rational>> report_fields(const DensityReport& r) {
    return {{"p", r.p},
            {"xi1", r.xi1},
            {"xi2", r.xi2},
            {"xi3", r.xi3},
            {"xi4", r.xi4},
            {"xi1_star", r.xi1s},
            {"xi3_star", r.xi3s},
            {"eta0", r.eta0},
            {"eta1", r.eta1},
            {"eta2", r.eta2},
            {"eta3", r.eta3},
            {"eta4", r.eta4},
            {"eta0_monic", r.etap0},
            {"eta1_monic", r.etap1},
            {"eta2_monic", r.etap2},
            {"eta3_monic", r.etap3},
            {"eta4_monic", r.etap4},
            {"alpha", r.alpha},
            {"beta", r.beta},
            {"alpha_prime", r.alphap},
            {"beta_prime", r.betap},
            {"tau0", r.tau0},
            {"tau1", r.tau1},
            {"tau2", r.tau2},
            {"tau3", r.tau3},
            {"tau4", r.tau4},
            {"lambda", r.lambda},
            {"rho_star", r.rho_star},
            {"sigma1", r.sigma1},
            {"sigma2", r.sigma2},
            {"sigma3", r.sigma3},
            {"sigma3_star", r.sigma3s},
            {"sigma4", r.sigma4},
            {"sigma4_prime", r.sigma4p},
            {"rho", r.rho}};
}

}  // namespace locsol::recursion
