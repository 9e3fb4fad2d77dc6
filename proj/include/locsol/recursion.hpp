#pragma once

#include <string>

#include "locsol/ratfn.hpp"
#include "locsol/rational.hpp"

namespace locsol::recursion {

enum class ModelKind { GeneralizedBQ, PlainBQ };

// Every per-prime probability of the solubility recursion, exact.
template <class F>
struct DensityReportT {
    F p;
    F xi1, xi2, xi3, xi4, xi1s, xi3s;
    F eta0, eta1, eta2, eta3, eta4;
    F etap0, etap1, etap2, etap3, etap4;
    F alpha, beta, alphap, betap;
    F tau0, tau1, tau2, tau3, tau4;
    F lambda, rho_star;
    F sigma1, sigma2, sigma3, sigma3s, sigma4, sigma4p;
    F rho;
};

using DensityReport = DensityReportT<Rational>;
using SymbolicDensityReport = DensityReportT<RatFn>;

// Field-by-field equality; names the first mismatch if any.
template <class F>
bool reports_equal(const DensityReportT<F>& a, const DensityReportT<F>& b, std::string* mismatch = nullptr);

// Direct evaluation of the displayed closed forms.
DensityReport closed_forms(unsigned long p);

// Back-substitution through the full equation system; equals closed_forms.
DensityReport solve_recursion(unsigned long p);

// The same system over the rational-function field in t.
SymbolicDensityReport solve_recursion_symbolic();
SymbolicDensityReport closed_forms_symbolic();

// R(t) = 1 - (4t^7+4t^6+2t^5+t^4+3t^3+2t^2+3t+3) / (8(t+1)(t^2+t+1)(t^6+t^3+1)).
RatFn r_rational_function();

// R(p) as an exact rational.
Rational r_of(unsigned long p);

// GeneralizedBQ: R(p) for every p.  PlainBQ: R(p) for odd p, 3/4 + sigma4/4 at p = 2.
Rational local_density(unsigned long p, ModelKind model);

// Per-field access for reporting (stable order).
std::vector<std::pair<std::string, Rational>> report_fields(const DensityReport& r);

}  // namespace locsol::recursion
