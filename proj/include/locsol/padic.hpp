#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "locsol/rational.hpp"
#include "locsol/recursion.hpp"

namespace locsol::padic {

using recursion::ModelKind;

// z^2 + h z = f with h = l x^2 + m x y + n y^2, f = a x^4 + ... + e y^4.
// h == 0 encodes the plain binary quartic model.
struct GBQInt {
    Integer l, m, n, a, b, c, d, e;
};

enum class Verdict { Soluble, Insoluble, Undecided };

// Certificate for a Soluble verdict.  Two kinds:
//  - Hensel: (x,y,z) are residues mod p^K on the recorded chart (y = 1 or
//    x = 1 scaled), and v(F) > 2 v(dF/dvar) holds at those integers.
//  - Exact: (x,y,z) is an integer point with F(x,y,z) = 0 and (x,y) != (0,0)
//    mod p (weighted-projective coordinates; z has weight 2).
struct Witness {
    enum class Kind { Hensel, Exact } kind = Kind::Hensel;
    int chart = 0;  // 0: (u, 1, z); 1: (1, u, z)
    int var = 1;    // Hensel direction: 0 = the chart coordinate, 1 = z
    Integer x, y, z;
    unsigned modulus_exp = 0;  // K; residues are mod p^K (Hensel only)
};

struct SolubilityVerdict {
    Verdict kind = Verdict::Undecided;
    std::optional<Witness> witness;
    int depth_used = 0;
};

inline constexpr int kDefaultDepth = 64;

// Q_p-solubility of z^2 + hz = f.  Odd p uses the univariate refinement on
// D = h^2 + 4f; p = 2 uses the generic two-variable refinement.
SolubilityVerdict decide(unsigned long p, const GBQInt& q, int max_depth = kDefaultDepth);

// The generic two-variable refinement for any p (cross-check path).
SolubilityVerdict decide_generic(unsigned long p, const GBQInt& q, int max_depth = kDefaultDepth);

// Re-evaluates F and its partials at the witness and checks the certificate.
bool verify_witness(unsigned long p, const GBQInt& q, const Witness& w);

struct McLocalResult {
    Rational soluble_frac, insoluble_frac, undecided_frac;
    long long soluble = 0, insoluble = 0, undecided = 0;
    long long samples = 0;
};

// Deterministic given (p, model, n, seed, digits), independent of `workers`.
McLocalResult monte_carlo_local(unsigned long p, ModelKind model, long long n, std::uint64_t seed,
                                unsigned digits = 24, int workers = 0);

}  // namespace locsol::padic
