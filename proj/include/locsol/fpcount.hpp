#pragma once

#include <array>
#include <string>
#include <vector>

#include "locsol/rational.hpp"

namespace locsol::fpcount {

// z^2 + h z - f over F_p with h = l x^2 + m x y + n y^2 and
// f = a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4.
struct FpGBQ {
    unsigned p;
    unsigned l, m, n;
    unsigned a, b, c, d, e;
};

enum class FactorizationType {
    AbsIrred = 1,        // absolutely irreducible
    SplitDistinct = 2,   // (z - s1)(z - s2), s1 != s2 over F_p
    ConjugatePair = 3,   // conjugate factors over F_{p^2}
    RepeatedFactor = 4,  // (z - s)^2 over F_p
};

enum class RootPattern {
    NoRoots = 0,
    SimpleRoot = 1,      // at least one simple root in P^1(F_p)
    OneDouble = 2,       // one double root, no simple roots
    TwoDoubles = 3,
    QuadrupleRoot = 4,
};

struct CountTable {
    std::vector<std::string> labels;
    std::vector<long long> counts;
    long long total = 0;
    std::vector<Rational> probs;  // counts[i] / total
};

FactorizationType classify_gbq_type(const FpGBQ& q);

// Binary quartic (a,b,c,d,e) over F_p; f must be nonzero.
RootPattern classify_quartic_pattern(unsigned p, const std::array<unsigned, 5>& f);

// Condition (*): z^2 + l z - a irreducible over F_p.
bool satisfies_star(unsigned p, unsigned l, unsigned a);

// Exhaustive enumeration over the p^8 pairs (resp. the (*) subset).
// Enumeration is capped at p <= 3; use the formula table beyond that.
CountTable count_gbq_types(unsigned p, bool restrict_star);
CountTable gbq_type_formula_counts(unsigned p, bool restrict_star);

// Quartic root-pattern counts, up to scaling or monic (f(1,0) = 1).
// Enumeration capped at p <= 7.
CountTable count_quartic_patterns(unsigned p, bool monic);
CountTable quartic_pattern_formula_counts(unsigned p, bool monic);

}  // namespace locsol::fpcount
