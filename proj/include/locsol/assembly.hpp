#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "locsol/dyadic.hpp"
#include "locsol/recursion.hpp"

namespace locsol::assembly {

using recursion::ModelKind;

std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

// Exact check that 6(t+1)(t^2+t+1)(t^6+t^3+1) - t^2 N(t) >= 0 for all t >= 3,
// by expanding in powers of (t-3); certifies 1 - R(t) <= (3/4) t^-2.
bool tail_certificate_holds();

// Encloses prod_{p > P} R(p) inside [1 - 3/(4P), 1].  Requires P >= 3.
DyadicInterval tail_bound(unsigned long P, unsigned precision = 128);

// Outward-rounded product of local densities over primes p <= P.
DyadicInterval finite_product(unsigned long P, ModelKind model, unsigned precision = 128);

struct GlobalReport {
    ModelKind model = ModelKind::PlainBQ;
    DyadicInterval real_part, finite_product, tail, rho;
    unsigned long pmax = 0;
    bool rigorous = false;
    std::vector<std::pair<std::string, std::string>> provenance;
};

GlobalReport rho_interval(ModelKind model, const DyadicInterval& real_part, bool real_rigorous, unsigned long P,
                          unsigned precision = 128);

}  // namespace locsol::assembly
