#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "locsol/dyadic.hpp"
#include "locsol/recursion.hpp"

namespace locsol::realvol {

using recursion::ModelKind;

// a x^4 + b x^3 + c x^2 + d x + e, dyadic coefficients.
struct Quartic5 {
    Dyadic a, b, c, d, e;
};

// Coefficient box, index order (a, b, c, d, e).  A face of the scaled 4D
// decomposition is a box with lo[i] == hi[i] = +-1 on one coordinate.
struct DyadicBox {
    std::array<Dyadic, 5> lo, hi;
};

enum class BoxVerdict { AllNegDef, NoneNegDef, Undecided };
enum class Method { Plain5D, Scaled4D };

// Delta > 0 and (H > 0 or Q < 0), evaluated exactly.  Requires a != 0.
bool no_real_roots(const Quartic5& f);

// a < 0 and no real roots; a = 0 counts as not negative definite.
bool is_negative_definite(const Quartic5& f);

BoxVerdict classify_box(const DyadicBox& box);

struct FaceAccount {
    std::string name;
    Dyadic v1, v2, undecided;  // unweighted; v1 + v2 + undecided = face volume
    Rational volume;
};

struct BoundsReport {
    Method method = Method::Plain5D;
    int depth = 0;
    // Exact accumulated volumes; symmetry-weighted 4D volumes for Scaled4D.
    Dyadic v1, v2, undecided;
    Rational total;  // 32 (Plain5D) or 128 (Scaled4D, weighted)
    Rational rho_lower, rho_upper;
    std::uint64_t boxes_processed = 0;
    std::vector<FaceAccount> faces;  // per-face accounting; empty on resumed runs
};

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct checkpoint_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    int depth = 20;
    Method method = Method::Scaled4D;
    int workers = 0;  // 0: LOCSOL_WORKERS env, then hardware
    std::optional<std::string> checkpoint_out;
    std::optional<std::string> resume_from;
    std::size_t box_limit = 8'000'000;
    // Test hook, invoked for every terminally labeled box.
    std::function<void(const DyadicBox&, BoxVerdict)> label_sink;
};

BoundsReport run_bounds(const RunOptions& opt);

struct RealMcResult {
    long long soluble = 0;
    long long samples = 0;
    Rational estimate;
    double err4 = 0.0;  // four binomial standard deviations
};

// PlainBQ: P(f not negative definite) on [-1,1]^5.
// GeneralizedBQ: P(h^2+4f not negative definite) on [-1,1]^8.
RealMcResult monte_carlo_real(ModelKind model, long long n, std::uint64_t seed, int workers = 0);

}  // namespace locsol::realvol
