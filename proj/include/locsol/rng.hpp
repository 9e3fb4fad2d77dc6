#pragma once

#include <cstdint>

#include "locsol/rational.hpp"

namespace locsol {

// Counter-based generator: word(i) is a pure function of (key, i), so sample
// streams can be partitioned across workers with schedule-independent output.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Word at (sample, slot, attempt); each coordinate gets its own stream.
    std::uint64_t word(std::uint64_t sample, std::uint64_t slot, std::uint64_t attempt = 0) const {
        return mix(mix(mix(key_ + sample) + slot) + attempt);
    }

    // Uniform integer in [0, bound), unbiased via rejection.  bound >= 1.
    Integer uniform(std::uint64_t sample, std::uint64_t slot, const Integer& bound) const;

    // Uniform dyadic mantissa/2^52 in [-1, 1).
    double unit_double(std::uint64_t sample, std::uint64_t slot) const {
        std::uint64_t w = word(sample, slot) >> 11;  // 53 bits
        return static_cast<double>(static_cast<std::int64_t>(w) - (1ll << 52)) / static_cast<double>(1ll << 52);
    }

    // Signed mantissa in [-2^52, 2^52); value = mantissa / 2^52 in [-1, 1).
    std::int64_t unit_mantissa(std::uint64_t sample, std::uint64_t slot) const {
        return static_cast<std::int64_t>(word(sample, slot) >> 11) - (1ll << 52);
    }

  private:
    std::uint64_t key_;
};

inline Integer CounterRng::uniform(std::uint64_t sample, std::uint64_t slot, const Integer& bound) const {
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t words = bits / 64 + 1;  // extra headroom keeps the reject rate ~2^-64
    Integer range;
    mpz_ui_pow_ui(range.get_mpz_t(), 2, 64 * words);
    Integer accept = (range / bound) * bound;
    for (std::uint64_t attempt = 0;; ++attempt) {
        Integer r(0);
        for (size_t w = 0; w < words; ++w) {
            mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
            r += Integer(static_cast<unsigned long>(word(sample, slot, attempt * words + w)));
        }
        if (r < accept) return r % bound;
    }
}

}  // namespace locsol
