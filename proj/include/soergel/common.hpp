#ifndef SOERGEL_COMMON_HPP
#define SOERGEL_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace soergel {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// All contract violations (bad configs, mismatched rings, zero divisors)
// surface as SoergelError; the CLI maps them to exit code 2.
struct SoergelError : std::runtime_error {
    explicit SoergelError(const std::string& what) : std::runtime_error(what) {}
};

// Internal arithmetic invariants that indicate a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Fixed PRNG for all seeded sweeps (splitmix64). The algorithm is part of
// the CLI contract: reports must be replayable from the 64-bit seed alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0. Modulo bias is irrelevant for test-data
    // generation but the reduction must stay platform-independent.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace soergel

#endif
