#pragma once

#include <cstdint>
#include <numbers>

#include "cyclic6j/weyl.hpp"

namespace cyclic6j {

/// SplitMix64. Streams are derived by hashing (seed, stream index), so sample i
/// sees the same numbers whatever thread runs it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    cplx polar(double rmin, double rmax, double amin = 0.0, double amax = 2.0 * std::numbers::pi) {
        double r = uniform(rmin, rmax);
        double t = uniform(amin, amax);
        return std::polar(r, t);
    }

    Rng split(std::uint64_t stream) const {
        Rng h(state_ ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
        h.next();
        return Rng(h.next());
    }

private:
    std::uint64_t state_;
};

/// |a|, |y| uniform in [0.5, 2], phases uniform.
inline StandardRep random_rep(Rng& rng) { return {rng.polar(0.5, 2.0), rng.polar(0.5, 2.0)}; }

}  // namespace cyclic6j
