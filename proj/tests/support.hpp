#pragma once

#include <doctest.h>

#include "cyclic6j/charged.hpp"
#include "cyclic6j/sampling.hpp"

namespace testing {

using namespace cyclic6j;

inline constexpr int kOrders[] = {3, 5, 7};

inline FusedTriple admissible_triple(const Context& ctx, Rng& rng) {
    for (int it = 0; it < 20000; ++it) {
        StandardRep r = random_rep(rng), m = random_rep(rng), n = random_rep(rng);
        if (auto t = try_fuse_triple_admissible(ctx, r, m, n)) return *t;
    }
    FAIL("no admissible triple");
    return {};
}

inline PentagonAssignment pentagon_instance(const Context& ctx, Rng& rng) {
    for (int it = 0; it < 20000; ++it) {
        StandardRep r = random_rep(rng), m = random_rep(rng), n = random_rep(rng), v = random_rep(rng);
        PentagonAssignment p0;
        try {
            p0 = make_assignment(ctx, r, m, n, v, {0, 0, 0, 0, 0, 0});
        } catch (const std::exception&) {
            continue;
        }
        bool ok = true;
        for (const auto& t : p0.triples()) ok = ok && triple_well_conditioned(ctx, t.rho, t.mu, t.nu, 0.05);
        if (!ok) continue;
        if (auto pa = find_pentagon_assignment(ctx, r, m, n, v)) return *pa;
    }
    FAIL("no pentagon instance");
    return {};
}

inline double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace testing
