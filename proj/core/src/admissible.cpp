#include <cmath>
#include <numbers>

#include "cyclic6j/intertwiners.hpp"
#include "cyclic6j/weyl.hpp"

namespace cyclic6j {

namespace {

bool ratio_clear(const Context& ctx, cplx q, double margin) {
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag())) return false;
    if (std::abs(q) < margin) return false;
    for (int j = 0; j < ctx.N; ++j)
        if (std::abs(q - ctx.w(j)) < margin) return false;
    return true;
}

bool pair_clear(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm, double margin) {
    return ratio_clear(ctx, rm.y / (r.a * m.y), margin);
}

}  // namespace

bool triple_well_conditioned(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& n,
                             double margin) {
    if (!is_regular_pair(ctx, r, m) || !is_regular_pair(ctx, m, n)) return false;
    FusedTriple t;
    try {
        t = make_triple(ctx, r, m, n, 0, 0, 0);
    } catch (const std::exception&) {
        return false;
    }
    return pair_clear(ctx, r, m, t.rho_mu, margin) && pair_clear(ctx, m, n, t.mu_nu, margin) &&
           pair_clear(ctx, t.rho_mu, n, t.rho_mu_nu, margin) && pair_clear(ctx, r, t.mu_nu, t.rho_mu_nu, margin) &&
           ratio_clear(ctx, sixj_argument(t), margin);
}

std::optional<FusedTriple> try_fuse_triple_admissible(const Context& ctx, const StandardRep& r, const StandardRep& m,
                                                      const StandardRep& n, const AdmissibilityOptions& opt) {
    if (!triple_well_conditioned(ctx, r, m, n, opt.margin)) return std::nullopt;
    const int N = ctx.N;
    const double sector = std::numbers::pi / N - opt.margin;
    for (int b1 = 0; b1 < N; ++b1)
        for (int b2 = 0; b2 < N; ++b2)
            for (int b3 = 0; b3 < N; ++b3) {
                try {
                    FusedTriple t = make_triple(ctx, r, m, n, b1, b2, b3);
                    if (std::abs(std::arg(sixj_argument(t))) >= sector) continue;
                    if (convention_residual(ctx, t) > ctx.tol_rel) continue;
                    auto k = normalization_phase(ctx, t);
                    if (k && *k == 0) return t;
                } catch (const std::exception&) {
                    continue;
                }
            }
    return std::nullopt;
}

FusedTriple fuse_triple_admissible(const Context& ctx, const StandardRep& r, const StandardRep& m,
                                   const StandardRep& n, const AdmissibilityOptions& opt) {
    auto t = try_fuse_triple_admissible(ctx, r, m, n, opt);
    if (!t) throw DomainError("no admissible branch combination; resample the representations");
    return *t;
}

}  // namespace cyclic6j
