#include "cyclic6j/weyl.hpp"

#include <cmath>

#include "cyclic6j/special.hpp"

namespace cyclic6j {

namespace {
cplx ipow(cplx x, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}
}  // namespace

BorelElement borel_mul(const BorelElement& l, const BorelElement& r) {
    // [[t1, x1], [0, 1/t1]] [[t2, x2], [0, 1/t2]]
    return {l.t * r.t, l.t * r.x + l.x / r.t};
}

BorelElement borel_inv(const BorelElement& b) { return {1.0 / b.t, -b.x}; }

Mat mat_X(const Context& ctx) {
    Mat X = Mat::Zero(ctx.N, ctx.N);
    for (int j = 0; j < ctx.N; ++j) X(ctx.mod(j + 1), j) = 1.0;
    return X;
}

Mat mat_Z(const Context& ctx) {
    Mat Z = Mat::Zero(ctx.N, ctx.N);
    for (int i = 0; i < ctx.N; ++i) Z(i, i) = ctx.w(i);
    return Z;
}

Mat mat_Y(const Context& ctx) {
    Mat Y = Mat::Zero(ctx.N, ctx.N);
    for (int j = 0; j < ctx.N; ++j) Y(ctx.mod(j + 1), j) = ctx.w(ctx.P + 1 + j);
    return Y;
}

Mat rep_E(const Context& ctx, const StandardRep& r) { return r.a * r.a * mat_Z(ctx); }
Mat rep_D(const Context& ctx, const StandardRep& r) { return r.a * r.y * mat_X(ctx); }

Mat tensor_E(const Context& ctx, const StandardRep& r, const StandardRep& m) {
    return kron(rep_E(ctx, r), rep_E(ctx, m));
}

Mat tensor_D(const Context& ctx, const StandardRep& r, const StandardRep& m) {
    return kron(rep_E(ctx, r), rep_D(ctx, m)) + kron(rep_D(ctx, r), identity(ctx.N));
}

cplx fusion_power(const Context& ctx, const StandardRep& r, const StandardRep& m) {
    return ipow(r.a, ctx.N) * ipow(m.y, ctx.N) + ipow(r.y, ctx.N) / ipow(m.a, ctx.N);
}

bool is_regular_pair(const Context& ctx, const StandardRep& r, const StandardRep& m) {
    cplx s = fusion_power(ctx, r, m);
    double scale = std::max(std::abs(ipow(r.a * m.y, ctx.N)), std::abs(ipow(r.y / m.a, ctx.N)));
    return std::abs(s) >= ctx.tol_abs * std::max(scale, 1.0);
}

StandardRep fuse(const Context& ctx, const StandardRep& r, const StandardRep& m, int branch) {
    if (!is_regular_pair(ctx, r, m)) throw DomainError("fusion of a non-regular pair");
    return {r.a * m.a, principal_root(ctx, fusion_power(ctx, r, m)) * ctx.w(branch)};
}

StandardRep inverse_rep(const StandardRep& r) { return {1.0 / r.a, -r.y}; }
StandardRep conjugate_rep(const StandardRep& r) { return {std::conj(r.a), std::conj(r.y)}; }

BorelElement psi_param(const Context& ctx, const StandardRep& r) { return {ipow(r.a, ctx.N), ipow(r.y, ctx.N)}; }

NormalRep normal_rep(const Context& ctx, const StandardRep& r) {
    Mat Z = mat_Z(ctx), Y = mat_Y(ctx), X = mat_X(ctx);
    cplx a2i = 1.0 / (r.a * r.a);
    return {a2i * Z.inverse(), -(r.y / r.a) * Y.inverse(), a2i * Y,
            omega_pow(ctx, -1, 1) / (r.a * r.y) * X};
}

std::array<double, 6> heisenberg_residuals(const Context& ctx, const NormalRep& n) {
    cplx q = ctx.w(-1);
    return {rel_residual(n.D * n.Dbar - n.Dbar * n.D, (1.0 - q) * n.E),
            rel_residual(n.D * n.E, q * n.E * n.D),
            rel_residual(n.Dbar * n.Ebar, q * n.Ebar * n.Dbar),
            rel_residual(n.E * n.Ebar, q * n.Ebar * n.E),
            rel_residual(n.E * n.Dbar, q * n.Dbar * n.E),
            rel_residual(n.D * n.Ebar, n.Ebar * n.D)};
}

FusedTriple make_triple(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& n,
                        int b1, int b2, int b3) {
    FusedTriple t;
    t.rho = r;
    t.mu = m;
    t.nu = n;
    t.rho_mu = fuse(ctx, r, m, b1);
    t.mu_nu = fuse(ctx, m, n, b2);
    t.rho_mu_nu = fuse(ctx, t.rho_mu, n, b3);
    t.branches = {ctx.mod(b1), ctx.mod(b2), ctx.mod(b3)};
    return t;
}

std::array<cplx, 3> sixj_fermat_point(const FusedTriple& t) {
    return {t.rho_mu_nu.y * t.mu.y, t.rho.y * t.nu.y, t.rho_mu.y * t.mu_nu.y};
}

cplx sixj_argument(const FusedTriple& t) { return t.rho_mu.y * t.mu_nu.y / (t.rho_mu_nu.y * t.mu.y); }

double convention_residual(const Context& ctx, const FusedTriple& t) {
    cplx lhs = -t.rho.y * t.nu.y / (t.rho_mu_nu.y * t.mu.y);
    return rel_residual(lhs, r_func(ctx, sixj_argument(t)));
}

}  // namespace cyclic6j
