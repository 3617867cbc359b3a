#include "cyclic6j/charged.hpp"

#include <cmath>
#include <numbers>

namespace cyclic6j {

namespace {

cplx ipow(cplx x, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

double tensor_residual(const Tensor4& lhs, const Tensor4& rhs) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < lhs.v.size(); ++i) {
        num = std::max(num, std::abs(lhs.v[i] - rhs.v[i]));
        den = std::max(den, std::abs(rhs.v[i]));
    }
    return num / std::max(den, 1e-12);
}

}  // namespace

Mat s_matrix(const Context& ctx) {
    const int N = ctx.N;
    Mat S(N, N);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) S(m, n) = ctx.w(static_cast<long long>(m) * n) / std::sqrt(static_cast<double>(N));
    return S;
}

Mat s_inverse(const Context& ctx) { return s_matrix(ctx).conjugate(); }

Mat t_matrix(const Context& ctx, cplx zeta) {
    const int N = ctx.N;
    Mat T = Mat::Zero(N, N);
    for (int m = 0; m < N; ++m) T(m, ctx.mod(-m)) = omega_pow(ctx, static_cast<long long>(m) * m, 1) / zeta;
    return T;
}

Mat t_inverse(const Context& ctx, cplx zeta) {
    const int N = ctx.N;
    Mat T = Mat::Zero(N, N);
    for (int m = 0; m < N; ++m) T(m, ctx.mod(-m)) = zeta * omega_pow(ctx, -static_cast<long long>(m) * m, 1);
    return T;
}

std::pair<cplx, double> st_projective_phase(const Context& ctx, cplx zeta) {
    Mat S = s_matrix(ctx), T = t_matrix(ctx, zeta);
    Mat lhs = S * S, st = S * T, rhs = st * st * st;
    Eigen::Index i, j;
    rhs.cwiseAbs().maxCoeff(&i, &j);
    cplx zp = lhs(i, j) / rhs(i, j);
    return {zp, rel_residual(lhs, zp * rhs)};
}

ChargedSixJTensor c_sixj(const Context& ctx, const SixJTensor& base, ChargePair ch) {
    const int N = ctx.N;
    const int a = ctx.mod(ch.a), c = ctx.mod(ch.c);
    ChargedSixJTensor out{base, {a, c}, ipow(base.triple.rho_mu.y * base.triple.mu_nu.y, ctx.P), Tensor4(N), Tensor4(N)};
    const cplx minus = omega_pow(ctx, -static_cast<long long>(a) * c, 1);
    const cplx plus = omega_pow(ctx, static_cast<long long>(a) * c, 1);
    for (int g = 0; g < N; ++g)
        for (int d = 0; d < N; ++d)
            for (int al = 0; al < N; ++al)
                for (int be = 0; be < N; ++be) {
                    cplx ph = out.prefactor * ctx.w(static_cast<long long>(c) * (g - al));
                    out.R(g, d, al, be) = ph * minus * base.R(g - a, d, al, be - a);
                    out.Rbar(al, be, g, d) = ph * plus * base.Rbar(al, be + a, g + a, d);
                }
    return out;
}

Mat charged_op_from_base(const Context& ctx, const SixJTensor& base, ChargePair ch) {
    const int N = ctx.N;
    Mat I = identity(N);
    Mat Y1 = kron(mat_Y(ctx), I), Z1 = kron(mat_Z(ctx), I), Z2 = kron(I, mat_Z(ctx));
    cplx pre = ipow(base.triple.rho_mu.y * base.triple.mu_nu.y, ctx.P);
    return pre * omega_pow(ctx, static_cast<long long>(ch.a) * ch.c, 1) * mat_pow(Y1, -ch.a) * mat_pow(Z1, -ch.c) *
           sixj_op(base) * mat_pow(Z1, ch.c) * mat_pow(Z2, -ch.a);
}

double lemma68_residual(const Context& ctx, const SixJTensor& base, ChargePair ch) {
    return rel_residual(swap_pairs(c_sixj(ctx, base, ch).R), charged_op_from_base(ctx, base, ch));
}

std::array<double, 3> commutation_residuals(const Context& ctx, const SixJTensor& base) {
    const int N = ctx.N;
    Mat I = identity(N), Y = mat_Y(ctx), Z = mat_Z(ctx);
    Mat Z1 = kron(Z, I), Z2 = kron(I, Z), Y1 = kron(Y, I), Y2 = kron(I, Y);
    Mat R = sixj_op(base);
    return {rel_residual(R * Z1 * Y2, Z1 * Y2 * R), rel_residual(R * Y1, Y1 * Y2 * R), rel_residual(R * Z1 * Z2, Z2 * R)};
}

double orthogonality_residual(const Context& ctx, const FusedTriple& t, ChargePair ch) {
    SixJTensor base = sixj(ctx, t);
    ChargedSixJTensor p = c_sixj(ctx, base, ch);
    ChargedSixJTensor m = c_sixj(ctx, base, {-ch.a, -ch.c});
    Mat prod = swap_pairs(p.R) * swap_pairs(m.Rbar);
    return rel_residual(prod, p.prefactor * p.prefactor * identity(ctx.N * ctx.N));
}

FusedTriple conjugate_triple(const FusedTriple& t) {
    FusedTriple c = t;
    for (StandardRep* r : {&c.rho, &c.mu, &c.nu, &c.rho_mu, &c.mu_nu, &c.rho_mu_nu}) *r = conjugate_rep(*r);
    return c;
}

double conjugation_residual(const Context& ctx, const FusedTriple& t, ChargePair ch) {
    const int N = ctx.N;
    ChargedSixJTensor orig = c_sixj(ctx, sixj(ctx, t), ch);
    ChargedSixJTensor conj = c_sixj(ctx, sixj(ctx, conjugate_triple(t)), ch);
    Tensor4 expect(N);
    for (int al = 0; al < N; ++al)
        for (int be = 0; be < N; ++be)
            for (int g = 0; g < N; ++g)
                for (int d = 0; d < N; ++d) expect(al, be, g, d) = std::conj(orig.R(-g, -d, -al, -be));
    return tensor_residual(conj.Rbar, expect);
}

double extended_pentagon_residual(const Context& ctx, const PentagonAssignment& pa, const std::array<int, 5>& q) {
    const auto [i, j, k, l, m] = q;
    const std::array<ChargePair, 5> ch{{{i, m - k}, {j, l + m}, {k, l - i}, {j + k, l}, {i + j, m}}};
    auto tr = pa.triples();
    std::array<Mat, 5> op;
    for (std::size_t s = 0; s < 5; ++s) op[s] = swap_pairs(c_sixj(ctx, sixj(ctx, tr[s]), ch[s]).R);
    SpMat lhs = to_sparse(leg12(ctx, op[0])) * to_sparse(leg13(ctx, op[1])) * to_sparse(leg23(ctx, op[2]));
    SpMat rhs = ipow(pa.mn.y, 2 * ctx.P) * (to_sparse(leg23(ctx, op[3])) * to_sparse(leg12(ctx, op[4])));
    return rel_residual(lhs, rhs);
}

std::array<FusedTriple, 3> symmetry_triples(const FusedTriple& t) {
    auto mk = [](StandardRep r, StandardRep m, StandardRep n, StandardRep rm, StandardRep mn, StandardRep rmn) {
        FusedTriple f;
        f.rho = r;
        f.mu = m;
        f.nu = n;
        f.rho_mu = rm;
        f.mu_nu = mn;
        f.rho_mu_nu = rmn;
        f.branches = {-1, -1, -1};
        return f;
    };
    return {mk(inverse_rep(t.rho), t.rho_mu, t.nu, t.mu, t.rho_mu_nu, t.mu_nu),
            mk(t.rho_mu, inverse_rep(t.mu), t.mu_nu, t.rho, t.nu, t.rho_mu_nu),
            mk(t.rho, t.mu_nu, inverse_rep(t.nu), t.rho_mu_nu, t.mu, t.rho_mu)};
}

cplx zeta_candidate(const Context& ctx, int eighths) {
    cplx g1 = g_func(ctx, 1.0);
    double sign = (ctx.P % 2 == 0) ? 1.0 : -1.0;
    return omega_pow(ctx, eighths, 3) * sign * std::abs(g1) / g1;
}

namespace {

struct SymmetrySides {
    std::array<Tensor4, 3> lhs, rhs;
};

SymmetrySides symmetry_sides(const Context& ctx, const FusedTriple& t, ChargePair ch, cplx zeta) {
    const int N = ctx.N;
    const int a = ctx.mod(ch.a), c = ctx.mod(ch.c), b = ch.b(ctx);
    ChargedSixJTensor Rc = c_sixj(ctx, sixj(ctx, t), {a, c});
    auto st = symmetry_triples(t);
    ChargedSixJTensor B1 = c_sixj(ctx, sixj(ctx, st[0]), {a, b});
    ChargedSixJTensor B2 = c_sixj(ctx, sixj(ctx, st[1]), {b, c});
    ChargedSixJTensor B3 = c_sixj(ctx, sixj(ctx, st[2]), {a, b});
    Mat T = t_matrix(ctx, zeta), Ti = t_inverse(ctx, zeta), S = s_matrix(ctx), Si = s_inverse(ctx);
    const cplx pa = omega_pow(ctx, a, 2), pc = omega_pow(ctx, -c, 2);

    SymmetrySides s{{Tensor4(N), Tensor4(N), Tensor4(N)}, {Tensor4(N), Tensor4(N), Tensor4(N)}};
    for (int g = 0; g < N; ++g)
        for (int d = 0; d < N; ++d)
            for (int al = 0; al < N; ++al)
                for (int be = 0; be < N; ++be) {
                    cplx l1 = 0.0, l2 = 0.0, l3 = 0.0;
                    for (int p = 0; p < N; ++p)
                        for (int q = 0; q < N; ++q) {
                            l1 += Rc.R(q, d, p, be) * T(g, q) * Ti(al, p);
                            l2 += Rc.R(g, q, p, be) * T(d, q) * Si(al, p);
                            l3 += Rc.R(g, q, al, p) * S(d, q) * Si(be, p);
                        }
                    s.lhs[0](g, d, al, be) = l1;
                    s.lhs[1](g, d, al, be) = l2;
                    s.lhs[2](g, d, al, be) = l3;
                    s.rhs[0](g, d, al, be) = pa * B1.Rbar(al, d, g, be);
                    s.rhs[1](g, d, al, be) = pc * B2.Rbar(al, g, be, d);
                    s.rhs[2](g, d, al, be) = pa * B3.Rbar(g, be, al, d);
                }
    return s;
}

}  // namespace

SymmetryReport verify_symmetries(const Context& ctx, const FusedTriple& t, ChargePair ch, double tol) {
    SymmetryReport rep;
    const std::array<int, 2> cands{9, 3};
    for (std::size_t k = 0; k < 2; ++k) {
        SymmetrySides s = symmetry_sides(ctx, t, ch, zeta_candidate(ctx, cands[k]));
        for (std::size_t r = 0; r < 3; ++r) rep.residual[r][k] = tensor_residual(s.lhs[r], s.rhs[r]);
    }
    // With zeta = 1 the second left side equals zeta * (right side).
    SymmetrySides s1 = symmetry_sides(ctx, t, ch, 1.0);
    cplx num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < s1.rhs[1].v.size(); ++i) {
        num += std::conj(s1.rhs[1].v[i]) * s1.lhs[1].v[i];
        den += std::norm(s1.rhs[1].v[i]);
    }
    rep.fitted_zeta = num / den;
    Tensor4 scaled = s1.rhs[1];
    for (auto& x : scaled.v) x *= rep.fitted_zeta;
    rep.fitted_residual = tensor_residual(s1.lhs[1], scaled);

    cplx unit = rep.fitted_zeta / zeta_candidate(ctx, 0);
    double e = std::arg(unit) / (2.0 * std::numbers::pi / ctx.N);
    rep.fitted_exponent = ctx.mod(std::llround(e));
    rep.fitted_eighths = ctx.mod(8LL * rep.fitted_exponent);

    bool ok9 = std::max({rep.residual[0][0], rep.residual[1][0], rep.residual[2][0]}) < tol;
    bool ok3 = std::max({rep.residual[0][1], rep.residual[1][1], rep.residual[2][1]}) < tol;
    rep.winner = ok9 && ok3 ? "both" : ok9 ? "9/8" : ok3 ? "3/8" : "none";
    return rep;
}

}  // namespace cyclic6j
