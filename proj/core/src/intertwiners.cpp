#include "cyclic6j/intertwiners.hpp"

#include <cmath>
#include <map>

namespace cyclic6j {

Mat swap_pairs(const Tensor4& t) {
    const int N = t.n;
    Mat M(N * N, N * N);
    for (int i0 = 0; i0 < N; ++i0)
        for (int i1 = 0; i1 < N; ++i1)
            for (int i2 = 0; i2 < N; ++i2)
                for (int i3 = 0; i3 < N; ++i3) M(i2 * N + i3, i0 * N + i1) = t(i0, i1, i2, i3);
    return M;
}

FermatTriple pair_fermat(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm) {
    return make_fermat(ctx, r.a * m.y, r.y / m.a, rm.y);
}

cplx pair_default_h(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm) {
    return h_func(ctx, rm.y / (r.a * m.y));
}

OCGFamily ocg(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm,
              std::optional<cplx> h) {
    if (!is_regular_pair(ctx, r, m)) throw DomainError("Clebsch-Gordan family of a non-regular pair");
    const int N = ctx.N;
    FermatTriple t = pair_fermat(ctx, r, m, rm);
    FermatTriple td{t.x / ctx.omega, t.y, t.z};
    OCGFamily f{r, m, rm, h ? *h : pair_default_h(ctx, r, m, rm), {}, {}};
    cplx br = bracket(ctx, t.x / t.z);
    for (int al = 0; al < N; ++al) {
        Mat K = Mat::Zero(N * N, N), Kb = Mat::Zero(N, N * N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                int k = ctx.mod(i + j);
                K(i * N + j, k) = f.h * ctx.w(static_cast<long long>(al) * j) * omega_fermat2(ctx, t, i, al);
                Kb(k, i * N + j) = br / f.h * ctx.w(-static_cast<long long>(al) * j) / omega_fermat2(ctx, td, i, al);
            }
        f.K.push_back(std::move(K));
        f.Kbar.push_back(std::move(Kb));
    }
    return f;
}

double ocg_duality_residual(const Context& ctx, const OCGFamily& f) {
    const int N = ctx.N;
    double worst = 0.0;
    Mat I = identity(N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Mat p = f.Kbar[static_cast<std::size_t>(a)] * f.K[static_cast<std::size_t>(b)];
            worst = std::max(worst, a == b ? rel_residual(p, I) : p.cwiseAbs().maxCoeff());
        }
    Mat sum = Mat::Zero(N * N, N * N);
    for (int a = 0; a < N; ++a) sum += f.K[static_cast<std::size_t>(a)] * f.Kbar[static_cast<std::size_t>(a)];
    return std::max(worst, rel_residual(sum, identity(N * N)));
}

double ocg_intertwining_residual(const Context& ctx, const OCGFamily& f) {
    Mat tE = tensor_E(ctx, f.rho, f.mu), tD = tensor_D(ctx, f.rho, f.mu);
    Mat E = rep_E(ctx, f.rho_mu), D = rep_D(ctx, f.rho_mu);
    double worst = 0.0;
    for (const Mat& K : f.K) {
        worst = std::max(worst, rel_residual(tE * K, K * E));
        worst = std::max(worst, rel_residual(tD * K, K * D));
    }
    return worst;
}

Mat pair_matrix(const Context& ctx, const OCGFamily& f) {
    const int N = ctx.N;
    Mat M(N * N, N * N);
    for (int a = 0; a < N; ++a)
        for (int ij = 0; ij < N * N; ++ij)
            for (int k = 0; k < N; ++k) M(a * N + k, ij) = f.K[static_cast<std::size_t>(a)](ij, k);
    return M;
}

Mat dilog_argument_two(const Context& ctx) {
    Mat Y = mat_Y(ctx), Zi = mat_Z(ctx).inverse();
    return -kron(Y.inverse(), Zi * Y);
}

Mat psi_pair(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm, cplx h) {
    const int N = ctx.N;
    Mat A = (r.y / (r.a * m.a * m.y)) * dilog_argument_two(ctx);
    cplx q = rm.y / (r.a * m.y);
    Mat out = Mat::Zero(N * N, N * N), power = identity(N * N);
    cplx coef = 1.0;
    for (int t = 0; t < N; ++t) {
        if (t > 0) {
            cplx d = 1.0 - ctx.w(-t) * q;
            if (std::abs(d) < ctx.tol_abs) throw SingularError("psi_pair pole");
            coef /= d;
            power = power * A;
        }
        out += coef * power;
    }
    return h * out;
}

Mat psi_pair_closed(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm, cplx h) {
    const int N = ctx.N;
    FermatTriple t = pair_fermat(ctx, r, m, rm);
    Mat out = Mat::Zero(N * N, N * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                int l = ctx.mod(i + j - k);
                out(k * N + l, i * N + j) =
                    h * ctx.w(-static_cast<long long>(k) * (i - k)) * omega_fermat(ctx, t, i - k);
            }
    return out;
}

CyclicDilogParams pair_dilog_params(const Context& ctx, const StandardRep& r, const StandardRep& m,
                                    const StandardRep& rm) {
    FermatTriple t = pair_fermat(ctx, r, m, rm);
    return make_dilog_params(ctx, t.y, t.z, t.x, h_func(ctx, t.z / t.x));
}

CyclicDilogParams sixj_dilog_params(const Context& ctx, const FusedTriple& t) {
    auto [X, Y, Z] = sixj_fermat_point(t);
    return make_dilog_params(ctx, Y, Z, X, h_func(ctx, Z / X));
}

cplx sixj_default_h(const Context& ctx, const FusedTriple& t) { return h_func(ctx, sixj_argument(t)); }

SixJTensor sixj(const Context& ctx, const FusedTriple& tr, std::optional<cplx> h) {
    const int N = ctx.N;
    auto [X, Y, Z] = sixj_fermat_point(tr);
    FermatTriple f = make_fermat(ctx, X, Y, Z);
    FermatTriple fd{X / ctx.omega, Y, Z};
    SixJTensor s{tr, h ? *h : sixj_default_h(ctx, tr), Tensor4(N), Tensor4(N)};
    cplx br = bracket(ctx, X / Z);
    for (int g = 0; g < N; ++g)
        for (int d = 0; d < N; ++d)
            for (int a = 0; a < N; ++a) {
                int b = ctx.mod(g + d);
                s.R(g, d, a, b) = s.h * ctx.w(static_cast<long long>(a) * d) * omega_fermat2(ctx, f, g, a);
                s.Rbar(a, b, g, d) = br / s.h * ctx.w(-static_cast<long long>(a) * d) / omega_fermat2(ctx, fd, g, a);
            }
    return s;
}

Mat sixj_op(const SixJTensor& s) { return swap_pairs(s.R); }
Mat sixj_inverse_op(const SixJTensor& s) { return swap_pairs(s.Rbar); }

double support_violation(const Context& ctx, const Tensor4& R, int shift) {
    const int N = ctx.N;
    double worst = 0.0;
    for (int g = 0; g < N; ++g)
        for (int d = 0; d < N; ++d)
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                    if (ctx.mod(g + d - shift - b) != 0) worst = std::max(worst, std::abs(R(g, d, a, b)));
    return worst;
}

namespace {

struct CgFamilies {
    OCGFamily k1, k2, k3, k4;  // (r,m), (rm,n), (m,n), (r,mn)
};

CgFamilies cg_families(const Context& ctx, const FusedTriple& t) {
    return {ocg(ctx, t.rho, t.mu, t.rho_mu), ocg(ctx, t.rho_mu, t.nu, t.rho_mu_nu), ocg(ctx, t.mu, t.nu, t.mu_nu),
            ocg(ctx, t.rho, t.mu_nu, t.rho_mu_nu)};
}

/// (K_a (x) 1) K_b : V_rmn -> V_r (x) V_m (x) V_n.
Mat left_chain(const Context& ctx, const CgFamilies& f, int a, int b) {
    return kron(f.k1.K[static_cast<std::size_t>(a)], identity(ctx.N)) * f.k2.K[static_cast<std::size_t>(b)];
}

/// (1 (x) K_d) K_g.
Mat right_chain(const Context& ctx, const CgFamilies& f, int g, int d) {
    return kron(identity(ctx.N), f.k3.K[static_cast<std::size_t>(d)]) * f.k4.K[static_cast<std::size_t>(g)];
}

}  // namespace

Tensor4 sixj_from_cg(const Context& ctx, const FusedTriple& t) {
    const int N = ctx.N;
    CgFamilies f = cg_families(ctx, t);
    Tensor4 T(N);
    for (int g = 0; g < N; ++g)
        for (int d = 0; d < N; ++d) {
            Mat P = f.k4.Kbar[static_cast<std::size_t>(g)] * kron(identity(N), f.k3.Kbar[static_cast<std::size_t>(d)]);
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) T(g, d, a, b) = (P * left_chain(ctx, f, a, b))(0, 0);
        }
    return T;
}

double cg_decomposition_residual(const Context& ctx, const SixJTensor& s) {
    const int N = ctx.N;
    CgFamilies f = cg_families(ctx, s.triple);
    std::vector<Mat> rc;
    for (int g = 0; g < N; ++g)
        for (int d = 0; d < N; ++d) rc.push_back(right_chain(ctx, f, g, d));
    double worst = 0.0;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            Mat lhs = left_chain(ctx, f, a, b);
            Mat rhs = Mat::Zero(lhs.rows(), lhs.cols());
            for (int g = 0; g < N; ++g)
                for (int d = 0; d < N; ++d) {
                    cplx c = s.R(g, d, a, b);
                    if (c != cplx(0.0)) rhs += c * rc[static_cast<std::size_t>(g * N + d)];
                }
            worst = std::max(worst, rel_residual(rhs, lhs));
        }
    return worst;
}

std::optional<int> normalization_phase(const Context& ctx, const FusedTriple& t) {
    const int N = ctx.N;
    CgFamilies f = cg_families(ctx, t);
    // Entry (0,0,0,0): closed form gives h, the change of basis gives a scalar.
    Vec v = f.k2.K[0].col(0);
    Vec w = kron(f.k1.K[0], identity(N)) * v;
    Vec u = kron(identity(N), f.k3.Kbar[0]) * w;
    cplx truth = (f.k4.Kbar[0].row(0) * u)(0);
    if (std::abs(truth) < ctx.tol_abs) return std::nullopt;
    cplx ratio = sixj_default_h(ctx, t) / truth;
    if (std::abs(std::abs(ratio) - 1.0) > 1e-6) return std::nullopt;
    double k = std::arg(ratio) / (2.0 * M_PI / N);
    double kr = std::round(k);
    if (std::abs(k - kr) > 1e-6) return std::nullopt;
    return ctx.mod(static_cast<long long>(kr));
}

double sixj_dilog_residual(const Context& ctx, const SixJTensor& s) {
    Mat rhs = upsilon(ctx) * cyclic_dilog_op(ctx, sixj_dilog_params(ctx, s.triple), dilog_argument_two(ctx));
    return rel_residual(sixj_op(s), rhs);
}

double factorized_dilog_residual(const Context& ctx, const FusedTriple& t) {
    // Every argument is monomial on three factors; sparse products keep N = 7 cheap.
    Mat A = dilog_argument_two(ctx);
    SpMat U = to_sparse(leg12(ctx, A)), V = to_sparse(leg23(ctx, A));
    SpMat mUV = -(U * V);
    auto pd = [&](const StandardRep& r, const StandardRep& m, const StandardRep& rm) {
        return pair_dilog_params(ctx, r, m, rm);
    };
    SpMat lhs = cyclic_dilog_op(ctx, pd(t.rho_mu, t.nu, t.rho_mu_nu), V) * cyclic_dilog_op(ctx, pd(t.rho, t.mu, t.rho_mu), U);
    SpMat rhs = cyclic_dilog_op(ctx, sixj_dilog_params(ctx, t), U) *
                cyclic_dilog_op(ctx, pd(t.rho, t.mu_nu, t.rho_mu_nu), mUV) *
                cyclic_dilog_op(ctx, pd(t.mu, t.nu, t.mu_nu), V);
    return rel_residual(lhs, rhs);
}

double upsilon_pentagon_residual(const Context& ctx) {
    Mat U = upsilon(ctx);
    // Entries of U off its monomial pattern are rounding residue of the defining sum.
    SpMat u12 = to_sparse(leg12(ctx, U), 1e-13), u13 = to_sparse(leg13(ctx, U), 1e-13),
          u23 = to_sparse(leg23(ctx, U), 1e-13);
    SpMat lhs = u12 * u13 * u23;
    SpMat rhs = u23 * u12;
    return rel_residual(lhs, rhs);
}

namespace {
FusedTriple assemble(const StandardRep& r, const StandardRep& m, const StandardRep& n, const StandardRep& rm,
                     const StandardRep& mn, const StandardRep& rmn, std::array<int, 3> br) {
    FusedTriple t;
    t.rho = r;
    t.mu = m;
    t.nu = n;
    t.rho_mu = rm;
    t.mu_nu = mn;
    t.rho_mu_nu = rmn;
    t.branches = br;
    return t;
}
}  // namespace

std::array<FusedTriple, 5> PentagonAssignment::triples() const {
    const auto& b = branches;
    return {assemble(r, m, n, rm, mn, rmn, {b[0], b[1], b[3]}), assemble(r, mn, v, rmn, mnv, rmnv, {b[3], b[4], b[5]}),
            assemble(m, n, v, mn, nv, mnv, {b[1], b[2], b[4]}), assemble(rm, n, v, rmn, nv, rmnv, {b[3], b[2], b[5]}),
            assemble(r, m, nv, rm, mnv, rmnv, {b[0], b[4], b[5]})};
}

PentagonAssignment make_assignment(const Context& ctx, const StandardRep& r, const StandardRep& m,
                                   const StandardRep& n, const StandardRep& v, const std::array<int, 6>& b) {
    PentagonAssignment pa;
    pa.r = r;
    pa.m = m;
    pa.n = n;
    pa.v = v;
    pa.rm = fuse(ctx, r, m, b[0]);
    pa.mn = fuse(ctx, m, n, b[1]);
    pa.nv = fuse(ctx, n, v, b[2]);
    pa.rmn = fuse(ctx, pa.rm, n, b[3]);
    pa.mnv = fuse(ctx, pa.mn, v, b[4]);
    pa.rmnv = fuse(ctx, pa.rmn, v, b[5]);
    pa.branches = b;
    return pa;
}

std::optional<PentagonAssignment> find_pentagon_assignment(const Context& ctx, const StandardRep& r,
                                                           const StandardRep& m, const StandardRep& n,
                                                           const StandardRep& v) {
    const int N = ctx.N;
    // Phases depend on subsets of the branches; cache per triple.
    std::array<std::map<std::array<int, 6>, std::optional<int>>, 5> cache;
    static constexpr std::array<std::array<bool, 6>, 5> uses{{{1, 1, 0, 1, 0, 0},
                                                              {0, 1, 0, 1, 1, 1},
                                                              {0, 1, 1, 0, 1, 0},
                                                              {1, 0, 1, 1, 0, 1},
                                                              {1, 0, 1, 0, 1, 1}}};
    std::array<int, 6> b{};
    long long total = 1;
    for (int i = 0; i < 6; ++i) total *= N;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (int i = 5; i >= 0; --i) {
            b[static_cast<std::size_t>(i)] = static_cast<int>(c % N);
            c /= N;
        }
        PentagonAssignment pa;
        try {
            pa = make_assignment(ctx, r, m, n, v, b);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        auto tr = pa.triples();
        std::array<int, 5> k{};
        bool ok = true;
        for (std::size_t i = 0; i < 5 && ok; ++i) {
            std::array<int, 6> key{};
            for (std::size_t j = 0; j < 6; ++j) key[j] = uses[i][j] ? b[j] : -1;
            auto it = cache[i].find(key);
            if (it == cache[i].end()) {
                std::optional<int> ph;
                try {
                    ph = normalization_phase(ctx, tr[i]);
                } catch (const std::exception&) {
                    ph = std::nullopt;
                }
                it = cache[i].emplace(key, ph).first;
            }
            if (!it->second) ok = false;
            else k[i] = *it->second;
        }
        if (ok && ctx.mod(k[0] + k[1] + k[2] - k[3] - k[4]) == 0) return pa;
    }
    return std::nullopt;
}

double pentagon_residual(const Context& ctx, const PentagonAssignment& pa) {
    auto tr = pa.triples();
    std::array<Mat, 5> op;
    for (std::size_t i = 0; i < 5; ++i) op[i] = sixj_op(sixj(ctx, tr[i]));
    SpMat lhs = to_sparse(leg12(ctx, op[0])) * to_sparse(leg13(ctx, op[1])) * to_sparse(leg23(ctx, op[2]));
    SpMat rhs = to_sparse(leg23(ctx, op[3])) * to_sparse(leg12(ctx, op[4]));
    return rel_residual(lhs, rhs);
}

}  // namespace cyclic6j
