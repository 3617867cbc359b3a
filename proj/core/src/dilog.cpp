#include "cyclic6j/dilog.hpp"

#include <cmath>
#include <limits>

#include "cyclic6j/special.hpp"
#include "cyclic6j/weyl.hpp"

namespace cyclic6j {

namespace {
cplx ipow(cplx x, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

struct Thm410Data {
    std::array<cplx, 5> x, y;
};

Thm410Data thm410_data(const Context& ctx, cplx x0, cplx x1) {
    Thm410Data d;
    d.x[0] = x0;
    d.x[1] = x1;
    d.y[0] = r_func(ctx, x0);
    d.y[1] = r_func(ctx, x1);
    d.x[3] = x0 * x1;
    d.y[3] = r_func(ctx, d.x[3]);
    d.y[2] = d.y[1] / d.y[3];
    d.y[4] = d.y[0] * d.y[2] / d.y[1];
    d.x[2] = x1 * d.y[4];
    d.x[4] = x0 * d.y[2];
    return d;
}
}  // namespace

CyclicDilogParams make_dilog_params(const Context& ctx, cplx a, cplx b, cplx c, cplx h) {
    if (std::abs(b) < ctx.tol_abs || std::abs(c) < ctx.tol_abs) throw DomainError("dilogarithm with b or c zero");
    double scale = std::pow(std::max({std::abs(a), std::abs(b), std::abs(c)}), ctx.N);
    if (std::abs(ipow(a, ctx.N) + ipow(c, ctx.N) - ipow(b, ctx.N)) > ctx.tol_rel * scale)
        throw DomainError("dilogarithm parameters off the curve a^N + c^N = b^N");
    return {a, b, c, h};
}

namespace {

template <class M>
M dilog_poly(const Context& ctx, const CyclicDilogParams& p, const M& A, const M& I, bool check_spectrum) {
    if (check_spectrum) {
        M AN = I;
        for (int k = 0; k < ctx.N; ++k) AN = M(AN * A);
        M neg = -I;
        if (rel_residual(AN, neg) > ctx.tol_rel * static_cast<double>(A.rows()))
            throw DomainError("cyclic dilogarithm argument must satisfy A^N = -1");
    }
    M sum = I;
    M power = I;
    cplx coef = 1.0;
    for (int k = 1; k < ctx.N; ++k) {
        power = M(power * A);
        cplx d = p.c - ctx.w(-k) * p.b;
        if (std::abs(d) < ctx.tol_abs * std::max(std::abs(p.b), 1.0)) throw SingularError("cyclic dilogarithm pole");
        coef *= p.a / d;
        sum += coef * power;
    }
    return M(p.h * sum);
}

}  // namespace

Mat cyclic_dilog_op(const Context& ctx, const CyclicDilogParams& p, const Mat& A, bool check_spectrum) {
    return dilog_poly<Mat>(ctx, p, A, Mat::Identity(A.rows(), A.cols()), check_spectrum);
}

SpMat cyclic_dilog_op(const Context& ctx, const CyclicDilogParams& p, const SpMat& A, bool check_spectrum) {
    SpMat I(A.rows(), A.cols());
    I.setIdentity();
    return dilog_poly<SpMat>(ctx, p, A, I, check_spectrum);
}

AnticyclicPair make_anticyclic_pair(const Context& ctx) {
    AnticyclicPair pr{-mat_Y(ctx), -mat_Z(ctx).inverse()};
    const int n = ctx.N;
    Mat I = Mat::Identity(n, n);
    double e = std::max({rel_residual(mat_pow(pr.U, n), -I), rel_residual(mat_pow(pr.V, n), -I),
                         rel_residual(pr.U * pr.V, ctx.omega * pr.V * pr.U)});
    if (e > ctx.tol_rel) throw DomainError("anticyclic pair self-check failed");
    return pr;
}

double thm410_pole_margin(const Context& ctx, cplx x0, cplx x1) {
    Thm410Data d = thm410_data(ctx, x0, x1);
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 5; ++i)
        for (int s = 1; s < ctx.N; ++s) m = std::min(m, std::abs(d.y[i] - ctx.w(-s)));
    return m;
}

Thm410Instance solve_thm410_params(const Context& ctx, cplx x0, cplx x1) {
    Thm410Data d = thm410_data(ctx, x0, x1);
    Thm410Instance inst;
    for (int i = 0; i < 5; ++i) inst.params[i] = make_dilog_params(ctx, d.x[i], 1.0, d.y[i]);

    AnticyclicPair uv = make_anticyclic_pair(ctx);
    Mat UV = -(uv.U * uv.V);
    Mat lhs = cyclic_dilog_op(ctx, inst.params[0], uv.V) * cyclic_dilog_op(ctx, inst.params[1], uv.U);
    Mat p2 = cyclic_dilog_op(ctx, inst.params[2], uv.U);
    Mat p3 = cyclic_dilog_op(ctx, inst.params[3], UV);
    Mat p4 = cyclic_dilog_op(ctx, inst.params[4], uv.V);
    Mat rhs = p2 * p3 * p4;

    cplx ratio = lhs.determinant() / rhs.determinant();
    std::vector<cplx> roots = nth_roots(ctx, ratio);
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < ctx.N; ++k) {
        double r = rel_residual(lhs, roots[static_cast<std::size_t>(k)] * rhs);
        if (r < best) {
            best = r;
            inst.h3_root = k;
        }
    }
    inst.params[3].h = roots[static_cast<std::size_t>(inst.h3_root)];
    Mat fixed = p2 * cyclic_dilog_op(ctx, inst.params[3], UV) * p4;
    inst.residual = rel_residual(lhs, fixed);
    inst.det_ratio_error = std::abs(lhs.determinant() / fixed.determinant() - 1.0);
    return inst;
}

double thm410_relation_residual(const Context& ctx, const Thm410Instance& inst) {
    (void)ctx;
    std::array<cplx, 5> x, y;
    for (int i = 0; i < 5; ++i) {
        x[i] = inst.params[i].a / inst.params[i].b;
        y[i] = inst.params[i].c / inst.params[i].b;
    }
    return std::max({rel_residual(y[0] * y[2], y[1] * y[4]), rel_residual(y[1], y[2] * y[3]),
                     rel_residual(x[3], x[0] * x[1]), rel_residual(x[2], x[1] * y[4]),
                     rel_residual(x[4], x[0] * y[2])});
}

Mat upsilon(const Context& ctx) {
    const int N = ctx.N;
    Mat Zi = mat_Z(ctx).inverse(), Y = mat_Y(ctx);
    Mat out = Mat::Zero(N * N, N * N);
    Mat Zp = Mat::Identity(N, N);
    for (int i = 0; i < N; ++i) {
        Mat Yp = Mat::Identity(N, N);
        for (int j = 0; j < N; ++j) {
            out += ctx.w(static_cast<long long>(i) * j) * kron(Zp, Yp);
            Yp = Yp * Y;
        }
        Zp = Zp * Zi;
    }
    return out / static_cast<double>(N);
}

Mat upsilon_hat_form(const Context& ctx) {
    const int N = ctx.N;
    Mat Zi = mat_Z(ctx).inverse(), Y = mat_Y(ctx);
    std::vector<Mat> Ypow;
    Mat Yp = Mat::Identity(N, N);
    for (int k = 0; k < N; ++k) {
        Ypow.push_back(Yp);
        Yp = Yp * Y;
    }
    Mat out = Mat::Zero(N * N, N * N);
    Mat Zp = Mat::Identity(N, N);
    for (int i = 0; i < N; ++i) {
        Mat hat = Mat::Zero(N, N);
        for (int k = 0; k < N; ++k) hat += ctx.w(static_cast<long long>(i) * k) * Ypow[static_cast<std::size_t>(k)];
        out += kron(Zp, hat / static_cast<double>(N));
        Zp = Zp * Zi;
    }
    return out;
}

Mat upsilon_inverse_closed(const Context& ctx) {
    const int N = ctx.N;
    Mat out = Mat::Zero(N * N, N * N);
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j) {
            int l = ctx.mod(j + k);
            out(k * N + j, k * N + l) = omega_pow(ctx, -static_cast<long long>(k) * k, 1) * ctx.w(-static_cast<long long>(k) * j);
        }
    return out;
}

Mat leg12(const Context& ctx, const Mat& m) { return kron(m, identity(ctx.N)); }
Mat leg23(const Context& ctx, const Mat& m) { return kron(identity(ctx.N), m); }

Mat leg13(const Context& ctx, const Mat& m) {
    const int N = ctx.N;
    Mat out = Mat::Zero(N * N * N, N * N * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int x = 0; x < N; ++x)
                for (int y = 0; y < N; ++y) {
                    cplx v = m(a * N + b, x * N + y);
                    if (v == cplx(0.0)) continue;
                    for (int mid = 0; mid < N; ++mid) out((a * N + mid) * N + b, (x * N + mid) * N + y) = v;
                }
    return out;
}

}  // namespace cyclic6j
