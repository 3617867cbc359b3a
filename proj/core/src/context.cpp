#include "cyclic6j/context.hpp"

#include <cmath>
#include <numbers>

namespace cyclic6j {

Context make_context(int N, double tol_rel, double tol_abs) {
    if (N < 3 || N % 2 == 0) throw DomainError("N must be odd and at least 3, got " + std::to_string(N));
    Context c;
    c.N = N;
    c.P = (N - 1) / 2;
    c.tol_rel = tol_rel;
    c.tol_abs = tol_abs;
    c.table_.resize(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) c.table_[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / N);
    c.omega = c.table_[1];
    c.omega_half = c.table_[static_cast<std::size_t>(c.P + 1)];
    return c;
}

int omega_pow_exponent(const Context& ctx, long long num, int den_log2) {
    long long e = ctx.mod(num);
    for (int i = 0; i < den_log2; ++i) e = ctx.mod(e * (ctx.P + 1));
    return static_cast<int>(e);
}

cplx omega_pow(const Context& ctx, long long num, int den_log2) {
    return ctx.w(omega_pow_exponent(ctx, num, den_log2));
}

cplx principal_root(const Context& ctx, cplx w) {
    if (w == cplx(0.0)) throw DomainError("N-th root of zero");
    return std::polar(std::pow(std::abs(w), 1.0 / ctx.N), std::arg(w) / ctx.N);
}

std::vector<cplx> nth_roots(const Context& ctx, cplx w) {
    cplx r = principal_root(ctx, w);
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(ctx.N));
    for (int k = 0; k < ctx.N; ++k) out.push_back(r * ctx.w(k));
    return out;
}

int mod_index(const Context& ctx, long long n) { return ctx.mod(n); }

double rel_residual(const Mat& lhs, const Mat& rhs, double floor) {
    double num = (lhs - rhs).cwiseAbs().maxCoeff();
    double den = std::max(rhs.cwiseAbs().maxCoeff(), floor);
    return num / den;
}

double rel_residual(cplx lhs, cplx rhs, double floor) {
    return std::abs(lhs - rhs) / std::max(std::abs(rhs), floor);
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat identity(int n) { return Mat::Identity(n, n); }

Mat mat_pow(const Mat& m, int k) {
    if (k < 0) return mat_pow(m.inverse(), -k);
    Mat r = Mat::Identity(m.rows(), m.cols());
    Mat base = m;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

SpMat to_sparse(const Mat& m, double cutoff) {
    double ref = cutoff > 0.0 ? m.cwiseAbs().maxCoeff() : 0.0;
    return m.sparseView(cplx(ref), cutoff);
}

double rel_residual(const SpMat& lhs, const SpMat& rhs, double floor) {
    SpMat d = lhs - rhs;
    double num = 0.0, den = 0.0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SpMat::InnerIterator it(d, k); it; ++it) num = std::max(num, std::abs(it.value()));
    for (int k = 0; k < rhs.outerSize(); ++k)
        for (SpMat::InnerIterator it(rhs, k); it; ++it) den = std::max(den, std::abs(it.value()));
    return num / std::max(den, floor);
}

}  // namespace cyclic6j
