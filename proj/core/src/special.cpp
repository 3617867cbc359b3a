#include "cyclic6j/special.hpp"

#include <algorithm>
#include <cmath>

namespace cyclic6j {

namespace {

cplx ipow(cplx x, int n) {
    cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

cplx principal_power(cplx base, double e) {
    if (base == cplx(0.0)) throw SingularError("fractional power of zero");
    return std::exp(e * std::log(base));
}

}  // namespace

FermatTriple make_fermat(const Context& ctx, cplx x, cplx y, cplx z) {
    if (std::abs(y) < ctx.tol_abs || std::abs(z) < ctx.tol_abs) throw DomainError("Fermat triple with y or z zero");
    double scale = std::pow(std::max({std::abs(x), std::abs(y), std::abs(z)}), ctx.N);
    cplx defect = ipow(x, ctx.N) + ipow(y, ctx.N) - ipow(z, ctx.N);
    if (std::abs(defect) > ctx.tol_rel * scale) throw DomainError("x^N + y^N != z^N");
    return {x, y, z};
}

cplx omega_fermat(const Context& ctx, const FermatTriple& t, long long n) {
    int m = ctx.mod(n);
    cplx r = 1.0;
    for (int j = 1; j <= m; ++j) {
        cplx d = t.z - t.x * ctx.w(j);
        if (std::abs(d) < ctx.tol_abs) throw SingularError("omega_fermat pole");
        r *= t.y / d;
    }
    return r;
}

cplx omega_fermat2(const Context& ctx, const FermatTriple& t, long long m, long long n) {
    return omega_fermat(ctx, t, m - n) * omega_pow(ctx, n * n, 1);
}

cplx omega_simple(const Context& ctx, cplx x, int n) {
    if (n < 0 || n >= ctx.N) throw DomainError("omega_simple index outside [0, N)");
    cplx r = 1.0;
    for (int j = 1; j <= n; ++j) {
        cplx d = 1.0 - x * ctx.w(j);
        if (std::abs(d) < ctx.tol_abs) throw SingularError("omega_simple pole");
        r /= d;
    }
    return r;
}

cplx f_func(const Context& ctx, cplx x, cplx y, cplx z) {
    cplx lhs = ipow(z, ctx.N) * (1.0 - ipow(y, ctx.N));
    cplx rhs = 1.0 - ipow(x, ctx.N);
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
    if (std::abs(lhs - rhs) > ctx.tol_rel * scale) throw DomainError("f: z^N (1 - y^N) != 1 - x^N");
    cplx s = 0.0, zs = 1.0;
    for (int k = 0; k < ctx.N; ++k) {
        s += omega_simple(ctx, x, k) / omega_simple(ctx, y, k) * zs;
        zs *= z;
    }
    return s;
}

cplx bracket(const Context& ctx, cplx x) {
    if (std::abs(x - 1.0) < ctx.tol_abs) throw SingularError("bracket at x = 1");
    return (1.0 - ipow(x, ctx.N)) / (static_cast<double>(ctx.N) * (1.0 - x));
}

int kron_delta_N(const Context& ctx, long long n) { return ctx.mod(n) == 0 ? 1 : 0; }

cplx r_func(const Context& ctx, cplx x) {
    cplx u = 1.0 - ipow(x, ctx.N);
    if (std::abs(u) < ctx.tol_abs) throw SingularError("r: x^N = 1");
    return principal_power(u, 1.0 / ctx.N);
}

cplx g_func(const Context& ctx, cplx x) {
    cplx acc = 0.0;
    for (int j = 1; j < ctx.N; ++j) {
        cplx u = 1.0 - x * ctx.w(j);
        if (std::abs(u) < ctx.tol_abs) throw SingularError("g: vanishing factor");
        acc += (static_cast<double>(j) / ctx.N) * std::log(u);
    }
    return std::exp(acc);
}

cplx h_func(const Context& ctx, cplx x) {
    if (std::abs(x) < ctx.tol_abs) throw SingularError("h at x = 0");
    return ipow(1.0 / x, ctx.P) * g_func(ctx, x) / g_func(ctx, 1.0);
}

cplx phi_func(const Context& ctx, cplx x, cplx zeta) {
    if (std::abs(x) >= 1.0) throw DomainError("Phi evaluated outside the unit disk");
    const int N = ctx.N;
    cplx acc = (static_cast<double>(N - 1) / (2.0 * N)) * std::log(1.0 - ipow(x, N));
    cplx zk = 1.0;
    for (int k = 1; k < N; ++k) {
        zk *= zeta;
        acc -= (static_cast<double>(k) / N) * std::log(1.0 - zk * x);
    }
    return std::exp(acc);
}

cplx q_pochhammer(cplx x, cplx q, int max_terms, double tol) {
    if (std::abs(q) >= 1.0) throw DomainError("q-Pochhammer needs |q| < 1");
    cplx prod = 1.0, qn = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        cplx t = x * qn;
        if (std::abs(t) < tol) break;
        prod *= 1.0 - t;
        qn *= q;
    }
    return prod;
}

cplx log_pochhammer_series(cplx x, cplx q, double tol, int max_terms) {
    if (std::abs(q) >= 1.0 || std::abs(x) >= 1.0) throw DomainError("log series needs |x|, |q| < 1");
    cplx s = 0.0, xn = 1.0, qn = 1.0;
    for (int n = 1; n <= max_terms; ++n) {
        xn *= x;
        qn *= q;
        cplx t = xn / (static_cast<double>(n) * (1.0 - qn));
        s -= t;
        if (std::abs(t) < tol) break;
    }
    return s;
}

cplx euler_dilog(cplx x, double tol) {
    if (std::abs(x) >= 1.0) throw DomainError("dilogarithm series needs |x| < 1");
    cplx s = 0.0, xn = 1.0;
    for (int n = 1; n < 10000000; ++n) {
        xn *= x;
        cplx t = xn / (static_cast<double>(n) * n);
        s += t;
        if (std::abs(t) < tol) break;
    }
    return s;
}

cplx s_classical(cplx x, cplx eps) {
    if (eps.real() <= 0.0) throw DomainError("S needs Re(eps) > 0");
    return std::sqrt(1.0 - x) * std::exp(-euler_dilog(x) / eps);
}

cplx asymptotic_ratio(const Context& ctx, cplx x, cplx eps, cplx zeta) {
    const int N = ctx.N;
    cplx q = std::exp(-eps / static_cast<double>(N * N)) * zeta;
    cplx xN = ipow(x, N);
    cplx pre = std::exp((static_cast<double>(1 - N) / (2.0 * N)) * std::log(1.0 - xN));
    return q_pochhammer(x, q) / (pre * s_classical(xN, eps) * phi_func(ctx, x, zeta));
}

}  // namespace cyclic6j
