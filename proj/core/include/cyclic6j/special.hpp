#pragma once

#include "cyclic6j/context.hpp"

namespace cyclic6j {

/// Point of the Fermat curve x^N + y^N = z^N.
struct FermatTriple {
    cplx x, y, z;
};

/// Validates the curve equation (relative to the largest magnitude) and y, z != 0.
FermatTriple make_fermat(const Context& ctx, cplx x, cplx y, cplx z);

/// prod_{j=1}^{n mod N} y / (z - x w^j).
cplx omega_fermat(const Context& ctx, const FermatTriple& t, long long n);

/// omega_fermat(m - n) * w^{n^2/2}.
cplx omega_fermat2(const Context& ctx, const FermatTriple& t, long long m, long long n);

/// prod_{j=1}^{n} 1 / (1 - x w^j), n in [0, N). Not periodic.
cplx omega_simple(const Context& ctx, cplx x, int n);

/// sum_s omega_simple(x,s)/omega_simple(y,s) z^s under z^N (1 - y^N) = 1 - x^N.
cplx f_func(const Context& ctx, cplx x, cplx y, cplx z);

/// (1 - x^N) / (N (1 - x)).
cplx bracket(const Context& ctx, cplx x);

int kron_delta_N(const Context& ctx, long long n);

cplx r_func(const Context& ctx, cplx x);
cplx g_func(const Context& ctx, cplx x);
cplx h_func(const Context& ctx, cplx x);

/// (1 - x^N)^{(N-1)/2N} prod_k (1 - zeta^k x)^{-k/N}, |x| < 1.
cplx phi_func(const Context& ctx, cplx x, cplx zeta);

/// Truncated prod_{n>=0} (1 - x q^n).
cplx q_pochhammer(cplx x, cplx q, int max_terms = 1000000, double tol = 1e-17);

/// -sum_{n>=1} x^n / (n (1 - q^n)), the logarithm of the Pochhammer symbol.
cplx log_pochhammer_series(cplx x, cplx q, double tol = 1e-17, int max_terms = 1000000);

cplx euler_dilog(cplx x, double tol = 1e-17);

/// (1 - x)^{1/2} exp(-Li2(x) / eps).
cplx s_classical(cplx x, cplx eps);

/// (x; q)_inf / [(1 - x^N)^{(1-N)/2N} S(x^N) Phi(x)] with q = exp(-eps/N^2) zeta.
cplx asymptotic_ratio(const Context& ctx, cplx x, cplx eps, cplx zeta);

}  // namespace cyclic6j
