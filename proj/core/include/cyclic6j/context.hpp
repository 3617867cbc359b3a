#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace cyclic6j {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using SpMat = Eigen::SparseMatrix<cplx>;

/// Raised when an input violates an algebraic precondition (wrong N, broken constraint).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when an argument sits too close to a pole, zero or branch cut.
struct SingularError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Root-of-unity context: N odd, P = (N-1)/2, omega = exp(2 pi i / N).
struct Context {
    int N = 3;
    int P = 1;
    cplx omega;
    cplx omega_half;
    double tol_rel = 1e-9;
    double tol_abs = 1e-12;

    /// omega^k for any integer k, read from a table (no accumulated rounding).
    cplx w(long long k) const { return table_[static_cast<std::size_t>(mod(k))]; }
    int mod(long long n) const {
        long long r = n % N;
        return static_cast<int>(r < 0 ? r + N : r);
    }

    std::vector<cplx> table_;
};

Context make_context(int N, double tol_rel = 1e-9, double tol_abs = 1e-12);

/// omega^(num / 2^den_log2), with 1/2 read as P+1 modulo N.
cplx omega_pow(const Context& ctx, long long num, int den_log2);

/// Exponent e in [0,N) with omega_pow(num, den) = omega^e.
int omega_pow_exponent(const Context& ctx, long long num, int den_log2);

/// Principal N-th root: argument in (-pi/N, pi/N].
cplx principal_root(const Context& ctx, cplx w);

/// [r, r w, ..., r w^(N-1)] with r the principal root.
std::vector<cplx> nth_roots(const Context& ctx, cplx w);

int mod_index(const Context& ctx, long long n);

/// max|A - B| / max(max|B|, floor).
double rel_residual(const Mat& lhs, const Mat& rhs, double floor = 1e-12);
double rel_residual(cplx lhs, cplx rhs, double floor = 1e-12);

Mat kron(const Mat& a, const Mat& b);

/// Drops entries below cutoff * max|m|.
SpMat to_sparse(const Mat& m, double cutoff = 0.0);
double rel_residual(const SpMat& lhs, const SpMat& rhs, double floor = 1e-12);
Mat identity(int n);
Mat mat_pow(const Mat& m, int k);

}  // namespace cyclic6j
