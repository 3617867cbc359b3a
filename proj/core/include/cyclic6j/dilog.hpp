#pragma once

#include <array>

#include "cyclic6j/context.hpp"

namespace cyclic6j {

/// Parameters of the cyclic dilogarithm; curve a^N + c^N = b^N.
struct CyclicDilogParams {
    cplx a, b, c;
    cplx h{1.0};
};

CyclicDilogParams make_dilog_params(const Context& ctx, cplx a, cplx b, cplx c, cplx h = 1.0);

/// h sum_n A^n prod_{s=1}^n a / (c - w^{-s} b). A^N = -1 is checked unless disabled.
Mat cyclic_dilog_op(const Context& ctx, const CyclicDilogParams& p, const Mat& A, bool check_spectrum = true);
/// Same polynomial for a sparse argument (monomial matrices on several factors).
SpMat cyclic_dilog_op(const Context& ctx, const CyclicDilogParams& p, const SpMat& A, bool check_spectrum = true);

struct AnticyclicPair {
    Mat U, V;
};

/// U = -Y, V = -Z^{-1}.
AnticyclicPair make_anticyclic_pair(const Context& ctx);

struct Thm410Instance {
    std::array<CyclicDilogParams, 5> params;
    double residual = 0.0;
    double det_ratio_error = 0.0;
    int h3_root = 0;
};

/// Builds the five parameter sets from (x0, x1) and fixes h3 by the determinant condition.
Thm410Instance solve_thm410_params(const Context& ctx, cplx x0, cplx x1);

/// Relative residuals of the parameter relations (should vanish by construction).
double thm410_relation_residual(const Context& ctx, const Thm410Instance& inst);

/// Smallest distance |c - w^{-s} b| / |b| over the five sets (pole margin).
double thm410_pole_margin(const Context& ctx, cplx x0, cplx x1);

/// (1/N) sum_{i,j} w^{ij} Z_1^{-i} Y_2^j.
Mat upsilon(const Context& ctx);
/// sum_i Z_1^{-i} Yhat_2^i with Yhat^i = (1/N) sum_k w^{ik} Y^k.
Mat upsilon_hat_form(const Context& ctx);
/// Closed form of the inverse: entries w^{-k^2/2 - kj} delta(i-k) delta(j+k-l).
Mat upsilon_inverse_closed(const Context& ctx);

/// Embeddings of an N^2 x N^2 operator on factors (1,2), (1,3), (2,3) of an N^3 space.
Mat leg12(const Context& ctx, const Mat& m);
Mat leg13(const Context& ctx, const Mat& m);
Mat leg23(const Context& ctx, const Mat& m);

}  // namespace cyclic6j
