#pragma once

#include <array>
#include <string>

#include "cyclic6j/intertwiners.hpp"

namespace cyclic6j {

/// Charges (a, c) in Z_N with b = P + 1 - a - c.
struct ChargePair {
    int a = 0;
    int c = 0;
    int b(const Context& ctx) const { return ctx.mod(ctx.P + 1 - a - c); }
};

Mat s_matrix(const Context& ctx);
Mat s_inverse(const Context& ctx);
Mat t_matrix(const Context& ctx, cplx zeta);
Mat t_inverse(const Context& ctx, cplx zeta);

/// zeta' with S^2 = zeta' (S T)^3, and the residual of that fit.
std::pair<cplx, double> st_projective_phase(const Context& ctx, cplx zeta);

struct ChargedSixJTensor {
    SixJTensor base;
    ChargePair charges;
    cplx prefactor;  // (y_rm y_mn)^P
    Tensor4 R;       // [gamma][delta][alpha][beta]
    Tensor4 Rbar;    // [alpha][beta][gamma][delta]
};

ChargedSixJTensor c_sixj(const Context& ctx, const SixJTensor& base, ChargePair ch);

/// pre w^{ac/2} Y1^{-a} Z1^{-c} op(R) Z1^{c} Z2^{-a}.
Mat charged_op_from_base(const Context& ctx, const SixJTensor& base, ChargePair ch);
double lemma68_residual(const Context& ctx, const SixJTensor& base, ChargePair ch);

/// R Z1 Y2 = Z1 Y2 R, R Y1 = Y1 Y2 R, R Z1 Z2 = Z2 R.
std::array<double, 3> commutation_residuals(const Context& ctx, const SixJTensor& base);

double orthogonality_residual(const Context& ctx, const FusedTriple& t, ChargePair ch);

FusedTriple conjugate_triple(const FusedTriple& t);
double conjugation_residual(const Context& ctx, const FusedTriple& t, ChargePair ch);

/// Charges (i, j, k, l, m) placed as in the extended pentagon.
double extended_pentagon_residual(const Context& ctx, const PentagonAssignment& pa, const std::array<int, 5>& q);

/// Triples obtained by the three vertex transpositions.
std::array<FusedTriple, 3> symmetry_triples(const FusedTriple& t);

/// w^{num/8} (-1)^P |g(1)| / g(1).
cplx zeta_candidate(const Context& ctx, int eighths);

struct SymmetryReport {
    /// residual[r][k]: relation r with candidate k (k = 0 -> 9/8, k = 1 -> 3/8).
    std::array<std::array<double, 2>, 3> residual{};
    cplx fitted_zeta;
    double fitted_residual = 0.0;
    /// fitted_zeta / ((-1)^P |g(1)|/g(1)) = w^{e}; e and e/8 reduced.
    int fitted_exponent = 0;
    int fitted_eighths = 0;
    std::string winner;  // "9/8", "3/8", "both" or "none"
};

SymmetryReport verify_symmetries(const Context& ctx, const FusedTriple& t, ChargePair ch, double tol);

}  // namespace cyclic6j
