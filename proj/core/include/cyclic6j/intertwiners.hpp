#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cyclic6j/context.hpp"
#include "cyclic6j/dilog.hpp"
#include "cyclic6j/special.hpp"
#include "cyclic6j/weyl.hpp"

namespace cyclic6j {

/// Dense rank-4 tensor over (Z_N)^4, row-major in (i0, i1, i2, i3).
struct Tensor4 {
    int n = 0;
    std::vector<cplx> v;

    Tensor4() = default;
    explicit Tensor4(int n_) : n(n_), v(static_cast<std::size_t>(n_) * n_ * n_ * n_, cplx(0.0)) {}

    std::size_t index(int i0, int i1, int i2, int i3) const {
        auto m = [this](int i) { return static_cast<std::size_t>(((i % n) + n) % n); };
        const auto N = static_cast<std::size_t>(n);
        return ((m(i0) * N + m(i1)) * N + m(i2)) * N + m(i3);
    }
    cplx& operator()(int i0, int i1, int i2, int i3) { return v[index(i0, i1, i2, i3)]; }
    cplx operator()(int i0, int i1, int i2, int i3) const { return v[index(i0, i1, i2, i3)]; }
};

/// M(i2*N + i3, i0*N + i1) = T(i0, i1, i2, i3). For R[g][d][a][b] this is the
/// operator with rows (a, b) and columns (g, d); for Rbar[a][b][g][d] its inverse.
Mat swap_pairs(const Tensor4& t);

/// Fermat point (a_r y_m, y_r / a_m, y_rm) of a Clebsch-Gordan family.
FermatTriple pair_fermat(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm);

/// Default normalisation h(y_rm / (a_r y_m)).
cplx pair_default_h(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm);

struct OCGFamily {
    StandardRep rho, mu, rho_mu;
    cplx h;
    std::vector<Mat> K;     // N^2 x N each
    std::vector<Mat> Kbar;  // N x N^2 each
};

OCGFamily ocg(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm,
              std::optional<cplx> h = std::nullopt);

/// max over both duality relations.
double ocg_duality_residual(const Context& ctx, const OCGFamily& f);
/// max over E and D intertwining relations.
double ocg_intertwining_residual(const Context& ctx, const OCGFamily& f);

/// Transposed block matrix: rows (alpha, k), columns (i, j), entry K_alpha[(i,j), k].
Mat pair_matrix(const Context& ctx, const OCGFamily& f);

/// h sum_t (-(y_r/(a_r a_m y_m)) Y1^{-1} Z2^{-1} Y2)^t prod_{s<=t} 1/(1 - w^{-s} y_rm/(a_r y_m)).
Mat psi_pair(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm, cplx h);

/// Entry formula h w^{-k(i-k)} omega(x,y,z | i-k) delta(l+k-i-j) for the same operator.
Mat psi_pair_closed(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& rm, cplx h);

/// -Y1^{-1} Z2^{-1} Y2 on two factors.
Mat dilog_argument_two(const Context& ctx);

/// Dilogarithm parameters (y, z, x, h(z/x)) of a pair and (Y, Z, X, h(Z/X)) of a triple.
CyclicDilogParams pair_dilog_params(const Context& ctx, const StandardRep& r, const StandardRep& m,
                                    const StandardRep& rm);
CyclicDilogParams sixj_dilog_params(const Context& ctx, const FusedTriple& t);

struct SixJTensor {
    FusedTriple triple;
    cplx h;
    Tensor4 R;     // [gamma][delta][alpha][beta]
    Tensor4 Rbar;  // [alpha][beta][gamma][delta]
};

cplx sixj_default_h(const Context& ctx, const FusedTriple& t);
SixJTensor sixj(const Context& ctx, const FusedTriple& t, std::optional<cplx> h = std::nullopt);

/// Rows (alpha, beta), columns (gamma, delta).
Mat sixj_op(const SixJTensor& s);
/// Rows (gamma, delta), columns (alpha, beta).
Mat sixj_inverse_op(const SixJTensor& s);

/// Largest |entry| off the support gamma + delta = beta (+ shift); exact zero expected.
double support_violation(const Context& ctx, const Tensor4& R, int shift = 0);

/// Change-of-basis tensor computed from the Clebsch-Gordan families directly.
Tensor4 sixj_from_cg(const Context& ctx, const FusedTriple& t);

/// Largest residual of K_a K_b = sum R K_d K_g over all (a, b).
double cg_decomposition_residual(const Context& ctx, const SixJTensor& s);

/// k with (closed form) = w^k (change of basis); empty if the ratio is not a root of unity.
std::optional<int> normalization_phase(const Context& ctx, const FusedTriple& t);

/// op(R) against Upsilon * Psi_{Y,Z,X}(-Y1^{-1} Z2^{-1} Y2).
double sixj_dilog_residual(const Context& ctx, const SixJTensor& s);

/// Factorised cyclic dilogarithm relation on three factors for one triple.
double factorized_dilog_residual(const Context& ctx, const FusedTriple& t);

double upsilon_pentagon_residual(const Context& ctx);

/// One root choice for each of the six fusions of (r, m, n, v).
struct PentagonAssignment {
    StandardRep r, m, n, v;
    StandardRep rm, mn, nv, rmn, mnv, rmnv;
    std::array<int, 6> branches{};

    /// (r,m,n), (r,mn,v), (m,n,v), (rm,n,v), (r,m,nv).
    std::array<FusedTriple, 5> triples() const;
};

PentagonAssignment make_assignment(const Context& ctx, const StandardRep& r, const StandardRep& m,
                                   const StandardRep& n, const StandardRep& v, const std::array<int, 6>& branches);

/// Lexicographic search for branches whose normalisation phases form a cocycle.
std::optional<PentagonAssignment> find_pentagon_assignment(const Context& ctx, const StandardRep& r,
                                                           const StandardRep& m, const StandardRep& n,
                                                           const StandardRep& v);

double pentagon_residual(const Context& ctx, const PentagonAssignment& pa);

}  // namespace cyclic6j
