#pragma once

#include <array>
#include <optional>

#include "cyclic6j/context.hpp"

namespace cyclic6j {

/// Cyclic representation in standard gauge: E -> a^2 Z, D -> a y X.
struct StandardRep {
    cplx a{1.0};
    cplx y{1.0};
};

/// Upper triangular [[t, x], [0, 1/t]].
struct BorelElement {
    cplx t{1.0};
    cplx x{0.0};
};

BorelElement borel_mul(const BorelElement& l, const BorelElement& r);
BorelElement borel_inv(const BorelElement& b);

Mat mat_X(const Context& ctx);
Mat mat_Z(const Context& ctx);
Mat mat_Y(const Context& ctx);

Mat rep_E(const Context& ctx, const StandardRep& r);
Mat rep_D(const Context& ctx, const StandardRep& r);
Mat tensor_E(const Context& ctx, const StandardRep& r, const StandardRep& m);
Mat tensor_D(const Context& ctx, const StandardRep& r, const StandardRep& m);

/// a_r^N y_m^N + y_r^N / a_m^N.
cplx fusion_power(const Context& ctx, const StandardRep& r, const StandardRep& m);
bool is_regular_pair(const Context& ctx, const StandardRep& r, const StandardRep& m);
StandardRep fuse(const Context& ctx, const StandardRep& r, const StandardRep& m, int branch);

StandardRep inverse_rep(const StandardRep& r);
StandardRep conjugate_rep(const StandardRep& r);

BorelElement psi_param(const Context& ctx, const StandardRep& r);

struct NormalRep {
    Mat E, D, Ebar, Dbar;
};
NormalRep normal_rep(const Context& ctx, const StandardRep& r);

/// Residuals of the six Heisenberg-double relations at q = w^{-1}.
std::array<double, 6> heisenberg_residuals(const Context& ctx, const NormalRep& n);

/// Three representations and their fusions, branches recorded.
struct FusedTriple {
    StandardRep rho, mu, nu;
    StandardRep rho_mu, mu_nu, rho_mu_nu;
    std::array<int, 3> branches{0, 0, 0};
};

FusedTriple make_triple(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& n,
                        int b1, int b2, int b3);

/// Fermat point (y_rmn y_m, y_r y_n, y_rm y_mn) carried by the 6j-symbol.
std::array<cplx, 3> sixj_fermat_point(const FusedTriple& t);

/// |-y_r y_n/(y_rmn y_m) - r(y_rm y_mn/(y_rmn y_m))|, relative.
double convention_residual(const Context& ctx, const FusedTriple& t);

/// y_rm y_mn / (y_rmn y_m).
cplx sixj_argument(const FusedTriple& t);

struct AdmissibilityOptions {
    double margin = 0.05;
};

/// Lexicographic search over (b1, b2, b3): the sign convention, the principal
/// sector of the 6j argument and a trivial normalisation phase must all hold.
std::optional<FusedTriple> try_fuse_triple_admissible(const Context& ctx, const StandardRep& r, const StandardRep& m,
                                                      const StandardRep& n, const AdmissibilityOptions& opt = {});
FusedTriple fuse_triple_admissible(const Context& ctx, const StandardRep& r, const StandardRep& m,
                                   const StandardRep& n, const AdmissibilityOptions& opt = {});

/// Branch-independent pole margins of every pair and of the 6j argument.
bool triple_well_conditioned(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& n,
                             double margin);

}  // namespace cyclic6j
