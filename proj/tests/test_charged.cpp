#include <cmath>

#include "support.hpp"

using namespace testing;

namespace {

ChargePair random_charge(const Context& ctx, Rng& rng) { return {rng.below(ctx.N), rng.below(ctx.N)}; }

}  // namespace

TEST_CASE("S and T matrices") {
    for (int N : kOrders) {
        Context ctx = make_context(N);
        Mat S = s_matrix(ctx);
        CHECK(rel_residual(S * s_inverse(ctx), identity(N)) < 1e-13);
        CHECK(rel_residual(Mat(S * S.adjoint()), identity(N)) < 1e-13);
        // S^2 is the parity permutation m -> -m.
        Mat S2 = S * S;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) CHECK(std::abs(S2(i, j) - cplx(ctx.mod(-j) == i ? 1.0 : 0.0)) < 1e-13);
        cplx zeta = zeta_candidate(ctx, 9);
        CHECK(rel_residual(t_matrix(ctx, zeta) * t_inverse(ctx, zeta), identity(N)) < 1e-13);
        auto [zp, res] = st_projective_phase(ctx, zeta);
        CHECK(res < 1e-12);
        CHECK(std::abs(std::abs(zp) - 1.0) < 1e-12);
    }
}

TEST_CASE("zeta candidates are unit complex numbers") {
    Context ctx = make_context(5);
    for (int e : {1, 3, 9}) CHECK(std::abs(std::abs(zeta_candidate(ctx, e)) - 1.0) < 1e-14);
    CHECK(std::abs(zeta_candidate(ctx, 9) / zeta_candidate(ctx, 1) - ctx.omega) < 1e-14);
}

TEST_CASE("charged 6j-symbol in terms of the uncharged one, all charges") {
    for (int N : {3, 5}) {
        Context ctx = make_context(N);
        Rng rng(41);
        for (int s = 0; s < 3; ++s) {
            SixJTensor six = sixj(ctx, admissible_triple(ctx, rng));
            for (int a = 0; a < N; ++a)
                for (int c = 0; c < N; ++c) CHECK(lemma68_residual(ctx, six, {a, c}) < 1e-11);
        }
    }
}

TEST_CASE("zero charges give the prefactor times the uncharged tensor") {
    for (int N : kOrders) {
        Context ctx = make_context(N);
        Rng rng(42);
        FusedTriple t = admissible_triple(ctx, rng);
        SixJTensor six = sixj(ctx, t);
        ChargedSixJTensor ch = c_sixj(ctx, six, {0, 0});
        cplx pre = std::pow(t.rho_mu.y * t.mu_nu.y, ctx.P);
        CHECK(rel_residual(ch.prefactor, pre) < 1e-13);
        CHECK(rel_residual(swap_pairs(ch.R), pre * swap_pairs(six.R)) < 1e-13);
        CHECK(ChargePair{0, 0}.b(ctx) == ctx.P + 1);
    }
}

TEST_CASE("commutation relations of the 6j-symbol") {
    for (int N : kOrders) {
        Context ctx = make_context(N);
        Rng rng(43);
        for (int s = 0; s < 5; ++s)
            for (double r : commutation_residuals(ctx, sixj(ctx, admissible_triple(ctx, rng)))) CHECK(r < 1e-11);
    }
}

TEST_CASE("orthogonality and conjugation") {
    for (int N : kOrders) {
        Context ctx = make_context(N);
        Rng rng(44);
        for (int s = 0; s < 5; ++s) {
            FusedTriple t = admissible_triple(ctx, rng);
            ChargePair ch = random_charge(ctx, rng);
            CHECK(orthogonality_residual(ctx, t, ch) < 1e-11);
            CHECK(conjugation_residual(ctx, t, ch) < 1e-11);
            FusedTriple c = conjugate_triple(t);
            CHECK(c.rho.a == std::conj(t.rho.a));
            CHECK(c.rho_mu_nu.y == std::conj(t.rho_mu_nu.y));
        }
    }
}

TEST_CASE("extended pentagon with charges") {
    for (int N : {3, 5}) {
        Context ctx = make_context(N);
        Rng rng(45);
        for (int s = 0; s < 3; ++s) {
            PentagonAssignment pa = pentagon_instance(ctx, rng);
            CHECK(extended_pentagon_residual(ctx, pa, {0, 0, 0, 0, 0}) < 1e-10);
            std::array<int, 5> q{};
            for (int& v : q) v = rng.below(N);
            CHECK(extended_pentagon_residual(ctx, pa, q) < 1e-10);
        }
    }
}

TEST_CASE("tetrahedral symmetries: neither stated normalisation fits") {
    // The fitted phase is w^(1/8) (-1)^P |g(1)|/g(1), distinct from both candidates.
    for (int N : kOrders) {
        Context ctx = make_context(N);
        Rng rng(46);
        for (int s = 0; s < 3; ++s) {
            FusedTriple t = admissible_triple(ctx, rng);
            SymmetryReport rep = verify_symmetries(ctx, t, random_charge(ctx, rng), 1e-8);
            CHECK(rep.winner == "none");
            CHECK(rep.fitted_eighths == 1);
            CHECK(rep.fitted_residual < 1e-9);
            CHECK(rel_residual(rep.fitted_zeta, zeta_candidate(ctx, 1)) < 1e-9);
            for (std::size_t k = 0; k < 2; ++k) {
                double worst = 0.0;
                for (const auto& row : rep.residual) worst = std::max(worst, row[k]);
                CHECK(worst > 1e-3);
            }
        }
    }
}
