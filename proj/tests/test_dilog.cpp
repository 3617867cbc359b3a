#include <cmath>

#include "support.hpp"

using namespace testing;

namespace {

CyclicDilogParams random_params(const Context& ctx, Rng& rng) {
    for (;;) {
        cplx a = rng.polar(0.5, 2.0), c = rng.polar(0.5, 2.0);
        cplx b = principal_root(ctx, std::pow(a, ctx.N) + std::pow(c, ctx.N)) * ctx.w(rng.below(ctx.N));
        bool ok = true;
        for (int j = 0; j < ctx.N; ++j) ok = ok && std::abs(c - ctx.w(-j) * b) > 0.05 * std::abs(b);
        if (ok) return make_dilog_params(ctx, a, b, c, rng.polar(0.5, 2.0));
    }
}

}  // namespace

TEST_CASE("dilogarithm parameters live on a^N + c^N = b^N") {
    Context ctx = make_context(3);
    cplx a = 0.7, c = 1.1, b = std::cbrt(std::pow(0.7, 3) + std::pow(1.1, 3));
    CHECK_NOTHROW(make_dilog_params(ctx, a, b, c));
    CHECK_THROWS_AS(make_dilog_params(ctx, a, c, b), DomainError);
}

TEST_CASE("anticyclic pair") {
    for (int N : kOrders) {
        Context ctx = make_context(N);
        AnticyclicPair p = make_anticyclic_pair(ctx);
        CHECK(max_abs_diff(mat_pow(p.U, N), -identity(N)) < 1e-12);
        CHECK(max_abs_diff(mat_pow(p.V, N), -identity(N)) < 1e-12);
        CHECK(max_abs_diff(p.U * p.V * (p.V * p.U).inverse(), ctx.omega * identity(N)) < 1e-12);
        Eigen::ComplexEigenSolver<Mat> eu(p.U), ev(p.V);
        for (int n = 0; n < N; ++n) {
            cplx target = -ctx.w(n);
            double du = 1e9, dv = 1e9;
            for (int k = 0; k < N; ++k) {
                du = std::min(du, std::abs(eu.eigenvalues()(k) - target));
                dv = std::min(dv, std::abs(ev.eigenvalues()(k) - target));
            }
            CHECK(du < 1e-10);
            CHECK(dv < 1e-10);
        }
    }
}

TEST_CASE("cyclic dilogarithm: functional identity and spectrum") {
    for (int N : kOrders) {
        Context ctx = make_context(N);
        Rng rng(21);
        AnticyclicPair p = make_anticyclic_pair(ctx);
        for (int s = 0; s < 20; ++s) {
            CyclicDilogParams q = random_params(ctx, rng);
            for (const Mat& A : {p.U, p.V, Mat(-(p.U * p.V))}) {
                Mat lhs = cyclic_dilog_op(ctx, q, ctx.w(-1) * A) * cyclic_dilog_op(ctx, q, A).inverse();
                CHECK(rel_residual(lhs, (q.c * identity(N) - q.a * A) / q.b) < 1e-11);
            }
            Mat D = Mat::Zero(N, N);
            for (int n = 0; n < N; ++n) D(n, n) = -ctx.w(n);
            Mat psi = cyclic_dilog_op(ctx, q, D);
            FermatTriple ft = make_fermat(ctx, -q.a, q.b, q.c);
            // Diagonal entry n is the constant term times w(-a, b, c | n).
            for (int n = 0; n < N; ++n) CHECK(rel_residual(psi(n, n), psi(0, 0) * omega_fermat(ctx, ft, n)) < 1e-11);
            CHECK(psi.isDiagonal());
        }
    }
}

TEST_CASE("cyclic dilogarithm rejects a bad spectrum") {
    Context ctx = make_context(3);
    CyclicDilogParams q = make_dilog_params(ctx, 0.7, std::cbrt(std::pow(0.7, 3) + 1.0), 1.0);
    CHECK_THROWS_AS(cyclic_dilog_op(ctx, q, identity(3)), DomainError);
    CHECK_NOTHROW(cyclic_dilog_op(ctx, q, identity(3), false));
}

TEST_CASE("sparse and dense evaluation agree") {
    Context ctx = make_context(5);
    Rng rng(22);
    CyclicDilogParams q = random_params(ctx, rng);
    Mat A = leg12(ctx, dilog_argument_two(ctx));
    Mat dense = cyclic_dilog_op(ctx, q, A);
    Mat sparse = Mat(cyclic_dilog_op(ctx, q, to_sparse(A)));
    CHECK(rel_residual(sparse, dense) < 1e-14);
}

TEST_CASE("five-term identity with determinant normalisation") {
    for (int N : kOrders) {
        Context ctx = make_context(N);
        Rng rng(23);
        int done = 0;
        while (done < 20) {
            cplx x0 = rng.polar(0.2, 0.8), x1 = rng.polar(0.2, 0.8);
            if (thm410_pole_margin(ctx, x0, x1) < 0.05) continue;
            Thm410Instance inst = solve_thm410_params(ctx, x0, x1);
            CHECK(inst.residual < 1e-10);
            CHECK(inst.det_ratio_error < 1e-10);
            CHECK(thm410_relation_residual(ctx, inst) < 1e-12);
            CHECK(inst.h3_root >= 0);
            CHECK(inst.h3_root < N);
            ++done;
        }
    }
}

TEST_CASE("the Gaussian operator") {
    for (int N : kOrders) {
        Context ctx = make_context(N);
        Mat U = upsilon(ctx);
        CHECK(rel_residual(upsilon_hat_form(ctx), U) < 1e-13);
        CHECK(rel_residual(U * upsilon_inverse_closed(ctx), identity(N * N)) < 1e-13);
        // Action on basis vectors: v_k (x) v_l -> v_k (x) Y^k v_l.
        Mat Y = mat_Y(ctx);
        for (int k = 0; k < N; ++k) {
            Mat Yk = mat_pow(Y, k);
            for (int l = 0; l < N; ++l)
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j) {
                        cplx e = (i == k) ? Yk(j, l) : cplx(0.0);
                        CHECK(std::abs(U(i * N + j, k * N + l) - e) < 1e-13);
                    }
        }
        CHECK(upsilon_pentagon_residual(ctx) < 1e-12);
    }
}

TEST_CASE("leg embeddings on product operators") {
    Context ctx = make_context(3);
    Rng rng(24);
    auto rnd = [&] {
        Mat m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = rng.polar(0.2, 1.0);
        return m;
    };
    Mat A = rnd(), B = rnd(), I = identity(3);
    Mat AB = kron(A, B);
    CHECK(max_abs_diff(leg12(ctx, AB), kron(kron(A, B), I)) < 1e-15);
    CHECK(max_abs_diff(leg23(ctx, AB), kron(I, kron(A, B))) < 1e-15);
    CHECK(max_abs_diff(leg13(ctx, AB), kron(kron(A, I), B)) < 1e-15);
}
