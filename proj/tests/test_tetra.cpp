#include <algorithm>
#include <set>

#include "cyclic6j/tetra.hpp"
#include "support.hpp"

using namespace testing;

namespace {

DecoratedTetrahedron sample_tetra(const Context& ctx, Rng& rng, FusedTriple& t) {
    DecoratedTetrahedron tet;
    for (int it = 0; it < 10000; ++it) {
        auto gen = [&] { return BorelElement{rng.polar(0.5, 2.0), rng.polar(0.5, 2.0)}; };
        try {
            tet.cocycle = cocycle_from_generators(ctx, gen(), gen(), gen());
            t = reps_from_cocycle(ctx, tet);
            tet.charge.c = {0, 1, 0, 0, 1, 0};
            return tet;
        } catch (const std::exception&) {
        }
    }
    FAIL("no decorated tetrahedron");
    return tet;
}

}  // namespace

TEST_CASE("all vertex orders are valid branchings") {
    std::array<int, 4> order{0, 1, 2, 3};
    int count = 0, positive = 0;
    do {
        Branching b = make_branching(order);
        CHECK(branching_acyclic(b));
        int o = branching_orientation(b);
        CHECK((o == 1 || o == -1));
        positive += (o == 1);
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(count == 24);
    CHECK(positive == 12);
    CHECK(branching_orientation(make_branching({0, 1, 2, 3})) == 1);
    // A single transposition flips the orientation.
    CHECK(branching_orientation(make_branching({1, 0, 2, 3})) == -1);
    CHECK_THROWS(make_branching({0, 0, 2, 3}));
    CHECK_THROWS(make_branching({0, 1, 2, 4}));
}

TEST_CASE("tetrahedron sign combines orientation and branching") {
    DecoratedTetrahedron tet;
    tet.orientation_sign = -1;
    CHECK(tetra_sign(tet) == -1);
    tet.branching = make_branching({1, 0, 2, 3});
    CHECK(tetra_sign(tet) == 1);
}

TEST_CASE("Borel cocycle from generators") {
    Context ctx = make_context(5);
    BorelElement a{std::polar(1.2, 0.3), {0.5, -0.2}}, b{std::polar(0.8, -1.0), {-0.1, 0.9}},
        c{std::polar(1.5, 2.0), {0.3, 0.3}};
    BorelCocycle z = cocycle_from_generators(ctx, a, b, c);
    CHECK(cocycle_residual(z) < 1e-15);
    BorelElement abc = borel_mul(borel_mul(a, b), c);
    CHECK(std::abs(z.at(Edge::e03).t - abc.t) < 1e-15);
    CHECK(std::abs(z.at(Edge::e03).x - abc.x) < 1e-15);
    // A diagonal edge value is rejected and named.
    BorelElement d{2.0, 0.0};
    try {
        cocycle_from_generators(ctx, d, b, c);
        FAIL("expected a throw");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("01") != std::string::npos);
    }
}

TEST_CASE("faces and charge validation") {
    for (int j = 0; j < 4; ++j) {
        std::set<int> verts;
        for (Edge e : face_edges(j))
            for (char ch : std::string(kEdgeNames[static_cast<std::size_t>(e)])) verts.insert(ch - '0');
        CHECK(verts.size() == 3);
        CHECK(verts.count(j) == 0);
    }
    IntegralCharge uniform;
    uniform.c = {1, 0, 0, 0, 0, 1};
    CHECK(validate_charge(uniform).empty());
    IntegralCharge zero_face;
    zero_face.c = {0, 1, 0, 0, 1, 0};
    CHECK(validate_charge(zero_face).empty());
    IntegralCharge bad;
    bad.c = {1, 1, 0, 0, 0, 1};
    std::string msg = validate_charge(bad);
    CHECK(msg.find("face f1") != std::string::npos);
    bad.c = {0, 0, 0, 0, 0, 0};
    CHECK(validate_charge(bad).find("face f0") != std::string::npos);
}

TEST_CASE("halving charges modulo N") {
    Context c3 = make_context(3), c5 = make_context(5);
    CHECK(halve_charge(c3, 0) == 0);
    CHECK(halve_charge(c3, 2) == 1);
    CHECK(halve_charge(c3, 1) == 2);
    CHECK(halve_charge(c3, -1) == 1);
    for (long long n = -12; n <= 12; ++n) CHECK(c5.mod(2LL * halve_charge(c5, n)) == c5.mod(n));
}

TEST_CASE("representations read off the cocycle") {
    for (int N : kOrders) {
        Context ctx = make_context(N);
        Rng rng(51);
        FusedTriple t;
        DecoratedTetrahedron tet = sample_tetra(ctx, rng, t);
        auto close = [&](const StandardRep& r, Edge e) {
            BorelElement p = psi_param(ctx, r);
            return rel_residual(p.t, tet.cocycle.at(e).t) < 1e-10 && rel_residual(p.x, tet.cocycle.at(e).x) < 1e-10;
        };
        CHECK(close(t.rho, Edge::e01));
        CHECK(close(t.mu, Edge::e12));
        CHECK(close(t.nu, Edge::e23));
        CHECK(close(t.rho_mu, Edge::e02));
        CHECK(close(t.mu_nu, Edge::e13));
        CHECK(close(t.rho_mu_nu, Edge::e03));
    }
}

TEST_CASE("evaluation: structural zeros and zero-charge prefactor") {
    for (int N : {3, 5}) {
        Context ctx = make_context(N);
        Rng rng(52);
        FusedTriple t;
        DecoratedTetrahedron tet = sample_tetra(ctx, rng, t);
        CHECK(tetra_charges(ctx, tet).a == 0);
        CHECK(tetra_charges(ctx, tet).c == 0);
        cplx pre = std::pow(t.rho_mu.y * t.mu_nu.y, ctx.P);
        for (int sign : {1, -1}) {
            tet.orientation_sign = sign;
            for (int a0 = 0; a0 < N; ++a0)
                for (int a1 = 0; a1 < N; ++a1)
                    for (int a2 = 0; a2 < N; ++a2) {
                        tet.state = {a0, a1, a2, rng.below(N)};
                        cplx plain = evaluate_xi(ctx, tet, t, false);
                        cplx with = evaluate_xi(ctx, tet, t, true);
                        if (ctx.mod(a2 + a0 - a1) != 0) {
                            CHECK(plain == cplx(0.0));
                            CHECK(with == cplx(0.0));
                        } else {
                            CHECK(rel_residual(with, pre * plain) < 1e-12);
                        }
                    }
        }
    }
}

TEST_CASE("evaluation rejects an invalid charge") {
    Context ctx = make_context(3);
    Rng rng(53);
    FusedTriple t;
    DecoratedTetrahedron tet = sample_tetra(ctx, rng, t);
    tet.charge.c = {0, 0, 0, 0, 0, 0};
    CHECK_THROWS_AS(evaluate_xi(ctx, tet, t, true), DomainError);
    CHECK_NOTHROW(evaluate_xi(ctx, tet, t, false));
}
