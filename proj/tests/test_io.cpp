#include <fstream>
#include <sstream>

#include "cyclic6j/io.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(CYCLIC6J_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool bit_equal(const Tensor4& a, const Tensor4& b) { return a.n == b.n && a.v == b.v; }

std::string parse_error_of(const Context& ctx, const std::string& text) {
    try {
        parse_tetra(ctx, text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("representation JSON round trip") {
    StandardRep r{std::polar(1.3, 0.4), std::polar(0.7, -1.1)};
    StandardRep back = rep_from_json(rep_to_json(r));
    CHECK(back.a == r.a);
    CHECK(back.y == r.y);
    auto three = reps_from_json(R"({"rho": {"a": 1.5, "y": [0, 1]}, "mu": {"a": [1, 1], "y": 2}, "nu": {"a": 1, "y": 1}})");
    CHECK(three[0].a == cplx(1.5));
    CHECK(three[0].y == cplx(0.0, 1.0));
    CHECK(three[1].a == cplx(1.0, 1.0));
    CHECK_THROWS_AS(reps_from_json(R"({"rho": {"a": 1}})"), ParseError);
}

TEST_CASE("tensor dumps reload bit for bit") {
    for (int N : {3, 5}) {
        Context ctx = make_context(N);
        Rng rng(61);
        FusedTriple t = admissible_triple(ctx, rng);
        SixJTensor six = sixj(ctx, t);
        TensorDump d = load_tensor(dump_sixj(six));
        CHECK(d.kind == "sixj");
        CHECK(d.N == N);
        CHECK(bit_equal(d.R, six.R));
        CHECK(bit_equal(d.Rbar, six.Rbar));
        CHECK(d.triple.rho_mu_nu.y == t.rho_mu_nu.y);
        CHECK(d.triple.branches == t.branches);
        CHECK(support_violation(ctx, d.R) == 0.0);
        CHECK(dump_sixj(six) == dump_sixj(six));

        ChargePair ch{1, N - 1};
        ChargedSixJTensor c = c_sixj(ctx, six, ch);
        TensorDump dc = load_tensor(dump_charged(c));
        CHECK(dc.kind == "c-sixj");
        REQUIRE(dc.charges.has_value());
        CHECK(dc.charges->a == 1);
        CHECK(dc.charges->c == N - 1);
        CHECK(dc.prefactor == c.prefactor);
        CHECK(bit_equal(dc.R, c.R));
        CHECK(bit_equal(dc.Rbar, c.Rbar));
        // Reloaded tensors with opposite charges are orthogonal up to the squared prefactor.
        TensorDump dm = load_tensor(dump_charged(c_sixj(ctx, six, {-1, 1 - N})));
        Mat prod = swap_pairs(dc.R) * swap_pairs(dm.Rbar);
        CHECK(rel_residual(prod, dc.prefactor * dc.prefactor * identity(N * N)) < 1e-11);
        CHECK(orthogonality_residual(ctx, dc.triple, ch) == orthogonality_residual(ctx, t, ch));
    }
}

TEST_CASE("tensor loader reports the offending field") {
    CHECK_THROWS_WITH_AS(load_tensor(R"({"kind": "other"})"), doctest::Contains("$.kind"), ParseError);
    CHECK_THROWS_WITH_AS(load_tensor(R"({"kind": "sixj", "N": 4})"), doctest::Contains("$.N"), ParseError);
    CHECK_THROWS_WITH_AS(load_tensor("{"), doctest::Contains("malformed JSON"), ParseError);
}

TEST_CASE("tetrahedron files") {
    Context ctx = make_context(3);
    DecoratedTetrahedron tet = parse_tetra(ctx, read_data("tetra_valid.json"));
    CHECK(validate_charge(tet.charge).empty());
    CHECK(cocycle_residual(tet.cocycle) < 1e-14);
    DecoratedTetrahedron again = parse_tetra(ctx, tetra_to_json(tet));
    CHECK(tetra_to_json(again) == tetra_to_json(tet));
    CHECK(again.state == tet.state);
    CHECK(again.root_branches == tet.root_branches);
    CHECK_NOTHROW(evaluate_xi(ctx, tet, true));

    std::string bad = parse_error_of(ctx, read_data("tetra_bad_charge.json"));
    CHECK(bad.find("$.charges") != std::string::npos);
    CHECK(bad.find("face f") != std::string::npos);
}

TEST_CASE("tetrahedron parse errors") {
    Context ctx = make_context(3);
    CHECK(parse_error_of(ctx, "[1, 2").find("malformed JSON") != std::string::npos);
    CHECK(parse_error_of(ctx, R"({"orientation": 1})").find("$.vertex_order: missing") != std::string::npos);
    CHECK(parse_error_of(ctx, R"({"orientation": 2})").find("$.orientation") != std::string::npos);
    CHECK(parse_error_of(ctx, R"({"orientation": 1, "vertex_order": [0, 1, 1, 3]})").find("$.vertex_order") !=
          std::string::npos);
}
