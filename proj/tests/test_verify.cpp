#include <cmath>
#include <cstdlib>

#include "cyclic6j/verify.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("relation table") {
    const auto& names = relation_names();
    CHECK(names.size() == 24);
    CHECK(names.front() == "ocg-duality");
    for (const auto& n : names) {
        CHECK(is_relation(n));
        CHECK(default_tolerance(n) > 0.0);
    }
    CHECK_FALSE(is_relation("nope"));
    CHECK_THROWS(run_relation("nope", 3, VerifyOptions{}));
}

TEST_CASE("reports are reproducible and thread independent") {
    VerifyOptions a;
    a.samples = 6;
    a.seed = 9;
    a.threads = 1;
    VerifyOptions b = a;
    b.threads = 3;
    for (const char* rel : {"cg-decomposition", "orthogonality", "tetra"}) {
        auto r1 = run_relation(rel, 3, a), r2 = run_relation(rel, 3, a), r3 = run_relation(rel, 3, b);
        CHECK(report_json({r1}) == report_json({r2}));
        CHECK(report_json({r1}) == report_json({r3}));
        CHECK(r1.pass);
        CHECK(r1.results.size() == 6);
    }
    VerifyOptions c = a;
    c.seed = 10;
    CHECK(report_json({run_relation("orthogonality", 3, a)}) != report_json({run_relation("orthogonality", 3, c)}));
}

TEST_CASE("sample residual is the largest judged part") {
    VerifyOptions o;
    o.samples = 4;
    auto rep = run_relation("commutations", 5, o);
    for (const auto& s : rep.results) {
        double m = 0.0;
        for (const auto& [k, v] : s.parts) m = std::max(m, v);
        CHECK(s.residual == m);
        CHECK(s.parts.size() == 3);
        CHECK(rep.max_residual >= s.residual);
    }
}

TEST_CASE("tolerances: explicit, environment and failure") {
    VerifyOptions o;
    o.samples = 3;
    CHECK(run_relation("g1-norm", 3, o).tol == default_tolerance("g1-norm"));
    ::setenv("CYCLIC6J_TOL", "1e-3", 1);
    CHECK(run_relation("g1-norm", 3, o).tol == 1e-3);
    o.tol = 1e-5;
    CHECK(run_relation("g1-norm", 3, o).tol == 1e-5);
    ::unsetenv("CYCLIC6J_TOL");
    o.tol = 1e-300;
    auto rep = run_relation("cg-decomposition", 3, o);
    CHECK_FALSE(rep.pass);
    CHECK(report_text({rep}).find("FAIL") != std::string::npos);
}

TEST_CASE("window-judged relation") {
    VerifyOptions o;
    o.samples = 2;
    auto rep = run_relation("prop33-asymptotic", 3, o);
    CHECK(rep.pass);
    for (const auto& s : rep.results) {
        CHECK(s.diagnostics.count("factor_x0.1") == 1);
        CHECK(std::abs(s.diagnostics.at("factor_x0.1") - 2.0) < 0.5);
    }
}
