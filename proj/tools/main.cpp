#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclic6j/io.hpp"
#include "cyclic6j/verify.hpp"

using namespace cyclic6j;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ParseError("cannot write " + out);
    f << text;
}

/// "a_re,a_im,y_re,y_im"
StandardRep parse_inline_rep(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        double d = std::stod(tok, &used);
        if (used != tok.size()) throw ParseError("bad number '" + tok + "' in " + s);
        v.push_back(d);
    }
    if (v.size() != 4) throw ParseError("representation needs a_re,a_im,y_re,y_im: " + s);
    return {{v[0], v[1]}, {v[2], v[3]}};
}

/// Names the first precondition that fails for an inadmissible triple.
std::string explain_inadmissible(const Context& ctx, const StandardRep& r, const StandardRep& m, const StandardRep& n) {
    if (!is_regular_pair(ctx, r, m)) return "(rho, mu) is not a regular pair";
    if (!is_regular_pair(ctx, m, n)) return "(mu, nu) is not a regular pair";
    StandardRep rm = fuse(ctx, r, m, 0);
    if (!is_regular_pair(ctx, rm, n)) return "(rho mu, nu) is not a regular pair";
    if (!triple_well_conditioned(ctx, r, m, n, 0.05))
        return "a Clebsch-Gordan ratio or the 6j argument lies within 0.05 of a pole";
    return "no branch choice satisfies the sign convention, principal sector and trivial phase";
}

int cmd_verify(const std::string& relation, const std::vector<int>& Ns, const VerifyOptions& opt,
               const std::string& format, const std::string& out) {
    if (relation != "all" && !is_relation(relation)) {
        std::cerr << "unknown relation: " << relation << "\nknown: all";
        for (const auto& r : relation_names()) std::cerr << ", " << r;
        std::cerr << "\n";
        return kExitUsage;
    }
    std::vector<VerificationReport> reports;
    for (int N : Ns) {
        if (relation == "all") {
            auto all = run_all(N, opt);
            reports.insert(reports.end(), all.begin(), all.end());
        } else {
            reports.push_back(run_relation(relation, N, opt));
        }
    }
    emit(format == "json" ? report_json(reports) : report_text(reports), out);
    for (const auto& r : reports)
        if (!r.pass) return kExitFail;
    return kExitPass;
}

int cmd_sixj(int N, const std::string& params, const std::vector<std::string>& inline_reps,
             const std::vector<int>& charges, const std::string& out) {
    Context ctx = make_context(N);
    StandardRep r, m, n;
    if (!params.empty()) {
        auto reps = reps_from_json(read_file(params));
        r = reps[0];
        m = reps[1];
        n = reps[2];
    } else if (inline_reps.size() == 3) {
        r = parse_inline_rep(inline_reps[0]);
        m = parse_inline_rep(inline_reps[1]);
        n = parse_inline_rep(inline_reps[2]);
    } else {
        std::cerr << "sixj: give --params FILE or all of --rho, --mu, --nu\n";
        return kExitUsage;
    }
    auto t = try_fuse_triple_admissible(ctx, r, m, n);
    if (!t) {
        std::cerr << "sixj: inadmissible parameters: " << explain_inadmissible(ctx, r, m, n) << "\n";
        return kExitFail;
    }
    SixJTensor s = sixj(ctx, *t);
    if (charges.empty()) {
        emit(dump_sixj(s), out);
    } else {
        emit(dump_charged(c_sixj(ctx, s, {charges[0], charges[1]})), out);
    }
    return kExitPass;
}

int cmd_tetra(int N, const std::string& path, bool charged, const std::string& format) {
    Context ctx = make_context(N);
    DecoratedTetrahedron tet = parse_tetra(ctx, read_file(path));
    FusedTriple t = reps_from_cocycle(ctx, tet);
    cplx plain = evaluate_xi(ctx, tet, t, false);
    cplx value = charged ? evaluate_xi(ctx, tet, t, true) : plain;
    double cocycle = cocycle_residual(tet.cocycle);
    double conv = convention_residual(ctx, t);
    std::ostringstream os;
    os.precision(17);
    if (format == "json") {
        os << "{\n  \"N\": " << N << ",\n  \"charged\": " << (charged ? "true" : "false") << ",\n  \"sign\": "
           << tetra_sign(tet) << ",\n  \"value\": [" << value.real() << ", " << value.imag()
           << "],\n  \"uncharged_value\": [" << plain.real() << ", " << plain.imag()
           << "],\n  \"cocycle_residual\": " << cocycle << ",\n  \"convention_residual\": " << conv
           << ",\n  \"branches\": [" << t.branches[0] << ", " << t.branches[1] << ", " << t.branches[2] << "]\n}\n";
    } else {
        os << "sign " << (tetra_sign(tet) > 0 ? "+" : "-") << "\n"
           << "xi " << value.real() << (value.imag() < 0 ? " - " : " + ") << std::abs(value.imag()) << "i\n"
           << "uncharged " << plain.real() << (plain.imag() < 0 ? " - " : " + ") << std::abs(plain.imag()) << "i\n"
           << "cocycle residual " << cocycle << "\n"
           << "sign convention residual " << conv << "\n"
           << "fusion branches " << t.branches[0] << " " << t.branches[1] << " " << t.branches[2] << "\n";
    }
    std::cout << os.str();
    return kExitPass;
}

int cmd_ctx_info(int N) {
    Context ctx = make_context(N);
    std::printf("N          %d\n", ctx.N);
    std::printf("P          %d\n", ctx.P);
    std::printf("omega      %.17g %+.17gi\n", ctx.omega.real(), ctx.omega.imag());
    std::printf("omega^1/2  %.17g %+.17gi\n", ctx.omega_half.real(), ctx.omega_half.imag());
    std::printf("|g(1)|     %.17g\n", std::abs(g_func(ctx, 1.0)));
    std::printf("sqrt(N)    %.17g\n", std::sqrt(static_cast<double>(N)));
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic 6j-symbols of the Weyl algebra at odd roots of unity"};
    app.require_subcommand(1);

    auto odd = CLI::Validator(
        [](std::string& s) -> std::string {
            int n = std::stoi(s);
            return (n >= 3 && n % 2 == 1 && n <= 13) ? std::string() : "N must be odd with 3 <= N <= 13";
        },
        "ODD");

    // verify
    auto* v = app.add_subcommand("verify", "Randomised verification of an identity (or all)");
    std::string relation;
    std::vector<int> vNs;
    VerifyOptions vopt;
    double vtol = 0.0;
    std::string vformat = "text", vout;
    v->add_option("relation", relation, "Relation name or 'all'")->required();
    v->add_option("--N", vNs, "Odd orders (default 3 5 7)")->check(odd);
    v->add_option("--samples", vopt.samples, "Samples per relation")->check(CLI::PositiveNumber);
    v->add_option("--seed", vopt.seed, "RNG seed");
    auto* tol_opt = v->add_option("--tol", vtol, "Tolerance override")->check(CLI::PositiveNumber);
    v->add_option("--threads", vopt.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
    v->add_option("--format", vformat)->check(CLI::IsMember({"json", "text"}));
    v->add_option("--out", vout, "Write the report to a file");

    // sixj
    auto* sx = app.add_subcommand("sixj", "Compute and dump a (charged) 6j-symbol");
    int sN = 3;
    std::string params, sout;
    std::string rho, mu, nu;
    std::vector<int> charges;
    sx->add_option("--N", sN)->check(odd);
    sx->add_option("--params", params, "JSON file with rho, mu, nu");
    sx->add_option("--rho", rho, "a_re,a_im,y_re,y_im");
    sx->add_option("--mu", mu, "a_re,a_im,y_re,y_im");
    sx->add_option("--nu", nu, "a_re,a_im,y_re,y_im");
    sx->add_option("--charges", charges, "Charges a c")->expected(2);
    sx->add_option("--out", sout, "Output path");

    // tetra-eval
    auto* te = app.add_subcommand("tetra-eval", "Evaluate one decorated tetrahedron");
    int tN = 3;
    std::string tpath, tformat = "text";
    bool tcharged = true;
    te->add_option("input", tpath, "Tetrahedron JSON")->required();
    te->add_option("--N", tN)->check(odd);
    te->add_flag("--charges,!--no-charges", tcharged, "Use the charged symbol (default on)");
    te->add_option("--format", tformat)->check(CLI::IsMember({"json", "text"}));

    // ctx info
    auto* cx = app.add_subcommand("ctx", "Root-of-unity context");
    auto* ci = cx->add_subcommand("info", "Print N, P, omega, omega^1/2 and |g(1)|");
    cx->require_subcommand(1);
    int cN = 3;
    ci->add_option("--N", cN)->check(odd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*v) {
            if (*tol_opt) vopt.tol = vtol;
            if (vNs.empty()) vNs = {3, 5, 7};
            return cmd_verify(relation, vNs, vopt, vformat, vout);
        }
        if (*sx) {
            std::vector<std::string> reps;
            if (!rho.empty() || !mu.empty() || !nu.empty()) reps = {rho, mu, nu};
            for (const auto& s : reps)
                if (s.empty()) {
                    std::cerr << "sixj: --rho, --mu and --nu go together\n";
                    return kExitUsage;
                }
            return cmd_sixj(sN, params, reps, charges, sout);
        }
        if (*te) return cmd_tetra(tN, tpath, tcharged, tformat);
        if (*ci) return cmd_ctx_info(cN);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
