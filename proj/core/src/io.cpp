#include "cyclic6j/io.hpp"

#include <json.hpp>

namespace cyclic6j {

namespace {

using nlohmann::ordered_json;
using json = nlohmann::json;

ordered_json cjson(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

cplx to_cplx(const json& j, const std::string& path) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ParseError(path + ": expected a number or [re, im]");
}

const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "." + key + ": missing");
    return *it;
}

long long to_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
    return j.get<long long>();
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

ordered_json rep_json(const StandardRep& r) {
    ordered_json j;
    j["a"] = cjson(r.a);
    j["y"] = cjson(r.y);
    return j;
}

StandardRep rep_of(const json& j, const std::string& path) {
    return {to_cplx(field(j, "a", path), path + ".a"), to_cplx(field(j, "y", path), path + ".y")};
}

ordered_json triple_json(const FusedTriple& t) {
    ordered_json j;
    j["rho"] = rep_json(t.rho);
    j["mu"] = rep_json(t.mu);
    j["nu"] = rep_json(t.nu);
    j["rho_mu"] = rep_json(t.rho_mu);
    j["mu_nu"] = rep_json(t.mu_nu);
    j["rho_mu_nu"] = rep_json(t.rho_mu_nu);
    j["branches"] = t.branches;
    return j;
}

ordered_json tensor_json(const Tensor4& t) {
    ordered_json arr = ordered_json::array();
    for (cplx z : t.v) arr.push_back(cjson(z));
    return arr;
}

Tensor4 tensor_of(const json& j, int N, const std::string& path) {
    Tensor4 t(N);
    if (!j.is_array() || j.size() != t.v.size())
        throw ParseError(path + ": expected " + std::to_string(t.v.size()) + " entries");
    for (std::size_t i = 0; i < t.v.size(); ++i) t.v[i] = to_cplx(j[i], path + "[" + std::to_string(i) + "]");
    return t;
}

ordered_json dump_common(const std::string& kind, const SixJTensor& s) {
    const int N = s.R.n;
    ordered_json j;
    j["kind"] = kind;
    j["N"] = N;
    j["shape"] = {N, N, N, N};
    j["index_order"] = "gamma,delta,alpha,beta";
    j["inverse_index_order"] = "alpha,beta,gamma,delta";
    j["parameters"] = triple_json(s.triple);
    j["h"] = cjson(s.h);
    return j;
}

}  // namespace

std::string rep_to_json(const StandardRep& r) { return rep_json(r).dump(); }

StandardRep rep_from_json(const std::string& text) { return rep_of(parse(text), "$"); }

std::array<StandardRep, 3> reps_from_json(const std::string& text) {
    json j = parse(text);
    return {rep_of(field(j, "rho", "$"), "$.rho"), rep_of(field(j, "mu", "$"), "$.mu"),
            rep_of(field(j, "nu", "$"), "$.nu")};
}

std::string dump_sixj(const SixJTensor& s) {
    ordered_json j = dump_common("sixj", s);
    j["entries"] = tensor_json(s.R);
    j["inverse_entries"] = tensor_json(s.Rbar);
    return j.dump(1) + "\n";
}

std::string dump_charged(const ChargedSixJTensor& s) {
    ordered_json j = dump_common("c-sixj", s.base);
    j["charges"] = {{"a", s.charges.a}, {"c", s.charges.c}};
    j["prefactor"] = cjson(s.prefactor);
    j["entries"] = tensor_json(s.R);
    j["inverse_entries"] = tensor_json(s.Rbar);
    return j.dump(1) + "\n";
}

TensorDump load_tensor(const std::string& text) {
    json j = parse(text);
    TensorDump d;
    d.kind = field(j, "kind", "$").get<std::string>();
    if (d.kind != "sixj" && d.kind != "c-sixj") throw ParseError("$.kind: unknown tensor kind " + d.kind);
    d.N = static_cast<int>(to_int(field(j, "N", "$"), "$.N"));
    if (d.N < 3 || d.N % 2 == 0) throw ParseError("$.N: must be odd and at least 3");
    if (field(j, "index_order", "$") != "gamma,delta,alpha,beta") throw ParseError("$.index_order: unsupported");
    const json& p = field(j, "parameters", "$");
    d.triple.rho = rep_of(field(p, "rho", "$.parameters"), "$.parameters.rho");
    d.triple.mu = rep_of(field(p, "mu", "$.parameters"), "$.parameters.mu");
    d.triple.nu = rep_of(field(p, "nu", "$.parameters"), "$.parameters.nu");
    d.triple.rho_mu = rep_of(field(p, "rho_mu", "$.parameters"), "$.parameters.rho_mu");
    d.triple.mu_nu = rep_of(field(p, "mu_nu", "$.parameters"), "$.parameters.mu_nu");
    d.triple.rho_mu_nu = rep_of(field(p, "rho_mu_nu", "$.parameters"), "$.parameters.rho_mu_nu");
    const json& br = field(p, "branches", "$.parameters");
    if (!br.is_array() || br.size() != 3) throw ParseError("$.parameters.branches: expected 3 integers");
    for (std::size_t i = 0; i < 3; ++i)
        d.triple.branches[i] = static_cast<int>(to_int(br[i], "$.parameters.branches[" + std::to_string(i) + "]"));
    d.h = to_cplx(field(j, "h", "$"), "$.h");
    if (d.kind == "c-sixj") {
        const json& c = field(j, "charges", "$");
        d.charges = ChargePair{static_cast<int>(to_int(field(c, "a", "$.charges"), "$.charges.a")),
                               static_cast<int>(to_int(field(c, "c", "$.charges"), "$.charges.c"))};
        d.prefactor = to_cplx(field(j, "prefactor", "$"), "$.prefactor");
    }
    d.R = tensor_of(field(j, "entries", "$"), d.N, "$.entries");
    d.Rbar = tensor_of(field(j, "inverse_entries", "$"), d.N, "$.inverse_entries");
    return d;
}

DecoratedTetrahedron parse_tetra(const Context& ctx, const std::string& text) {
    json j = parse(text);
    DecoratedTetrahedron tet;

    long long o = to_int(field(j, "orientation", "$"), "$.orientation");
    if (o != 1 && o != -1) throw ParseError("$.orientation: must be +1 or -1");
    tet.orientation_sign = static_cast<int>(o);

    const json& vo = field(j, "vertex_order", "$");
    if (!vo.is_array() || vo.size() != 4) throw ParseError("$.vertex_order: expected 4 integers");
    std::array<int, 4> order{};
    for (std::size_t i = 0; i < 4; ++i)
        order[i] = static_cast<int>(to_int(vo[i], "$.vertex_order[" + std::to_string(i) + "]"));
    try {
        tet.branching = make_branching(order);
    } catch (const DomainError& e) {
        throw ParseError(std::string("$.vertex_order: ") + e.what());
    }

    const json& cj = field(j, "cocycle", "$");
    auto borel = [&](const char* key) {
        std::string path = std::string("$.cocycle.") + key;
        const json& g = field(cj, key, "$.cocycle");
        return BorelElement{to_cplx(field(g, "t", path), path + ".t"), to_cplx(field(g, "x", path), path + ".x")};
    };
    BorelElement g01 = borel("g01"), g12 = borel("g12"), g23 = borel("g23");
    try {
        tet.cocycle = cocycle_from_generators(ctx, g01, g12, g23);
    } catch (const DomainError& e) {
        throw ParseError(std::string("$.cocycle: ") + e.what());
    }

    const json& ch = field(j, "charges", "$");
    for (std::size_t e = 0; e < 6; ++e)
        tet.charge.c[e] = to_int(field(ch, kEdgeNames[e], "$.charges"), std::string("$.charges.") + kEdgeNames[e]);
    if (std::string err = validate_charge(tet.charge); !err.empty()) throw ParseError("$.charges: " + err);

    const json& st = field(j, "state", "$");
    if (!st.is_array() || st.size() != 4) throw ParseError("$.state: expected 4 integers");
    for (std::size_t i = 0; i < 4; ++i)
        tet.state[i] = ctx.mod(to_int(st[i], "$.state[" + std::to_string(i) + "]"));

    if (auto it = j.find("root_branches"); it != j.end()) {
        static constexpr std::array<const char*, 3> keys{"01", "12", "23"};
        for (std::size_t e = 0; e < 3; ++e) {
            std::string path = std::string("$.root_branches.") + keys[e];
            auto f = it->find(keys[e]);
            if (f == it->end()) continue;
            if (f->is_number_integer()) {
                tet.root_branches[e] = {0, ctx.mod(f->get<long long>())};
            } else if (f->is_array() && f->size() == 2) {
                tet.root_branches[e] = {ctx.mod(to_int((*f)[0], path + "[0]")), ctx.mod(to_int((*f)[1], path + "[1]"))};
            } else {
                throw ParseError(path + ": expected an integer or [t_branch, x_branch]");
            }
        }
    }
    return tet;
}

std::string tetra_to_json(const DecoratedTetrahedron& tet) {
    ordered_json j;
    j["orientation"] = tet.orientation_sign;
    j["vertex_order"] = tet.branching.vertex_order;
    ordered_json c;
    auto borel = [](const BorelElement& b) {
        ordered_json g;
        g["t"] = cjson(b.t);
        g["x"] = cjson(b.x);
        return g;
    };
    c["g01"] = borel(tet.cocycle.at(Edge::e01));
    c["g12"] = borel(tet.cocycle.at(Edge::e12));
    c["g23"] = borel(tet.cocycle.at(Edge::e23));
    j["cocycle"] = c;
    ordered_json ch;
    for (std::size_t e = 0; e < 6; ++e) ch[kEdgeNames[e]] = tet.charge.c[e];
    j["charges"] = ch;
    j["state"] = tet.state;
    ordered_json rb;
    static constexpr std::array<const char*, 3> keys{"01", "12", "23"};
    for (std::size_t e = 0; e < 3; ++e) rb[keys[e]] = tet.root_branches[e];
    j["root_branches"] = rb;
    return j.dump(2) + "\n";
}

}  // namespace cyclic6j
