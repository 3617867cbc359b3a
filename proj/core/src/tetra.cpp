#include "cyclic6j/tetra.hpp"

#include <algorithm>

namespace cyclic6j {

namespace {

constexpr std::array<std::array<int, 2>, 6> kEdgeEnds{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

using Vec3 = std::array<double, 3>;

Vec3 reference_vertex(int v) {
    Vec3 p{0.0, 0.0, 0.0};
    if (v > 0) p[static_cast<std::size_t>(v - 1)] = 1.0;
    return p;
}

Vec3 edge_vector(const Branching& b, int from, int to) {
    Vec3 p = reference_vertex(b.vertex_order[static_cast<std::size_t>(from)]);
    Vec3 q = reference_vertex(b.vertex_order[static_cast<std::size_t>(to)]);
    return {q[0] - p[0], q[1] - p[1], q[2] - p[2]};
}

double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

Branching make_branching(const std::array<int, 4>& vertex_order) {
    std::array<int, 4> s = vertex_order;
    std::sort(s.begin(), s.end());
    if (s != std::array<int, 4>{0, 1, 2, 3}) throw DomainError("vertex order must be a permutation of 0..3");
    Branching b{vertex_order};
    if (!branching_acyclic(b)) throw DomainError("branching has an oriented cycle on a face");
    return b;
}

bool branching_acyclic(const Branching& b) {
    // rank[v] = label of reference vertex v; edges go from lower to higher label.
    std::array<int, 4> rank{};
    for (int k = 0; k < 4; ++k) rank[static_cast<std::size_t>(b.vertex_order[static_cast<std::size_t>(k)])] = k;
    for (int f = 0; f < 4; ++f) {
        std::array<int, 3> vs{};
        int n = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) vs[static_cast<std::size_t>(n++)] = v;
        // A cycle a->b->c->a would need rank[a] < rank[b] < rank[c] < rank[a].
        int sources = 0;
        for (int i = 0; i < 3; ++i) {
            int out = 0;
            for (int j = 0; j < 3; ++j)
                if (i != j && rank[static_cast<std::size_t>(vs[static_cast<std::size_t>(i)])] <
                                  rank[static_cast<std::size_t>(vs[static_cast<std::size_t>(j)])])
                    ++out;
            if (out == 2) ++sources;
        }
        if (sources != 1) return false;
    }
    return true;
}

int branching_orientation(const Branching& b) {
    // e'0 = [v2,v3], e'1 = [v0,v3], e'2 = [v1,v3].
    double d = det3(edge_vector(b, 2, 3), edge_vector(b, 0, 3), edge_vector(b, 1, 3));
    return d > 0 ? 1 : -1;
}

BorelCocycle cocycle_from_generators(const Context& ctx, const BorelElement& g01, const BorelElement& g12,
                                     const BorelElement& g23) {
    for (const auto* g : {&g01, &g12, &g23})
        if (std::abs(g->t) < ctx.tol_abs) throw DomainError("cocycle generator with t = 0");
    BorelCocycle c;
    c.z[static_cast<std::size_t>(Edge::e01)] = g01;
    c.z[static_cast<std::size_t>(Edge::e12)] = g12;
    c.z[static_cast<std::size_t>(Edge::e23)] = g23;
    c.z[static_cast<std::size_t>(Edge::e02)] = borel_mul(g01, g12);
    c.z[static_cast<std::size_t>(Edge::e13)] = borel_mul(g12, g23);
    c.z[static_cast<std::size_t>(Edge::e03)] = borel_mul(c.z[static_cast<std::size_t>(Edge::e02)], g23);
    for (int e = 0; e < 6; ++e) {
        const BorelElement& z = c.z[static_cast<std::size_t>(e)];
        double scale = std::max({std::abs(z.t), 1.0 / std::abs(z.t), 1.0});
        if (std::abs(z.x) < ctx.tol_abs * scale)
            throw DomainError(std::string("cocycle is not full: edge ") + kEdgeNames[static_cast<std::size_t>(e)] +
                              " is diagonal");
    }
    return c;
}

double cocycle_residual(const BorelCocycle& c) {
    auto edge = [](int i, int j) {
        for (std::size_t e = 0; e < 6; ++e)
            if (kEdgeEnds[e][0] == i && kEdgeEnds[e][1] == j) return static_cast<Edge>(e);
        return Edge::e01;
    };
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                BorelElement p = borel_mul(c.at(edge(i, j)), c.at(edge(j, k)));
                const BorelElement& q = c.at(edge(i, k));
                worst = std::max({worst, std::abs(p.t - q.t), std::abs(p.x - q.x)});
            }
    return worst;
}

std::array<Edge, 3> face_edges(int j) {
    std::array<Edge, 3> out{};
    int n = 0;
    for (std::size_t e = 0; e < 6; ++e)
        if (kEdgeEnds[e][0] != j && kEdgeEnds[e][1] != j) out[static_cast<std::size_t>(n++)] = static_cast<Edge>(e);
    return out;
}

std::string validate_charge(const IntegralCharge& q) {
    for (int j = 0; j < 4; ++j) {
        long long s = 0;
        for (Edge e : face_edges(j)) s += q.c[static_cast<std::size_t>(e)];
        if (s != 1) return "charge sum on face f" + std::to_string(j) + " is " + std::to_string(s) + ", expected 1";
    }
    return {};
}

int halve_charge(const Context& ctx, long long n) { return ctx.mod(static_cast<long long>(ctx.mod(n)) * (ctx.P + 1)); }

int tetra_sign(const DecoratedTetrahedron& tet) { return tet.orientation_sign * branching_orientation(tet.branching); }

FusedTriple reps_from_cocycle(const Context& ctx, const DecoratedTetrahedron& tet) {
    auto rep = [&](Edge e, const std::array<int, 2>& br) {
        const BorelElement& z = tet.cocycle.at(e);
        return StandardRep{principal_root(ctx, z.t) * ctx.w(br[0]), principal_root(ctx, z.x) * ctx.w(br[1])};
    };
    StandardRep r = rep(Edge::e01, tet.root_branches[0]);
    StandardRep m = rep(Edge::e12, tet.root_branches[1]);
    StandardRep n = rep(Edge::e23, tet.root_branches[2]);
    return fuse_triple_admissible(ctx, r, m, n);
}

cplx evaluate_xi(const Context& ctx, const DecoratedTetrahedron& tet, bool use_charges) {
    return evaluate_xi(ctx, tet, reps_from_cocycle(ctx, tet), use_charges);
}

ChargePair tetra_charges(const Context& ctx, const DecoratedTetrahedron& tet) {
    return {halve_charge(ctx, tet.charge.c[static_cast<std::size_t>(Edge::e01)]),
            halve_charge(ctx, tet.charge.c[static_cast<std::size_t>(Edge::e12)])};
}

cplx xi_entry(const DecoratedTetrahedron& tet, const Tensor4& R, const Tensor4& Rbar) {
    const auto& s = tet.state;
    return tetra_sign(tet) > 0 ? R(s[2], s[0], s[3], s[1]) : Rbar(s[3], s[1], s[2], s[0]);
}

cplx evaluate_xi(const Context& ctx, const DecoratedTetrahedron& tet, const FusedTriple& t, bool use_charges) {
    SixJTensor base = sixj(ctx, t);
    if (!use_charges) return xi_entry(tet, base.R, base.Rbar);
    std::string err = validate_charge(tet.charge);
    if (!err.empty()) throw DomainError(err);
    ChargedSixJTensor c = c_sixj(ctx, base, tetra_charges(ctx, tet));
    return xi_entry(tet, c.R, c.Rbar);
}

}  // namespace cyclic6j
