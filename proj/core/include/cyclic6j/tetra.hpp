#pragma once

#include <array>
#include <string>

#include "cyclic6j/charged.hpp"

namespace cyclic6j {

/// Edges of the tetrahedron in branching labels, [vi, vj] with i < j.
enum class Edge : int { e01 = 0, e02, e03, e12, e13, e23 };
inline constexpr std::array<const char*, 6> kEdgeNames{"01", "02", "03", "12", "13", "23"};

/// vertex_order[k] is the reference vertex carrying label v_k.
struct Branching {
    std::array<int, 4> vertex_order{0, 1, 2, 3};
};

Branching make_branching(const std::array<int, 4>& vertex_order);

/// Orientation of the triple (e'0, e'1, e'2) on the positive reference simplex.
int branching_orientation(const Branching& b);

/// Edges oriented by the branching never close an oriented cycle on a face.
bool branching_acyclic(const Branching& b);

struct BorelCocycle {
    std::array<BorelElement, 6> z;  // indexed by Edge

    const BorelElement& at(Edge e) const { return z[static_cast<std::size_t>(e)]; }
};

/// z02 = z01 z12, z13 = z12 z23, z03 = z01 z12 z23; throws if some value is diagonal.
BorelCocycle cocycle_from_generators(const Context& ctx, const BorelElement& g01, const BorelElement& g12,
                                     const BorelElement& g23);

/// max over the four faces of |z(ij) z(jk) - z(ik)|.
double cocycle_residual(const BorelCocycle& c);

struct IntegralCharge {
    std::array<long long, 6> c{};  // indexed by Edge
};

/// Edges of face f_j (opposite v_j).
std::array<Edge, 3> face_edges(int j);

/// Empty string if valid, otherwise a message naming the first failing face.
std::string validate_charge(const IntegralCharge& q);

int halve_charge(const Context& ctx, long long n);

struct DecoratedTetrahedron {
    int orientation_sign = 1;
    Branching branching;
    BorelCocycle cocycle;
    IntegralCharge charge;
    std::array<int, 4> state{};  // alpha_j on f_j
    /// Branches of t^{1/N} and x^{1/N} on e01, e12, e23.
    std::array<std::array<int, 2>, 3> root_branches{};
};

int tetra_sign(const DecoratedTetrahedron& tet);

/// Representations on e0 = [v0,v1], e1 = [v1,v2], e'0 = [v2,v3] with admissible fusions.
FusedTriple reps_from_cocycle(const Context& ctx, const DecoratedTetrahedron& tet);

/// Halved charges (c01/2, c12/2) mod N.
ChargePair tetra_charges(const Context& ctx, const DecoratedTetrahedron& tet);

/// R(a2, a0, a3, a1) for sign +, Rbar(a3, a1, a2, a0) for sign -.
cplx xi_entry(const DecoratedTetrahedron& tet, const Tensor4& R, const Tensor4& Rbar);

/// Single entry of the (charged) 6j-symbol or its inverse selected by the state.
cplx evaluate_xi(const Context& ctx, const DecoratedTetrahedron& tet, bool use_charges);
cplx evaluate_xi(const Context& ctx, const DecoratedTetrahedron& tet, const FusedTriple& t, bool use_charges);

}  // namespace cyclic6j
