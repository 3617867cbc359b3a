#pragma once

#include <optional>
#include <string>

#include "cyclic6j/charged.hpp"
#include "cyclic6j/tetra.hpp"

namespace cyclic6j {

/// Schema errors carry a dotted path to the offending field.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string rep_to_json(const StandardRep& r);
StandardRep rep_from_json(const std::string& text);
/// {"rho": {a, y}, "mu": {a, y}, "nu": {a, y}}
std::array<StandardRep, 3> reps_from_json(const std::string& text);

/// Parsed form of a tensor dump. Complex numbers are [re, im] pairs.
struct TensorDump {
    int N = 0;
    std::string kind;  // "sixj" or "c-sixj"
    FusedTriple triple;
    cplx h;
    std::optional<ChargePair> charges;
    cplx prefactor{1.0};
    Tensor4 R;     // [gamma][delta][alpha][beta]
    Tensor4 Rbar;  // [alpha][beta][gamma][delta]
};

std::string dump_sixj(const SixJTensor& s);
std::string dump_charged(const ChargedSixJTensor& s);
TensorDump load_tensor(const std::string& text);

/// {"orientation", "vertex_order", "cocycle": {g01, g12, g23: {t, x}},
///  "charges": {"01": int, ...}, "state": [4], "root_branches": {"01": [bt, bx], ...}}.
/// Validates branching, fullness and the charge face sums.
DecoratedTetrahedron parse_tetra(const Context& ctx, const std::string& text);
std::string tetra_to_json(const DecoratedTetrahedron& tet);

}  // namespace cyclic6j
