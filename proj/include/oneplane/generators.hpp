#pragma once

#include <cstdint>

#include "oneplane/drawing.hpp"

namespace oneplane {

/// K4 drawn without crossings (a, b, c around d) or with its two diagonals
/// ac and bd crossing.
OnePlaneDrawing gen_k4(bool crossed);

/// Two crossed K4s glued at one vertex (not maximal).
OnePlaneDrawing gen_k4_pair();

/// Plane 4-cycle a-b-c-d.
OnePlaneDrawing gen_cycle4();

/// A maximal drawing with `hermits` (1 or 2) degree-2 vertices h, h2, each
/// between an edge and a crossing pair. Built as a sketch, then saturated.
OnePlaneDrawing gen_hermit_gadget(int hermits = 1);

/// Unsaturated sketch of one of the four exceptional-edge templates: edge ab
/// flanked by two faces with vertices {a, b, f}; each face side from a or b
/// to f is either the edge itself or a crossing of two K4 gadget edges.
OnePlaneDrawing exceptional_template(int type);

/// Maximal extension of exceptional_template(type) in which ab stays
/// exceptional. Throws std::invalid_argument for a type outside 1..4 and
/// StructureError if the result fails verification.
OnePlaneDrawing gen_exceptional(int type);

/// Two exceptional edges ab and b b2 sharing the apex f, nested; saturated.
OnePlaneDrawing gen_double_exceptional();

/// Random drawing of a tree on n vertices: vertex i hangs off a uniform
/// earlier vertex, rotations are uniform.
OnePlaneDrawing random_tree(int n, std::uint64_t seed);

}  // namespace oneplane
