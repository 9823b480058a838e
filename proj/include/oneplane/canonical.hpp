#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

/// Isomorphism invariant of a drawing up to relabeling and reflection: the
/// lexicographically smallest traversal code of its planarization over every
/// root dart and both orientations, per component, components sorted.
std::vector<int> canonical_code(const OnePlaneDrawing& d);

/// Compact byte string of canonical_code, suitable as a hash key.
std::string canonical_key(const OnePlaneDrawing& d);

/// The drawing relabeled along its canonical traversal: vertices v0.., edges
/// e0.., rotations starting at the traversal entry. Isomorphic drawings yield
/// identical results.
OnePlaneDrawing canonical_drawing(const OnePlaneDrawing& d);

bool isomorphic(const OnePlaneDrawing& a, const OnePlaneDrawing& b);

/// Canonical adjacency bitstring of the abstract graph (brute force over all
/// vertex permutations; intended for at most 8 vertices).
std::uint64_t canonical_graph_code(const OnePlaneDrawing& d);

}  // namespace oneplane
