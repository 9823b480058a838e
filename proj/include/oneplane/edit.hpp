#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"
#include "oneplane/planarization.hpp"

namespace oneplane {

enum class WitnessKind { Face, Cross };

/// Certifies that edge uv can be added to a drawing while keeping it 1-plane.
///
/// A face witness places uv inside one face (or joins two components through
/// a face of each). A cross witness routes uv through face_u, across the
/// currently uncrossed edge `crossed_edge`, into face_v. `u_on_forward_side`
/// says whether face_u is the face to the right of the crossed edge's dart
/// from its first endpoint to its second.
struct MaximalityWitness {
  WitnessKind kind = WitnessKind::Face;
  Vertex u = -1;
  Vertex v = -1;
  int face_u = -1;
  int face_v = -1;
  Corner corner_u;
  Corner corner_v;
  EdgeIndex crossed_edge = -1;
  bool u_on_forward_side = true;
};

class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adds uv following the witness. Throws WitnessError when the witness does
/// not describe a legal insertion into `d`.
OnePlaneDrawing add_edge(const OnePlaneDrawing& d, Vertex u, Vertex v,
                         const MaximalityWitness& placement,
                         std::optional<std::string> edge_id = std::nullopt);

/// Adds an isolated vertex.
OnePlaneDrawing add_vertex(const OnePlaneDrawing& d, std::string id);

/// Sub-drawing induced by the kept vertices and kept edges (edges with a
/// dropped endpoint are dropped too). A crossing whose partner edge is
/// dropped disappears. Vertex and edge order is preserved.
OnePlaneDrawing subdrawing(const OnePlaneDrawing& d, const std::vector<bool>& keep_vertex,
                           const std::vector<bool>& keep_edge);

/// Removes the given vertices with their incident edges.
OnePlaneDrawing remove_vertices(const OnePlaneDrawing& d, const std::vector<Vertex>& drop);

/// Mirror image: every rotation reversed.
OnePlaneDrawing reflect(const OnePlaneDrawing& d);

/// Mapping from a sub-drawing's vertex indices to its parent's, by id.
std::vector<Vertex> vertex_map_by_id(const OnePlaneDrawing& sub, const OnePlaneDrawing& parent);

}  // namespace oneplane
