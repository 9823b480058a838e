#pragma once

#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

/// Directed half of an arc. Darts 2k and 2k+1 are twins.
struct Dart {
  int tail = -1;
  int head = -1;
  EdgeIndex edge = -1;
};

inline int twin(int dart) { return dart ^ 1; }

/// A face of the planarization. Faces lie to the right of the darts in their
/// boundary walk. An isolated vertex owns one face with an empty walk.
struct Face {
  std::vector<int> walk;
  std::vector<Vertex> real_vertices;  // sorted, unique
  std::vector<int> crossings;         // crossing indices on the boundary
  int component = -1;
};

/// Position in the rotation of `vertex` where a new edge would be inserted:
/// the new edge-end goes to index `slot` of the vertex rotation.
struct Corner {
  Vertex vertex = -1;
  int slot = 0;

  friend bool operator==(const Corner&, const Corner&) = default;
};

/// The planar map obtained from a 1-plane drawing by turning every crossing
/// into a degree-4 dummy node. Nodes [0, N) are the real vertices, node N + k
/// is the dummy of crossing k.
class Planarization {
 public:
  explicit Planarization(const OnePlaneDrawing& d);

  int node_count() const { return static_cast<int>(rotation_.size()); }
  int real_count() const { return real_count_; }
  int arc_count() const { return static_cast<int>(darts_.size() / 2); }
  int dart_count() const { return static_cast<int>(darts_.size()); }
  bool is_dummy(int node) const { return node >= real_count_; }
  int crossing_of_node(int node) const { return node - real_count_; }

  const Dart& dart(int d) const { return darts_[d]; }
  const std::vector<int>& rotation(int node) const { return rotation_[node]; }
  int position(int d) const { return position_[d]; }

  /// Dart leaving real vertex v along edge e (toward the crossing if e is crossed).
  int dart_from(Vertex v, EdgeIndex e) const;

  /// Successor of d along its face.
  int next_in_face(int d) const;

  const std::vector<Face>& faces() const { return faces_; }
  int face_of(int d) const { return face_of_[d]; }
  /// Face owned by an isolated real vertex, or -1.
  int isolated_face(Vertex v) const { return isolated_face_[v]; }

  int component_count() const { return component_count_; }
  int component_of(int node) const { return component_[node]; }

  /// Corners of face f: for each dart entering a real vertex, the slot right
  /// after the incoming edge-end. An isolated vertex has the single slot 0.
  std::vector<Corner> corners(int f) const;

 private:
  int real_count_ = 0;
  std::vector<Dart> darts_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> position_;
  std::vector<std::vector<int>> edge_darts_;  // per edge: dart from u, dart from v
  std::vector<Face> faces_;
  std::vector<int> face_of_;
  std::vector<int> isolated_face_;
  std::vector<int> component_;
  int component_count_ = 0;
};

/// Planarization of a valid drawing. Throws DrawingError(NonPlanar) if the
/// rotation system has positive genus on some component.
const Planarization& planarize(const OnePlaneDrawing& d);

/// Faces of the planarization.
const std::vector<Face>& faces(const Planarization& p);

}  // namespace oneplane
