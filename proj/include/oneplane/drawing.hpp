#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oneplane {

class Planarization;

/// Vertices and edges are addressed by their index in the drawing.
using Vertex = int;
using EdgeIndex = int;

struct Edge {
  std::string id;
  Vertex u = -1;
  Vertex v = -1;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }
};

/// One of the four half-segments meeting at a crossing: the piece of `edge`
/// running from the crossing point toward its endpoint `toward`.
struct SegmentEnd {
  EdgeIndex edge = -1;
  Vertex toward = -1;

  friend bool operator==(const SegmentEnd&, const SegmentEnd&) = default;
};

struct Crossing {
  EdgeIndex e1 = -1;
  EdgeIndex e2 = -1;
  /// Counterclockwise order of the four segment-ends around the crossing.
  std::array<SegmentEnd, 4> rotation{};
};

enum class DrawingErrorKind {
  Malformed,
  Loop,
  ParallelEdge,
  DoublyCrossed,
  AdjacentCrossing,
  CrossingRotation,
  Rotation,
  NonPlanar,
};

class DrawingError : public std::runtime_error {
 public:
  DrawingError(DrawingErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  DrawingErrorKind kind() const { return kind_; }

 private:
  DrawingErrorKind kind_;
};

/// A simple graph with a 1-plane drawing on the sphere, given combinatorially:
/// a rotation system at the vertices plus, for every crossing, the cyclic order
/// of its four segment-ends. Immutable; every constructor validates all
/// invariants including planarity of the induced planarization.
class OnePlaneDrawing {
 public:
  OnePlaneDrawing();
  OnePlaneDrawing(std::vector<std::string> vertex_ids, std::vector<Edge> edges,
                  std::vector<Crossing> crossings,
                  std::vector<std::vector<EdgeIndex>> rotations);

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }

  const std::string& vertex_id(Vertex v) const { return vertex_ids_.at(v); }
  std::span<const std::string> vertex_ids() const { return vertex_ids_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  const Crossing& crossing(int k) const { return crossings_.at(k); }
  std::span<const Crossing> crossings() const { return crossings_; }
  std::span<const EdgeIndex> rotation(Vertex v) const { return rotations_.at(v); }
  const std::vector<std::vector<EdgeIndex>>& rotations() const { return rotations_; }

  int degree(Vertex v) const { return static_cast<int>(rotations_.at(v).size()); }
  /// Edge joining u and v, or -1.
  EdgeIndex edge_between(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return edge_between(u, v) >= 0; }
  /// Index of the crossing containing e, or -1 when e is uncrossed.
  int crossing_of(EdgeIndex e) const { return crossing_of_.at(e); }
  bool is_crossed(EdgeIndex e) const { return crossing_of_.at(e) >= 0; }
  /// The edge crossing e, or -1.
  EdgeIndex partner(EdgeIndex e) const;
  /// Neighbors of v in rotation order.
  std::vector<Vertex> neighbors(Vertex v) const;

  std::optional<Vertex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  const Planarization& planarization() const { return *planarization_; }

 private:
  void validate();

  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<EdgeIndex>> rotations_;
  std::vector<int> crossing_of_;
  std::vector<EdgeIndex> adjacency_;  // n*n matrix, -1 when absent
  std::shared_ptr<const Planarization> planarization_;
};

/// Number of vertices, edges and hermits of a drawing.
struct DrawingStats {
  int N = 0;
  int E = 0;
  int h = 0;
};

}  // namespace oneplane
