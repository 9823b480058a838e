#include "oneplane/drawing.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "oneplane/planarization.hpp"

namespace oneplane {

namespace {

[[noreturn]] void fail(DrawingErrorKind kind, const std::string& what) {
  throw DrawingError(kind, what);
}

}  // namespace

OnePlaneDrawing::OnePlaneDrawing()
    : planarization_(std::make_shared<Planarization>(*this)) {}

OnePlaneDrawing::OnePlaneDrawing(std::vector<std::string> vertex_ids,
                                 std::vector<Edge> edges,
                                 std::vector<Crossing> crossings,
                                 std::vector<std::vector<EdgeIndex>> rotations)
    : vertex_ids_(std::move(vertex_ids)),
      edges_(std::move(edges)),
      crossings_(std::move(crossings)),
      rotations_(std::move(rotations)) {
  validate();
  planarization_ = std::make_shared<Planarization>(*this);
}

void OnePlaneDrawing::validate() {
  const int n = vertex_count();
  const int m = edge_count();

  std::set<std::string_view> seen_ids;
  for (const auto& id : vertex_ids_) {
    if (id.empty()) fail(DrawingErrorKind::Malformed, "empty vertex id");
    if (!seen_ids.insert(id).second)
      fail(DrawingErrorKind::Malformed, "duplicate vertex id '" + id + "'");
  }

  adjacency_.assign(static_cast<size_t>(n) * n, -1);
  std::set<std::string_view> seen_edges;
  for (int e = 0; e < m; ++e) {
    const Edge& ed = edges_[e];
    if (ed.id.empty()) fail(DrawingErrorKind::Malformed, "empty edge id");
    if (!seen_edges.insert(ed.id).second)
      fail(DrawingErrorKind::Malformed, "duplicate edge id '" + ed.id + "'");
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
      fail(DrawingErrorKind::Malformed, "edge '" + ed.id + "' has an unknown endpoint");
    if (ed.u == ed.v)
      fail(DrawingErrorKind::Loop, "edge '" + ed.id + "' is a loop at '" + vertex_ids_[ed.u] + "'");
    auto& slot = adjacency_[static_cast<size_t>(ed.u) * n + ed.v];
    if (slot >= 0)
      fail(DrawingErrorKind::ParallelEdge,
           "edges '" + edges_[slot].id + "' and '" + ed.id + "' are parallel");
    slot = e;
    adjacency_[static_cast<size_t>(ed.v) * n + ed.u] = e;
  }

  crossing_of_.assign(m, -1);
  for (int k = 0; k < crossing_count(); ++k) {
    const Crossing& x = crossings_[k];
    if (x.e1 < 0 || x.e1 >= m || x.e2 < 0 || x.e2 >= m || x.e1 == x.e2)
      fail(DrawingErrorKind::Malformed, "crossing " + std::to_string(k) + " names invalid edges");
    for (EdgeIndex e : {x.e1, x.e2}) {
      if (crossing_of_[e] >= 0)
        fail(DrawingErrorKind::DoublyCrossed, "edge '" + edges_[e].id + "' is crossed twice");
      crossing_of_[e] = k;
    }
    const Edge& a = edges_[x.e1];
    const Edge& b = edges_[x.e2];
    if (a.has(b.u) || a.has(b.v))
      fail(DrawingErrorKind::AdjacentCrossing,
           "adjacent edges cross: '" + a.id + "' and '" + b.id + "'");
    // Segment ends must alternate between the two edges, each edge contributing
    // both of its endpoints.
    const auto& r = x.rotation;
    for (const SegmentEnd& s : r) {
      if (s.edge != x.e1 && s.edge != x.e2)
        fail(DrawingErrorKind::CrossingRotation,
             "crossing of '" + a.id + "' and '" + b.id + "' lists a foreign segment");
      if (!edges_[s.edge].has(s.toward))
        fail(DrawingErrorKind::CrossingRotation,
             "segment of '" + edges_[s.edge].id + "' points to a non-endpoint");
    }
    if (r[0].edge != r[2].edge || r[1].edge != r[3].edge || r[0].edge == r[1].edge ||
        r[0].toward == r[2].toward || r[1].toward == r[3].toward)
      fail(DrawingErrorKind::CrossingRotation,
           "crossing of '" + a.id + "' and '" + b.id + "' does not alternate");
  }

  if (static_cast<int>(rotations_.size()) != n)
    fail(DrawingErrorKind::Rotation, "rotation count differs from vertex count");
  std::vector<int> count(static_cast<size_t>(m) * 2, 0);
  for (int v = 0; v < n; ++v) {
    for (EdgeIndex e : rotations_[v]) {
      if (e < 0 || e >= m || !edges_[e].has(v))
        fail(DrawingErrorKind::Rotation,
             "rotation at '" + vertex_ids_[v] + "' lists a non-incident edge");
      int side = edges_[e].u == v ? 0 : 1;
      if (++count[2 * e + side] > 1)
        fail(DrawingErrorKind::Rotation, "rotation at '" + vertex_ids_[v] + "' repeats edge '" +
                                             edges_[e].id + "'");
    }
  }
  for (int e = 0; e < m; ++e)
    if (count[2 * e] != 1 || count[2 * e + 1] != 1)
      fail(DrawingErrorKind::Rotation, "edge '" + edges_[e].id + "' missing from a rotation");
}

EdgeIndex OnePlaneDrawing::edge_between(Vertex u, Vertex v) const {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) return -1;
  return adjacency_[static_cast<size_t>(u) * n + v];
}

EdgeIndex OnePlaneDrawing::partner(EdgeIndex e) const {
  int k = crossing_of_.at(e);
  if (k < 0) return -1;
  return crossings_[k].e1 == e ? crossings_[k].e2 : crossings_[k].e1;
}

std::vector<Vertex> OnePlaneDrawing::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(rotations_.at(v).size());
  for (EdgeIndex e : rotations_[v]) out.push_back(edges_[e].other(v));
  return out;
}

std::optional<Vertex> OnePlaneDrawing::find_vertex(std::string_view id) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertex_ids_[v] == id) return v;
  return std::nullopt;
}

std::optional<EdgeIndex> OnePlaneDrawing::find_edge(std::string_view id) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edges_[e].id == id) return e;
  return std::nullopt;
}

}  // namespace oneplane
