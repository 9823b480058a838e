#include "oneplane/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace oneplane {

namespace {

constexpr double kEps = 1e-9;

double orient(double ax, double ay, double bx, double by, double cx, double cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

int sign(double x) { return x > kEps ? 1 : (x < -kEps ? -1 : 0); }

}  // namespace

Sketch& Sketch::vertex(const std::string& id, double x, double y) {
  points_.push_back({id, x, y, true});
  return *this;
}

Sketch& Sketch::point(const std::string& id, double x, double y) {
  points_.push_back({id, x, y, false});
  return *this;
}

Sketch& Sketch::edge(const std::string& u, const std::string& v, std::vector<std::string> via,
                     std::string id) {
  Polyline line;
  line.id = id.empty() ? u + "-" + v : std::move(id);
  line.points.push_back(index_of(u));
  for (const auto& p : via) line.points.push_back(index_of(p));
  line.points.push_back(index_of(v));
  edges_.push_back(std::move(line));
  return *this;
}

int Sketch::index_of(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(points_.size()); ++i)
    if (points_[i].id == id) return i;
  throw DrawingError(DrawingErrorKind::Malformed, "sketch has no point '" + id + "'");
}

OnePlaneDrawing Sketch::build() const {
  std::vector<int> vertex_of(points_.size(), -1);
  std::vector<std::string> vertex_ids;
  for (int i = 0; i < static_cast<int>(points_.size()); ++i)
    if (points_[i].is_vertex) {
      vertex_of[i] = static_cast<int>(vertex_ids.size());
      vertex_ids.push_back(points_[i].id);
    }

  struct Segment {
    int a, b, edge;
  };
  std::vector<Segment> segments;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> users(points_.size());
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto& pts = edges_[e].points;
    if (vertex_of[pts.front()] < 0 || vertex_of[pts.back()] < 0)
      throw DrawingError(DrawingErrorKind::Malformed,
                         "sketch edge '" + edges_[e].id + "' must join two vertices");
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
      if (points_[pts[i]].is_vertex)
        throw DrawingError(DrawingErrorKind::Malformed,
                           "sketch edge '" + edges_[e].id + "' passes through a vertex");
      users[pts[i]].push_back(e);
    }
    for (size_t i = 0; i + 1 < pts.size(); ++i) segments.push_back({pts[i], pts[i + 1], e});
    edges.push_back({edges_[e].id, vertex_of[pts.front()], vertex_of[pts.back()]});
  }

  for (size_t i = 0; i < segments.size(); ++i)
    for (size_t j = i + 1; j < segments.size(); ++j) {
      const auto& s = segments[i];
      const auto& t = segments[j];
      const Point &p1 = points_[s.a], &p2 = points_[s.b], &q1 = points_[t.a], &q2 = points_[t.b];
      int shared = (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b);
      int o1 = sign(orient(p1.x, p1.y, p2.x, p2.y, q1.x, q1.y));
      int o2 = sign(orient(p1.x, p1.y, p2.x, p2.y, q2.x, q2.y));
      int o3 = sign(orient(q1.x, q1.y, q2.x, q2.y, p1.x, p1.y));
      int o4 = sign(orient(q1.x, q1.y, q2.x, q2.y, p2.x, p2.y));
      bool collinear = o1 == 0 && o2 == 0;
      if (shared) {
        if (collinear) {
          // Overlap iff the non-shared endpoints lie on the same side of the shared one.
          int c = (s.a == t.a || s.a == t.b) ? s.a : s.b;
          int x = c == s.a ? s.b : s.a;
          int y = (t.a == c) ? t.b : t.a;
          const Point &pc = points_[c], &px = points_[x], &py = points_[y];
          double dot = (px.x - pc.x) * (py.x - pc.x) + (px.y - pc.y) * (py.y - pc.y);
          if (dot > 0)
            throw DrawingError(DrawingErrorKind::NonPlanar, "sketch segments overlap");
        }
        continue;
      }
      bool hit = (o1 * o2 <= 0 && o3 * o4 <= 0) &&
                 !(collinear && (std::max(std::min(p1.x, p2.x), std::min(q1.x, q2.x)) >
                                     std::min(std::max(p1.x, p2.x), std::max(q1.x, q2.x)) + kEps ||
                                 std::max(std::min(p1.y, p2.y), std::min(q1.y, q2.y)) >
                                     std::min(std::max(p1.y, p2.y), std::max(q1.y, q2.y)) + kEps));
      if (hit)
        throw DrawingError(DrawingErrorKind::NonPlanar,
                           "sketch edges '" + edges_[s.edge].id + "' and '" + edges_[t.edge].id +
                               "' meet away from a declared point");
    }

  auto angle = [&](int from, int to) {
    return std::atan2(points_[to].y - points_[from].y, points_[to].x - points_[from].x);
  };

  std::vector<std::vector<std::pair<double, EdgeIndex>>> around(vertex_ids.size());
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto& pts = edges_[e].points;
    around[vertex_of[pts.front()]].push_back({angle(pts.front(), pts[1]), e});
    around[vertex_of[pts.back()]].push_back({angle(pts.back(), pts[pts.size() - 2]), e});
  }
  std::vector<std::vector<EdgeIndex>> rotations(vertex_ids.size());
  for (size_t v = 0; v < around.size(); ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (auto& [a, e] : around[v]) rotations[v].push_back(e);
  }

  std::vector<Crossing> crossings;
  for (int p = 0; p < static_cast<int>(points_.size()); ++p) {
    if (users[p].empty()) continue;
    if (users[p].size() == 1) continue;  // bend
    if (users[p].size() > 2 || users[p][0] == users[p][1])
      throw DrawingError(DrawingErrorKind::Malformed,
                         "sketch point '" + points_[p].id + "' is shared by more than two edges");
    std::vector<std::pair<double, SegmentEnd>> ends;
    for (int e : users[p]) {
      const auto& pts = edges_[e].points;
      auto it = std::find(pts.begin(), pts.end(), p);
      int before = *(it - 1), after = *(it + 1);
      ends.push_back({angle(p, before), SegmentEnd{e, edges[e].u}});
      ends.push_back({angle(p, after), SegmentEnd{e, edges[e].v}});
    }
    std::sort(ends.begin(), ends.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Crossing x;
    x.e1 = users[p][0];
    x.e2 = users[p][1];
    for (int i = 0; i < 4; ++i) x.rotation[i] = ends[i].second;
    if (x.rotation[0].edge != x.rotation[2].edge)
      throw DrawingError(DrawingErrorKind::CrossingRotation,
                         "sketch edges touch without crossing at '" + points_[p].id + "'");
    crossings.push_back(x);
  }
  return OnePlaneDrawing(std::move(vertex_ids), std::move(edges), std::move(crossings),
                         std::move(rotations));
}

}  // namespace oneplane
