#include "oneplane/planarization.hpp"

#include <algorithm>
#include <numeric>

namespace oneplane {

Planarization::Planarization(const OnePlaneDrawing& d) : real_count_(d.vertex_count()) {
  const int n = d.vertex_count();
  const int nodes = n + d.crossing_count();
  rotation_.assign(nodes, {});
  edge_darts_.assign(d.edge_count(), {});

  auto add_arc = [&](int a, int b, EdgeIndex e) {
    int id = static_cast<int>(darts_.size());
    darts_.push_back({a, b, e});
    darts_.push_back({b, a, e});
    return id;
  };

  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    const Edge& ed = d.edge(e);
    int k = d.crossing_of(e);
    if (k < 0) {
      int dart = add_arc(ed.u, ed.v, e);
      edge_darts_[e] = {dart, twin(dart)};
    } else {
      int x = n + k;
      int from_u = add_arc(ed.u, x, e);
      int from_v = add_arc(ed.v, x, e);
      edge_darts_[e] = {from_u, from_v};
    }
  }

  for (Vertex v = 0; v < n; ++v)
    for (EdgeIndex e : d.rotation(v)) rotation_[v].push_back(dart_from(v, e));
  for (int k = 0; k < d.crossing_count(); ++k)
    for (const SegmentEnd& s : d.crossing(k).rotation) {
      int side = d.edge(s.edge).u == s.toward ? 0 : 1;
      rotation_[n + k].push_back(twin(edge_darts_[s.edge][side]));
    }

  position_.assign(darts_.size(), -1);
  for (int x = 0; x < nodes; ++x)
    for (int i = 0; i < static_cast<int>(rotation_[x].size()); ++i) position_[rotation_[x][i]] = i;

  // Components over nodes.
  component_.assign(nodes, -1);
  for (int s = 0; s < nodes; ++s) {
    if (component_[s] >= 0) continue;
    std::vector<int> stack{s};
    component_[s] = component_count_;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int dd : rotation_[x]) {
        int h = darts_[dd].head;
        if (component_[h] < 0) {
          component_[h] = component_count_;
          stack.push_back(h);
        }
      }
    }
    ++component_count_;
  }

  face_of_.assign(darts_.size(), -1);
  isolated_face_.assign(n, -1);
  for (int start = 0; start < dart_count(); ++start) {
    if (face_of_[start] >= 0) continue;
    Face f;
    f.component = component_[darts_[start].tail];
    int fid = static_cast<int>(faces_.size());
    int dd = start;
    do {
      face_of_[dd] = fid;
      f.walk.push_back(dd);
      int tail = darts_[dd].tail;
      if (tail < n)
        f.real_vertices.push_back(tail);
      else
        f.crossings.push_back(tail - n);
      dd = next_in_face(dd);
    } while (dd != start);
    std::sort(f.real_vertices.begin(), f.real_vertices.end());
    f.real_vertices.erase(std::unique(f.real_vertices.begin(), f.real_vertices.end()),
                          f.real_vertices.end());
    std::sort(f.crossings.begin(), f.crossings.end());
    f.crossings.erase(std::unique(f.crossings.begin(), f.crossings.end()), f.crossings.end());
    faces_.push_back(std::move(f));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!rotation_[v].empty()) continue;
    Face f;
    f.real_vertices = {v};
    f.component = component_[v];
    isolated_face_[v] = static_cast<int>(faces_.size());
    faces_.push_back(std::move(f));
  }

  std::vector<int> node_count(component_count_, 0), arcs(component_count_, 0),
      face_count(component_count_, 0);
  for (int x = 0; x < nodes; ++x) ++node_count[component_[x]];
  for (int a = 0; a < arc_count(); ++a) ++arcs[component_[darts_[2 * a].tail]];
  for (const Face& f : faces_) ++face_count[f.component];
  for (int c = 0; c < component_count_; ++c) {
    if (node_count[c] - arcs[c] + face_count[c] != 2) {
      std::string where;
      for (int x = 0; x < n && where.empty(); ++x)
        if (component_[x] == c) where = d.vertex_id(x);
      throw DrawingError(DrawingErrorKind::NonPlanar,
                         "rotation system is not planar (Euler check fails on the component of '" +
                             where + "')");
    }
  }
}

int Planarization::dart_from(Vertex v, EdgeIndex e) const {
  const auto& pair = edge_darts_.at(e);
  int a = pair[0];
  return darts_[a].tail == v ? a : pair[1];
}

int Planarization::next_in_face(int d) const {
  int t = twin(d);
  const auto& rot = rotation_[darts_[t].tail];
  return rot[(position_[t] + 1) % rot.size()];
}

std::vector<Corner> Planarization::corners(int f) const {
  const Face& face = faces_.at(f);
  std::vector<Corner> out;
  if (face.walk.empty()) {
    out.push_back({face.real_vertices.front(), 0});
    return out;
  }
  for (int dd : face.walk) {
    int h = darts_[dd].head;
    if (is_dummy(h)) continue;
    out.push_back({h, position_[twin(dd)] + 1});
  }
  return out;
}

const Planarization& planarize(const OnePlaneDrawing& d) { return d.planarization(); }

const std::vector<Face>& faces(const Planarization& p) { return p.faces(); }

}  // namespace oneplane
