#include "oneplane/edit.hpp"

#include <algorithm>
#include <unordered_map>

namespace oneplane {

namespace {

bool corner_on_face(const Planarization& p, int face, const Corner& c) {
  if (face < 0 || face >= static_cast<int>(p.faces().size())) return false;
  for (const Corner& k : p.corners(face))
    if (k == c) return true;
  return false;
}

std::string fresh_edge_id(const OnePlaneDrawing& d, Vertex u, Vertex v) {
  std::string base = d.vertex_id(u) + "-" + d.vertex_id(v);
  if (!d.find_edge(base)) return base;
  for (int k = 2;; ++k) {
    std::string id = base + "~" + std::to_string(k);
    if (!d.find_edge(id)) return id;
  }
}

}  // namespace

OnePlaneDrawing add_edge(const OnePlaneDrawing& d, Vertex u, Vertex v,
                         const MaximalityWitness& placement, std::optional<std::string> edge_id) {
  const int n = d.vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw WitnessError("unknown vertex");
  if (u == v) throw WitnessError("cannot add a loop");
  if (d.adjacent(u, v))
    throw WitnessError("edge " + d.vertex_id(u) + d.vertex_id(v) + " already present");

  MaximalityWitness w = placement;
  if (w.u == v && w.v == u) {
    std::swap(w.u, w.v);
    std::swap(w.face_u, w.face_v);
    std::swap(w.corner_u, w.corner_v);
    w.u_on_forward_side = !w.u_on_forward_side;
  }
  if (w.u != u || w.v != v || w.corner_u.vertex != u || w.corner_v.vertex != v)
    throw WitnessError("witness does not describe the requested pair");

  const Planarization& p = d.planarization();
  const bool u_isolated = d.degree(u) == 0;
  const bool v_isolated = d.degree(v) == 0;
  auto check_corner = [&](int face, const Corner& c, bool isolated) {
    if (isolated) {
      if (c.slot != 0) throw WitnessError("isolated vertex admits only slot 0");
      return;
    }
    if (!corner_on_face(p, face, c)) throw WitnessError("corner is not on the named face");
  };

  std::optional<Crossing> new_crossing;
  const EdgeIndex m = d.edge_count();
  if (w.kind == WitnessKind::Face) {
    check_corner(w.face_u, w.corner_u, false);
    check_corner(w.face_v, w.corner_v, false);
    if (w.face_u != w.face_v &&
        p.faces()[w.face_u].component == p.faces()[w.face_v].component)
      throw WitnessError("face witness names two faces of one component");
  } else {
    const EdgeIndex g = w.crossed_edge;
    if (g < 0 || g >= d.edge_count()) throw WitnessError("crossed edge out of range");
    const Edge& ge = d.edge(g);
    if (d.is_crossed(g)) throw WitnessError("edge '" + ge.id + "' is already crossed");
    if (ge.has(u) || ge.has(v))
      throw WitnessError("edge '" + ge.id + "' shares an endpoint with the new edge");
    int forward = p.dart_from(ge.u, g);
    int f_forward = p.face_of(forward);
    int f_backward = p.face_of(twin(forward));
    int want_u = w.u_on_forward_side ? f_forward : f_backward;
    int want_v = w.u_on_forward_side ? f_backward : f_forward;
    if (!u_isolated && w.face_u != want_u) throw WitnessError("u is not beside the crossed edge");
    if (!v_isolated && w.face_v != want_v) throw WitnessError("v is not beside the crossed edge");
    check_corner(want_u, w.corner_u, u_isolated);
    check_corner(want_v, w.corner_v, v_isolated);
    Crossing x;
    x.e1 = g;
    x.e2 = m;
    if (w.u_on_forward_side)
      x.rotation = {SegmentEnd{g, ge.v}, SegmentEnd{m, v}, SegmentEnd{g, ge.u}, SegmentEnd{m, u}};
    else
      x.rotation = {SegmentEnd{g, ge.v}, SegmentEnd{m, u}, SegmentEnd{g, ge.u}, SegmentEnd{m, v}};
    new_crossing = x;
  }

  std::vector<std::string> ids(d.vertex_ids().begin(), d.vertex_ids().end());
  std::vector<Edge> edges(d.edges().begin(), d.edges().end());
  edges.push_back({edge_id ? *edge_id : fresh_edge_id(d, u, v), u, v});
  std::vector<Crossing> crossings(d.crossings().begin(), d.crossings().end());
  if (new_crossing) crossings.push_back(*new_crossing);
  auto rotations = d.rotations();
  rotations[u].insert(rotations[u].begin() + w.corner_u.slot, m);
  rotations[v].insert(rotations[v].begin() + w.corner_v.slot, m);
  try {
    return OnePlaneDrawing(std::move(ids), std::move(edges), std::move(crossings),
                           std::move(rotations));
  } catch (const DrawingError& err) {
    throw WitnessError(std::string("insertion produced an invalid drawing: ") + err.what());
  }
}

OnePlaneDrawing add_vertex(const OnePlaneDrawing& d, std::string id) {
  std::vector<std::string> ids(d.vertex_ids().begin(), d.vertex_ids().end());
  ids.push_back(std::move(id));
  auto rotations = d.rotations();
  rotations.emplace_back();
  return OnePlaneDrawing(std::move(ids), {d.edges().begin(), d.edges().end()},
                         {d.crossings().begin(), d.crossings().end()}, std::move(rotations));
}

OnePlaneDrawing subdrawing(const OnePlaneDrawing& d, const std::vector<bool>& keep_vertex,
                           const std::vector<bool>& keep_edge) {
  std::vector<int> vmap(d.vertex_count(), -1), emap(d.edge_count(), -1);
  std::vector<std::string> ids;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (keep_vertex[v]) {
      vmap[v] = static_cast<int>(ids.size());
      ids.push_back(d.vertex_id(v));
    }
  std::vector<Edge> edges;
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    const Edge& ed = d.edge(e);
    if (!keep_edge[e] || vmap[ed.u] < 0 || vmap[ed.v] < 0) continue;
    emap[e] = static_cast<int>(edges.size());
    edges.push_back({ed.id, vmap[ed.u], vmap[ed.v]});
  }
  std::vector<Crossing> crossings;
  for (const Crossing& x : d.crossings()) {
    if (emap[x.e1] < 0 || emap[x.e2] < 0) continue;
    Crossing y;
    y.e1 = emap[x.e1];
    y.e2 = emap[x.e2];
    for (int i = 0; i < 4; ++i)
      y.rotation[i] = {emap[x.rotation[i].edge], vmap[x.rotation[i].toward]};
    crossings.push_back(y);
  }
  std::vector<std::vector<EdgeIndex>> rotations;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (vmap[v] < 0) continue;
    auto& rot = rotations.emplace_back();
    for (EdgeIndex e : d.rotation(v))
      if (emap[e] >= 0) rot.push_back(emap[e]);
  }
  return OnePlaneDrawing(std::move(ids), std::move(edges), std::move(crossings),
                         std::move(rotations));
}

OnePlaneDrawing remove_vertices(const OnePlaneDrawing& d, const std::vector<Vertex>& drop) {
  std::vector<bool> keep_v(d.vertex_count(), true);
  for (Vertex v : drop) keep_v.at(v) = false;
  return subdrawing(d, keep_v, std::vector<bool>(d.edge_count(), true));
}

OnePlaneDrawing reflect(const OnePlaneDrawing& d) {
  auto rotations = d.rotations();
  for (auto& r : rotations) std::reverse(r.begin(), r.end());
  std::vector<Crossing> crossings(d.crossings().begin(), d.crossings().end());
  for (auto& x : crossings) std::reverse(x.rotation.begin(), x.rotation.end());
  return OnePlaneDrawing({d.vertex_ids().begin(), d.vertex_ids().end()},
                         {d.edges().begin(), d.edges().end()}, std::move(crossings),
                         std::move(rotations));
}

std::vector<Vertex> vertex_map_by_id(const OnePlaneDrawing& sub, const OnePlaneDrawing& parent) {
  std::unordered_map<std::string_view, Vertex> index;
  for (Vertex v = 0; v < parent.vertex_count(); ++v) index.emplace(parent.vertex_id(v), v);
  std::vector<Vertex> out(sub.vertex_count(), -1);
  for (Vertex v = 0; v < sub.vertex_count(); ++v) {
    auto it = index.find(sub.vertex_id(v));
    if (it != index.end()) out[v] = it->second;
  }
  return out;
}

}  // namespace oneplane
