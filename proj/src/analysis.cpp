#include "oneplane/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "oneplane/planarization.hpp"

namespace oneplane {

namespace {

std::vector<std::string> ids_of(const OnePlaneDrawing& d, std::initializer_list<Vertex> vs) {
  std::vector<std::string> out;
  for (Vertex v : vs) out.push_back(d.vertex_id(v));
  return out;
}

Corner first_corner(const Planarization& p, int face, Vertex v) {
  for (const Corner& c : p.corners(face))
    if (c.vertex == v) return c;
  return {v, 0};
}

int first_face_of(const Planarization& p, Vertex v) {
  if (p.isolated_face(v) >= 0) return p.isolated_face(v);
  // Face of the first dart around v.
  return p.face_of(p.rotation(v).front());
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Walk index of the dart that produces each corner of face f, in corners() order.
std::vector<int> corner_steps(const Planarization& p, int f) {
  std::vector<int> out;
  const auto& walk = p.faces()[f].walk;
  for (int k = 0; k < static_cast<int>(walk.size()); ++k)
    if (!p.is_dummy(p.dart(walk[k]).head)) out.push_back(k);
  return out;
}

int walk_index(const Planarization& p, int f, int dart) {
  const auto& walk = p.faces()[f].walk;
  return static_cast<int>(std::find(walk.begin(), walk.end(), dart) - walk.begin());
}

template <class Emit>
void enumerate_witnesses(const OnePlaneDrawing& d, CornerScope scope, Emit&& emit) {
  const Planarization& p = d.planarization();
  const auto& fs = p.faces();

  if (p.component_count() > 1) {
    // Any two components can be joined through a face of each.
    for (Vertex u = 0; u < d.vertex_count(); ++u)
      for (Vertex v = u + 1; v < d.vertex_count(); ++v) {
        if (p.component_of(u) == p.component_of(v)) continue;
        MaximalityWitness w;
        w.kind = WitnessKind::Face;
        w.u = u;
        w.v = v;
        w.face_u = first_face_of(p, u);
        w.face_v = first_face_of(p, v);
        w.corner_u = first_corner(p, w.face_u, u);
        w.corner_v = first_corner(p, w.face_v, v);
        if (!emit(w)) return;
      }
    return;
  }

  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    const auto& rv = fs[f].real_vertices;
    std::vector<Corner> corners = p.corners(f);
    for (size_t i = 0; i < rv.size(); ++i)
      for (size_t j = i + 1; j < rv.size(); ++j) {
        Vertex u = rv[i], v = rv[j];
        if (d.adjacent(u, v)) continue;
        MaximalityWitness w;
        w.kind = WitnessKind::Face;
        w.u = u;
        w.v = v;
        w.face_u = w.face_v = f;
        if (scope == CornerScope::First) {
          w.corner_u = first_corner(p, f, u);
          w.corner_v = first_corner(p, f, v);
          if (!emit(w)) return;
          continue;
        }
        for (const Corner& cu : corners) {
          if (cu.vertex != u) continue;
          for (const Corner& cv : corners) {
            if (cv.vertex != v) continue;
            w.corner_u = cu;
            w.corner_v = cv;
            if (!emit(w)) return;
          }
        }
      }
  }

  for (EdgeIndex g = 0; g < d.edge_count(); ++g) {
    if (d.is_crossed(g)) continue;
    const Edge& ge = d.edge(g);
    int fwd = p.dart_from(ge.u, g);
    int f1 = p.face_of(fwd), f2 = p.face_of(twin(fwd));
    std::vector<Corner> c1 = p.corners(f1), c2 = p.corners(f2);
    // When g has the same face on both sides, the two halves of the new edge
    // are chords of one disc and must not interleave.
    std::vector<int> k1 = corner_steps(p, f1), k2 = corner_steps(p, f2);
    const int len = static_cast<int>(fs[f1].walk.size());
    const int at_fwd = walk_index(p, f1, fwd), at_back = walk_index(p, f2, twin(fwd));
    auto compatible = [&](size_t iu, size_t iv) {
      if (f1 != f2) return true;
      // Positions doubled: corner after dart k sits at 2k+2, the midpoint of dart k at 2k+1.
      auto inside = [&](int from, int to, int x) {
        int a = ((x - from) % (2 * len) + 2 * len) % (2 * len);
        int b = ((to - from) % (2 * len) + 2 * len) % (2 * len);
        return a > 0 && a < b;
      };
      int pu = 2 * k1[iu] + 2, pv = 2 * k2[iv] + 2;
      int mu = 2 * at_fwd + 1, mv = 2 * at_back + 1;
      return inside(pu, mu, pv) == inside(pu, mu, mv);
    };
    for (Vertex u : fs[f1].real_vertices) {
      if (ge.has(u)) continue;
      for (Vertex v : fs[f2].real_vertices) {
        if (ge.has(v) || u == v || d.adjacent(u, v)) continue;
        MaximalityWitness w;
        w.kind = WitnessKind::Cross;
        w.u = u;
        w.v = v;
        w.face_u = f1;
        w.face_v = f2;
        w.crossed_edge = g;
        w.u_on_forward_side = true;
        bool emitted = false;
        for (size_t iu = 0; iu < c1.size(); ++iu) {
          if (c1[iu].vertex != u) continue;
          for (size_t iv = 0; iv < c2.size(); ++iv) {
            if (c2[iv].vertex != v || !compatible(iu, iv)) continue;
            if (scope == CornerScope::First && emitted) continue;
            w.corner_u = c1[iu];
            w.corner_v = c2[iv];
            emitted = true;
            if (!emit(w)) return;
          }
        }
      }
    }
  }
}

}  // namespace

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Crossing:
      return "crossing";
    case EdgeClass::Plain:
      return "plain";
    case EdgeClass::Exceptional:
      return "exceptional";
  }
  return "?";
}

MaximalityResult is_maximal(const OnePlaneDrawing& d) {
  MaximalityResult r;
  enumerate_witnesses(d, CornerScope::First, [&](const MaximalityWitness& w) {
    r.maximal = false;
    r.witness = w;
    return false;
  });
  return r;
}

std::vector<MaximalityWitness> all_witnesses(const OnePlaneDrawing& d, CornerScope scope) {
  std::vector<MaximalityWitness> out;
  enumerate_witnesses(d, scope, [&](const MaximalityWitness& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

CheckReport check_face_lemma(const OnePlaneDrawing& d) {
  CheckReport r{"face_lemma", {}};
  const Planarization& p = d.planarization();
  const auto& fs = p.faces();
  for (int f = 0; f < static_cast<int>(fs.size()); ++f) {
    const auto& rv = fs[f].real_vertices;
    if (rv.size() < 2) {
      Violation v{"face " + std::to_string(f) + " has fewer than two vertices", {}, {}};
      for (Vertex x : rv) v.vertices.push_back(d.vertex_id(x));
      r.violations.push_back(std::move(v));
      continue;
    }
    for (size_t i = 0; i < rv.size(); ++i)
      for (size_t j = i + 1; j < rv.size(); ++j)
        if (!d.adjacent(rv[i], rv[j]))
          r.violations.push_back({"face " + std::to_string(f) + " has non-adjacent vertices " +
                                      d.vertex_id(rv[i]) + ", " + d.vertex_id(rv[j]),
                                  ids_of(d, {rv[i], rv[j]}),
                                  {}});
  }
  return r;
}

CheckReport check_min_degree(const OnePlaneDrawing& d) {
  CheckReport r{"min_degree", {}};
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (d.degree(v) < 2)
      r.violations.push_back({"vertex " + d.vertex_id(v) + " has degree " +
                                  std::to_string(d.degree(v)),
                              ids_of(d, {v}),
                              {}});
  return r;
}

CheckReport check_crossing_k4(const OnePlaneDrawing& d) {
  CheckReport r{"crossing_k4", {}};
  for (const Crossing& x : d.crossings()) {
    const Edge& a = d.edge(x.e1);
    const Edge& b = d.edge(x.e2);
    Vertex vs[4] = {a.u, a.v, b.u, b.v};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!d.adjacent(vs[i], vs[j]))
          r.violations.push_back({"crossing of " + a.id + " and " + b.id +
                                      " misses the edge " + d.vertex_id(vs[i]) + "-" +
                                      d.vertex_id(vs[j]),
                                  ids_of(d, {vs[0], vs[1], vs[2], vs[3]}),
                                  {a.id, b.id}});
  }
  return r;
}

HermitReport find_hermits(const OnePlaneDrawing& d) {
  HermitReport out;
  out.structure.check = "hermit_structure";
  const Planarization& p = d.planarization();
  for (Vertex h = 0; h < d.vertex_count(); ++h) {
    if (d.degree(h) != 2) continue;
    out.hermits.push_back(h);
    auto fail = [&](const std::string& msg, std::vector<std::string> edges = {}) {
      out.structure.violations.push_back({"hermit " + d.vertex_id(h) + ": " + msg,
                                          {d.vertex_id(h)}, std::move(edges)});
    };
    EdgeIndex e1 = d.rotation(h)[0], e2 = d.rotation(h)[1];
    Vertex u = d.edge(e1).other(h), v = d.edge(e2).other(h);
    if (d.is_crossed(e1)) fail("edge " + d.edge(e1).id + " is crossed", {d.edge(e1).id});
    if (d.is_crossed(e2)) fail("edge " + d.edge(e2).id + " is crossed", {d.edge(e2).id});
    EdgeIndex uv = d.edge_between(u, v);
    if (uv < 0) {
      fail("neighbors " + d.vertex_id(u) + ", " + d.vertex_id(v) + " are not adjacent");
      continue;
    }
    // Merge faces across the removed arcs and look at the region around h.
    DisjointSets ds(static_cast<int>(p.faces().size()));
    for (int dd = 0; dd < p.dart_count(); dd += 2) {
      EdgeIndex e = p.dart(dd).edge;
      if (e == e1 || e == e2 || e == uv) ds.unite(p.face_of(dd), p.face_of(twin(dd)));
    }
    int root = ds.find(p.face_of(p.rotation(h)[0]));
    std::set<Vertex> region;
    for (int f = 0; f < static_cast<int>(p.faces().size()); ++f)
      if (ds.find(f) == root)
        for (Vertex x : p.faces()[f].real_vertices)
          if (x != h) region.insert(x);
    if (region != std::set<Vertex>{u, v}) {
      std::string extra;
      for (Vertex x : region)
        if (x != u && x != v) extra += (extra.empty() ? "" : ", ") + d.vertex_id(x);
      fail("face left after removal also sees " + (extra.empty() ? std::string("nothing") : extra),
           {d.edge(uv).id});
    }
  }
  return out;
}

std::vector<std::array<Vertex, 4>> k4_subgraphs(const OnePlaneDrawing& d) {
  std::vector<std::array<Vertex, 4>> out;
  const int n = d.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!d.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!d.adjacent(a, c) || !d.adjacent(b, c)) continue;
        for (Vertex x = c + 1; x < n; ++x)
          if (d.adjacent(a, x) && d.adjacent(b, x) && d.adjacent(c, x)) out.push_back({a, b, c, x});
      }
    }
  return out;
}

bool in_k4(const OnePlaneDrawing& d, EdgeIndex e) {
  const Edge& ed = d.edge(e);
  std::vector<Vertex> common;
  for (Vertex x = 0; x < d.vertex_count(); ++x)
    if (x != ed.u && x != ed.v && d.adjacent(x, ed.u) && d.adjacent(x, ed.v)) common.push_back(x);
  for (size_t i = 0; i < common.size(); ++i)
    for (size_t j = i + 1; j < common.size(); ++j)
      if (d.adjacent(common[i], common[j])) return true;
  return false;
}

Classification classify_edges(const OnePlaneDrawing& skel) {
  Classification out;
  out.stats.n = skel.vertex_count();
  for (EdgeIndex e = 0; e < skel.edge_count(); ++e) {
    EdgeClass c = skel.is_crossed(e)  ? EdgeClass::Crossing
                  : in_k4(skel, e)    ? EdgeClass::Plain
                                      : EdgeClass::Exceptional;
    out.classes.push_back(c);
    (c == EdgeClass::Crossing ? out.stats.c : c == EdgeClass::Plain ? out.stats.p : out.stats.e)++;
  }
  return out;
}

SkeletonResult skeleton(const OnePlaneDrawing& d) {
  HermitReport hr = find_hermits(d);
  SkeletonResult out;
  out.hermits = hr.hermits;
  out.skeleton = hr.hermits.empty() ? d : remove_vertices(d, hr.hermits);
  const OnePlaneDrawing& s = out.skeleton;
  for (Vertex v = 0; v < s.vertex_count(); ++v)
    if (s.degree(v) < 3)
      throw StructureError("skeleton vertex " + s.vertex_id(v) + " has degree " +
                           std::to_string(s.degree(v)));
  if (auto m = is_maximal(s); !m.maximal)
    throw StructureError("skeleton is not maximal: " + s.vertex_id(m.witness->u) + " and " +
                         s.vertex_id(m.witness->v) + " can be joined");
  out.stats = classify_edges(s).stats;
  out.drawing = {d.vertex_count(), d.edge_count(), static_cast<int>(hr.hermits.size())};
  const auto& [N, E, h] = out.drawing;
  const auto& st = out.stats;
  if (N != st.n + h || E != st.p + st.e + st.c + 2 * h)
    throw StructureError("skeleton counts do not add up: N=" + std::to_string(N) +
                         " E=" + std::to_string(E) + " h=" + std::to_string(h) +
                         " n=" + std::to_string(st.n) + " p=" + std::to_string(st.p) +
                         " e=" + std::to_string(st.e) + " c=" + std::to_string(st.c));
  return out;
}

ExceptionalStructure check_exceptional_structure(const OnePlaneDrawing& skel, EdgeIndex ab) {
  if (ab < 0 || ab >= skel.edge_count())
    throw PreconditionError("edge index out of range");
  if (skel.is_crossed(ab) || in_k4(skel, ab))
    throw PreconditionError("edge " + skel.edge(ab).id + " is not exceptional");
  ExceptionalStructure out;
  out.report.check = "exceptional_structure";
  const Planarization& p = skel.planarization();
  const Edge& e = skel.edge(ab);
  const Vertex a = e.u, b = e.v;
  auto fail = [&](const std::string& msg, std::vector<std::string> vs = {}) {
    out.report.violations.push_back({"exceptional edge " + e.id + ": " + msg, std::move(vs), {e.id}});
  };
  int fwd = p.dart_from(a, ab);
  out.face1 = p.face_of(fwd);
  out.face2 = p.face_of(twin(fwd));
  if (out.face1 == out.face2) {
    fail("borders a single face");
    return out;
  }
  Vertex apex[2] = {-1, -1};
  for (int side = 0; side < 2; ++side) {
    const auto& rv = p.faces()[side == 0 ? out.face1 : out.face2].real_vertices;
    std::vector<Vertex> rest;
    for (Vertex x : rv)
      if (x != a && x != b) rest.push_back(x);
    if (rv.size() != 3 || rest.size() != 1) {
      std::vector<std::string> vs;
      for (Vertex x : rv) vs.push_back(skel.vertex_id(x));
      fail("face on side " + std::to_string(side + 1) + " has " + std::to_string(rv.size()) +
               " vertices instead of three",
           vs);
      continue;
    }
    apex[side] = rest.front();
  }
  if (apex[0] < 0 || apex[1] < 0) return out;
  if (apex[0] != apex[1]) {
    fail("the two faces have different apexes " + skel.vertex_id(apex[0]) + ", " +
             skel.vertex_id(apex[1]),
         ids_of(skel, {apex[0], apex[1]}));
    return out;
  }
  out.apex = apex[0];
  for (Vertex x : {a, b}) {
    EdgeIndex xf = skel.edge_between(x, out.apex);
    if (xf < 0) {
      fail("missing edge " + skel.vertex_id(x) + "-" + skel.vertex_id(out.apex),
           ids_of(skel, {x, out.apex}));
    } else if (!skel.is_crossed(xf) && !in_k4(skel, xf)) {
      fail("edge " + skel.edge(xf).id + " is exceptional too", ids_of(skel, {x, out.apex}));
    }
  }
  return out;
}

K4Network k4_network(const OnePlaneDrawing& skel) {
  K4Network net;
  net.nodes = k4_subgraphs(skel);
  const int k = static_cast<int>(net.nodes.size());
  DisjointSets ds(std::max(k, 1));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool share = false;
      for (Vertex x : net.nodes[i])
        for (Vertex y : net.nodes[j]) share |= x == y;
      if (share) {
        net.links.push_back({i, j});
        ds.unite(i, j);
      }
    }
  for (int i = 1; i < k; ++i)
    if (ds.find(i) != ds.find(0)) net.connected = false;
  return net;
}

CheckReport check_counting_relations(const OnePlaneDrawing& d) {
  CheckReport r{"counting_relations", {}};
  SkeletonResult s = skeleton(d);
  const int h = s.drawing.h, c = s.stats.c, e = s.stats.e;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok)
      r.violations.push_back({what + " fails with c=" + std::to_string(c) + " e=" +
                                  std::to_string(e) + " h=" + std::to_string(h),
                              {},
                              {}});
  };
  need(c >= h, "c >= h");
  need(c >= e, "c >= e");
  need(c - e >= h, "c - e >= h");
  return r;
}

bool LemmaSuite::passed() const {
  if (!maximal || !skeleton) return false;
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

LemmaSuite run_lemma_suite(const OnePlaneDrawing& d) {
  LemmaSuite s;
  s.maximal = is_maximal(d).maximal;
  s.reports.push_back(check_face_lemma(d));
  s.reports.push_back(check_min_degree(d));
  s.reports.push_back(check_crossing_k4(d));
  s.reports.push_back(find_hermits(d).structure);

  CheckReport sk{"skeleton", {}};
  try {
    s.skeleton = skeleton(d);
  } catch (const StructureError& err) {
    sk.violations.push_back({err.what(), {}, {}});
  }
  s.reports.push_back(sk);
  if (!s.skeleton) return s;

  const OnePlaneDrawing& g = s.skeleton->skeleton;
  s.classification = classify_edges(g);
  CheckReport ex{"exceptional_structure", {}};
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    if (s.classification->classes[e] == EdgeClass::Exceptional) {
      auto r = check_exceptional_structure(g, e);
      for (auto& v : r.report.violations) ex.violations.push_back(std::move(v));
    }
  s.reports.push_back(std::move(ex));

  CheckReport net{"k4_network", {}};
  if (s.skeleton->stats.e == 0 && g.vertex_count() >= 4 && !k4_network(g).connected)
    net.violations.push_back({"skeleton without exceptional edges has a disconnected K4 network",
                              {},
                              {}});
  s.reports.push_back(std::move(net));
  s.reports.push_back(check_counting_relations(d));
  return s;
}

}  // namespace oneplane
