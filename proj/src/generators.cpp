#include "oneplane/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "oneplane/analysis.hpp"
#include "oneplane/enumerate.hpp"
#include "oneplane/sketch.hpp"

namespace oneplane {

namespace {

struct Pt {
  double x, y;
};

// Crossed K4 on {base, top, z, w}: base-z and top-w cross at `cross`.
void crossed_k4(Sketch& s, const std::string& base, const std::string& top, const std::string& tag,
                Pt cross, Pt z, Pt w) {
  const std::string x = "X" + tag, zi = "z" + tag, wi = "w" + tag;
  s.point(x, cross.x, cross.y).vertex(zi, z.x, z.y).vertex(wi, w.x, w.y);
  s.edge(base, zi, {x}).edge(top, wi, {x}).edge(base, wi).edge(top, zi).edge(zi, wi);
}

OnePlaneDrawing verified_exceptional(const OnePlaneDrawing& d, const std::string& what) {
  if (!is_maximal(d).maximal) throw StructureError(what + " is not maximal");
  SkeletonResult s = skeleton(d);
  Classification cls = classify_edges(s.skeleton);
  if (cls.stats.e < 1) throw StructureError(what + " has no exceptional edge");
  for (EdgeIndex e = 0; e < s.skeleton.edge_count(); ++e)
    if (cls.classes[e] == EdgeClass::Exceptional &&
        !check_exceptional_structure(s.skeleton, e).report.passed())
      throw StructureError(what + ": exceptional structure fails at " + s.skeleton.edge(e).id);
  return d;
}

}  // namespace

OnePlaneDrawing gen_k4(bool crossed) {
  Sketch s;
  if (!crossed) {
    s.vertex("a", 0, 0).vertex("b", 4, 0).vertex("c", 2, 3.5).vertex("d", 2, 1.2);
    s.edge("a", "b").edge("b", "c").edge("c", "a").edge("a", "d").edge("b", "d").edge("c", "d");
  } else {
    s.vertex("a", 0, 0).vertex("b", 2, 0).vertex("c", 2, 2).vertex("d", 0, 2).point("X", 1, 1);
    s.edge("a", "b").edge("b", "c").edge("c", "d").edge("d", "a");
    s.edge("a", "c", {"X"}).edge("b", "d", {"X"});
  }
  return s.build();
}

OnePlaneDrawing gen_k4_pair() {
  Sketch s;
  s.vertex("a", 0, 0).vertex("b", 2, 0).vertex("c", 2, 2).vertex("d", 0, 2).point("X", 1, 1);
  s.vertex("e", 4, 2).vertex("f", 4, 4).vertex("g", 2, 4).point("Y", 3, 3);
  s.edge("a", "b").edge("b", "c").edge("c", "d").edge("d", "a");
  s.edge("a", "c", {"X"}).edge("b", "d", {"X"});
  s.edge("c", "e").edge("e", "f").edge("f", "g").edge("g", "c");
  s.edge("c", "f", {"Y"}).edge("e", "g", {"Y"});
  return s.build();
}

OnePlaneDrawing gen_cycle4() {
  Sketch s;
  s.vertex("a", 0, 0).vertex("b", 1, 0).vertex("c", 1, 1).vertex("d", 0, 1);
  s.edge("a", "b").edge("b", "c").edge("c", "d").edge("d", "a");
  return s.build();
}

OnePlaneDrawing gen_hermit_gadget(int hermits) {
  if (hermits < 1 || hermits > 2) throw std::invalid_argument("hermit gadget supports 1 or 2 hermits");
  Sketch s;
  s.vertex("u", -1, 0).vertex("v", 1, 0).vertex("h", 0, 0.3);
  s.vertex("p1", 1, 2).vertex("q1", -1, 2).point("X1", 0, 1);
  s.vertex("p2", 1, -2).vertex("q2", -1, -2).point("X2", 0, -1);
  s.edge("u", "p1", {"X1"}).edge("v", "q1", {"X1"}).edge("u", "q1").edge("v", "p1").edge("p1", "q1");
  s.edge("u", "p2", {"X2"}).edge("v", "q2", {"X2"}).edge("u", "q2").edge("v", "p2").edge("p2", "q2");
  s.edge("u", "v").edge("h", "u").edge("h", "v");
  if (hermits == 2) {
    s.vertex("h2", 0, 2.3).vertex("p3", 1, 4).vertex("q3", -1, 4).point("X3", 0, 3);
    s.edge("q1", "p3", {"X3"}).edge("p1", "q3", {"X3"}).edge("q1", "q3").edge("p1", "p3");
    s.edge("p3", "q3").edge("h2", "p1").edge("h2", "q1");
  }
  OnePlaneDrawing d = saturate(s.build(), 0, WitnessChoice::First);
  HermitReport hr = find_hermits(d);
  if (static_cast<int>(hr.hermits.size()) != hermits || !hr.structure.passed())
    throw StructureError("hermit gadget lost its hermits during saturation");
  return d;
}

OnePlaneDrawing exceptional_template(int type) {
  if (type < 1 || type > 4) throw std::invalid_argument("template type must be 1..4");
  // Side kinds (E = the edge itself bounds the face, X = a crossing does) for
  // the a-f sides (outer lens) and the b-f sides (inner lens), left then right.
  static const char* kinds[4][2] = {{"XX", "XX"}, {"XX", "EX"}, {"EX", "EX"}, {"EX", "XE"}};
  const std::string outer = kinds[type - 1][0], inner = kinds[type - 1][1];

  Sketch s;
  s.vertex("a", 0, -3).vertex("b", 0, -1).vertex("f", 0, 2);
  s.edge("a", "b");

  for (int side = 0; side < 2; ++side) {
    const double sg = side == 0 ? -1 : 1;
    const std::string tag = side == 0 ? "1" : "2";
    if (inner[side] == 'X') {
      crossed_k4(s, "b", "f", "b" + tag, {sg * 1, 0.5}, {sg * 0.4, 0.7}, {sg * 0.4, 0.3});
    } else {
      s.point("B" + tag, sg * 1, 0.5);
      s.edge("b", "f", {"B" + tag});
      crossed_k4(s, "b", "f", "b" + tag, {sg * 0.6, 0.5}, {sg * 0.2, 0.7}, {sg * 0.2, 0.3});
    }
    if (outer[side] == 'X') {
      crossed_k4(s, "a", "f", "a" + tag, {sg * 3, 0}, {sg * 4.5, 1}, {sg * 4.5, -1});
    } else {
      s.point("A" + tag, sg * 3, 0);
      s.edge("a", "f", {"A" + tag});
      crossed_k4(s, "a", "f", "a" + tag, {sg * 4, 0}, {sg * 5.5, 1}, {sg * 5.5, -1});
    }
  }
  if (inner == "XX") s.edge("b", "f");
  if (outer == "XX") {
    s.point("O1", -2, -5).point("O2", -7, -4).point("O3", -7, 4).point("O4", 0, 4);
    s.edge("a", "f", {"O1", "O2", "O3", "O4"});
  }
  return s.build();
}

OnePlaneDrawing gen_exceptional(int type) {
  OnePlaneDrawing d = saturate(exceptional_template(type), static_cast<std::uint64_t>(type));
  verified_exceptional(d, "exceptional template " + std::to_string(type));
  auto a = d.find_vertex("a"), b = d.find_vertex("b");
  SkeletonResult s = skeleton(d);
  auto sa = s.skeleton.find_vertex("a"), sb = s.skeleton.find_vertex("b");
  if (!a || !b || !sa || !sb) throw StructureError("template lost a or b");
  EdgeIndex ab = s.skeleton.edge_between(*sa, *sb);
  if (ab < 0 || s.skeleton.is_crossed(ab) || in_k4(s.skeleton, ab))
    throw StructureError("ab is not exceptional in template " + std::to_string(type));
  return d;
}

OnePlaneDrawing gen_double_exceptional() {
  Sketch s;
  s.vertex("f", 0, 4).vertex("a", 0, -6).vertex("b", 0, -4).vertex("b2", 0, -2);
  s.edge("a", "b").edge("b", "b2");
  // Outer lens between a and f.
  crossed_k4(s, "a", "f", "a1", {-6, 0}, {-7.5, 1}, {-7.5, -1});
  crossed_k4(s, "a", "f", "a2", {6, 0}, {7.5, 1}, {7.5, -1});
  s.point("O1", -3, -8).point("O2", -9, -7).point("O3", -9, 7).point("O4", 0, 7);
  s.edge("a", "f", {"O1", "O2", "O3", "O4"});
  // Middle lens between b and f, with bf inside it.
  crossed_k4(s, "b", "f", "L1", {-4, 0}, {-3.4, 0.3}, {-3.4, -0.3});
  crossed_k4(s, "b", "f", "L2", {4, 0}, {3.4, 0.3}, {3.4, -0.3});
  crossed_k4(s, "b", "f", "M1", {-2, 0}, {-2.6, 0.3}, {-2.6, -0.3});
  crossed_k4(s, "b", "f", "M2", {2, 0}, {2.6, 0.3}, {2.6, -0.3});
  s.point("B1", -3, 0);
  s.edge("b", "f", {"B1"});
  // Inner lens between b2 and f.
  crossed_k4(s, "b2", "f", "i1", {-1, 0.5}, {-0.4, 0.7}, {-0.4, 0.3});
  crossed_k4(s, "b2", "f", "i2", {1, 0.5}, {0.4, 0.7}, {0.4, 0.3});
  s.edge("b2", "f");
  OnePlaneDrawing d = saturate(s.build(), 5);
  return verified_exceptional(d, "double exceptional construction");
}

OnePlaneDrawing random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  std::vector<std::vector<EdgeIndex>> rot(n);
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
    EdgeIndex e = static_cast<EdgeIndex>(edges.size());
    edges.push_back({ids[parent] + "-" + ids[i], parent, i});
    rot[parent].push_back(e);
    rot[i].push_back(e);
  }
  for (auto& r : rot)  // Fisher-Yates with an explicit modulus for portable output
    for (size_t k = r.size(); k > 1; --k) std::swap(r[k - 1], r[rng() % k]);
  return OnePlaneDrawing(std::move(ids), std::move(edges), {}, std::move(rot));
}

}  // namespace oneplane
