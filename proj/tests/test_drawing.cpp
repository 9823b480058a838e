#include <doctest.h>

#include <json.hpp>
#include <set>

#include "helpers.hpp"
#include "oneplane/analysis.hpp"
#include "oneplane/canonical.hpp"
#include "oneplane/document.hpp"
#include "oneplane/edit.hpp"
#include "oneplane/enumerate.hpp"
#include "oneplane/generators.hpp"
#include "oneplane/planarization.hpp"
#include "oneplane/sketch.hpp"
#include "oracle.hpp"

using namespace oneplane;
using json = nlohmann::ordered_json;

namespace {

json crossed_k4_doc() {
  return json::parse(R"({
    "version": 1,
    "vertices": ["a", "b", "c", "d"],
    "edges": [
      {"id": "ab", "u": "a", "v": "b"}, {"id": "bc", "u": "b", "v": "c"},
      {"id": "cd", "u": "c", "v": "d"}, {"id": "da", "u": "d", "v": "a"},
      {"id": "ac", "u": "a", "v": "c"}, {"id": "bd", "u": "b", "v": "d"}],
    "crossings": [{"e1": "ac", "e2": "bd", "rotation": [
      {"edge": "ac", "toward": "a"}, {"edge": "bd", "toward": "b"},
      {"edge": "ac", "toward": "c"}, {"edge": "bd", "toward": "d"}]}],
    "rotations": {"a": ["ab", "ac", "da"], "b": ["bc", "bd", "ab"],
                  "c": ["cd", "ac", "bc"], "d": ["da", "bd", "cd"]}
  })");
}

DrawingErrorKind error_kind(const json& doc) {
  try {
    parse_drawing(doc.dump());
  } catch (const DrawingError& e) {
    return e.kind();
  }
  FAIL("document was accepted");
  return DrawingErrorKind::Malformed;
}

std::vector<OnePlaneDrawing> samples() {
  std::vector<OnePlaneDrawing> out{gen_k4(false), gen_k4(true), gen_k4_pair(), gen_cycle4(),
                                   gen_hermit_gadget(1), gen_exceptional(1)};
  for (auto& d : saturated_corpus(12, 4, 12, 77)) out.push_back(d);
  for (int s = 0; s < 6; ++s) out.push_back(random_tree(3 + s, s));
  return out;
}

}  // namespace

TEST_CASE("plane K4 document parses with four triangular faces") {
  OnePlaneDrawing d = gen_k4(false);
  CHECK(d.vertex_count() == 4);
  CHECK(d.edge_count() == 6);
  const Planarization& p = d.planarization();
  CHECK(p.node_count() == 4);
  CHECK(p.arc_count() == 6);
  REQUIRE(p.faces().size() == 4);
  for (const Face& f : p.faces()) CHECK(f.real_vertices.size() == 3);
}

TEST_CASE("crossed K4 document gives 5 nodes, 8 arcs, 5 faces") {
  OnePlaneDrawing d = parse_drawing(crossed_k4_doc().dump());
  const Planarization& p = d.planarization();
  CHECK(p.node_count() == 5);
  CHECK(p.arc_count() == 8);
  REQUIRE(p.faces().size() == 5);
  int at_crossing = 0;
  for (const Face& f : p.faces())
    if (!f.crossings.empty()) {
      ++at_crossing;
      CHECK(f.real_vertices.size() == 2);
    }
  CHECK(at_crossing == 4);
  CHECK(isomorphic(d, gen_k4(true)));
}

TEST_CASE("invalid documents are rejected with the offending ids") {
  SUBCASE("adjacent edges cross") {
    json doc = crossed_k4_doc();
    doc["crossings"][0] = json::parse(R"({"e1": "ab", "e2": "ac", "rotation": [
      {"edge": "ab", "toward": "a"}, {"edge": "ac", "toward": "a"},
      {"edge": "ab", "toward": "b"}, {"edge": "ac", "toward": "c"}]})");
    try {
      parse_drawing(doc.dump());
      FAIL("accepted");
    } catch (const DrawingError& e) {
      CHECK(e.kind() == DrawingErrorKind::AdjacentCrossing);
      CHECK(std::string(e.what()).find("adjacent edges cross") != std::string::npos);
      CHECK(std::string(e.what()).find("'ab'") != std::string::npos);
    }
  }
  SUBCASE("loop") {
    json doc = crossed_k4_doc();
    doc["edges"][0]["v"] = "a";
    CHECK(error_kind(doc) == DrawingErrorKind::Loop);
  }
  SUBCASE("parallel edge") {
    json doc = crossed_k4_doc();
    doc["edges"][1] = json{{"id", "bc"}, {"u", "b"}, {"v", "a"}};
    CHECK(error_kind(doc) == DrawingErrorKind::ParallelEdge);
  }
  SUBCASE("edge in two crossings") {
    json doc = crossed_k4_doc();
    doc["crossings"].push_back(doc["crossings"][0]);
    CHECK(error_kind(doc) == DrawingErrorKind::DoublyCrossed);
  }
  SUBCASE("crossing rotation does not alternate") {
    json doc = crossed_k4_doc();
    std::swap(doc["crossings"][0]["rotation"][1], doc["crossings"][0]["rotation"][2]);
    CHECK(error_kind(doc) == DrawingErrorKind::CrossingRotation);
  }
  SUBCASE("rotation misses an edge") {
    json doc = crossed_k4_doc();
    doc["rotations"]["a"].erase(0);
    CHECK(error_kind(doc) == DrawingErrorKind::Rotation);
  }
  SUBCASE("rotation system of positive genus") {
    json doc = crossed_k4_doc();
    doc["crossings"] = json::array();
    CHECK(error_kind(doc) == DrawingErrorKind::NonPlanar);
  }
  SUBCASE("format errors") {
    CHECK_THROWS_AS(parse_drawing("{\"version\": 1, \"vertices\": ["), DocumentError);
    CHECK_THROWS_AS(parse_drawing("{\"version\": 2, \"vertices\": [], \"edges\": [], \"rotations\": {}}"),
                    DocumentError);
    json doc = crossed_k4_doc();
    doc["edges"][0]["u"] = "zz";
    CHECK_THROWS_AS(parse_drawing(doc.dump()), DocumentError);
  }
}

TEST_CASE("two crossed K4s sharing a vertex match an independent face count") {
  OnePlaneDrawing d = gen_k4_pair();
  const Planarization& p = d.planarization();
  CHECK(p.node_count() == 9);
  CHECK(p.arc_count() == 16);
  CHECK(p.faces().size() == 9);
  CHECK(oracle::spherical(oracle::raw(d)));
}

TEST_CASE("hermit lies on the faces around it") {
  OnePlaneDrawing d = gen_hermit_gadget(1);
  const Vertex h = *d.find_vertex("h");
  int faces_with_h = 0;
  for (const Face& f : d.planarization().faces())
    faces_with_h += std::binary_search(f.real_vertices.begin(), f.real_vertices.end(), h);
  CHECK(faces_with_h == 2);
}

TEST_CASE("Euler per component and the face-walk partition hold on every sample") {
  for (const OnePlaneDrawing& d : samples()) {
    const Planarization& p = d.planarization();
    std::vector<int> nodes(p.component_count(), 0), arcs(p.component_count(), 0),
        faces(p.component_count(), 0);
    for (int x = 0; x < p.node_count(); ++x) ++nodes[p.component_of(x)];
    for (int a = 0; a < p.arc_count(); ++a) ++arcs[p.component_of(p.dart(2 * a).tail)];
    size_t walk = 0;
    for (const Face& f : p.faces()) {
      ++faces[f.component];
      walk += f.walk.size();
    }
    for (int c = 0; c < p.component_count(); ++c) CHECK(nodes[c] - arcs[c] + faces[c] == 2);
    CHECK(walk == static_cast<size_t>(p.dart_count()));
    CHECK(oracle::spherical(oracle::raw(d)));
  }
}

TEST_CASE("serialize then parse gives the same canonical form") {
  for (const OnePlaneDrawing& d : samples()) {
    OnePlaneDrawing back = parse_drawing(serialize_drawing(d));
    CHECK(canonical_key(back) == canonical_key(d));
    CHECK(serialize_drawing(back) == serialize_drawing(d));
  }
}

TEST_CASE("canonical form ignores labels, order, rotation start and reflection") {
  unsigned seed = 1;
  for (const OnePlaneDrawing& d : samples()) {
    const std::string key = canonical_key(d);
    for (int t = 0; t < 3; ++t) {
      CHECK(canonical_key(scramble(d, seed++)) == key);
      CHECK(canonical_key(reflect(scramble(d, seed++))) == key);
    }
    CHECK(canonical_key(canonical_drawing(d)) == key);
    CHECK(serialize_drawing(canonical_drawing(scramble(d, seed++))) ==
          serialize_drawing(canonical_drawing(d)));
  }
}

TEST_CASE("canonical form separates non-isomorphic drawings") {
  CHECK_FALSE(isomorphic(gen_k4(false), gen_k4(true)));
  auto corpus = saturated_corpus(40, 6, 9, 5);
  std::set<std::string> keys;
  std::set<std::vector<int>> invariants;
  for (const auto& d : corpus) {
    keys.insert(canonical_key(d));
    std::vector<int> inv{d.vertex_count(), d.edge_count(), d.crossing_count()};
    std::vector<int> degs;
    for (Vertex v = 0; v < d.vertex_count(); ++v) degs.push_back(d.degree(v));
    std::sort(degs.begin(), degs.end());
    inv.insert(inv.end(), degs.begin(), degs.end());
    invariants.insert(inv);
  }
  // Different invariants force different keys.
  CHECK(keys.size() >= invariants.size());
}

TEST_CASE("plane 4-cycle: a chord, then the crossing diagonal, gives the crossed K4") {
  OnePlaneDrawing c4 = gen_cycle4();
  const Vertex a = *c4.find_vertex("a"), b = *c4.find_vertex("b"), c = *c4.find_vertex("c"),
               d = *c4.find_vertex("d");
  MaximalityResult m = is_maximal(c4);
  REQUIRE_FALSE(m.maximal);
  OnePlaneDrawing chord;
  for (const MaximalityWitness& w : all_witnesses(c4))
    if (w.kind == WitnessKind::Face && ((w.u == a && w.v == c) || (w.u == c && w.v == a))) {
      chord = add_edge(c4, w.u, w.v, w);
      break;
    }
  REQUIRE(chord.edge_count() == 5);
  CHECK(chord.crossing_count() == 0);
  OnePlaneDrawing k4;
  for (const MaximalityWitness& w : all_witnesses(chord))
    if (w.kind == WitnessKind::Cross && ((w.u == b && w.v == d) || (w.u == d && w.v == b))) {
      k4 = add_edge(chord, w.u, w.v, w);
      break;
    }
  REQUIRE(k4.edge_count() == 6);
  CHECK(isomorphic(k4, gen_k4(true)));
  CHECK(isomorphic(parse_drawing(serialize_drawing(k4)), gen_k4(true)));
}

TEST_CASE("no edge can be added to a K4") {
  OnePlaneDrawing k4 = gen_k4(true);
  CHECK(all_witnesses(k4, CornerScope::All).empty());
  MaximalityWitness w;
  w.u = 0;
  w.v = 1;
  CHECK_THROWS_AS(add_edge(k4, 0, 1, w), WitnessError);
}

TEST_CASE("every witness inserts one edge with at most one new crossing") {
  std::vector<OnePlaneDrawing> partial;
  for (int s = 0; s < 10; ++s) partial.push_back(random_tree(4 + s % 5, 100 + s));
  partial.push_back(gen_k4_pair());
  for (const auto& t : partial) {
    for (const MaximalityWitness& w : all_witnesses(t, CornerScope::All)) {
      OnePlaneDrawing d = add_edge(t, w.u, w.v, w);
      CHECK(d.edge_count() == t.edge_count() + 1);
      const int dx = d.crossing_count() - t.crossing_count();
      CHECK((dx == 0 || dx == 1));
      CHECK(d.adjacent(w.u, w.v));
      CHECK(oracle::spherical(oracle::raw(d)));
    }
  }
}

TEST_CASE("sketches: stray intersections are refused") {
  Sketch s;
  s.vertex("a", 0, 0).vertex("b", 2, 2).vertex("c", 2, 0).vertex("d", 0, 2);
  s.edge("a", "b").edge("c", "d");
  CHECK_THROWS(s.build());
  Sketch ok;
  ok.vertex("a", 0, 0).vertex("b", 2, 2).vertex("c", 2, 0).vertex("d", 0, 2).point("X", 1, 1);
  ok.edge("a", "b", {"X"}).edge("c", "d", {"X"});
  CHECK(ok.build().crossing_count() == 1);
}

TEST_CASE("sub-drawings and vertex removal keep drawings valid") {
  OnePlaneDrawing d = gen_hermit_gadget(1);
  OnePlaneDrawing r = remove_vertices(d, {*d.find_vertex("h")});
  CHECK(r.vertex_count() == d.vertex_count() - 1);
  CHECK(r.edge_count() == d.edge_count() - 2);
  std::vector<bool> kv(d.vertex_count(), true), ke(d.edge_count(), true);
  ke[d.crossing(0).e1] = false;
  OnePlaneDrawing s = subdrawing(d, kv, ke);
  CHECK(s.crossing_count() == d.crossing_count() - 1);
  CHECK(oracle::spherical(oracle::raw(s)));
}
