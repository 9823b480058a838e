#include <doctest.h>

#include <set>

#include "oneplane/analysis.hpp"
#include "oneplane/certifier.hpp"
#include "oneplane/enumerate.hpp"
#include "oneplane/generators.hpp"
#include "oneplane/report.hpp"
#include "oracle.hpp"

using namespace oneplane;

namespace {

OnePlaneDrawing skel_of(const OnePlaneDrawing& d) { return skeleton(d).skeleton; }

// Ledger 9p + 7c recomputed with the partner-inside rule, independently.
long long ledger(const OnePlaneDrawing& d, const std::vector<bool>& in) {
  long long s = 0;
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    if (!in[e]) continue;
    bool paired = false;
    for (const Crossing& x : d.crossings())
      if ((x.e1 == e && in[x.e2]) || (x.e2 == e && in[x.e1])) paired = true;
    s += paired ? 7 : 9;
  }
  return s;
}

std::vector<OnePlaneDrawing> cases() {
  std::vector<OnePlaneDrawing> out{gen_k4(true), gen_k4(false), gen_hermit_gadget(1), gen_hermit_gadget(2),
                                   gen_double_exceptional(), saturate(random_tree(23, 434), 434),
                                   saturate(gen_k4_pair(), 1)};
  for (int t = 1; t <= 4; ++t) out.push_back(gen_exceptional(t));
  for (auto& d : saturated_corpus(30, 6, 20, 9)) out.push_back(d);
  return out;
}

}  // namespace

TEST_CASE("inequality examples") {
  CHECK(check_inequality({4, 2, 4, 0}));
  CHECK(inequality_lhs({4, 2, 4, 0}) == 50);
  CHECK(inequality_rhs({4, 2, 4, 0}) == 50);
  CHECK(inequality_lhs({4, 0, 6, 0}) == 54);
  CHECK_FALSE(check_inequality({4, 0, 0, 0}));
}

TEST_CASE("K4 leaves need no steps") {
  for (bool crossed : {true, false}) {
    OnePlaneDrawing k = gen_k4(crossed);
    Certificate c = certify(k);
    REQUIRE(c.leaves.size() == 1);
    CHECK(c.nodes.size() == 1);
    CHECK(c.leaves[0].sweep.steps.empty());
    CHECK(c.leaves[0].sweep.seed_lhs == (crossed ? 50 : 54));
    CHECK(verify_certificate(k, c).valid);
  }
}

TEST_CASE("ledger counts an edge as crossing only when its partner is present") {
  OnePlaneDrawing k = gen_k4(true);
  std::vector<bool> all(6, true), missing = all;
  missing[k.crossing(0).e1] = false;
  CHECK(ledger_lhs(k, missing) == 45);
  CHECK(ledger_lhs(k, all) == 50);
  CHECK(ledger_lhs(k, all) - ledger_lhs(k, missing) == 5);
  CHECK(ledger(k, missing) == 45);
}

TEST_CASE("decomposition along exceptional edges") {
  SUBCASE("no exceptional edge: one leaf") {
    auto nodes = decompose_exceptional(skel_of(gen_hermit_gadget(1)));
    CHECK(nodes.size() == 1);
    CHECK(nodes[0].split_edge < 0);
  }
  SUBCASE("one exceptional edge: two leaves sharing the apex") {
    for (int t = 1; t <= 4; ++t) {
      OnePlaneDrawing s = skel_of(gen_exceptional(t));
      auto nodes = decompose_exceptional(s);
      REQUIRE(nodes.size() == 3);
      const DecompositionNode& root = nodes[0];
      CHECK(s.vertex_id(root.apex) == "f");
      const auto a = oracle::counts(piece_drawing(s, nodes[root.child_a].piece));
      const auto b = oracle::counts(piece_drawing(s, nodes[root.child_b].piece));
      const auto whole = oracle::counts(s);
      CHECK(a.e + b.e + 1 == whole.e);
      CHECK(a.n + b.n - 1 == whole.n);
      CHECK(a.p + b.p == whole.p);
      CHECK(a.c + b.c == whole.c);
      std::vector<Vertex> common;
      std::set_intersection(nodes[root.child_a].piece.vertices.begin(), nodes[root.child_a].piece.vertices.end(),
                            nodes[root.child_b].piece.vertices.begin(), nodes[root.child_b].piece.vertices.end(),
                            std::back_inserter(common));
      CHECK(common == std::vector<Vertex>{root.apex});
    }
  }
  SUBCASE("two nested exceptional edges: three leaves") {
    Certificate c = certify(skel_of(gen_double_exceptional()));
    CHECK(c.leaves.size() == 3);
    CHECK(c.nodes.size() == 5);
  }
}

TEST_CASE("certificates verify, and every step is replayed independently") {
  for (const OnePlaneDrawing& d : cases()) {
    OnePlaneDrawing s = skel_of(d);
    Certificate c = certify(s);
    REQUIRE(verify_certificate(s, c).valid);
    for (const LeafCertificate& lc : c.leaves) {
      OnePlaneDrawing leaf = piece_drawing(s, c.nodes[lc.node].piece);
      std::vector<bool> in(leaf.edge_count(), false);
      std::set<Vertex> vs(lc.sweep.seed.begin(), lc.sweep.seed.end());
      for (EdgeIndex e = 0; e < leaf.edge_count(); ++e)
        in[e] = vs.count(leaf.edge(e).u) && vs.count(leaf.edge(e).v);
      long long lhs = ledger(leaf, in);
      CHECK(lhs == lc.sweep.seed_lhs);
      CHECK(lhs >= 50);
      for (const SweepStep& st : lc.sweep.steps) {
        for (EdgeIndex e : st.new_edges) in[e] = true;
        for (Vertex v : st.new_vertices) vs.insert(v);
        const long long next = ledger(leaf, in);
        CHECK(next - lhs == st.delta_lhs);
        CHECK(st.delta_lhs >= st.delta_rhs);
        CHECK(st.delta_rhs == 20 * static_cast<long long>(st.new_vertices.size()));
        lhs = next;
        CHECK(lhs >= 20 * static_cast<long long>(vs.size()) - 30);
      }
      CHECK(vs.size() == static_cast<size_t>(leaf.vertex_count()));
      CHECK(std::count(in.begin(), in.end(), true) == leaf.edge_count());
    }
  }
}

TEST_CASE("per-operation deltas match the clean cases") {
  std::set<long long> op1, op2, op3, op4;
  for (const OnePlaneDrawing& d : cases()) {
    Certificate c = certify(skel_of(d));
    for (const LeafCertificate& lc : c.leaves)
      for (const SweepStep& st : lc.sweep.steps) {
        if (st.op == Operation::AddEdge) op1.insert(st.delta_lhs);
        if (st.op == Operation::AddVertex && st.k4s.size() == 1) op2.insert(st.delta_lhs);
        if (st.op == Operation::AddPair && st.k4s.size() == 1) op3.insert(st.delta_lhs);
        if (st.op == Operation::AddTwoK4) {
          op4.insert(st.delta_lhs);
          CHECK(st.delta_rhs == 100);
        }
      }
  }
  for (long long x : op1) CHECK((x == 9 || x == 5));
  CHECK(op2 == std::set<long long>{23, 27});
  CHECK(op3 == std::set<long long>{41, 45});
  REQUIRE_FALSE(op4.empty());
  for (long long x : op4) CHECK(x >= 100);
}

TEST_CASE("a forged op2 step adding only two edges is rejected at that step") {
  OnePlaneDrawing s = skel_of(gen_hermit_gadget(2));
  Certificate c = certify(s);
  bool forged = false;
  for (auto& lc : c.leaves)
    for (size_t i = 0; i < lc.sweep.steps.size() && !forged; ++i) {
      SweepStep& st = lc.sweep.steps[i];
      if (st.op == Operation::AddVertex && st.k4s.size() == 1 && st.delta_lhs == 27) {
        st.new_edges.pop_back();
        st.delta_lhs = 18;
        forged = true;
        VerificationResult v = verify_certificate(s, c);
        CHECK_FALSE(v.valid);
        CHECK(v.step == static_cast<int>(i));
        CHECK(v.reason.find("18 < 20") != std::string::npos);
      }
    }
  CHECK(forged);
}

TEST_CASE("tampered certificate files are rejected") {
  OnePlaneDrawing s = skel_of(gen_exceptional(2));
  Certificate c = certify(s);
  const Json j = certificate_json(s, c);
  CHECK(dump(certificate_json(s, certificate_from_json(j))) == dump(j));
  CHECK(verify_certificate(s, certificate_from_json(j)).valid);

  Json wrong_delta = j;
  wrong_delta["leaves"][0]["steps"][0]["delta_lhs"] = 1000;
  CHECK_FALSE(verify_certificate(s, certificate_from_json(wrong_delta)).valid);

  Json wrong_stats = j;
  wrong_stats["stats"]["e"] = 0;
  CHECK_FALSE(verify_certificate(s, certificate_from_json(wrong_stats)).valid);

  Json out_of_range = j;
  out_of_range["nodes"][1]["vertices"][0] = 9999;
  CHECK_FALSE(verify_certificate(s, certificate_from_json(out_of_range)).valid);

  Json unsorted = j;
  std::swap(unsorted["nodes"][1]["edges"][0], unsorted["nodes"][1]["edges"][1]);
  CHECK_FALSE(verify_certificate(s, certificate_from_json(unsorted)).valid);

  Json dropped_leaf = j;
  dropped_leaf["leaves"].erase(1);
  CHECK_FALSE(verify_certificate(s, certificate_from_json(dropped_leaf)).valid);

  Json bad_op = j;
  bad_op["leaves"][0]["steps"][0]["op"] = "op9";
  CHECK_THROWS(certificate_from_json(bad_op));
}

TEST_CASE("a stuck sweep raises a proof gap with a JSON state dump") {
  // Two K4s sharing only a vertex are not a skeleton; no operation reaches the second one.
  try {
    sweep(gen_k4_pair());
    FAIL("sweep finished");
  } catch (const ProofGapError& e) {
    Json dump = Json::parse(e.dump());
    CHECK(dump.is_object());
  }
  try {
    sweep(gen_cycle4());
    FAIL("sweep finished");
  } catch (const ProofGapError& e) {
    CHECK(std::string(e.what()).find("no K4") != std::string::npos);
  }
}
