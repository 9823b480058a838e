#include <doctest.h>

#include "oneplane/analysis.hpp"
#include "oneplane/certifier.hpp"
#include "oneplane/document.hpp"
#include "oneplane/generators.hpp"
#include "oracle.hpp"

using namespace oneplane;

TEST_CASE("K4 drawings") {
  OnePlaneDrawing plane = gen_k4(false), crossed = gen_k4(true);
  CHECK(plane.planarization().faces().size() == 4);
  CHECK(crossed.planarization().faces().size() == 5);
  const oracle::Counts c = oracle::counts(crossed);
  CHECK(c.c == 2);
  CHECK(c.p == 4);
  CHECK(oracle::maximal(plane));
  CHECK(oracle::maximal(crossed));
}

TEST_CASE("hermit gadget") {
  OnePlaneDrawing g = gen_hermit_gadget();
  HermitReport hr = find_hermits(g);
  REQUIRE(hr.hermits.size() == 1);
  CHECK(g.vertex_id(hr.hermits[0]) == "h");
  const oracle::Counts c = oracle::counts(g);
  CHECK(c.h == 1);
  CHECK(c.N - c.n == 1);
  CHECK(c.E - (c.p + c.e + c.c) == 2);
  CHECK(c.c >= c.h);
  CHECK(oracle::maximal(g));
  CHECK_THROWS(gen_hermit_gadget(3));
}

TEST_CASE("exceptional templates") {
  for (int t = 1; t <= 4; ++t) {
    CAPTURE(t);
    OnePlaneDrawing d = gen_exceptional(t);
    CHECK(oracle::maximal(d));
    CHECK(run_lemma_suite(d).passed());
    const oracle::Counts c = oracle::counts(d);
    CHECK(c.e >= 1);
    CHECK(9 * c.p + 10 * c.e + 7 * c.c >= 20 * c.n - 30);
    SkeletonResult s = skeleton(d);
    CHECK(check_inequality(s.stats));
    const Vertex a = *s.skeleton.find_vertex("a"), b = *s.skeleton.find_vertex("b");
    CHECK_FALSE(oracle::in_clique4(s.skeleton, a, b));
    CHECK(check_exceptional_structure(s.skeleton, s.skeleton.edge_between(a, b)).report.passed());
    // The unsaturated template is a valid drawing that still admits edges.
    OnePlaneDrawing tmpl = exceptional_template(t);
    CHECK(oracle::spherical(oracle::raw(tmpl)));
    CHECK_FALSE(oracle::maximal(tmpl));
  }
  CHECK_THROWS_AS(gen_exceptional(0), std::invalid_argument);
  CHECK_THROWS_AS(gen_exceptional(5), std::invalid_argument);
}

TEST_CASE("double exceptional") {
  OnePlaneDrawing d = gen_double_exceptional();
  CHECK(oracle::maximal(d));
  CHECK(oracle::counts(d).e >= 2);
  CHECK(run_lemma_suite(d).passed());
}

TEST_CASE("generator outputs survive a document round trip") {
  std::vector<OnePlaneDrawing> ds{gen_k4(true), gen_k4(false), gen_k4_pair(), gen_cycle4(), gen_hermit_gadget(1),
                                  gen_hermit_gadget(2), gen_double_exceptional(), random_tree(9, 3)};
  for (int t = 1; t <= 4; ++t) ds.push_back(gen_exceptional(t));
  for (const auto& d : ds) {
    const std::string s = serialize_drawing(d);
    CHECK(serialize_drawing(parse_drawing(s)) == s);
    CHECK(oracle::spherical(oracle::raw(d)));
  }
}

TEST_CASE("random trees") {
  for (int n = 1; n <= 12; ++n) {
    OnePlaneDrawing t = random_tree(n, n);
    CHECK(t.vertex_count() == n);
    CHECK(t.edge_count() == n - 1);
    CHECK(t.crossings().empty());
  }
}
