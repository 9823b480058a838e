#include <doctest.h>

#include <cstdlib>
#include <set>

#include "oneplane/analysis.hpp"
#include "oneplane/bounds.hpp"
#include "oneplane/canonical.hpp"
#include "oneplane/certifier.hpp"
#include "oneplane/document.hpp"
#include "oneplane/enumerate.hpp"
#include "oneplane/generators.hpp"
#include "oracle.hpp"

using namespace oneplane;

namespace {

std::set<std::string> keys(const EnumerationResult& r) {
  std::set<std::string> out;
  for (const auto& d : r.drawings) out.insert(canonical_key(d));
  return out;
}

const EnumerationResult& census(int n) {
  static std::map<int, EnumerationResult> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_maximal(n)).first;
  return it->second;
}

}  // namespace

TEST_CASE("saturate") {
  OnePlaneDrawing s = saturate(gen_cycle4(), 0);
  CHECK(is_maximal(s).maximal);
  CHECK(s.edge_count() >= 6);
  CHECK(audit_drawing_bound(s).report.passed());

  OnePlaneDrawing k = gen_k4(true);
  CHECK(serialize_drawing(saturate(k, 3)) == serialize_drawing(k));

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    OnePlaneDrawing d = saturate(random_tree(8, seed), seed);
    CHECK(oracle::maximal(d));
    CHECK(run_lemma_suite(d).passed());
    CHECK(serialize_drawing(saturate(random_tree(8, seed), seed)) == serialize_drawing(d));
  }
  OnePlaneDrawing f1 = saturate(random_tree(9, 1), 1, WitnessChoice::First);
  CHECK(serialize_drawing(f1) == serialize_drawing(saturate(random_tree(9, 1), 2, WitnessChoice::First)));
}

TEST_CASE("corpus is deterministic and independent of the worker count") {
  auto a = saturated_corpus(12, 4, 15, 99);
  ::setenv("ONEPLANE_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  auto b = saturated_corpus(12, 4, 15, 99);
  ::unsetenv("ONEPLANE_THREADS");
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(serialize_drawing(a[i]) == serialize_drawing(b[i]));
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].vertex_count() == 4 + static_cast<int>(i % 12));
}

TEST_CASE("n = 4 census: the two K4 drawings") {
  const EnumerationResult& r = census(4);
  CHECK(r.e_prime == 6);
  CHECK(keys(r) == std::set<std::string>{canonical_key(gen_k4(true)), canonical_key(gen_k4(false))});
  CHECK(r.graph_count == 1);
  CHECK(r.histogram == std::map<int, int>{{6, 2}});
}

TEST_CASE("n = 5 census matches the brute-force census") {
  const EnumerationResult& r = census(5);
  CHECK(keys(r) == oracle::census_keys(5));
  CHECK(r.e_prime >= ceil_rational(density_lower_bound(5)));
  CHECK(r.e_prime <= 4 * 5 - 8);
}

TEST_CASE("n = 6 census") {
  const EnumerationResult& r = census(6);
  CHECK(r.e_prime >= ceil_rational(density_lower_bound(6)));
  CHECK(r.e_prime <= 16);
  std::set<std::string> ks = keys(r);
  CHECK(ks.size() == r.drawings.size());
  for (const auto& d : r.drawings) {
    CHECK(d.vertex_count() == 6);
    CHECK(oracle::maximal(d));
    CHECK(run_lemma_suite(d).passed());
    OnePlaneDrawing s = skeleton(d).skeleton;
    CHECK(verify_certificate(s, certify(s)).valid);
  }
  // Random saturations of 6-vertex trees must all land in the census.
  for (std::uint64_t seed = 0; seed < 300; ++seed)
    CHECK(ks.count(canonical_key(saturate(random_tree(6, seed), seed))));
  CHECK_THROWS_AS(enumerate_maximal(7), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_maximal(3), std::invalid_argument);
}

TEST_CASE("an exceptional edge turns up in saturated drawings") {
  ExceptionalExample x = find_exceptional_example(2000);
  CHECK(x.source.rfind("corpus seed", 0) == 0);
  CHECK(is_maximal(x.drawing).maximal);
  SkeletonResult s = skeleton(x.drawing);
  CHECK(s.stats.e >= 1);
  bool free_edge = false;
  for (EdgeIndex e = 0; e < s.skeleton.edge_count(); ++e)
    if (!oracle::in_clique4(s.skeleton, s.skeleton.edge(e).u, s.skeleton.edge(e).v)) free_edge = true;
  CHECK(free_edge);
  CHECK(run_lemma_suite(x.drawing).passed());
}
