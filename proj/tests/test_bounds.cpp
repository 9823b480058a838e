#include <doctest.h>

#include <random>

#include "oneplane/bounds.hpp"
#include "oneplane/enumerate.hpp"
#include "oneplane/generators.hpp"

using namespace oneplane;

namespace {

BoundPoint pt(long long p, long long e, long long c, long long h, long long n) {
  return {Rational(p), Rational(e), Rational(c), Rational(h), Rational(n)};
}

}  // namespace

TEST_CASE("LP minimum is exactly -10/3 by both routes") {
  LpSolution s = minimize_F();
  CHECK(s.minimum == Rational(-10, 3));
  CHECK(s.reduction_minimum == Rational(-10, 3));
  CHECK(s.vertex_minimum == Rational(-10, 3));
  CHECK(s.bounded);
  CHECK(feasible(s.minimizer));
  CHECK(objective(s.minimizer) == Rational(-10, 3));
}

TEST_CASE("dual multipliers certify the minimum independently") {
  // F = (1/9)(9p + 10e + 7c - 20n + 30) + (2/9)(c - e - h) + e/9 - 10/3.
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    BoundPoint x{Rational(rng() % 50, 1 + rng() % 7), Rational(rng() % 50, 1 + rng() % 7),
                 Rational(rng() % 50, 1 + rng() % 7), Rational(rng() % 50, 1 + rng() % 7),
                 Rational(rng() % 50, 1 + rng() % 7)};
    const Rational g1 = x.c - x.e - x.h;
    const Rational g2 = Rational(9) * x.p + Rational(10) * x.e + Rational(7) * x.c - Rational(20) * x.n + Rational(30);
    CHECK(objective(x) == g2 / Rational(9) + Rational(2, 9) * g1 + x.e / Rational(9) - Rational(10, 3));
    const bool ok = g1 >= Rational(0) && g2 >= Rational(0);
    CHECK(feasible(x) == ok);
    if (ok) CHECK(objective(x) >= Rational(-10, 3));
  }
  CHECK(objective(pt(4, 0, 2, 2, 4)) == Rational(-10, 3));
  CHECK(feasible(pt(4, 0, 2, 2, 4)));
}

TEST_CASE("objective at a plane K4 point") {
  CHECK(feasible(pt(6, 0, 0, 0, 4)));
  CHECK(objective(pt(6, 0, 0, 0, 4)) == Rational(-26, 9));
  CHECK(objective(pt(6, 0, 0, 0, 4)) >= Rational(-10, 3));
}

TEST_CASE("the shift keeps constraints and lowers F by eps/10") {
  LpSolution s = minimize_F();
  CHECK(s.shift.direction == BoundPoint{Rational(1), Rational(-9, 10), Rational(0), Rational(9, 10), Rational(0)});
  CHECK(s.shift.objective_rate == Rational(-1, 10));
  CHECK(s.shift.constraint_rates[0] == Rational(0));
  CHECK(s.shift.constraint_rates[1] == Rational(0));
  const BoundPoint x = pt(0, 9, 18, 9, 12);
  REQUIRE(feasible(x));
  const BoundPoint y = shift_point(x, Rational(10));
  CHECK(y == pt(10, 0, 18, 18, 12));
  CHECK(feasible(y));
  CHECK(objective(x) - objective(y) == Rational(1));
}

TEST_CASE("density bound values") {
  CHECK(density_lower_bound(4) == Rational(50, 9));
  CHECK(ceil_rational(density_lower_bound(4)) == 6);
  CHECK(density_lower_bound(9) == Rational(50, 3));
  CHECK(ceil_rational(density_lower_bound(9)) == 17);
  CHECK(density_lower_bound(13) == Rational(230, 9));
  CHECK(ceil_rational(density_lower_bound(13)) == 26);
  CHECK(density_lower_bound(6) == Rational(10));
  CHECK(ceil_rational(density_lower_bound(6)) == 10);
  CHECK(ceil_rational(Rational(-7, 2)) == -3);
  CHECK_THROWS_AS(density_lower_bound(3), std::invalid_argument);
  for (long long N = 4; N < 200; ++N) CHECK(Rational(9) * density_lower_bound(N) == Rational(20 * N - 30));
}

TEST_CASE("reference slopes are ordered") {
  ReferenceBounds r = reference_bounds();
  CHECK(r.lower_planar < r.new_lower);
  CHECK(r.new_lower < r.upper_plane);
  CHECK(r.upper_plane < r.upper_planar);
  CHECK(r.upper_planar < r.max_density_slope);
  CHECK(r.lower_plane < r.new_lower);
}

TEST_CASE("drawing audits") {
  BoundAudit k = audit_drawing_bound(gen_k4(true));
  CHECK(k.slack == Rational(4, 9));
  CHECK(k.report.passed());
  CHECK(k.slopes.size() == 5);
  for (const auto& d : saturated_corpus(30, 4, 15, 11)) {
    BoundAudit a = audit_drawing_bound(d);
    CHECK(a.report.passed());
    CHECK(9 * a.E >= 20 * a.N - 30);
    CHECK(a.slack == Rational(a.E) - Rational(20 * a.N - 30, 9));
  }
}

TEST_CASE("rational formatting") {
  CHECK(to_string(Rational(-10, 3)) == "-10/3");
  CHECK(to_string(Rational(10)) == "10");
  CHECK(to_decimal(Rational(50, 9)) == "5.5556");
  CHECK(to_decimal(Rational(-10, 3), 2) == "-3.33");
}
