#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "oneplane/analysis.hpp"
#include "oneplane/drawing.hpp"

namespace oneplane {

using Rational = boost::rational<long long>;

/// A point (p, e, c, h, n) of the bound problem.
struct BoundPoint {
  Rational p, e, c, h, n;

  friend bool operator==(const BoundPoint&, const BoundPoint&) = default;
};

/// F = p + e + c - 20n/9 - 2h/9, i.e. E - 20N/9 after N = n + h, E = p + e + c + 2h.
Rational objective(const BoundPoint& x);

/// c - e >= h, 9p + 10e + 7c >= 20n - 30 and nonnegativity.
bool feasible(const BoundPoint& x);

/// Moving along `direction` keeps both constraints fixed and changes F by
/// `objective_rate` per unit.
struct ShiftCertificate {
  BoundPoint direction;
  Rational constraint_rates[2];
  Rational objective_rate;
};

struct LpSolution {
  Rational minimum;
  BoundPoint minimizer;
  ShiftCertificate shift;
  // Route through the shift to e = 0, then h = c, then the boundary of the
  // edge inequality.
  Rational reduction_minimum;
  // Route through all vertices and extreme rays of the feasible region.
  Rational vertex_minimum;
  int vertices_checked = 0;
  int rays_checked = 0;
  bool bounded = false;
};

/// Minimum of F over the feasible region, computed two ways in exact
/// arithmetic. `minimum` is set only if both routes agree; otherwise
/// std::logic_error is thrown.
LpSolution minimize_F();

/// Applies the shift with step `eps` to x.
BoundPoint shift_point(const BoundPoint& x, Rational eps);

/// 20N/9 - 10/3. Throws std::invalid_argument for N < 4.
Rational density_lower_bound(long long N);

/// Smallest integer >= q.
long long ceil_rational(const Rational& q);

struct ReferenceBounds {
  Rational lower_planar{28, 13};
  Rational upper_planar{45, 17};
  Rational lower_plane{21, 10};
  Rational upper_plane{7, 3};
  Rational new_lower{20, 9};
  Rational max_density_slope{4};
  Rational max_density_offset{-8};
};

ReferenceBounds reference_bounds();

struct SlopeComparison {
  std::string name;
  Rational slope;
  Rational excess;  // E - slope * N
};

struct BoundAudit {
  long long N = 0;
  long long E = 0;
  Rational bound;
  Rational slack;  // E - bound
  std::vector<SlopeComparison> slopes;
  CheckReport report;  // "density_bound": fails if slack < 0 or the derivation chain breaks
};

/// Checks E >= 20N/9 - 10/3 for a maximal drawing and re-derives it from the
/// skeleton counts through N = n + h, E = p + e + c + 2h.
BoundAudit audit_drawing_bound(const OnePlaneDrawing& d);

std::string to_string(const Rational& q);
std::string to_decimal(const Rational& q, int digits = 4);

}  // namespace oneplane
