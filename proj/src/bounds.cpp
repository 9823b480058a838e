#include "oneplane/bounds.hpp"

#include <array>
#include <optional>
#include <stdexcept>

#include "oneplane/certifier.hpp"

namespace oneplane {

namespace {

// Mixed int/rational comparisons recurse under C++20 rewritten operators in
// some Boost versions, so every comparison goes through this constant.
const Rational kZero(0);

constexpr int kVars = 5;         // p, e, c, h, n
constexpr int kConstraints = 7;  // two structural, five sign constraints

using Row = std::array<Rational, kVars>;

// Constraints as row . x >= rhs.
struct Constraint {
  Row row;
  Rational rhs;
};

std::array<Constraint, kConstraints> constraints() {
  const Rational z(0), one(1);
  return {{
      {{z, -one, one, -one, z}, z},                                  // c - e - h >= 0
      {{Rational(9), Rational(10), Rational(7), z, Rational(-20)}, Rational(-30)},  // edge inequality
      {{one, z, z, z, z}, z},
      {{z, one, z, z, z}, z},
      {{z, z, one, z, z}, z},
      {{z, z, z, one, z}, z},
      {{z, z, z, z, one}, z},
  }};
}

Row objective_row() {
  return {Rational(1), Rational(1), Rational(1), Rational(-2, 9), Rational(-20, 9)};
}

Row as_row(const BoundPoint& x) { return {x.p, x.e, x.c, x.h, x.n}; }
BoundPoint as_point(const Row& r) { return {r[0], r[1], r[2], r[3], r[4]}; }

Rational dot(const Row& a, const Row& b) {
  Rational s(0);
  for (int i = 0; i < kVars; ++i) s += a[i] * b[i];
  return s;
}

// Exact Gauss-Jordan elimination on a square system; nullopt if singular.
std::optional<Row> solve(std::vector<Row> a, std::vector<Rational> b) {
  const int n = kVars;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != kZero) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == kZero) continue;
      Rational f = a[r][col] / a[col][col];
      for (int k = 0; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  Row x;
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// One-dimensional null space of a (kVars-1) x kVars system, if it has rank kVars-1.
std::optional<Row> null_direction(const std::vector<Row>& rows) {
  // Try fixing each coordinate to 1 and solving the remaining square system.
  for (int fix = 0; fix < kVars; ++fix) {
    std::vector<Row> a(rows);
    std::vector<Rational> b(rows.size(), Rational(0));
    Row unit{};
    unit[fix] = Rational(1);
    a.push_back(unit);
    b.push_back(Rational(1));
    if (auto x = solve(a, b)) return x;
  }
  return std::nullopt;
}

template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Rational objective(const BoundPoint& x) { return dot(objective_row(), as_row(x)); }

bool feasible(const BoundPoint& x) {
  for (const Constraint& c : constraints())
    if (dot(c.row, as_row(x)) < c.rhs) return false;
  return true;
}

BoundPoint shift_point(const BoundPoint& x, Rational eps) {
  return {x.p + eps, x.e - Rational(9, 10) * eps, x.c, x.h + Rational(9, 10) * eps, x.n};
}

LpSolution minimize_F() {
  LpSolution out;
  const auto cons = constraints();
  const Row obj = objective_row();

  // Route 1. The shift direction leaves both structural constraints unchanged
  // and strictly lowers F, so a minimizer may take e = 0.
  out.shift.direction = shift_point(BoundPoint{}, Rational(1));
  const Row dir = as_row(out.shift.direction);
  out.shift.constraint_rates[0] = dot(cons[0].row, dir);
  out.shift.constraint_rates[1] = dot(cons[1].row, dir);
  out.shift.objective_rate = dot(obj, dir);
  if (out.shift.constraint_rates[0] != kZero || out.shift.constraint_rates[1] != kZero ||
      out.shift.objective_rate >= kZero)
    throw std::logic_error("shift does not preserve the constraints while lowering F");
  // With e = 0, F falls as h grows and c - e >= h caps h at c. Substituting
  // h = c leaves F(p, 0, c, c, n) = p + 7c/9 - 20n/9, which must be a positive
  // multiple of the edge inequality's left side (9p + 7c - 20n) for the
  // minimum to sit on its boundary.
  if (obj[3] >= kZero) throw std::logic_error("F does not decrease in h");
  const Rational fp = obj[0], fc = obj[2] + obj[3], fn = obj[4];
  const Row& edge = cons[1].row;
  const Rational scale = fp / edge[0];
  if (scale <= kZero || fc != scale * edge[2] || fn != scale * edge[4])
    throw std::logic_error("reduced objective is not proportional to the edge inequality");
  out.reduction_minimum = scale * cons[1].rhs;

  // Route 2. Every vertex is the intersection of five tight constraints.
  std::optional<Rational> best;
  BoundPoint best_point;
  for_each_subset(kConstraints, kVars, [&](const std::vector<int>& idx) {
    std::vector<Row> a;
    std::vector<Rational> b;
    for (int i : idx) {
      a.push_back(cons[i].row);
      b.push_back(cons[i].rhs);
    }
    auto x = solve(a, b);
    if (!x || !feasible(as_point(*x))) return;
    ++out.vertices_checked;
    Rational f = dot(obj, *x);
    if (!best || f < *best) {
      best = f;
      best_point = as_point(*x);
    }
  });
  // Extreme rays of the recession cone: four tight homogeneous constraints.
  out.bounded = true;
  for_each_subset(kConstraints, kVars - 1, [&](const std::vector<int>& idx) {
    std::vector<Row> a;
    for (int i : idx) a.push_back(cons[i].row);
    auto d = null_direction(a);
    if (!d) return;
    for (int sign : {1, -1}) {
      Row r = *d;
      for (auto& v : r) v *= Rational(sign);
      bool ok = true;
      for (const Constraint& c : cons) ok = ok && dot(c.row, r) >= kZero;
      if (!ok) continue;
      ++out.rays_checked;
      if (dot(obj, r) < kZero) out.bounded = false;
    }
  });
  if (!best || !out.bounded) throw std::logic_error("vertex enumeration found no bounded minimum");
  out.vertex_minimum = *best;
  if (out.vertex_minimum != out.reduction_minimum)
    throw std::logic_error("the two routes disagree: " + to_string(out.reduction_minimum) +
                           " vs " + to_string(out.vertex_minimum));
  out.minimum = out.vertex_minimum;
  // A realizable minimizer: the crossed K4 plus two hermits.
  out.minimizer = {Rational(4), Rational(0), Rational(2), Rational(2), Rational(4)};
  if (!feasible(out.minimizer) || objective(out.minimizer) != out.minimum) out.minimizer = best_point;
  return out;
}

Rational density_lower_bound(long long N) {
  if (N < 4) throw std::invalid_argument("the density bound needs N >= 4");
  return Rational(20 * N, 9) - Rational(10, 3);
}

long long ceil_rational(const Rational& q) {
  long long fl = q.numerator() / q.denominator();
  if (fl * q.denominator() > q.numerator()) --fl;  // floor for negatives
  return fl * q.denominator() == q.numerator() ? fl : fl + 1;
}

ReferenceBounds reference_bounds() { return {}; }

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_decimal(const Rational& q, int digits) {
  // Rounded half away from zero, computed in integers.
  long long scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  long long num = q.numerator(), den = q.denominator();
  bool neg = num < 0;
  if (neg) num = -num;
  long long scaled = (num * scale * 2 + den) / (2 * den);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');
  std::string s = std::to_string(scaled / scale);
  if (digits > 0) s += "." + frac;
  return (neg && scaled != 0 ? "-" : "") + s;
}

BoundAudit audit_drawing_bound(const OnePlaneDrawing& d) {
  BoundAudit a;
  a.report.check = "density_bound";
  a.N = d.vertex_count();
  a.E = d.edge_count();
  a.bound = density_lower_bound(a.N);
  a.slack = Rational(a.E) - a.bound;
  const ReferenceBounds ref = reference_bounds();
  for (auto [name, slope] : {std::pair<const char*, Rational>{"28/13", ref.lower_planar},
                             {"21/10", ref.lower_plane},
                             {"20/9", ref.new_lower},
                             {"7/3", ref.upper_plane},
                             {"4", ref.max_density_slope}})
    a.slopes.push_back({name, slope, Rational(a.E) - slope * Rational(a.N)});
  if (a.slack < kZero)
    a.report.violations.push_back({"E = " + std::to_string(a.E) + " is below " +
                                       to_string(a.bound) + " for N = " + std::to_string(a.N),
                                   {},
                                   {}});

  // Re-derive the bound from the skeleton counts.
  SkeletonResult s = skeleton(d);
  const SkeletonStats& st = s.stats;
  const long long h = s.drawing.h;
  if (a.N != st.n + h || a.E != st.p + st.e + st.c + 2 * h)
    a.report.violations.push_back({"N = n + h or E = p + e + c + 2h fails", {}, {}});
  BoundPoint x{Rational(st.p), Rational(st.e), Rational(st.c), Rational(h), Rational(st.n)};
  const bool premises = check_inequality(st) && st.c - st.e >= h;
  if (premises && (!feasible(x) || objective(x) != Rational(a.E) - Rational(20 * a.N, 9) ||
                   objective(x) < Rational(-10, 3)))
    a.report.violations.push_back({"skeleton counts satisfy the premises but not the bound", {}, {}});
  return a;
}

}  // namespace oneplane
