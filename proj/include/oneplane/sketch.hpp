#pragma once

#include <string>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

/// Builds a drawing from a straight-line sketch of its planarization.
///
/// Vertices and auxiliary points carry coordinates; every edge is a polyline
/// from one vertex to another through auxiliary points. A point used by two
/// edges is their crossing, a point used by one edge is a bend. Rotations are
/// read off the angles. The sketch is checked for stray intersections, and a
/// crossing must be transversal.
class Sketch {
 public:
  Sketch& vertex(const std::string& id, double x, double y);
  Sketch& point(const std::string& id, double x, double y);
  Sketch& edge(const std::string& u, const std::string& v, std::vector<std::string> via = {},
               std::string id = {});

  OnePlaneDrawing build() const;

 private:
  struct Point {
    std::string id;
    double x = 0;
    double y = 0;
    bool is_vertex = false;
  };
  struct Polyline {
    std::string id;
    std::vector<int> points;
  };
  int index_of(const std::string& id) const;

  std::vector<Point> points_;
  std::vector<Polyline> edges_;
};

}  // namespace oneplane
