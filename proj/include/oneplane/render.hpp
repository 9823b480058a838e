#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

struct RenderResult {
  std::string svg;
  std::string layout;  // "tutte" or "layered"
  std::string note;    // why the layered fallback was used, empty otherwise
  int outer_face = -1;
  /// Position of every planarization node (real vertices first, then dummies).
  std::vector<std::pair<double, double>> positions;
};

/// True when the planarization has at least four nodes and stays connected
/// after removing any two of them.
bool planarization_is_3_connected(const OnePlaneDrawing& d);

/// Straight-line picture of the planarization. If it is 3-connected, the
/// longest face is pinned to a regular polygon and every other node sits at
/// the barycenter of its neighbors; otherwise nodes are placed in BFS layers
/// and the SVG metadata says so. Edges are <path class="edge"> (plus
/// "crossed" for crossing edges) and run through their crossing point;
/// vertices are <circle class="vertex"> (plus "hermit" for degree 2).
RenderResult render_svg(const OnePlaneDrawing& d);

}  // namespace oneplane
