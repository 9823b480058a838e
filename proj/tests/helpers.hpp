#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"

// Same drawing with vertices and edges shuffled, renamed, and every rotation
// started at a random position.
inline oneplane::OnePlaneDrawing scramble(const oneplane::OnePlaneDrawing& d, unsigned seed) {
  using namespace oneplane;
  std::mt19937 rng(seed);
  const int n = d.vertex_count(), m = d.edge_count();
  std::vector<int> vp(n), ep(m);  // old -> new
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(ep.begin(), ep.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(ep.begin(), ep.end(), rng);

  std::vector<std::string> ids(n);
  for (int v = 0; v < n; ++v) ids[vp[v]] = "x" + std::to_string(vp[v]);
  std::vector<Edge> edges(m);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = d.edge(e);
    edges[ep[e]] = {"f" + std::to_string(ep[e]), vp[ed.v], vp[ed.u]};
  }
  std::vector<Crossing> xs;
  for (const Crossing& x : d.crossings()) {
    Crossing y;
    y.e1 = ep[x.e2];
    y.e2 = ep[x.e1];
    const int shift = static_cast<int>(rng() % 4);
    for (int i = 0; i < 4; ++i) {
      const SegmentEnd& s = x.rotation[(i + shift) % 4];
      y.rotation[i] = {ep[s.edge], vp[s.toward]};
    }
    xs.push_back(y);
  }
  std::vector<std::vector<EdgeIndex>> rot(n);
  for (int v = 0; v < n; ++v) {
    auto r = d.rotation(v);
    const size_t k = r.size();
    const size_t shift = k ? rng() % k : 0;
    for (size_t i = 0; i < k; ++i) rot[vp[v]].push_back(ep[r[(i + shift) % k]]);
  }
  std::shuffle(xs.begin(), xs.end(), rng);
  return OnePlaneDrawing(std::move(ids), std::move(edges), std::move(xs), std::move(rot));
}
