#include "oneplane/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <queue>
#include <sstream>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "oneplane/planarization.hpp"

namespace oneplane {

namespace {

std::vector<std::vector<int>> node_neighbors(const Planarization& p) {
  std::vector<std::vector<int>> nb(p.node_count());
  for (int d = 0; d < p.dart_count(); ++d) nb[p.dart(d).tail].push_back(p.dart(d).head);
  for (auto& l : nb) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return nb;
}

bool connected_without(const std::vector<std::vector<int>>& nb, int a, int b) {
  const int n = static_cast<int>(nb.size());
  int start = 0;
  while (start == a || start == b) ++start;
  std::vector<char> seen(n, 0);
  seen[start] = 1;
  std::vector<int> stack{start};
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : nb[x])
      if (y != a && y != b && !seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == n - (a == b ? 1 : 2);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::vector<std::pair<double, double>> tutte(const Planarization& p, const std::vector<std::vector<int>>& nb,
                                             int outer) {
  const int n = p.node_count();
  std::vector<std::pair<double, double>> pos(n, {0.0, 0.0});
  std::vector<int> pinned(n, -1);
  const std::vector<int>& walk = p.faces()[outer].walk;
  const int k = static_cast<int>(walk.size());
  for (int i = 0; i < k; ++i) {
    // The outer walk keeps the bounded side on its left, so it runs counterclockwise.
    const double t = 2 * std::numbers::pi * i / k + std::numbers::pi / 2;
    const int node = p.dart(walk[i]).tail;
    pos[node] = {std::cos(t), std::sin(t)};
    pinned[node] = i;
  }
  std::vector<int> index(n, -1);
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (pinned[v] < 0) index[v] = m++;
  if (m == 0) return pos;

  std::vector<Eigen::Triplet<double>> trips;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(m), by = Eigen::VectorXd::Zero(m);
  for (int v = 0; v < n; ++v) {
    if (index[v] < 0) continue;
    trips.emplace_back(index[v], index[v], static_cast<double>(nb[v].size()));
    for (int w : nb[v]) {
      if (index[w] >= 0) {
        trips.emplace_back(index[v], index[w], -1.0);
      } else {
        bx[index[v]] += pos[w].first;
        by[index[v]] += pos[w].second;
      }
    }
  }
  Eigen::SparseMatrix<double> L(m, m);
  L.setFromTriplets(trips.begin(), trips.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(L);
  Eigen::VectorXd x = solver.solve(bx), y = solver.solve(by);
  for (int v = 0; v < n; ++v)
    if (index[v] >= 0) pos[v] = {x[index[v]], y[index[v]]};
  return pos;
}

std::vector<std::pair<double, double>> layered(const Planarization& p, const std::vector<std::vector<int>>& nb) {
  const int n = p.node_count();
  std::vector<std::pair<double, double>> pos(n);
  std::vector<int> layer(n, -1);
  double offset = 0;
  for (int root = 0; root < n; ++root) {
    if (layer[root] >= 0) continue;
    std::vector<std::vector<int>> rows;
    std::queue<int> q;
    q.push(root);
    layer[root] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (static_cast<int>(rows.size()) <= layer[x]) rows.emplace_back();
      rows[layer[x]].push_back(x);
      for (int y : nb[x])
        if (layer[y] < 0) {
          layer[y] = layer[x] + 1;
          q.push(y);
        }
    }
    // One barycenter pass: order each row by the mean slot of its parents.
    std::vector<double> slot(n, 0.0);
    for (size_t l = 0; l < rows.size(); ++l) {
      if (l > 0) {
        std::vector<std::pair<double, int>> keyed;
        for (int x : rows[l]) {
          double sum = 0;
          int cnt = 0;
          for (int y : nb[x])
            if (layer[y] == static_cast<int>(l) - 1) sum += slot[y], ++cnt;
          keyed.push_back({cnt ? sum / cnt : 0.0, x});
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 0; i < keyed.size(); ++i) rows[l][i] = keyed[i].second;
      }
      for (size_t i = 0; i < rows[l].size(); ++i) slot[rows[l][i]] = static_cast<double>(i);
    }
    size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.size());
    for (size_t l = 0; l < rows.size(); ++l)
      for (size_t i = 0; i < rows[l].size(); ++i) {
        const double shift = (static_cast<double>(width) - static_cast<double>(rows[l].size())) / 2;
        pos[rows[l][i]] = {offset + shift + static_cast<double>(i), -static_cast<double>(l)};
      }
    offset += static_cast<double>(width) + 1;
  }
  return pos;
}

}  // namespace

bool planarization_is_3_connected(const OnePlaneDrawing& d) {
  const Planarization& p = d.planarization();
  if (p.node_count() < 4) return false;
  const auto nb = node_neighbors(p);
  for (int a = 0; a < p.node_count(); ++a)
    for (int b = a; b < p.node_count(); ++b)
      if (!connected_without(nb, a, b)) return false;
  return true;
}

RenderResult render_svg(const OnePlaneDrawing& d) {
  const Planarization& p = d.planarization();
  const auto nb = node_neighbors(p);
  RenderResult r;
  if (planarization_is_3_connected(d)) {
    r.layout = "tutte";
    size_t best = 0;
    for (int f = 0; f < static_cast<int>(p.faces().size()); ++f)
      if (p.faces()[f].walk.size() > best) {
        best = p.faces()[f].walk.size();
        r.outer_face = f;
      }
    r.positions = tutte(p, nb, r.outer_face);
  } else {
    r.layout = "layered";
    r.note = "planarization is not 3-connected";
    r.positions = layered(p, nb);
  }

  // Fit into a 600 x 600 canvas, y pointing down.
  const double size = 600, margin = 40;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (size_t i = 0; i < r.positions.size(); ++i) {
    auto [x, y] = r.positions[i];
    if (i == 0 || x < x0) x0 = x;
    if (i == 0 || x > x1) x1 = x;
    if (i == 0 || y < y0) y0 = y;
    if (i == 0 || y > y1) y1 = y;
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double scale = (size - 2 * margin) / span;
  auto X = [&](int node) { return margin + (r.positions[node].first - x0) * scale; };
  auto Y = [&](int node) { return size - margin - (r.positions[node].second - y0) * scale; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  s << "<metadata>layout=" << r.layout;
  if (!r.note.empty()) s << "; fallback: " << r.note;
  if (r.outer_face >= 0) s << "; outer face " << r.outer_face;
  s << "</metadata>\n";
  s << "<style>.edge{stroke:#333;stroke-width:2;fill:none}.crossed{stroke:#c33}"
       ".vertex{fill:#fff;stroke:#000;stroke-width:2}.hermit{fill:#fc3}"
       "text{font:12px sans-serif;text-anchor:middle}</style>\n";
  s << "<g class=\"edges\">\n";
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    const Edge& ed = d.edge(e);
    s << "<path class=\"edge" << (d.is_crossed(e) ? " crossed" : "") << "\" data-id=\""
      << escape(ed.id) << "\" d=\"M " << fmt(X(ed.u)) << ' ' << fmt(Y(ed.u));
    if (d.is_crossed(e)) {
      const int x = p.real_count() + d.crossing_of(e);
      s << " L " << fmt(X(x)) << ' ' << fmt(Y(x));
    }
    s << " L " << fmt(X(ed.v)) << ' ' << fmt(Y(ed.v)) << "\"/>\n";
  }
  s << "</g>\n<g class=\"vertices\">\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    s << "<circle class=\"vertex" << (d.degree(v) == 2 ? " hermit" : "") << "\" data-id=\""
      << escape(d.vertex_id(v)) << "\" cx=\"" << fmt(X(v)) << "\" cy=\"" << fmt(Y(v))
      << "\" r=\"9\"/>\n";
    s << "<text x=\"" << fmt(X(v)) << "\" y=\"" << fmt(Y(v) + 4) << "\">" << escape(d.vertex_id(v))
      << "</text>\n";
  }
  s << "</g>\n</svg>\n";
  r.svg = s.str();
  return r;
}

}  // namespace oneplane
