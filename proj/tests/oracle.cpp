#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "oneplane/canonical.hpp"

namespace oracle {

using oneplane::OnePlaneDrawing;

RawDrawing raw(const OnePlaneDrawing& d) {
  RawDrawing r;
  r.n = d.vertex_count();
  for (const auto& e : d.edges()) r.edges.push_back({e.u, e.v});
  for (int v = 0; v < r.n; ++v) r.rot.emplace_back(d.rotation(v).begin(), d.rotation(v).end());
  for (const auto& x : d.crossings()) {
    RawCrossing c;
    c.e1 = x.e1;
    c.e2 = x.e2;
    for (int i = 0; i < 4; ++i) c.ends[i] = {x.rotation[i].edge, x.rotation[i].toward};
    r.crossings.push_back(c);
  }
  return r;
}

namespace {

int find(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

// Planarization with fixed dummies; the real rotations are filled per test.
struct Sphere {
  int n = 0, nodes = 0, arcs = 0, components = 0;
  std::vector<int> head;                  // per dart
  std::vector<std::vector<int>> out;      // per node, darts in rotation order
  std::vector<int> pos;                   // per dart, index in out[tail]
  std::vector<std::vector<int>> dart_of;  // [vertex][edge] -> dart leaving vertex, or -1
  std::vector<char> seen;
  int isolated = 0;

  explicit Sphere(const RawDrawing& r) {
    n = r.n;
    const int m = static_cast<int>(r.edges.size());
    std::vector<int> cross_of(m, -1);
    for (int k = 0; k < static_cast<int>(r.crossings.size()); ++k) {
      cross_of[r.crossings[k].e1] = k;
      cross_of[r.crossings[k].e2] = k;
    }
    nodes = n + static_cast<int>(r.crossings.size());
    std::vector<std::pair<int, int>> arc;
    // For a crossed edge: arc u->X then X->v.
    std::vector<std::array<int, 2>> edge_arcs(m);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = r.edges[e];
      if (cross_of[e] < 0) {
        edge_arcs[e] = {static_cast<int>(arc.size()), -1};
        arc.push_back({u, v});
      } else {
        const int x = n + cross_of[e];
        edge_arcs[e] = {static_cast<int>(arc.size()), static_cast<int>(arc.size()) + 1};
        arc.push_back({u, x});
        arc.push_back({x, v});
      }
    }
    arcs = static_cast<int>(arc.size());
    head.assign(2 * arcs, -1);
    for (int a = 0; a < arcs; ++a) {
      head[2 * a] = arc[a].second;
      head[2 * a + 1] = arc[a].first;
    }
    dart_of.assign(n, std::vector<int>(m, -1));
    for (int e = 0; e < m; ++e) {
      auto [u, v] = r.edges[e];
      if (edge_arcs[e][1] < 0) {
        dart_of[u][e] = 2 * edge_arcs[e][0];
        dart_of[v][e] = 2 * edge_arcs[e][0] + 1;
      } else {
        dart_of[u][e] = 2 * edge_arcs[e][0];
        dart_of[v][e] = 2 * edge_arcs[e][1] + 1;
      }
    }
    out.assign(nodes, {});
    pos.assign(2 * arcs, -1);
    for (int k = 0; k < static_cast<int>(r.crossings.size()); ++k) {
      for (auto [e, t] : r.crossings[k].ends) {
        auto [u, v] = r.edges[e];
        (void)v;
        // X toward u is the twin of u->X; X toward v is X->v.
        const int d = t == u ? 2 * edge_arcs[e][0] + 1 : 2 * edge_arcs[e][1];
        pos[d] = static_cast<int>(out[n + k].size());
        out[n + k].push_back(d);
      }
    }
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [a, b] : arc) parent[find(parent, a)] = find(parent, b);
    for (int x = 0; x < nodes; ++x) components += find(parent, x) == x;
    seen.assign(2 * arcs, 0);
  }

  void set_rotation(int v, const std::vector<int>& edges) {
    out[v].clear();
    for (int e : edges) {
      const int d = dart_of[v][e];
      pos[d] = static_cast<int>(out[v].size());
      out[v].push_back(d);
    }
  }

  bool test() {
    int faces = 0;
    for (int v = 0; v < n; ++v) faces += out[v].empty();
    std::fill(seen.begin(), seen.end(), 0);
    for (int d0 = 0; d0 < 2 * arcs; ++d0) {
      if (seen[d0]) continue;
      ++faces;
      for (int d = d0; !seen[d];) {
        seen[d] = 1;
        const auto& ring = out[head[d]];
        d = ring[(pos[d ^ 1] + 1) % ring.size()];
      }
    }
    return nodes - arcs + faces == 2 * components;
  }
};

}  // namespace

bool spherical(const RawDrawing& r) {
  Sphere s(r);
  for (int v = 0; v < r.n; ++v) s.set_rotation(v, r.rot[v]);
  return s.test();
}

bool maximal(const OnePlaneDrawing& d) {
  const RawDrawing base = raw(d);
  const int m = static_cast<int>(base.edges.size());
  std::vector<char> crossed(m, 0);
  for (const auto& x : base.crossings) crossed[x.e1] = crossed[x.e2] = 1;
  auto slots = [&](int v) { return std::max<int>(1, static_cast<int>(base.rot[v].size())); };

  for (int u = 0; u < base.n; ++u)
    for (int v = u + 1; v < base.n; ++v) {
      bool adjacent = false;
      for (auto [a, b] : base.edges) adjacent |= (a == u && b == v) || (a == v && b == u);
      if (adjacent) continue;
      for (int i = 0; i < slots(u); ++i)
        for (int j = 0; j < slots(v); ++j) {
          RawDrawing c = base;
          c.edges.push_back({u, v});
          c.rot[u].insert(c.rot[u].begin() + i, m);
          c.rot[v].insert(c.rot[v].begin() + j, m);
          if (spherical(c)) return false;
          for (int g = 0; g < m; ++g) {
            auto [a, b] = base.edges[g];
            if (crossed[g] || a == u || a == v || b == u || b == v) continue;
            for (int chir = 0; chir < 2; ++chir) {
              RawDrawing x = c;
              RawCrossing rc;
              rc.e1 = g;
              rc.e2 = m;
              rc.ends = {std::pair{g, a}, std::pair{m, chir ? v : u}, std::pair{g, b},
                         std::pair{m, chir ? u : v}};
              x.crossings.push_back(rc);
              if (spherical(x)) return false;
            }
          }
        }
    }
  return true;
}

bool in_clique4(const OnePlaneDrawing& d, int a, int b) {
  const int n = d.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : d.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (x == a || x == b || y == a || y == b) continue;
      if (adj[a][b] && adj[x][y] && adj[a][x] && adj[a][y] && adj[b][x] && adj[b][y]) return true;
    }
  return false;
}

Counts counts(const OnePlaneDrawing& d) {
  Counts k;
  k.N = d.vertex_count();
  k.E = d.edge_count();
  std::vector<int> deg(k.N, 0);
  for (const auto& e : d.edges()) ++deg[e.u], ++deg[e.v];
  std::vector<char> alive(k.N, 1);
  for (int v = 0; v < k.N; ++v)
    if (deg[v] == 2) alive[v] = 0, ++k.h;
  k.n = k.N - k.h;
  const int m = d.edge_count();
  std::vector<char> live(m, 0);
  for (int e = 0; e < m; ++e) live[e] = alive[d.edge(e).u] && alive[d.edge(e).v];
  std::vector<std::vector<char>> adj(k.N, std::vector<char>(k.N, 0));
  for (int e = 0; e < m; ++e)
    if (live[e]) adj[d.edge(e).u][d.edge(e).v] = adj[d.edge(e).v][d.edge(e).u] = 1;
  std::vector<int> partner(m, -1);
  for (const auto& x : d.crossings()) partner[x.e1] = x.e2, partner[x.e2] = x.e1;
  for (int e = 0; e < m; ++e) {
    if (!live[e]) continue;
    if (partner[e] >= 0 && live[partner[e]]) {
      ++k.c;
      continue;
    }
    const int a = d.edge(e).u, b = d.edge(e).v;
    bool clique = false;
    for (int x = 0; x < k.N && !clique; ++x)
      for (int y = x + 1; y < k.N && !clique; ++y)
        if (x != a && x != b && y != a && y != b && adj[x][y] && adj[a][x] && adj[a][y] &&
            adj[b][x] && adj[b][y])
          clique = true;
    ++(clique ? k.p : k.e);
  }
  return k;
}

std::set<std::string> census_keys(int n, long long* candidates) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  const int P = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  for (int i = 0; i < P; ++i) pair_index[pairs[i].first][pairs[i].second] =
                                  pair_index[pairs[i].second][pairs[i].first] = i;

  std::vector<int> perm(n);
  auto graph_code = [&](unsigned mask) {
    unsigned best = ~0u;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      unsigned code = 0;
      for (int i = 0; i < P; ++i)
        if (mask >> i & 1) code |= 1u << pair_index[perm[pairs[i].first]][perm[pairs[i].second]];
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  std::set<unsigned> graphs;
  std::set<std::string> result, rejected;
  long long tried = 0;
  for (unsigned mask = 0; mask < (1u << P); ++mask) {
    if (!graphs.insert(graph_code(mask)).second) continue;
    RawDrawing base;
    base.n = n;
    for (int i = 0; i < P; ++i)
      if (mask >> i & 1) base.edges.push_back(pairs[i]);
    const int m = static_cast<int>(base.edges.size());
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < m; ++e) inc[base.edges[e].first].push_back(e), inc[base.edges[e].second].push_back(e);

    std::vector<std::pair<int, int>> independent;
    for (int e = 0; e < m; ++e)
      for (int f = e + 1; f < m; ++f) {
        auto [a, b] = base.edges[e];
        auto [c, d] = base.edges[f];
        if (a != c && a != d && b != c && b != d) independent.push_back({e, f});
      }

    std::vector<std::pair<int, int>> chosen;
    std::vector<char> used(m, 0);
    std::function<void(size_t)> matchings = [&](size_t from) {
      for (unsigned chir = 0; chir < (1u << chosen.size()); ++chir) {
        RawDrawing r = base;
        for (size_t k = 0; k < chosen.size(); ++k) {
          auto [e, f] = chosen[k];
          RawCrossing x;
          x.e1 = e;
          x.e2 = f;
          const auto [a, b] = base.edges[e];
          const auto [c, d] = base.edges[f];
          x.ends = {std::pair{e, a}, std::pair{f, (chir >> k & 1) ? d : c}, std::pair{e, b},
                    std::pair{f, (chir >> k & 1) ? c : d}};
          r.crossings.push_back(x);
        }
        Sphere s(r);
        // Odometer over rotations; the first edge at each vertex stays first.
        std::vector<std::vector<int>> rot = inc;
        for (auto& l : rot) std::sort(l.begin(), l.end());
        while (true) {
          for (int v = 0; v < n; ++v) s.set_rotation(v, rot[v]);
          ++tried;
          if (s.test()) {
            std::vector<std::string> ids;
            for (int v = 0; v < n; ++v) ids.push_back("v" + std::to_string(v));
            std::vector<oneplane::Edge> edges;
            for (int e = 0; e < m; ++e)
              edges.push_back({"e" + std::to_string(e), base.edges[e].first, base.edges[e].second});
            std::vector<oneplane::Crossing> xs;
            for (const auto& rc : r.crossings) {
              oneplane::Crossing x;
              x.e1 = rc.e1;
              x.e2 = rc.e2;
              for (int i = 0; i < 4; ++i) x.rotation[i] = {rc.ends[i].first, rc.ends[i].second};
              xs.push_back(x);
            }
            OnePlaneDrawing d(ids, edges, xs, rot);
            std::string key = oneplane::canonical_key(d);
            if (!result.count(key) && !rejected.count(key)) (maximal(d) ? result : rejected).insert(key);
          }
          int v = 0;
          for (; v < n; ++v) {
            if (rot[v].size() > 2 && std::next_permutation(rot[v].begin() + 1, rot[v].end())) break;
          }
          if (v == n) break;
        }
      }
      for (size_t i = from; i < independent.size(); ++i) {
        auto [e, f] = independent[i];
        if (used[e] || used[f]) continue;
        used[e] = used[f] = 1;
        chosen.push_back(independent[i]);
        matchings(i + 1);
        chosen.pop_back();
        used[e] = used[f] = 0;
      }
    };
    matchings(0);
  }
  if (candidates) *candidates = tried;
  return result;
}

}  // namespace oracle
