#include "oneplane/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oneplane/planarization.hpp"

namespace oneplane {

namespace {

struct Traversal {
  std::vector<int> code;
  std::vector<int> order;  // nodes in label order
  std::vector<int> entry;  // entry dart per node (indexed by node)
  bool ccw = true;
};

// Breadth-first labeling from `root`. Returns false as soon as the code
// becomes lexicographically larger than *best.
bool traverse(const Planarization& p, int root, bool ccw, const std::vector<int>* best,
              std::vector<int>& label, Traversal& out) {
  out.code.clear();
  out.order.clear();
  out.ccw = ccw;
  bool better = best == nullptr;
  auto push = [&](int value) {
    size_t i = out.code.size();
    out.code.push_back(value);
    if (better) return true;
    if (i >= best->size()) return false;
    if (value < (*best)[i]) better = true;
    return value <= (*best)[i];
  };

  int start = p.dart(root).tail;
  label[start] = 0;
  out.order.push_back(start);
  out.entry[start] = root;
  bool ok = true;
  for (size_t q = 0; q < out.order.size() && ok; ++q) {
    int x = out.order[q];
    const auto& rot = p.rotation(x);
    const int deg = static_cast<int>(rot.size());
    if (!push(p.is_dummy(x) ? 1 : 0) || !push(deg)) {
      ok = false;
      break;
    }
    int base = p.position(out.entry[x]);
    for (int i = 0; i < deg; ++i) {
      int dd = rot[ccw ? (base + i) % deg : (base - i + deg) % deg];
      int h = p.dart(dd).head;
      if (label[h] < 0) {
        label[h] = static_cast<int>(out.order.size());
        out.order.push_back(h);
        out.entry[h] = twin(dd);
      }
      if (!push(label[h])) {
        ok = false;
        break;
      }
    }
  }
  for (int x : out.order) label[x] = -1;
  return ok;
}

struct ComponentForm {
  std::vector<int> code;
  Traversal traversal;
  bool isolated = false;
  int isolated_vertex = -1;
};

std::vector<ComponentForm> component_forms(const OnePlaneDrawing& d) {
  const Planarization& p = d.planarization();
  const int nodes = p.node_count();
  std::vector<ComponentForm> forms(p.component_count());
  std::vector<int> min_degree(p.component_count(), -1);
  for (int x = 0; x < p.real_count(); ++x) {
    int c = p.component_of(x);
    int deg = static_cast<int>(p.rotation(x).size());
    if (min_degree[c] < 0 || deg < min_degree[c]) min_degree[c] = deg;
  }
  std::vector<int> label(nodes, -1);
  Traversal scratch;
  scratch.entry.assign(nodes, -1);
  std::vector<bool> done(p.component_count(), false);
  for (int x = 0; x < p.real_count(); ++x) {
    int c = p.component_of(x);
    if (min_degree[c] == 0) {
      forms[c].isolated = true;
      forms[c].isolated_vertex = x;
      forms[c].code = {0, 0};
      done[c] = true;
      continue;
    }
    if (static_cast<int>(p.rotation(x).size()) != min_degree[c]) continue;
    for (int dd : p.rotation(x))
      for (bool ccw : {true, false}) {
        const std::vector<int>* best = done[c] ? &forms[c].code : nullptr;
        if (traverse(p, dd, ccw, best, label, scratch)) {
          if (!done[c] || scratch.code < forms[c].code) {
            forms[c].code = scratch.code;
            forms[c].traversal = scratch;
            done[c] = true;
          }
        }
      }
  }
  std::stable_sort(forms.begin(), forms.end(),
                   [](const ComponentForm& a, const ComponentForm& b) { return a.code < b.code; });
  return forms;
}

}  // namespace

std::vector<int> canonical_code(const OnePlaneDrawing& d) {
  auto forms = component_forms(d);
  std::vector<int> out{static_cast<int>(forms.size())};
  for (const auto& f : forms) {
    out.push_back(static_cast<int>(f.code.size()));
    out.insert(out.end(), f.code.begin(), f.code.end());
  }
  return out;
}

std::string canonical_key(const OnePlaneDrawing& d) {
  auto code = canonical_code(d);
  std::string key;
  key.reserve(code.size());
  for (int v : code) {
    // Values stay well below 2^14 at the scales handled here.
    if (v < 128) {
      key.push_back(static_cast<char>(v));
    } else {
      key.push_back(static_cast<char>(128 | (v >> 7)));
      key.push_back(static_cast<char>(v & 127));
    }
  }
  return key;
}

OnePlaneDrawing canonical_drawing(const OnePlaneDrawing& d) {
  const Planarization& p = d.planarization();
  auto forms = component_forms(d);

  std::vector<int> new_vertex(d.vertex_count(), -1);
  std::vector<int> vertex_order;
  for (const auto& f : forms) {
    if (f.isolated) {
      new_vertex[f.isolated_vertex] = static_cast<int>(vertex_order.size());
      vertex_order.push_back(f.isolated_vertex);
      continue;
    }
    for (int x : f.traversal.order)
      if (!p.is_dummy(x)) {
        new_vertex[x] = static_cast<int>(vertex_order.size());
        vertex_order.push_back(x);
      }
  }

  std::vector<EdgeIndex> edge_order(d.edge_count());
  std::iota(edge_order.begin(), edge_order.end(), 0);
  auto key = [&](EdgeIndex e) {
    int a = new_vertex[d.edge(e).u], b = new_vertex[d.edge(e).v];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  std::sort(edge_order.begin(), edge_order.end(),
            [&](EdgeIndex a, EdgeIndex b) { return key(a) < key(b); });
  std::vector<EdgeIndex> new_edge(d.edge_count());
  std::vector<Edge> edges;
  for (EdgeIndex e : edge_order) {
    new_edge[e] = static_cast<int>(edges.size());
    auto [a, b] = key(e);
    edges.push_back({"e" + std::to_string(edges.size()), a, b});
  }

  std::vector<std::string> ids;
  for (size_t i = 0; i < vertex_order.size(); ++i) ids.push_back("v" + std::to_string(i));

  std::vector<std::vector<EdgeIndex>> rotations(vertex_order.size());
  std::vector<Crossing> crossings;
  for (const auto& f : forms) {
    if (f.isolated) continue;
    const Traversal& t = f.traversal;
    for (int x : t.order) {
      const auto& rot = p.rotation(x);
      const int deg = static_cast<int>(rot.size());
      int base = p.position(t.entry[x]);
      std::vector<int> seq;
      for (int i = 0; i < deg; ++i)
        seq.push_back(rot[t.ccw ? (base + i) % deg : (base - i + deg) % deg]);
      if (!p.is_dummy(x)) {
        for (int dd : seq) rotations[new_vertex[x]].push_back(new_edge[p.dart(dd).edge]);
      } else {
        Crossing c;
        for (int i = 0; i < 4; ++i) {
          const Dart& dt = p.dart(seq[i]);
          c.rotation[i] = {new_edge[dt.edge], new_vertex[dt.head]};
        }
        c.e1 = std::min(c.rotation[0].edge, c.rotation[1].edge);
        c.e2 = std::max(c.rotation[0].edge, c.rotation[1].edge);
        crossings.push_back(c);
      }
    }
  }
  std::sort(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) {
    return std::make_pair(a.e1, a.e2) < std::make_pair(b.e1, b.e2);
  });
  return OnePlaneDrawing(std::move(ids), std::move(edges), std::move(crossings),
                         std::move(rotations));
}

bool isomorphic(const OnePlaneDrawing& a, const OnePlaneDrawing& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         a.crossing_count() == b.crossing_count() && canonical_code(a) == canonical_code(b);
}

std::uint64_t canonical_graph_code(const OnePlaneDrawing& d) {
  const int n = d.vertex_count();
  if (n > 11) throw std::invalid_argument("canonical_graph_code supports at most 11 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (d.adjacent(perm[i], perm[j])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oneplane
