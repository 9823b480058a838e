#include "oneplane/certifier.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <tuple>

#include <json.hpp>

#include "oneplane/edit.hpp"
#include "oneplane/planarization.hpp"

namespace oneplane {

namespace {

using K4 = std::array<Vertex, 4>;

bool contains(const K4& k, Vertex x) { return std::find(k.begin(), k.end(), x) != k.end(); }

std::vector<std::pair<Vertex, Vertex>> k4_pairs(const K4& k) {
  return {{k[0], k[1]}, {k[0], k[2]}, {k[0], k[3]}, {k[1], k[2]}, {k[1], k[3]}, {k[2], k[3]}};
}

int old_count(const K4& k, const std::vector<bool>& in_v) {
  int c = 0;
  for (Vertex x : k) c += in_v[x] ? 1 : 0;
  return c;
}

std::string stats_text(const SkeletonStats& s) {
  return "(n=" + std::to_string(s.n) + ", p=" + std::to_string(s.p) + ", e=" + std::to_string(s.e) +
         ", c=" + std::to_string(s.c) + ")";
}

// Real vertices reachable from `start` in the planarization without passing
// through `blocked` or along edge `cut`.
std::vector<bool> reach(const OnePlaneDrawing& d, Vertex start, Vertex blocked, EdgeIndex cut) {
  const Planarization& p = d.planarization();
  std::vector<bool> seen(p.node_count(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int dd : p.rotation(x)) {
      if (p.dart(dd).edge == cut) continue;
      int h = p.dart(dd).head;
      if (h == blocked || seen[h]) continue;
      seen[h] = true;
      stack.push_back(h);
    }
  }
  seen.resize(d.vertex_count());
  return seen;
}

void decompose_into(const OnePlaneDrawing& skel, Piece piece, std::vector<DecompositionNode>& nodes) {
  const int index = static_cast<int>(nodes.size());
  nodes.push_back({});
  OnePlaneDrawing d = piece_drawing(skel, piece);
  Classification cls = classify_edges(d);
  nodes[index].piece = piece;
  nodes[index].stats = cls.stats;
  if (cls.stats.n < 4)
    throw StructureError("decomposition piece has only " + std::to_string(cls.stats.n) +
                         " vertices");
  if (!is_maximal(d).maximal)
    throw StructureError("decomposition piece " + stats_text(cls.stats) + " is not maximal");
  EdgeIndex ab = -1;
  for (EdgeIndex e = 0; e < d.edge_count() && ab < 0; ++e)
    if (cls.classes[e] == EdgeClass::Exceptional) ab = e;
  if (ab < 0) return;

  ExceptionalStructure es = check_exceptional_structure(d, ab);
  if (!es.report.passed())
    throw StructureError("cannot split: " + es.report.violations.front().message);
  const Vertex a = d.edge(ab).u, b = d.edge(ab).v, f = es.apex;
  std::vector<bool> side_a = reach(d, a, f, ab), side_b = reach(d, b, f, ab);
  if (side_a[b])
    throw StructureError("removing " + d.edge(ab).id + " and " + d.vertex_id(f) +
                         " does not separate " + d.vertex_id(a) + " from " + d.vertex_id(b));
  Piece pa, pb;
  for (Vertex x = 0; x < d.vertex_count(); ++x) {
    bool in_a = side_a[x] || x == f, in_b = side_b[x] || x == f;
    if (!in_a && !in_b)
      throw StructureError("vertex " + d.vertex_id(x) + " is on neither side of the split");
    if (in_a) pa.vertices.push_back(piece.vertices[x]);
    if (in_b) pb.vertices.push_back(piece.vertices[x]);
  }
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    if (e == ab) continue;
    const Edge& ed = d.edge(e);
    bool in_a = (side_a[ed.u] || ed.u == f) && (side_a[ed.v] || ed.v == f);
    bool in_b = (side_b[ed.u] || ed.u == f) && (side_b[ed.v] || ed.v == f);
    if (in_a == in_b)
      throw StructureError("edge " + ed.id + " is not on exactly one side of the split");
    (in_a ? pa : pb).edges.push_back(piece.edges[e]);
  }
  nodes[index].split_edge = piece.edges[ab];
  nodes[index].apex = piece.vertices[f];
  nodes[index].child_a = static_cast<int>(nodes.size());
  decompose_into(skel, std::move(pa), nodes);
  nodes[index].child_b = static_cast<int>(nodes.size());
  decompose_into(skel, std::move(pb), nodes);

  const SkeletonStats& s = nodes[index].stats;
  const SkeletonStats& s1 = nodes[nodes[index].child_a].stats;
  const SkeletonStats& s2 = nodes[nodes[index].child_b].stats;
  if (s1.e + s2.e + 1 != s.e || s1.n + s2.n - 1 != s.n || s1.p + s2.p != s.p || s1.c + s2.c != s.c)
    throw StructureError("split of " + stats_text(s) + " into " + stats_text(s1) + " and " +
                         stats_text(s2) + " breaks the count identities");
}

std::vector<EdgeIndex> k4_new_edges(const OnePlaneDrawing& d, const std::vector<K4>& ks,
                                    const std::vector<bool>& in_e) {
  std::set<EdgeIndex> out;
  for (const K4& k : ks)
    for (auto [x, y] : k4_pairs(k)) {
      EdgeIndex e = d.edge_between(x, y);
      if (e >= 0 && !in_e[e]) out.insert(e);
    }
  return {out.begin(), out.end()};
}

std::vector<Vertex> k4_new_vertices(const std::vector<K4>& ks, const std::vector<bool>& in_v) {
  std::set<Vertex> out;
  for (const K4& k : ks)
    for (Vertex x : k)
      if (!in_v[x]) out.insert(x);
  return {out.begin(), out.end()};
}

struct TwoK4 {
  Vertex u, v, w;
  int variant;
  K4 first, second;

  auto key() const { return std::tie(u, v, w, variant, first, second); }
};

// Operation 4, searched in the four boundary configurations around an old
// vertex u with consecutive neighbors v (old) and w (new).
std::optional<TwoK4> find_two_k4(const OnePlaneDrawing& d, const std::vector<K4>& k4s,
                                 const std::vector<bool>& in_v) {
  auto single_old = [&](Vertex x, Vertex y, Vertex old) -> std::optional<K4> {
    for (const K4& k : k4s)
      if (contains(k, x) && contains(k, y) && old_count(k, in_v) == 1 && contains(k, old))
        return k;
    return std::nullopt;
  };
  auto sorted4 = [](Vertex a, Vertex b, Vertex c, Vertex e) {
    K4 k{a, b, c, e};
    std::sort(k.begin(), k.end());
    return k;
  };
  auto is_k4 = [&](const K4& k) {
    for (auto [x, y] : k4_pairs(k))
      if (!d.adjacent(x, y)) return false;
    return true;
  };

  std::optional<TwoK4> best;
  auto offer = [&](const TwoK4& t) {
    if (!best || t.key() < best->key()) best = t;
  };

  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    if (!in_v[u]) continue;
    auto rot = d.rotation(u);
    const int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      EdgeIndex e1 = rot[i], e2 = rot[(i + 1) % deg];
      Vertex x = d.edge(e1).other(u), y = d.edge(e2).other(u);
      EdgeIndex uv, uw;
      if (in_v[x] && !in_v[y])
        uv = e1, uw = e2;
      else if (!in_v[x] && in_v[y])
        uv = e2, uw = e1;
      else
        continue;
      const Vertex v = d.edge(uv).other(u), w = d.edge(uw).other(u);
      const bool uv_crossed = d.is_crossed(uv), uw_crossed = d.is_crossed(uw);

      if (!uv_crossed && !uw_crossed) {
        if (!d.adjacent(v, w)) continue;
        auto k1 = single_old(u, w, u), k2 = single_old(v, w, v);
        if (k1 && k2) offer({u, v, w, 1, *k1, *k2});
      } else if (!uv_crossed && uw_crossed) {
        const Edge& ab = d.edge(d.partner(uw));
        K4 k1 = sorted4(u, w, ab.u, ab.v);
        if (!is_k4(k1) || old_count(k1, in_v) != 1) continue;
        for (Vertex t : {std::min(ab.u, ab.v), std::max(ab.u, ab.v)}) {
          if (!d.adjacent(v, t)) continue;
          if (auto k2 = single_old(v, t, v)) offer({u, v, w, 2, k1, *k2});
        }
      } else if (uv_crossed && !uw_crossed) {
        const Edge& ab = d.edge(d.partner(uv));
        for (Vertex t : {std::min(ab.u, ab.v), std::max(ab.u, ab.v)}) {
          if (!d.adjacent(w, t)) continue;
          auto k1 = single_old(w, t, t), k2 = single_old(u, w, u);
          if (k1 && k2) offer({u, v, w, 3, *k1, *k2});
        }
      } else {
        const Edge& ab = d.edge(d.partner(uw));
        const Edge& cd = d.edge(d.partner(uv));
        K4 k1 = sorted4(u, w, ab.u, ab.v);
        if (!is_k4(k1) || old_count(k1, in_v) != 1) continue;
        for (Vertex s : {std::min(ab.u, ab.v), std::max(ab.u, ab.v)})
          for (Vertex t : {std::min(cd.u, cd.v), std::max(cd.u, cd.v)}) {
            if (!d.adjacent(s, t)) continue;
            if (auto k2 = single_old(s, t, t)) offer({u, v, w, 4, k1, *k2});
          }
      }
    }
  }
  return best;
}

std::string gap_dump(const OnePlaneDrawing& d, const std::vector<bool>& in_v,
                     const std::vector<bool>& in_e, long long lhs) {
  nlohmann::ordered_json j;
  j["leaf_vertices"] = std::vector<std::string>(d.vertex_ids().begin(), d.vertex_ids().end());
  std::vector<std::string> vs, es, missing;
  for (Vertex x = 0; x < d.vertex_count(); ++x)
    if (in_v[x]) vs.push_back(d.vertex_id(x));
  for (EdgeIndex e = 0; e < d.edge_count(); ++e)
    (in_e[e] ? es : missing).push_back(d.edge(e).id);
  j["subgraph_vertices"] = vs;
  j["subgraph_edges"] = es;
  j["missing_edges"] = missing;
  j["lhs"] = lhs;
  long long n = static_cast<long long>(vs.size());
  j["rhs"] = 20 * n - 30;
  return j.dump(2);
}

}  // namespace

const char* to_string(Operation op) {
  switch (op) {
    case Operation::AddEdge:
      return "op1";
    case Operation::AddVertex:
      return "op2";
    case Operation::AddPair:
      return "op3";
    case Operation::AddTwoK4:
      return "op4";
  }
  return "?";
}

OnePlaneDrawing piece_drawing(const OnePlaneDrawing& skel, const Piece& piece) {
  std::vector<bool> kv(skel.vertex_count(), false), ke(skel.edge_count(), false);
  for (Vertex x : piece.vertices) kv.at(x) = true;
  for (EdgeIndex e : piece.edges) ke.at(e) = true;
  return subdrawing(skel, kv, ke);
}

std::vector<DecompositionNode> decompose_exceptional(const OnePlaneDrawing& skel) {
  Piece all;
  for (Vertex x = 0; x < skel.vertex_count(); ++x) all.vertices.push_back(x);
  for (EdgeIndex e = 0; e < skel.edge_count(); ++e) all.edges.push_back(e);
  std::vector<DecompositionNode> nodes;
  decompose_into(skel, std::move(all), nodes);
  return nodes;
}

long long ledger_lhs(const OnePlaneDrawing& d, const std::vector<bool>& in_edge) {
  long long lhs = 0;
  for (EdgeIndex e = 0; e < d.edge_count(); ++e) {
    if (!in_edge[e]) continue;
    EdgeIndex q = d.partner(e);
    lhs += (q >= 0 && in_edge[q]) ? 7 : 9;
  }
  return lhs;
}

SweepResult sweep(const OnePlaneDrawing& leaf) {
  const int n = leaf.vertex_count(), m = leaf.edge_count();
  std::vector<K4> k4s = k4_subgraphs(leaf);
  std::vector<bool> in_v(n, false), in_e(m, false);
  if (k4s.empty())
    throw ProofGapError("leaf contains no K4", gap_dump(leaf, in_v, in_e, 0));

  SweepResult out;
  out.seed = k4s.front();
  for (Vertex x : out.seed) in_v[x] = true;
  for (EdgeIndex e : k4_new_edges(leaf, {out.seed}, in_e)) in_e[e] = true;
  long long lhs = ledger_lhs(leaf, in_e);
  out.seed_lhs = lhs;
  int nv = 4, ne = 6;

  std::vector<EdgeIndex> edge_order(m);
  for (EdgeIndex e = 0; e < m; ++e) edge_order[e] = e;
  auto ends = [&](EdgeIndex e) {
    const Edge& ed = leaf.edge(e);
    return std::make_pair(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
  };
  std::sort(edge_order.begin(), edge_order.end(),
            [&](EdgeIndex a, EdgeIndex b) { return ends(a) < ends(b); });

  auto apply = [&](SweepStep step) {
    for (Vertex x : step.new_vertices) in_v[x] = true;
    for (EdgeIndex e : step.new_edges) in_e[e] = true;
    nv += static_cast<int>(step.new_vertices.size());
    ne += static_cast<int>(step.new_edges.size());
    long long next = ledger_lhs(leaf, in_e);
    step.delta_lhs = next - lhs;
    step.delta_rhs = 20 * static_cast<long long>(step.new_vertices.size());
    lhs = next;
    out.steps.push_back(std::move(step));
  };

  while (nv < n || ne < m) {
    bool done = false;
    for (EdgeIndex e : edge_order) {
      const Edge& ed = leaf.edge(e);
      if (!in_e[e] && in_v[ed.u] && in_v[ed.v]) {
        SweepStep s;
        s.op = Operation::AddEdge;
        s.new_edges = {e};
        apply(std::move(s));
        done = true;
        break;
      }
    }
    if (done) continue;

    for (Vertex x = 0; x < n && !done; ++x) {
      if (in_v[x]) continue;
      std::vector<K4> ks;
      for (const K4& k : k4s)
        if (contains(k, x) && old_count(k, in_v) == 3) ks.push_back(k);
      if (ks.empty()) continue;
      SweepStep s;
      s.op = Operation::AddVertex;
      s.k4s = ks;
      s.new_vertices = {x};
      s.new_edges = k4_new_edges(leaf, ks, in_e);
      apply(std::move(s));
      done = true;
    }
    if (done) continue;

    for (Vertex x = 0; x < n && !done; ++x) {
      if (in_v[x]) continue;
      for (Vertex y = x + 1; y < n && !done; ++y) {
        if (in_v[y]) continue;
        std::vector<K4> ks;
        for (const K4& k : k4s)
          if (contains(k, x) && contains(k, y) && old_count(k, in_v) == 2) ks.push_back(k);
        if (ks.empty()) continue;
        SweepStep s;
        s.op = Operation::AddPair;
        s.k4s = ks;
        s.new_vertices = {x, y};
        s.new_edges = k4_new_edges(leaf, ks, in_e);
        apply(std::move(s));
        done = true;
      }
    }
    if (done) continue;

    if (auto t = find_two_k4(leaf, k4s, in_v)) {
      SweepStep s;
      s.op = Operation::AddTwoK4;
      s.variant = t->variant;
      s.k4s = {t->first, t->second};
      s.new_vertices = k4_new_vertices(s.k4s, in_v);
      s.new_edges = k4_new_edges(leaf, s.k4s, in_e);
      apply(std::move(s));
      continue;
    }
    throw ProofGapError("no operation applies with " + std::to_string(nv) + " of " +
                            std::to_string(n) + " vertices and " + std::to_string(ne) + " of " +
                            std::to_string(m) + " edges covered",
                        gap_dump(leaf, in_v, in_e, lhs));
  }
  return out;
}

Certificate certify(const OnePlaneDrawing& skel) {
  Certificate cert;
  cert.stats = classify_edges(skel).stats;
  cert.nodes = decompose_exceptional(skel);
  for (int i = 0; i < static_cast<int>(cert.nodes.size()); ++i) {
    if (cert.nodes[i].split_edge >= 0) continue;
    cert.nodes[i].leaf = static_cast<int>(cert.leaves.size());
    OnePlaneDrawing leaf = piece_drawing(skel, cert.nodes[i].piece);
    cert.leaves.push_back({i, sweep(leaf)});
  }
  return cert;
}

long long inequality_lhs(const SkeletonStats& s) {
  return 9LL * s.p + 10LL * s.e + 7LL * s.c;
}

long long inequality_rhs(const SkeletonStats& s) { return 20LL * s.n - 30; }

bool check_inequality(const SkeletonStats& s) { return inequality_lhs(s) >= inequality_rhs(s); }

VerificationResult verify_certificate(const OnePlaneDrawing& skel, const Certificate& cert) {
  VerificationResult r;
  auto fail = [&](std::string why, int leaf = -1, int step = -1) {
    r.valid = false;
    r.reason = std::move(why);
    r.leaf = leaf;
    r.step = step;
    return r;
  };

  const SkeletonStats stats = classify_edges(skel).stats;
  if (!(stats == cert.stats)) return fail("recorded skeleton counts differ from " + stats_text(stats));
  if (cert.nodes.empty()) return fail("empty decomposition");

  // Decomposition tree.
  std::vector<SkeletonStats> node_stats(cert.nodes.size());
  std::vector<int> reached(cert.nodes.size(), 0);
  reached[0] = 1;
  const Piece& root = cert.nodes[0].piece;
  if (static_cast<int>(root.vertices.size()) != skel.vertex_count() ||
      static_cast<int>(root.edges.size()) != skel.edge_count())
    return fail("root piece is not the whole skeleton");
  for (size_t i = 0; i < cert.nodes.size(); ++i) {
    const DecompositionNode& nd = cert.nodes[i];
    if (!reached[i]) return fail("decomposition node " + std::to_string(i) + " is unreachable");
    // Local indices follow the piece order, so pieces must be strictly increasing and closed.
    const auto& pv = nd.piece.vertices;
    const auto& pe = nd.piece.edges;
    bool shaped = std::adjacent_find(pv.begin(), pv.end(), std::greater_equal<>()) == pv.end() &&
                  std::adjacent_find(pe.begin(), pe.end(), std::greater_equal<>()) == pe.end() &&
                  (pv.empty() || (pv.front() >= 0 && pv.back() < skel.vertex_count())) &&
                  (pe.empty() || (pe.front() >= 0 && pe.back() < skel.edge_count()));
    for (size_t k = 0; shaped && k < pe.size(); ++k)
      shaped = std::binary_search(pv.begin(), pv.end(), skel.edge(pe[k]).u) &&
               std::binary_search(pv.begin(), pv.end(), skel.edge(pe[k]).v);
    if (!shaped) return fail("piece " + std::to_string(i) + " is not a sorted closed subset");
    OnePlaneDrawing d;
    try {
      d = piece_drawing(skel, nd.piece);
    } catch (const std::exception& err) {
      return fail("piece " + std::to_string(i) + " is not a drawing: " + err.what());
    }
    Classification cls = classify_edges(d);
    node_stats[i] = cls.stats;
    if (cls.stats.n < 4) return fail("piece " + std::to_string(i) + " has fewer than 4 vertices");
    if (nd.split_edge < 0) {
      if (cls.stats.e != 0) return fail("leaf piece " + std::to_string(i) + " has exceptional edges");
      if (nd.leaf < 0 || nd.leaf >= static_cast<int>(cert.leaves.size()) ||
          cert.leaves[nd.leaf].node != static_cast<int>(i))
        return fail("leaf piece " + std::to_string(i) + " has no sweep");
      continue;
    }
    auto local_e = std::find(nd.piece.edges.begin(), nd.piece.edges.end(), nd.split_edge);
    if (local_e == nd.piece.edges.end()) return fail("split edge not in piece " + std::to_string(i));
    EdgeIndex ab = static_cast<EdgeIndex>(local_e - nd.piece.edges.begin());
    if (cls.classes[ab] != EdgeClass::Exceptional)
      return fail("split edge " + skel.edge(nd.split_edge).id + " is not exceptional in its piece");
    ExceptionalStructure es = check_exceptional_structure(d, ab);
    if (!es.report.passed() || nd.piece.vertices[es.apex] != nd.apex)
      return fail("split at " + skel.edge(nd.split_edge).id + " has the wrong apex");
    for (int c : {nd.child_a, nd.child_b})
      if (c <= static_cast<int>(i) || c >= static_cast<int>(cert.nodes.size()) || reached[c]++)
        return fail("bad child index at node " + std::to_string(i));
    const Piece& pa = cert.nodes[nd.child_a].piece;
    const Piece& pb = cert.nodes[nd.child_b].piece;
    std::vector<Vertex> common, all_v;
    std::set_intersection(pa.vertices.begin(), pa.vertices.end(), pb.vertices.begin(),
                          pb.vertices.end(), std::back_inserter(common));
    std::set_union(pa.vertices.begin(), pa.vertices.end(), pb.vertices.begin(), pb.vertices.end(),
                   std::back_inserter(all_v));
    if (common != std::vector<Vertex>{nd.apex} || all_v != nd.piece.vertices)
      return fail("children of node " + std::to_string(i) + " do not share exactly the apex");
    const Edge& abe = skel.edge(nd.split_edge);
    auto has = [](const Piece& p, Vertex x) {
      return std::binary_search(p.vertices.begin(), p.vertices.end(), x);
    };
    if (!((has(pa, abe.u) && has(pb, abe.v)) || (has(pa, abe.v) && has(pb, abe.u))))
      return fail("split edge endpoints are not on opposite sides at node " + std::to_string(i));
    std::vector<EdgeIndex> all_e(pa.edges);
    all_e.insert(all_e.end(), pb.edges.begin(), pb.edges.end());
    all_e.push_back(nd.split_edge);
    std::sort(all_e.begin(), all_e.end());
    if (all_e != nd.piece.edges)
      return fail("children of node " + std::to_string(i) + " do not partition its edges");
  }
  for (size_t i = 0; i < cert.nodes.size(); ++i) {
    const DecompositionNode& nd = cert.nodes[i];
    if (nd.split_edge < 0) continue;
    const SkeletonStats &s = node_stats[i], &s1 = node_stats[nd.child_a], &s2 = node_stats[nd.child_b];
    if (s1.e + s2.e + 1 != s.e || s1.n + s2.n - 1 != s.n || s1.p + s2.p != s.p || s1.c + s2.c != s.c)
      return fail("count identities fail at node " + std::to_string(i));
  }

  // Sweeps.
  for (size_t li = 0; li < cert.leaves.size(); ++li) {
    const LeafCertificate& lc = cert.leaves[li];
    const int L = static_cast<int>(li);
    if (lc.node < 0 || lc.node >= static_cast<int>(cert.nodes.size()) ||
        cert.nodes[lc.node].leaf != L)
      return fail("leaf certificate points to a wrong node", L);
    OnePlaneDrawing leaf = piece_drawing(skel, cert.nodes[lc.node].piece);
    const int n = leaf.vertex_count(), m = leaf.edge_count();
    std::vector<K4> k4s = k4_subgraphs(leaf);
    std::vector<bool> in_v(n, false), in_e(m, false);
    const K4& seed = lc.sweep.seed;
    for (Vertex x : seed)
      if (x < 0 || x >= n) return fail("seed vertex out of range", L);
    if (std::find(k4s.begin(), k4s.end(), seed) == k4s.end()) return fail("seed is not a K4", L);
    for (Vertex x : seed) in_v[x] = true;
    for (EdgeIndex e : k4_new_edges(leaf, {seed}, in_e)) in_e[e] = true;
    long long lhs = ledger_lhs(leaf, in_e);
    if (lhs != lc.sweep.seed_lhs) return fail("seed ledger mismatch", L);
    long long nv = 4;
    if (lhs < 20 * nv - 30) return fail("seed violates the inequality", L);

    for (size_t si = 0; si < lc.sweep.steps.size(); ++si) {
      const SweepStep& st = lc.sweep.steps[si];
      const int S = static_cast<int>(si);
      for (Vertex x : st.new_vertices)
        if (x < 0 || x >= n || in_v[x]) return fail("step adds an existing vertex", L, S);
      std::set<Vertex> added_v(st.new_vertices.begin(), st.new_vertices.end());
      std::vector<bool> next_e = in_e;
      for (EdgeIndex e : st.new_edges) {
        if (e < 0 || e >= m || next_e[e]) return fail("step adds an existing edge", L, S);
        const Edge& ed = leaf.edge(e);
        if (!(in_v[ed.u] || added_v.count(ed.u)) || !(in_v[ed.v] || added_v.count(ed.v)))
          return fail("step adds a dangling edge", L, S);
        next_e[e] = true;
      }
      long long next = ledger_lhs(leaf, next_e);
      long long dl = next - lhs, dr = 20 * static_cast<long long>(st.new_vertices.size());
      if (dl < dr)
        return fail("step " + std::to_string(S) + " (" + to_string(st.op) + "): left side grows by " +
                        std::to_string(dl) + " < " + std::to_string(dr),
                    L, S);
      if (dl != st.delta_lhs || dr != st.delta_rhs)
        return fail("recorded deltas differ from recomputation", L, S);

      // Operation shape.
      auto k4_ok = [&](const K4& k) { return std::find(k4s.begin(), k4s.end(), k) != k4s.end(); };
      for (const K4& k : st.k4s)
        if (!k4_ok(k)) return fail("step names a non-K4", L, S);
      auto expect_edges = [&]() {
        return k4_new_edges(leaf, st.k4s, in_e) == st.new_edges &&
               k4_new_vertices(st.k4s, in_v) == st.new_vertices;
      };
      switch (st.op) {
        case Operation::AddEdge:
          if (!st.new_vertices.empty() || st.new_edges.size() != 1)
            return fail("op1 must add one edge between old vertices", L, S);
          break;
        case Operation::AddVertex:
        case Operation::AddPair: {
          const size_t k = st.op == Operation::AddVertex ? 1 : 2;
          if (st.new_vertices.size() != k || st.k4s.empty() || !expect_edges())
            return fail(std::string(to_string(st.op)) + " does not match its K4s", L, S);
          for (const K4& q : st.k4s)
            if (old_count(q, in_v) != static_cast<int>(4 - k))
              return fail(std::string(to_string(st.op)) + " uses a K4 with the wrong old part", L, S);
          // Every K4 of that kind must be included.
          for (const K4& q : k4s) {
            bool all_new = std::all_of(st.new_vertices.begin(), st.new_vertices.end(),
                                       [&](Vertex x) { return contains(q, x); });
            if (all_new && old_count(q, in_v) == static_cast<int>(4 - k) &&
                std::find(st.k4s.begin(), st.k4s.end(), q) == st.k4s.end())
              return fail(std::string(to_string(st.op)) + " misses a K4", L, S);
          }
          break;
        }
        case Operation::AddTwoK4: {
          if (st.k4s.size() != 2 || !expect_edges())
            return fail("op4 does not match its K4s", L, S);
          const K4 &k1 = st.k4s[0], &k2 = st.k4s[1];
          if (old_count(k1, in_v) != 1 || old_count(k2, in_v) != 1)
            return fail("op4 K4 must have exactly one old vertex", L, S);
          bool shared_new = false;
          for (Vertex x : k1) shared_new |= !in_v[x] && contains(k2, x);
          if (!shared_new) return fail("op4 K4s share no new vertex", L, S);
          break;
        }
      }
      for (Vertex x : st.new_vertices) in_v[x] = true;
      in_e = std::move(next_e);
      lhs = next;
      nv += static_cast<long long>(st.new_vertices.size());
      if (lhs < 20 * nv - 30) return fail("inequality fails after step", L, S);
    }
    if (std::count(in_v.begin(), in_v.end(), true) != n ||
        std::count(in_e.begin(), in_e.end(), true) != m)
      return fail("sweep does not cover its leaf", L);
  }

  if (!check_inequality(stats)) return fail("9p + 10e + 7c >= 20n - 30 fails on the skeleton");
  return r;
}

}  // namespace oneplane
