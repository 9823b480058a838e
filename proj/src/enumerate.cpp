#include "oneplane/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "oneplane/analysis.hpp"
#include "oneplane/canonical.hpp"
#include "oneplane/edit.hpp"
#include "oneplane/generators.hpp"
#include "oneplane/planarization.hpp"

namespace oneplane {

namespace {

// Runs fn(i) for i in [0, n) on the configured workers.
template <class Fn>
void parallel_for(size_t n, Fn&& fn) {
  const size_t workers = std::min<size_t>(static_cast<size_t>(worker_count()), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

// Every way to hang a new vertex off a tree drawing: into a face corner, or
// across one uncrossed edge into the face on its other side.
std::vector<OnePlaneDrawing> pendant_children(const OnePlaneDrawing& t) {
  std::vector<OnePlaneDrawing> out;
  const std::string id = "v" + std::to_string(t.vertex_count());
  OnePlaneDrawing base = add_vertex(t, id);
  const Planarization& p = base.planarization();
  const Vertex x = base.vertex_count() - 1;
  const int fx = p.isolated_face(x);
  for (int f = 0; f < static_cast<int>(p.faces().size()); ++f) {
    if (f == fx) continue;
    for (const Corner& c : p.corners(f)) {
      MaximalityWitness w;
      w.kind = WitnessKind::Face;
      w.u = c.vertex;
      w.v = x;
      w.face_u = f;
      w.face_v = fx;
      w.corner_u = c;
      w.corner_v = {x, 0};
      out.push_back(add_edge(base, c.vertex, x, w));
    }
  }
  for (EdgeIndex g = 0; g < base.edge_count(); ++g) {
    if (base.is_crossed(g)) continue;
    const Edge& ge = base.edge(g);
    const int fwd = p.dart_from(ge.u, g);
    for (bool forward : {true, false}) {
      const int f = p.face_of(forward ? fwd : twin(fwd));
      const int other = p.face_of(forward ? twin(fwd) : fwd);
      for (const Corner& c : p.corners(f)) {
        if (ge.has(c.vertex)) continue;
        MaximalityWitness w;
        w.kind = WitnessKind::Cross;
        w.u = c.vertex;
        w.v = x;
        w.face_u = f;
        w.face_v = other;
        w.corner_u = c;
        w.corner_v = {x, 0};
        w.crossed_edge = g;
        w.u_on_forward_side = forward;
        out.push_back(add_edge(base, c.vertex, x, w));
      }
    }
  }
  return out;
}

struct Expansion {
  bool maximal = false;
  std::vector<std::pair<std::string, OnePlaneDrawing>> children;
};

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("ONEPLANE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

OnePlaneDrawing saturate(const OnePlaneDrawing& d, std::uint64_t seed, WitnessChoice choice) {
  std::mt19937_64 rng(seed);
  OnePlaneDrawing cur = d;
  while (true) {
    if (choice == WitnessChoice::First) {
      MaximalityResult m = is_maximal(cur);
      if (m.maximal) return cur;
      cur = add_edge(cur, m.witness->u, m.witness->v, *m.witness);
      continue;
    }
    std::vector<MaximalityWitness> ws = all_witnesses(cur, CornerScope::All);
    if (ws.empty()) return cur;
    const MaximalityWitness& w = ws[rng() % ws.size()];
    cur = add_edge(cur, w.u, w.v, w);
  }
}

std::vector<OnePlaneDrawing> saturated_corpus(int count, int min_n, int max_n, std::uint64_t seed) {
  if (min_n < 1 || max_n < min_n) throw std::invalid_argument("bad corpus size range");
  std::vector<OnePlaneDrawing> out(static_cast<size_t>(std::max(count, 0)));
  parallel_for(out.size(), [&](size_t i) {
    const int n = min_n + static_cast<int>(i % static_cast<size_t>(max_n - min_n + 1));
    const std::uint64_t s = seed + i;
    out[i] = saturate(random_tree(n, s), s);
  });
  return out;
}

EnumerationResult enumerate_maximal(int n, const std::function<void(const std::string&)>& progress) {
  if (n < 4 || n > 6) throw std::invalid_argument("enumerate_maximal supports 4 <= n <= 6");
  auto say = [&](const std::string& s) {
    if (progress) progress(s);
  };
  EnumerationResult result;
  result.n = n;

  // Trees, one pendant vertex at a time.
  std::vector<OnePlaneDrawing> level{OnePlaneDrawing({"v0"}, {}, {}, {{}})};
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<std::pair<std::string, OnePlaneDrawing>>> kids(level.size());
    parallel_for(level.size(), [&](size_t i) {
      for (auto& c : pendant_children(level[i])) kids[i].push_back({canonical_key(c), std::move(c)});
    });
    std::unordered_set<std::string> seen;
    std::vector<OnePlaneDrawing> next;
    for (auto& list : kids)
      for (auto& [key, c] : list)
        if (seen.insert(key).second) next.push_back(std::move(c));
    level = std::move(next);
    say("trees on " + std::to_string(k + 1) + " vertices: " + std::to_string(level.size()));
  }

  // Close under single-edge insertions; drawings without witnesses are maximal.
  std::vector<std::pair<std::string, OnePlaneDrawing>> maximal;
  for (int m = n - 1; !level.empty(); ++m) {
    result.explored += static_cast<long long>(level.size());
    std::vector<Expansion> ex(level.size());
    parallel_for(level.size(), [&](size_t i) {
      std::vector<MaximalityWitness> ws = all_witnesses(level[i], CornerScope::All);
      if (ws.empty()) {
        ex[i].maximal = true;
        return;
      }
      std::unordered_set<std::string> local;
      for (const MaximalityWitness& w : ws) {
        OnePlaneDrawing c = add_edge(level[i], w.u, w.v, w);
        std::string key = canonical_key(c);
        if (local.insert(key).second) ex[i].children.push_back({std::move(key), std::move(c)});
      }
    });
    std::unordered_set<std::string> seen;
    std::vector<OnePlaneDrawing> next;
    int found = 0;
    for (size_t i = 0; i < level.size(); ++i) {
      if (ex[i].maximal) {
        maximal.push_back({canonical_key(level[i]), level[i]});
        ++found;
      }
      for (auto& [key, c] : ex[i].children)
        if (seen.insert(key).second) next.push_back(std::move(c));
    }
    say("n=" + std::to_string(n) + " E=" + std::to_string(m) + ": " +
        std::to_string(level.size()) + " drawings, " + std::to_string(found) + " maximal");
    level = std::move(next);
  }

  std::sort(maximal.begin(), maximal.end(), [](const auto& a, const auto& b) {
    if (a.second.edge_count() != b.second.edge_count())
      return a.second.edge_count() < b.second.edge_count();
    return a.first < b.first;
  });
  std::set<std::pair<int, std::uint64_t>> graphs;
  for (auto& [key, d] : maximal) {
    result.drawings.push_back(canonical_drawing(d));
    ++result.histogram[d.edge_count()];
    graphs.insert({d.edge_count(), canonical_graph_code(d)});
  }
  for (const auto& [e, code] : graphs) ++result.graph_histogram[e];
  result.graph_count = static_cast<int>(graphs.size());
  if (!result.drawings.empty()) result.e_prime = result.drawings.front().edge_count();
  return result;
}

ExceptionalExample find_exceptional_example(long long budget) {
  ExceptionalExample out;
  for (long long s = 0; s < budget; ++s) {
    ++out.tried;
    const int n = 6 + static_cast<int>(s % 25);
    OnePlaneDrawing d = saturate(random_tree(n, static_cast<std::uint64_t>(s)),
                                 static_cast<std::uint64_t>(s));
    SkeletonResult sk = skeleton(d);
    if (classify_edges(sk.skeleton).stats.e > 0) {
      out.drawing = std::move(d);
      out.source = "corpus seed " + std::to_string(s);
      return out;
    }
  }
  ++out.tried;
  out.drawing = gen_exceptional(1);
  out.source = "template 1";
  return out;
}

}  // namespace oneplane
