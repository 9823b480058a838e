#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"

namespace oneplane {

enum class WitnessChoice { Random, First };

/// Adds edges along witnesses until the drawing is maximal. With
/// WitnessChoice::Random the witness is drawn uniformly (over all corner
/// choices) from a generator seeded with `seed`.
OnePlaneDrawing saturate(const OnePlaneDrawing& d, std::uint64_t seed,
                         WitnessChoice choice = WitnessChoice::Random);

/// Deterministic corpus: drawing i saturates random_tree(N_i, seed + i) with
/// N_i cycling through [min_n, max_n].
std::vector<OnePlaneDrawing> saturated_corpus(int count, int min_n, int max_n, std::uint64_t seed);

struct EnumerationResult {
  int n = 0;
  std::vector<OnePlaneDrawing> drawings;  // canonical, sorted by edge count then code
  int e_prime = -1;
  std::map<int, int> histogram;        // edge count -> drawings
  std::map<int, int> graph_histogram;  // edge count -> distinct abstract graphs
  int graph_count = 0;
  long long explored = 0;  // connected drawings visited
};

/// Every maximal 1-plane drawing on n vertices, 4 <= n <= 6, up to
/// isomorphism and reflection. Throws std::invalid_argument otherwise.
EnumerationResult enumerate_maximal(int n,
                                    const std::function<void(const std::string&)>& progress = {});

struct ExceptionalExample {
  OnePlaneDrawing drawing;
  std::string source;  // "corpus seed <s>" or "template <t>"
  long long tried = 0;
};

/// Searches saturated random drawings (up to `budget` of them, tree sizes
/// cycling through 6..30) for one whose skeleton has an exceptional edge,
/// then falls back to template 1.
/// Throws StructureError if the fallback fails verification.
ExceptionalExample find_exceptional_example(long long budget);

/// Worker count: ONEPLANE_THREADS if set and positive, else the hardware count.
int worker_count();

}  // namespace oneplane
