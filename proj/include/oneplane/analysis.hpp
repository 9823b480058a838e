#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oneplane/drawing.hpp"
#include "oneplane/edit.hpp"

namespace oneplane {

/// One failed instance of a structural check, named by the ids involved.
struct Violation {
  std::string message;
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
};

struct CheckReport {
  std::string check;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

/// Raised when an operation is called on input outside its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a postcondition asserted by the structure theory fails; such an
/// input is a potential counterexample and is reported, never absorbed.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MaximalityResult {
  bool maximal = true;
  std::optional<MaximalityWitness> witness;
};

/// Decides drawing-level maximality. Returns the canonically first witness
/// (faces by id, then boundary position, then cross witnesses by edge) when
/// some edge can still be added.
MaximalityResult is_maximal(const OnePlaneDrawing& d);

enum class CornerScope {
  First,  // one witness per (face pair, vertex pair, crossed edge, side)
  All,    // one witness per combination of corners
};

/// Every witness, in canonical order.
std::vector<MaximalityWitness> all_witnesses(const OnePlaneDrawing& d,
                                             CornerScope scope = CornerScope::First);

CheckReport check_face_lemma(const OnePlaneDrawing& d);
CheckReport check_min_degree(const OnePlaneDrawing& d);
CheckReport check_crossing_k4(const OnePlaneDrawing& d);

struct HermitReport {
  std::vector<Vertex> hermits;
  CheckReport structure;
};

HermitReport find_hermits(const OnePlaneDrawing& d);

/// Counts of skeleton vertices, crossing, plain and exceptional edges.
struct SkeletonStats {
  int n = 0;
  int c = 0;
  int p = 0;
  int e = 0;

  friend bool operator==(const SkeletonStats&, const SkeletonStats&) = default;
};

enum class EdgeClass { Crossing, Plain, Exceptional };

const char* to_string(EdgeClass c);

struct Classification {
  std::vector<EdgeClass> classes;
  SkeletonStats stats;
};

/// crossing = in a crossing pair; plain = uncrossed and in some K4 of the
/// abstract graph; exceptional = the rest.
Classification classify_edges(const OnePlaneDrawing& skel);

struct SkeletonResult {
  OnePlaneDrawing skeleton;
  std::vector<Vertex> hermits;
  SkeletonStats stats;
  DrawingStats drawing;
};

/// Removes every hermit with its two edges in a single pass. Throws
/// StructureError if the result has a vertex of degree below 3, is not
/// maximal, or the count identities N = n + h, E = p + e + c + 2h fail.
SkeletonResult skeleton(const OnePlaneDrawing& d);

struct ExceptionalStructure {
  CheckReport report;
  Vertex apex = -1;
  int face1 = -1;
  int face2 = -1;
};

/// Verifies the structure around an exceptional edge: two distinct faces,
/// both with real vertices exactly {a, b, f} for one apex f, and af, bf
/// present and non-exceptional. Throws PreconditionError if ab is not
/// exceptional.
ExceptionalStructure check_exceptional_structure(const OnePlaneDrawing& skel, EdgeIndex ab);

/// All 4-cliques of the abstract graph, vertices sorted, list sorted.
std::vector<std::array<Vertex, 4>> k4_subgraphs(const OnePlaneDrawing& d);

/// True if the edge lies in some K4 of the abstract graph.
bool in_k4(const OnePlaneDrawing& d, EdgeIndex e);

struct K4Network {
  std::vector<std::array<Vertex, 4>> nodes;
  std::vector<std::pair<int, int>> links;
  bool connected = true;
};

K4Network k4_network(const OnePlaneDrawing& skel);

/// c >= h, c >= e and c - e >= h with h counted on d and (c, e) on its skeleton.
CheckReport check_counting_relations(const OnePlaneDrawing& d);

/// Runs every structural checker on a drawing expected to be maximal.
struct LemmaSuite {
  bool maximal = false;
  std::vector<CheckReport> reports;
  std::optional<SkeletonResult> skeleton;
  std::optional<Classification> classification;

  bool passed() const;
};

LemmaSuite run_lemma_suite(const OnePlaneDrawing& d);

}  // namespace oneplane
