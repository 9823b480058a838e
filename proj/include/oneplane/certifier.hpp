#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "oneplane/analysis.hpp"
#include "oneplane/drawing.hpp"

namespace oneplane {

/// Vertex and edge subsets of a skeleton, as sorted skeleton indices.
struct Piece {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;
};

/// The drawing induced by a piece; indices follow the order of the piece.
OnePlaneDrawing piece_drawing(const OnePlaneDrawing& skel, const Piece& piece);

struct DecompositionNode {
  Piece piece;
  SkeletonStats stats;
  EdgeIndex split_edge = -1;  // skeleton index of the exceptional edge ab, or -1 at a leaf
  Vertex apex = -1;           // skeleton index of f
  int child_a = -1;           // node holding a and f
  int child_b = -1;           // node holding b and f
  int leaf = -1;              // index into Certificate::leaves
};

/// Splits along exceptional edges until every piece has none. Node 0 is the
/// whole skeleton; children follow their parent. Throws StructureError when a
/// split does not separate, a piece is not maximal or has fewer than four
/// vertices, or the count identities fail.
std::vector<DecompositionNode> decompose_exceptional(const OnePlaneDrawing& skel);

enum class Operation { AddEdge = 1, AddVertex = 2, AddPair = 3, AddTwoK4 = 4 };

struct SweepStep {
  Operation op = Operation::AddEdge;
  int variant = 0;  // for AddTwoK4: which of the four boundary configurations
  std::vector<Vertex> new_vertices;
  std::vector<EdgeIndex> new_edges;
  std::vector<std::array<Vertex, 4>> k4s;
  long long delta_lhs = 0;
  long long delta_rhs = 0;
};

struct SweepResult {
  std::array<Vertex, 4> seed{};
  long long seed_lhs = 0;
  std::vector<SweepStep> steps;
};

/// Raised when no operation applies before the sweep reaches the whole leaf.
/// `dump()` holds the full state as JSON.
class ProofGapError : public std::runtime_error {
 public:
  ProofGapError(const std::string& what, std::string dump)
      : std::runtime_error(what), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

/// Grows a subgraph from the smallest K4 of `leaf` by operations 1-4 in order
/// of preference until it covers the leaf. Indices are local to `leaf`.
SweepResult sweep(const OnePlaneDrawing& leaf);

/// Left side 9p + 7c of the running inequality, where an edge of the
/// subgraph counts as crossing only if its partner is in the subgraph too.
long long ledger_lhs(const OnePlaneDrawing& d, const std::vector<bool>& in_edge);

struct LeafCertificate {
  int node = -1;
  SweepResult sweep;
};

struct Certificate {
  SkeletonStats stats;
  std::vector<DecompositionNode> nodes;
  std::vector<LeafCertificate> leaves;
};

/// decompose_exceptional followed by a sweep of every leaf.
Certificate certify(const OnePlaneDrawing& skel);

struct VerificationResult {
  bool valid = true;
  std::string reason;
  int leaf = -1;
  int step = -1;
};

/// Replays a certificate against `skel` from scratch.
VerificationResult verify_certificate(const OnePlaneDrawing& skel, const Certificate& cert);

/// 9p + 10e + 7c >= 20n - 30.
bool check_inequality(const SkeletonStats& s);

long long inequality_lhs(const SkeletonStats& s);
long long inequality_rhs(const SkeletonStats& s);

const char* to_string(Operation op);

}  // namespace oneplane
