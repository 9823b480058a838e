#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oneplane/analysis.hpp"
#include "oneplane/bounds.hpp"
#include "oneplane/certifier.hpp"
#include "oneplane/drawing.hpp"
#include "oneplane/enumerate.hpp"

namespace oneplane {

using Json = nlohmann::ordered_json;

/// Two-space indented text with a trailing newline; the single formatting
/// used for every file the tools write.
std::string dump(const Json& j);

Json to_json(const Rational& q);  // "p/q" string
Json to_json(const SkeletonStats& s);
/// {check, status: pass|fail, witnesses: [{message, vertices, edges}]}
Json to_json(const CheckReport& r);
Json to_json(const OnePlaneDrawing& d, const MaximalityWitness& w);
/// Maximality as a check report whose witnesses are insertable edges.
Json maximality_json(const OnePlaneDrawing& d, const MaximalityResult& m);
Json to_json(const BoundAudit& a);

/// Certificate file: stats, decomposition tree and per-leaf step arrays. All
/// indices are skeleton indices (nodes) or leaf-local indices (steps); ids are
/// included for reading only.
Json certificate_json(const OnePlaneDrawing& skel, const Certificate& cert);
/// Inverse of certificate_json; throws DocumentError on malformed input.
Certificate certificate_from_json(const Json& j);

/// Census file: n, e_prime, histograms, and the canonical documents.
Json census_json(const EnumerationResult& r);

/// Everything the analyze command reports for one drawing.
struct DrawingAnalysis {
  bool maximal = false;
  std::optional<MaximalityWitness> witness;
  LemmaSuite suite;
  std::optional<SkeletonStats> stats;
  int hermits = 0;
  bool inequality = false;
  std::optional<BoundAudit> bound;
  bool passed = false;
  Json report;
};

/// maximality -> lemma suite -> classification -> edge inequality -> bound audit.
DrawingAnalysis analyze_drawing(const OnePlaneDrawing& d);

struct ReportRow {
  std::string name;
  int N = 0;
  int E = 0;
  int h = 0;
  bool maximal = false;
  std::optional<SkeletonStats> stats;
  std::optional<Rational> bound;
  std::optional<Rational> slack;
};

struct CorpusReport {
  std::vector<ReportRow> rows;
  std::vector<std::string> warnings;
  std::optional<Rational> min_slack;    // over maximal rows with N >= 4
  std::optional<Rational> min_density;  // E / N over the same rows
  std::optional<int> min_edges;
};

/// One row per named drawing, in the given order.
CorpusReport report_drawings(const std::vector<std::pair<std::string, OnePlaneDrawing>>& items);

/// Reads every *.opg.json in a directory (sorted by name), or every drawing
/// of a census file. Unreadable entries are skipped with a warning. Throws
/// DocumentError if the path itself cannot be read.
CorpusReport corpus_report(const std::filesystem::path& path);

std::string to_csv(const CorpusReport& r);
Json to_json(const CorpusReport& r);

/// Table of the lower bound for N = from..to with the reference slopes.
Json bounds_table_json(long long from, long long to);
std::string bounds_table_csv(long long from, long long to);

}  // namespace oneplane
