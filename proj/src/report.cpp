#include "oneplane/report.hpp"

#include <algorithm>
#include <sstream>

#include "oneplane/document.hpp"

namespace oneplane {

namespace {

Json id_list(const std::vector<std::string>& ids) {
  Json a = Json::array();
  for (const auto& s : ids) a.push_back(s);
  return a;
}

template <class T>
Json int_list(const std::vector<T>& xs) {
  Json a = Json::array();
  for (T x : xs) a.push_back(static_cast<long long>(x));
  return a;
}

const Json& need(const Json& obj, const char* key) {
  if (!obj.is_object()) throw DocumentError("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(std::string("missing field '") + key + "'");
  return *it;
}

long long need_int(const Json& obj, const char* key) {
  const Json& j = need(obj, key);
  if (!j.is_number_integer()) throw DocumentError(std::string("'") + key + "' must be an integer");
  return j.get<long long>();
}

template <class T>
std::vector<T> need_ints(const Json& obj, const char* key) {
  const Json& j = need(obj, key);
  if (!j.is_array()) throw DocumentError(std::string("'") + key + "' must be an array");
  std::vector<T> out;
  for (const Json& x : j) {
    if (!x.is_number_integer()) throw DocumentError(std::string("'") + key + "' holds a non-integer");
    out.push_back(static_cast<T>(x.get<long long>()));
  }
  return out;
}

SkeletonStats stats_from_json(const Json& j) {
  return {static_cast<int>(need_int(j, "n")), static_cast<int>(need_int(j, "c")),
          static_cast<int>(need_int(j, "p")), static_cast<int>(need_int(j, "e"))};
}

std::array<Vertex, 4> quad(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw DocumentError("a K4 lists exactly four vertices");
  std::array<Vertex, 4> q{};
  for (size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number_integer()) throw DocumentError("K4 vertices must be integers");
    q[i] = j[i].get<int>();
  }
  return q;
}

Json quad_json(const std::array<Vertex, 4>& q) { return Json::array({q[0], q[1], q[2], q[3]}); }

Operation op_from(const std::string& s) {
  for (Operation op : {Operation::AddEdge, Operation::AddVertex, Operation::AddPair, Operation::AddTwoK4})
    if (s == to_string(op)) return op;
  throw DocumentError("unknown operation '" + s + "'");
}

Json nullable(int x) { return x < 0 ? Json(nullptr) : Json(x); }

int from_nullable(const Json& obj, const char* key) {
  const Json& j = need(obj, key);
  if (j.is_null()) return -1;
  if (!j.is_number_integer()) throw DocumentError(std::string("'") + key + "' must be an integer or null");
  return j.get<int>();
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const SkeletonStats& s) {
  return Json{{"n", s.n}, {"p", s.p}, {"e", s.e}, {"c", s.c}};
}

Json to_json(const CheckReport& r) {
  Json ws = Json::array();
  for (const Violation& v : r.violations)
    ws.push_back(Json{{"message", v.message}, {"vertices", id_list(v.vertices)}, {"edges", id_list(v.edges)}});
  return Json{{"check", r.check}, {"status", r.passed() ? "pass" : "fail"}, {"witnesses", ws}};
}

Json to_json(const OnePlaneDrawing& d, const MaximalityWitness& w) {
  Json j{{"kind", w.kind == WitnessKind::Face ? "face" : "cross"},
         {"u", d.vertex_id(w.u)},
         {"v", d.vertex_id(w.v)},
         {"face_u", w.face_u},
         {"face_v", w.face_v}};
  if (w.kind == WitnessKind::Cross) {
    j["crossed_edge"] = d.edge(w.crossed_edge).id;
    j["u_on_forward_side"] = w.u_on_forward_side;
  }
  return j;
}

Json maximality_json(const OnePlaneDrawing& d, const MaximalityResult& m) {
  Json ws = Json::array();
  if (m.witness) {
    Json w = to_json(d, *m.witness);
    w["message"] = "edge " + d.vertex_id(m.witness->u) + "-" + d.vertex_id(m.witness->v) +
                   " can be added";
    ws.push_back(w);
  }
  return Json{{"check", "maximality"}, {"status", m.maximal ? "pass" : "fail"}, {"witnesses", ws}};
}

Json to_json(const BoundAudit& a) {
  Json slopes = Json::array();
  for (const SlopeComparison& s : a.slopes)
    slopes.push_back(Json{{"name", s.name}, {"slope", to_json(s.slope)}, {"excess", to_json(s.excess)}});
  Json j = to_json(a.report);
  j["N"] = a.N;
  j["E"] = a.E;
  j["bound"] = to_json(a.bound);
  j["bound_decimal"] = to_decimal(a.bound);
  j["slack"] = to_json(a.slack);
  j["slopes"] = slopes;
  return j;
}

Json certificate_json(const OnePlaneDrawing& skel, const Certificate& cert) {
  Json nodes = Json::array();
  for (const DecompositionNode& nd : cert.nodes) {
    std::vector<std::string> ids;
    for (Vertex v : nd.piece.vertices) ids.push_back(skel.vertex_id(v));
    nodes.push_back(Json{{"vertices", int_list(nd.piece.vertices)},
                         {"vertex_ids", id_list(ids)},
                         {"edges", int_list(nd.piece.edges)},
                         {"stats", to_json(nd.stats)},
                         {"split_edge", nullable(nd.split_edge)},
                         {"apex", nullable(nd.apex)},
                         {"child_a", nullable(nd.child_a)},
                         {"child_b", nullable(nd.child_b)},
                         {"leaf", nullable(nd.leaf)}});
  }
  Json leaves = Json::array();
  for (const LeafCertificate& lc : cert.leaves) {
    Json steps = Json::array();
    for (const SweepStep& s : lc.sweep.steps) {
      Json k4s = Json::array();
      for (const auto& q : s.k4s) k4s.push_back(quad_json(q));
      steps.push_back(Json{{"op", to_string(s.op)},
                           {"variant", s.variant},
                           {"new_vertices", int_list(s.new_vertices)},
                           {"new_edges", int_list(s.new_edges)},
                           {"k4s", k4s},
                           {"delta_lhs", s.delta_lhs},
                           {"delta_rhs", s.delta_rhs}});
    }
    leaves.push_back(Json{{"node", lc.node},
                          {"seed", quad_json(lc.sweep.seed)},
                          {"seed_lhs", lc.sweep.seed_lhs},
                          {"steps", steps}});
  }
  return Json{{"version", 1},
              {"stats", to_json(cert.stats)},
              {"lhs", inequality_lhs(cert.stats)},
              {"rhs", inequality_rhs(cert.stats)},
              {"nodes", nodes},
              {"leaves", leaves}};
}

Certificate certificate_from_json(const Json& j) {
  if (need_int(j, "version") != 1) throw DocumentError("unsupported certificate version");
  Certificate cert;
  cert.stats = stats_from_json(need(j, "stats"));
  const Json& nodes = need(j, "nodes");
  if (!nodes.is_array()) throw DocumentError("'nodes' must be an array");
  for (const Json& n : nodes) {
    DecompositionNode nd;
    nd.piece.vertices = need_ints<Vertex>(n, "vertices");
    nd.piece.edges = need_ints<EdgeIndex>(n, "edges");
    nd.stats = stats_from_json(need(n, "stats"));
    nd.split_edge = from_nullable(n, "split_edge");
    nd.apex = from_nullable(n, "apex");
    nd.child_a = from_nullable(n, "child_a");
    nd.child_b = from_nullable(n, "child_b");
    nd.leaf = from_nullable(n, "leaf");
    cert.nodes.push_back(std::move(nd));
  }
  const Json& leaves = need(j, "leaves");
  if (!leaves.is_array()) throw DocumentError("'leaves' must be an array");
  for (const Json& l : leaves) {
    LeafCertificate lc;
    lc.node = static_cast<int>(need_int(l, "node"));
    lc.sweep.seed = quad(need(l, "seed"));
    lc.sweep.seed_lhs = need_int(l, "seed_lhs");
    const Json& steps = need(l, "steps");
    if (!steps.is_array()) throw DocumentError("'steps' must be an array");
    for (const Json& s : steps) {
      SweepStep st;
      const Json& op = need(s, "op");
      if (!op.is_string()) throw DocumentError("'op' must be a string");
      st.op = op_from(op.get<std::string>());
      st.variant = static_cast<int>(need_int(s, "variant"));
      st.new_vertices = need_ints<Vertex>(s, "new_vertices");
      st.new_edges = need_ints<EdgeIndex>(s, "new_edges");
      const Json& k4s = need(s, "k4s");
      if (!k4s.is_array()) throw DocumentError("'k4s' must be an array");
      for (const Json& q : k4s) st.k4s.push_back(quad(q));
      st.delta_lhs = need_int(s, "delta_lhs");
      st.delta_rhs = need_int(s, "delta_rhs");
      lc.sweep.steps.push_back(std::move(st));
    }
    cert.leaves.push_back(std::move(lc));
  }
  return cert;
}

Json census_json(const EnumerationResult& r) {
  Json hist = Json::object(), ghist = Json::object();
  for (auto [e, c] : r.histogram) hist[std::to_string(e)] = c;
  for (auto [e, c] : r.graph_histogram) ghist[std::to_string(e)] = c;
  Json docs = Json::array();
  for (const OnePlaneDrawing& d : r.drawings) docs.push_back(Json::parse(serialize_drawing(d)));
  const Rational bound = density_lower_bound(r.n);
  return Json{{"n", r.n},
              {"e_prime", r.e_prime >= 0 ? Json(r.e_prime) : Json(nullptr)},
              {"lower_bound", to_json(bound)},
              {"lower_bound_ceil", ceil_rational(bound)},
              {"upper_bound", 4 * r.n - 8},
              {"drawing_count", r.drawings.size()},
              {"graph_count", r.graph_count},
              {"explored", r.explored},
              {"histogram", hist},
              {"graph_histogram", ghist},
              {"drawings", docs}};
}

DrawingAnalysis analyze_drawing(const OnePlaneDrawing& d) {
  DrawingAnalysis a;
  MaximalityResult m = is_maximal(d);
  a.maximal = m.maximal;
  a.witness = m.witness;
  a.suite = run_lemma_suite(d);
  a.hermits = static_cast<int>(find_hermits(d).hermits.size());

  Json checks = Json::array();
  checks.push_back(maximality_json(d, m));
  for (const CheckReport& r : a.suite.reports) checks.push_back(to_json(r));

  Json report{{"N", d.vertex_count()}, {"E", d.edge_count()}, {"h", a.hermits}};
  bool ok = a.suite.passed();
  if (a.suite.skeleton) {
    a.stats = a.suite.skeleton->stats;
    a.inequality = check_inequality(*a.stats);
    report["stats"] = to_json(*a.stats);
    CheckReport ineq{"edge_inequality", {}};
    if (!a.inequality)
      ineq.violations.push_back({"9p + 10e + 7c = " + std::to_string(inequality_lhs(*a.stats)) +
                                     " < 20n - 30 = " + std::to_string(inequality_rhs(*a.stats)),
                                 {},
                                 {}});
    Json ij = to_json(ineq);
    ij["lhs"] = inequality_lhs(*a.stats);
    ij["rhs"] = inequality_rhs(*a.stats);
    checks.push_back(ij);
    ok = ok && a.inequality;
    if (d.vertex_count() >= 4) {
      a.bound = audit_drawing_bound(d);
      checks.push_back(to_json(*a.bound));
      ok = ok && a.bound->report.passed();
    }
  } else {
    report["stats"] = nullptr;
  }
  a.passed = ok;
  report["status"] = ok ? "pass" : "fail";
  report["checks"] = checks;
  a.report = std::move(report);
  return a;
}

CorpusReport report_drawings(const std::vector<std::pair<std::string, OnePlaneDrawing>>& items) {
  CorpusReport rep;
  for (const auto& [name, d] : items) {
    ReportRow row;
    row.name = name;
    row.N = d.vertex_count();
    row.E = d.edge_count();
    row.maximal = is_maximal(d).maximal;
    row.h = static_cast<int>(find_hermits(d).hermits.size());
    if (row.maximal) {
      try {
        row.stats = skeleton(d).stats;
      } catch (const StructureError& e) {
        rep.warnings.push_back(name + ": " + e.what());
      }
    }
    if (row.N >= 4) {
      row.bound = density_lower_bound(row.N);
      row.slack = Rational(row.E) - *row.bound;
    }
    if (row.maximal && row.slack) {
      if (!rep.min_slack || *row.slack < *rep.min_slack) rep.min_slack = row.slack;
      const Rational density(row.E, row.N);
      if (!rep.min_density || density < *rep.min_density) rep.min_density = density;
      if (!rep.min_edges || row.E < *rep.min_edges) rep.min_edges = row.E;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

CorpusReport corpus_report(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<std::pair<std::string, OnePlaneDrawing>> items;
  std::vector<std::string> warnings;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_regular_file() && name.size() > 9 && name.ends_with(".opg.json"))
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& f : files) {
      try {
        items.push_back({f.filename().string(), load_drawing(f)});
      } catch (const std::exception& e) {
        warnings.push_back(f.filename().string() + ": skipped (" + e.what() + ")");
      }
    }
  } else {
    Json census;
    try {
      census = Json::parse(read_text(path));
    } catch (const Json::parse_error&) {
      throw DocumentError("'" + path.string() + "' is neither a directory nor a census file");
    }
    const Json& docs = need(census, "drawings");
    if (!docs.is_array()) throw DocumentError("census 'drawings' must be an array");
    for (size_t i = 0; i < docs.size(); ++i) {
      const std::string name = "drawing_" + std::to_string(i);
      try {
        items.push_back({name, parse_drawing(docs[i].dump())});
      } catch (const std::exception& e) {
        warnings.push_back(name + ": skipped (" + e.what() + ")");
      }
    }
  }
  CorpusReport rep = report_drawings(items);
  rep.warnings.insert(rep.warnings.begin(), warnings.begin(), warnings.end());
  return rep;
}

std::string to_csv(const CorpusReport& r) {
  std::ostringstream out;
  out << "name,N,E,h,maximal,n,p,e,c,bound,slack,slack_decimal\n";
  for (const ReportRow& row : r.rows) {
    out << row.name << ',' << row.N << ',' << row.E << ',' << row.h << ','
        << (row.maximal ? "yes" : "no") << ',';
    if (row.stats)
      out << row.stats->n << ',' << row.stats->p << ',' << row.stats->e << ',' << row.stats->c << ',';
    else
      out << ",,,,";
    if (row.bound)
      out << to_string(*row.bound) << ',' << to_string(*row.slack) << ',' << to_decimal(*row.slack);
    else
      out << ",,";
    out << '\n';
  }
  return out.str();
}

Json to_json(const CorpusReport& r) {
  Json rows = Json::array();
  for (const ReportRow& row : r.rows) {
    rows.push_back(Json{{"name", row.name},
                        {"N", row.N},
                        {"E", row.E},
                        {"h", row.h},
                        {"maximal", row.maximal},
                        {"stats", row.stats ? to_json(*row.stats) : Json(nullptr)},
                        {"bound", row.bound ? to_json(*row.bound) : Json(nullptr)},
                        {"slack", row.slack ? to_json(*row.slack) : Json(nullptr)}});
  }
  return Json{{"rows", rows},
              {"count", r.rows.size()},
              {"min_slack", r.min_slack ? to_json(*r.min_slack) : Json(nullptr)},
              {"min_density", r.min_density ? to_json(*r.min_density) : Json(nullptr)},
              {"min_edges", r.min_edges ? Json(*r.min_edges) : Json(nullptr)},
              {"warnings", id_list(r.warnings)}};
}

namespace {

std::vector<std::pair<std::string, Rational>> reference_slopes() {
  const ReferenceBounds ref = reference_bounds();
  return {{"28/13", ref.lower_planar}, {"21/10", ref.lower_plane}, {"20/9", ref.new_lower},
          {"7/3", ref.upper_plane},    {"45/17", ref.upper_planar}};
}

}  // namespace

Json bounds_table_json(long long from, long long to) {
  const LpSolution lp = minimize_F();
  Json rows = Json::array();
  for (long long N = std::max(from, 4LL); N <= to; ++N) {
    const Rational b = density_lower_bound(N);
    Json refs = Json::object();
    for (const auto& [name, slope] : reference_slopes()) refs[name] = to_decimal(slope * Rational(N), 2);
    rows.push_back(Json{{"N", N},
                        {"bound", to_json(b)},
                        {"bound_decimal", to_decimal(b)},
                        {"min_edges", ceil_rational(b)},
                        {"max_edges", 4 * N - 8},
                        {"reference", refs}});
  }
  return Json{{"lp_minimum", to_json(lp.minimum)}, {"rows", rows}};
}

std::string bounds_table_csv(long long from, long long to) {
  std::ostringstream out;
  out << "N,bound,bound_decimal,min_edges,max_edges";
  const auto slopes = reference_slopes();
  for (const auto& [name, slope] : slopes) out << ",slope_" << name;
  out << '\n';
  for (long long N = std::max(from, 4LL); N <= to; ++N) {
    const Rational b = density_lower_bound(N);
    out << N << ',' << to_string(b) << ',' << to_decimal(b) << ',' << ceil_rational(b) << ','
        << 4 * N - 8;
    for (const auto& [name, slope] : slopes) out << ',' << to_decimal(slope * Rational(N), 2);
    out << '\n';
  }
  return out.str();
}

}  // namespace oneplane
