#include "oneplane/document.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unordered_map>

namespace oneplane {

using json = nlohmann::ordered_json;

namespace {

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw DocumentError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

OnePlaneDrawing parse_drawing(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  const json& version = field(doc, "version");
  if (!version.is_number_integer() || version.get<int>() != 1)
    throw DocumentError("unsupported document version");

  const json& vs = field(doc, "vertices");
  if (!vs.is_array()) throw DocumentError("'vertices' must be an array");
  std::vector<std::string> vertex_ids;
  std::unordered_map<std::string, Vertex> vindex;
  for (const json& v : vs) {
    auto id = as_string(v, "vertex id");
    if (!vindex.emplace(id, static_cast<Vertex>(vertex_ids.size())).second)
      throw DocumentError("duplicate vertex id '" + id + "'");
    vertex_ids.push_back(id);
  }
  auto vertex = [&](const json& j, const char* what) {
    auto id = as_string(j, what);
    auto it = vindex.find(id);
    if (it == vindex.end()) throw DocumentError("unknown vertex '" + id + "'");
    return it->second;
  };

  const json& es = field(doc, "edges");
  if (!es.is_array()) throw DocumentError("'edges' must be an array");
  std::vector<Edge> edges;
  std::unordered_map<std::string, EdgeIndex> eindex;
  for (const json& e : es) {
    if (!e.is_object()) throw DocumentError("edge entries must be objects");
    Edge ed{as_string(field(e, "id"), "edge id"), vertex(field(e, "u"), "edge endpoint"),
            vertex(field(e, "v"), "edge endpoint")};
    if (!eindex.emplace(ed.id, static_cast<EdgeIndex>(edges.size())).second)
      throw DocumentError("duplicate edge id '" + ed.id + "'");
    edges.push_back(std::move(ed));
  }
  auto edge = [&](const json& j) {
    auto id = as_string(j, "edge reference");
    auto it = eindex.find(id);
    if (it == eindex.end()) throw DocumentError("unknown edge '" + id + "'");
    return it->second;
  };

  std::vector<Crossing> crossings;
  if (auto it = doc.find("crossings"); it != doc.end()) {
    if (!it->is_array()) throw DocumentError("'crossings' must be an array");
    for (const json& c : *it) {
      if (!c.is_object()) throw DocumentError("crossing entries must be objects");
      Crossing x;
      x.e1 = edge(field(c, "e1"));
      x.e2 = edge(field(c, "e2"));
      const json& rot = field(c, "rotation");
      if (!rot.is_array() || rot.size() != 4)
        throw DocumentError("crossing rotation must list exactly four segment ends");
      for (size_t i = 0; i < 4; ++i) {
        if (!rot[i].is_object()) throw DocumentError("segment ends must be objects");
        x.rotation[i] = {edge(field(rot[i], "edge")), vertex(field(rot[i], "toward"), "toward")};
      }
      crossings.push_back(x);
    }
  }

  const json& rs = field(doc, "rotations");
  if (!rs.is_object()) throw DocumentError("'rotations' must be an object");
  std::vector<std::vector<EdgeIndex>> rotations(vertex_ids.size());
  std::vector<bool> given(vertex_ids.size(), false);
  for (auto it = rs.begin(); it != rs.end(); ++it) {
    auto vit = vindex.find(it.key());
    if (vit == vindex.end()) throw DocumentError("rotation for unknown vertex '" + it.key() + "'");
    if (!it.value().is_array()) throw DocumentError("rotations must be arrays");
    given[vit->second] = true;
    for (const json& e : it.value()) rotations[vit->second].push_back(edge(e));
  }
  return OnePlaneDrawing(std::move(vertex_ids), std::move(edges), std::move(crossings),
                         std::move(rotations));
}

std::string serialize_drawing(const OnePlaneDrawing& d) {
  json doc;
  doc["version"] = 1;
  json vs = json::array();
  for (const auto& id : d.vertex_ids()) vs.push_back(id);
  doc["vertices"] = vs;
  json es = json::array();
  for (const Edge& e : d.edges())
    es.push_back(json{{"id", e.id}, {"u", d.vertex_id(e.u)}, {"v", d.vertex_id(e.v)}});
  doc["edges"] = es;
  json cs = json::array();
  for (const Crossing& x : d.crossings()) {
    json rot = json::array();
    for (const SegmentEnd& s : x.rotation)
      rot.push_back(json{{"edge", d.edge(s.edge).id}, {"toward", d.vertex_id(s.toward)}});
    cs.push_back(json{{"e1", d.edge(x.e1).id}, {"e2", d.edge(x.e2).id}, {"rotation", rot}});
  }
  doc["crossings"] = cs;
  json rs = json::object();
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    json r = json::array();
    for (EdgeIndex e : d.rotation(v)) r.push_back(d.edge(e).id);
    rs[d.vertex_id(v)] = r;
  }
  doc["rotations"] = rs;
  return doc.dump(2) + "\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DocumentError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

OnePlaneDrawing load_drawing(const std::filesystem::path& path) {
  return parse_drawing(read_text(path));
}

void save_drawing(const OnePlaneDrawing& d, const std::filesystem::path& path) {
  write_text(path, serialize_drawing(d));
}

}  // namespace oneplane
