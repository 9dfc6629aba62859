#include "reglab/io.hpp"

#include "reglab/errors.hpp"

#include <fstream>
#include <sstream>

namespace reglab::io {

json to_json(const Rational& r) { return r.str(); }

json to_json(const VertexSet& s) { return s.to_vector(); }

json to_json(const AnyGraph& g) {
  json j;
  j["schema"] = kSchema;
  j["n"] = order(g);
  if (g.index() == 0) {
    j["kind"] = "graph";
    json e = json::array();
    for (auto [a, b] : std::get<Graph>(g).edges()) e.push_back({a, b});
    j["edges"] = e;
  } else {
    j["kind"] = "3graph";
    json e = json::array();
    for (auto [a, b, c] : std::get<ThreeGraph>(g).edges()) e.push_back({a, b, c});
    j["edges"] = e;
  }
  return j;
}

json to_json(const families::Instance& inst) {
  json j = to_json(inst.graph);
  if (!inst.family.empty()) j["family"] = inst.family;
  json labels = json::object();
  for (const auto& [k, v] : inst.labels) labels[k] = to_json(v);
  j["labels"] = labels;
  if (!inst.classes.empty()) j["classes"] = inst.classes;
  return j;
}

json to_json(const Partition& p) {
  json parts = json::array();
  for (const auto& s : p.parts()) parts.push_back(to_json(s));
  return {{"schema", kSchema}, {"parts", parts}};
}

json to_json(const regularity::Witness& w) {
  json subs = json::array();
  for (const auto& s : w.subsets) subs.push_back(to_json(s));
  return {{"subsets", subs},
          {"sub_density", to_json(w.sub_density)},
          {"cell_density", to_json(w.cell_density)},
          {"gap", to_json(w.gap)}};
}

json to_json(const regularity::Verdict& v) {
  json j = {{"status", regularity::to_string(v.status)},
            {"mode", v.mode == regularity::Mode::exact ? "exact" : "heuristic"},
            {"density", to_json(v.density)}};
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

json to_json(const regularity::PartitionVerdict& v) {
  json cells = json::array();
  for (const auto& c : v.cells) {
    json cj = {{"parts", c.parts},
               {"status", regularity::to_string(c.status)},
               {"density", to_json(c.density)},
               {"weight", c.weight}};
    if (c.witness) cj["witness"] = to_json(*c.witness);
    cells.push_back(cj);
  }
  return {{"pass", v.pass},
          {"certified", v.certified},
          {"complete", v.complete},
          {"covered_mass", to_json(v.covered_mass)},
          {"cells", cells}};
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& ptr, const std::string& msg) {
  throw DomainError(where + ": " + (ptr.empty() ? "/" : ptr) + ": " + msg);
}

int vertex_at(const json& j, std::size_t n, const std::string& where, const std::string& ptr) {
  if (!j.is_number_integer()) fail(where, ptr, "expected an integer vertex id");
  auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= n)
    fail(where, ptr, "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
  return static_cast<int>(v);
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw DomainError(where + ": expected a rational \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const DomainError& e) {
    throw DomainError(where + ": " + e.what());
  }
}

AnyGraph graph_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "", "expected a JSON object");
  if (j.contains("schema") && j["schema"] != kSchema)
    fail(where, "/schema", "unsupported schema " + j["schema"].dump());
  if (!j.contains("kind") || !j["kind"].is_string()) fail(where, "/kind", "missing \"graph\" or \"3graph\"");
  auto kind = j["kind"].get<std::string>();
  if (kind != "graph" && kind != "3graph") fail(where, "/kind", "unknown kind \"" + kind + "\"");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0)
    fail(where, "/n", "expected a nonnegative integer");
  auto n = j["n"].get<std::size_t>();
  if (!j.contains("edges") || !j["edges"].is_array()) fail(where, "/edges", "expected an array");
  std::size_t k = kind == "graph" ? 2 : 3;
  std::vector<std::vector<int>> raw;
  const auto& edges = j["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string ptr = "/edges/" + std::to_string(i);
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != k) fail(where, ptr, "expected " + std::to_string(k) + " vertex ids");
    std::vector<int> vs;
    for (std::size_t t = 0; t < k; ++t) vs.push_back(vertex_at(e[t], n, where, ptr + "/" + std::to_string(t)));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (vs[a] == vs[b]) fail(where, ptr, "repeated vertex " + std::to_string(vs[a]));
    raw.push_back(vs);
  }
  if (k == 2) {
    std::vector<Edge2> e;
    for (auto& v : raw) e.push_back({v[0], v[1]});
    return Graph(n, std::move(e));
  }
  std::vector<Edge3> e;
  for (auto& v : raw) e.push_back({v[0], v[1], v[2]});
  return ThreeGraph(n, std::move(e));
}

families::Instance instance_from_json(const json& j, const std::string& where) {
  families::Instance inst;
  inst.graph = graph_from_json(j, where);
  std::size_t n = order(inst.graph);
  if (j.contains("family")) {
    if (!j["family"].is_string()) fail(where, "/family", "expected a string");
    inst.family = j["family"].get<std::string>();
  }
  if (j.contains("labels")) {
    if (!j["labels"].is_object()) fail(where, "/labels", "expected an object");
    for (const auto& [key, val] : j["labels"].items()) {
      std::string ptr = "/labels/" + key;
      if (!val.is_array()) fail(where, ptr, "expected an array of vertex ids");
      VertexSet s(n);
      for (std::size_t i = 0; i < val.size(); ++i) s.insert(vertex_at(val[i], n, where, ptr + "/" + std::to_string(i)));
      inst.labels.emplace(key, s);
    }
  }
  if (j.contains("classes")) {
    if (!j["classes"].is_array()) fail(where, "/classes", "expected an array of labels");
    for (std::size_t i = 0; i < j["classes"].size(); ++i) {
      const auto& c = j["classes"][i];
      std::string ptr = "/classes/" + std::to_string(i);
      if (!c.is_string() || !inst.has(c.get<std::string>())) fail(where, ptr, "expected a known label");
      inst.classes.push_back(c.get<std::string>());
    }
  }
  return inst;
}

Partition partition_from_json(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array()) fail(where, "/parts", "expected an array");
  std::vector<std::vector<int>> parts;
  const auto& ps = j["parts"];
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::string ptr = "/parts/" + std::to_string(i);
    if (!ps[i].is_array()) fail(where, ptr, "expected an array of vertex ids");
    std::vector<int> part;
    for (std::size_t t = 0; t < ps[i].size(); ++t)
      part.push_back(vertex_at(ps[i][t], n, where, ptr + "/" + std::to_string(t)));
    parts.push_back(part);
  }
  try {
    return Partition(n, parts);
  } catch (const DomainError& e) {
    throw DomainError(where + ": /parts: " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw DomainError(path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError(path + ": cannot write file");
  out << text;
}

families::Instance load_instance(const std::string& path) { return instance_from_json(read_file(path), path); }

Partition load_partition(const std::string& path, std::size_t n) {
  return partition_from_json(read_file(path), n, path);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw DomainError(what + ": '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

VertexSet resolve_selector(const families::Instance& inst, const std::string& sel) {
  if (inst.has(sel)) return inst.at(sel);
  std::size_t n = inst.n();
  VertexSet s(n);
  for (int v : parse_int_list(sel, "selector '" + sel + "'")) {
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw DomainError("selector '" + sel + "': vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  if (s.size() == 0) throw DomainError("selector '" + sel + "': no such label and no vertices");
  return s;
}

}  // namespace reglab::io
