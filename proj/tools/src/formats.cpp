#include "schelling/formats.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace schelling::formats {

using nlohmann::ordered_json;

namespace {

ordered_json parse_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON");
  return doc;
}

int require_int(const ordered_json& value, const char* what) {
  if (!value.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + " must be an integer");
  }
  return value.get<int>();
}

}  // namespace

NamedInstance parse_instance(const std::string& text) {
  ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw std::invalid_argument("instance file must be a JSON object");
  if (!doc.contains("vertices") || !doc.contains("edges") || !doc.contains("type_counts")) {
    throw std::invalid_argument("instance file needs vertices, edges, and type_counts");
  }
  const int n = require_int(doc["vertices"], "vertices");
  if (!doc["edges"].is_array()) throw std::invalid_argument("edges must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("each edge must be a two-element array");
    }
    edges.emplace_back(require_int(e[0], "edge endpoint"), require_int(e[1], "edge endpoint"));
  }
  if (!doc["type_counts"].is_array()) throw std::invalid_argument("type_counts must be an array");
  std::vector<int> counts;
  for (const auto& c : doc["type_counts"]) counts.push_back(require_int(c, "type count"));

  NamedInstance out{Instance(Graph(n, edges), counts), {}};
  if (doc.contains("names")) {
    if (!doc["names"].is_array() || static_cast<int>(doc["names"].size()) != n) {
      throw std::invalid_argument("names must be an array with one entry per vertex");
    }
    for (const auto& name : doc["names"]) {
      if (!name.is_string()) throw std::invalid_argument("names must be strings");
      out.names.push_back(name.get<std::string>());
    }
  }
  return out;
}

std::string serialize_instance(const Instance& instance, const std::vector<std::string>& names) {
  ordered_json doc;
  doc["vertices"] = instance.graph().vertex_count();
  auto edges = ordered_json::array();
  for (auto [u, v] : instance.graph().edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  doc["type_counts"] = instance.type_counts();
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != instance.graph().vertex_count()) {
      throw std::invalid_argument("names must have one entry per vertex");
    }
    doc["names"] = names;
  }
  return doc.dump();
}

AssignmentDoc parse_assignment(const std::string& text) {
  ordered_json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("placement") || !doc.contains("sw")) {
    throw std::invalid_argument("assignment file needs placement and sw");
  }
  const auto& placement = doc["placement"];
  if (!placement.is_object()) throw std::invalid_argument("placement must be an object");
  const int n = static_cast<int>(placement.size());
  std::vector<int> types(n, kEmpty);
  std::vector<bool> seen(n, false);
  for (const auto& [key, value] : placement.items()) {
    int vertex = 0;
    try {
      std::size_t used = 0;
      vertex = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("placement key is not a vertex index: " + key);
    }
    if (vertex < 0 || vertex >= n || seen[vertex]) {
      throw std::invalid_argument("placement must cover each vertex exactly once");
    }
    seen[vertex] = true;
    if (value.is_null()) continue;
    const int type = require_int(value, "placement entry");
    if (type < 0) throw std::invalid_argument("placement entries must be null or >= 0");
    types[vertex] = type;
  }
  if (!doc["sw"].is_string()) throw std::invalid_argument("sw must be a \"p/q\" string");
  auto sw = Rational::parse(doc["sw"].get<std::string>());
  if (!sw) throw std::invalid_argument("sw is not a valid rational: " + doc["sw"].dump());
  return {Assignment(types), *sw};
}

std::string serialize_assignment(const Assignment& assignment, const Rational& sw) {
  ordered_json placement = ordered_json::object();
  const auto& types = assignment.placement();
  for (std::size_t v = 0; v < types.size(); ++v) {
    if (types[v] == kEmpty) {
      placement[std::to_string(v)] = nullptr;
    } else {
      placement[std::to_string(v)] = types[v];
    }
  }
  ordered_json doc;
  doc["placement"] = std::move(placement);
  doc["sw"] = sw.str();
  return doc.dump();
}

std::string serialize_claim(const ReductionClaim& claim) {
  ordered_json doc;
  switch (claim.kind) {
    case ReductionClaim::Kind::ParetoVectorCharacterization:
      doc["kind"] = "pareto-vector";
      break;
    case ReductionClaim::Kind::PerfectEquivalence:
      doc["kind"] = "perfect-iff";
      break;
    case ReductionClaim::Kind::GroupWelfareThreshold:
      doc["kind"] = "group-welfare-threshold";
      break;
  }
  doc["source"] = claim.source;
  if (claim.kind == ReductionClaim::Kind::ParetoVectorCharacterization) {
    auto vec = ordered_json::array();
    for (const auto& u : claim.expected_vector) vec.push_back(u.str());
    doc["expected_vector"] = std::move(vec);
  }
  if (claim.kind == ReductionClaim::Kind::GroupWelfareThreshold) {
    doc["group_threshold"] = claim.group_threshold.str();
  }
  return doc.dump();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

NamedInstance read_instance_file(const std::string& path) {
  return parse_instance(read_text_file(path));
}

void write_instance_file(const std::string& path, const Instance& instance,
                         const std::vector<std::string>& names) {
  write_text_file(path, serialize_instance(instance, names) + "\n");
}

AssignmentDoc read_assignment_file(const std::string& path) {
  return parse_assignment(read_text_file(path));
}

void write_assignment_file(const std::string& path, const Assignment& assignment,
                           const Rational& sw) {
  write_text_file(path, serialize_assignment(assignment, sw) + "\n");
}

}  // namespace schelling::formats
