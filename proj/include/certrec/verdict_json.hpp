#ifndef CERTREC_VERDICT_JSON_HPP
#define CERTREC_VERDICT_JSON_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "certrec/certificate.hpp"
#include "certrec/graph.hpp"

namespace certrec {

inline constexpr const char* kSchemaVersion = "1";

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::pair<const char*, const char*> partition_keys(GraphClass c) {
  if (c == GraphClass::split) return {"independent", "clique"};
  return {"A", "B"};
}

inline nlohmann::json certificate_json(GraphClass cls, const Certificate& c) {
  nlohmann::json j;
  j["type"] = std::string(kind_name(c.kind));
  if (c.order) j["order"] = std::vector<Vertex>(c.order->begin(), c.order->end());
  if (!c.patterns.empty()) j["patterns"] = c.patterns;
  if (c.kind == CertificateKind::tree) {
    auto& parent = j["parent"] = nlohmann::json::array();
    for (Vertex p : c.parent) parent.push_back(p == kNoVertex ? nlohmann::json(nullptr) : nlohmann::json(p));
  }
  if (c.partition) {
    auto [first, second] = partition_keys(cls);
    j["partition"] = {{first, c.partition->first}, {second, c.partition->second}};
  }
  if (c.kind == CertificateKind::forbidden_subgraph) {
    j["obstruction"] = c.obstruction;
    j["vertices"] = c.vertices;
    if (!c.roles.empty()) j["roles"] = c.roles;
  }
  if (c.violation)
    j["violation"] = {{"pattern", c.violation->pattern}, {"a", c.violation->a}, {"b", c.violation->b}, {"c", c.violation->c}};
  return j;
}

template <class T>
T field(const nlohmann::json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string(where) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError(std::string(where) + ": field '" + key + "' has the wrong type");
  }
}

inline Certificate certificate_from_json(GraphClass cls, const nlohmann::json& j) {
  Certificate c;
  const auto type = field<std::string>(j, "type", "certificate");
  if (type == "ordering") {
    c.kind = CertificateKind::ordering;
  } else if (type == "tree") {
    c.kind = CertificateKind::tree;
  } else if (type == "forbidden_subgraph") {
    c.kind = CertificateKind::forbidden_subgraph;
  } else {
    throw SchemaError("certificate: unknown type '" + type + "'");
  }
  if (j.contains("order")) {
    try {
      c.order = VertexOrder(field<std::vector<Vertex>>(j, "order", "certificate"));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("certificate: ") + e.what());
    }
  }
  if (j.contains("patterns")) c.patterns = field<std::vector<std::string>>(j, "patterns", "certificate");
  if (c.kind == CertificateKind::tree) {
    const auto& parent = j.contains("parent") ? j.at("parent") : throw SchemaError("certificate: missing field 'parent'");
    if (!parent.is_array()) throw SchemaError("certificate: 'parent' must be an array");
    for (const auto& p : parent) {
      if (p.is_null()) {
        c.parent.push_back(kNoVertex);
      } else if (p.is_number_integer()) {
        c.parent.push_back(p.get<Vertex>());
      } else {
        throw SchemaError("certificate: 'parent' entries must be integers or null");
      }
    }
  } else if (c.kind == CertificateKind::ordering && !c.order) {
    throw SchemaError("certificate: missing field 'order'");
  }
  if (j.contains("partition")) {
    auto [first, second] = partition_keys(cls);
    const auto& p = j.at("partition");
    c.partition = Partition{field<VertexSet>(p, first, "partition"), field<VertexSet>(p, second, "partition")};
  }
  if (c.kind == CertificateKind::forbidden_subgraph) {
    c.obstruction = field<std::string>(j, "obstruction", "certificate");
    c.vertices = field<std::vector<Vertex>>(j, "vertices", "certificate");
    if (j.contains("roles")) c.roles = field<std::vector<std::string>>(j, "roles", "certificate");
  }
  if (j.contains("violation")) {
    const auto& v = j.at("violation");
    c.violation = PatternViolation{field<std::string>(v, "pattern", "violation"), field<Vertex>(v, "a", "violation"),
                                   field<Vertex>(v, "b", "violation"), field<Vertex>(v, "c", "violation")};
  }
  return c;
}

}  // namespace detail

/// Verdict document; n and m describe the graph the verdict refers to.
inline nlohmann::json verdict_to_json(const Verdict& v, Vertex n, std::size_t m, bool with_certificate = true) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["class"] = std::string(class_name(v.graph_class));
  j["member"] = v.member;
  j["n"] = n;
  j["m"] = m;
  if (with_certificate) j["certificate"] = detail::certificate_json(v.graph_class, v.certificate);
  if (!v.component_vertices.empty()) j["component_vertices"] = v.component_vertices;
  return j;
}

inline nlohmann::json verdict_to_json(const Graph& g, const Verdict& v, bool with_certificate = true) {
  nlohmann::json j = verdict_to_json(v, g.vertex_count(), g.edge_count(), with_certificate);
  if (!v.components.empty()) {
    auto& parts = j["components"] = nlohmann::json::array();
    for (const auto& sub : v.components) {
      auto part = induced_subgraph(g, sub.component_vertices).graph;
      parts.push_back(verdict_to_json(part, sub, with_certificate));
    }
  }
  return j;
}

inline Verdict verdict_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("verdict: expected a JSON object");
  if (detail::field<std::string>(j, "schema_version", "verdict") != kSchemaVersion)
    throw SchemaError("verdict: unsupported schema_version");
  Verdict v;
  const auto cls = detail::field<std::string>(j, "class", "verdict");
  auto c = class_by_name(cls);
  if (!c) throw SchemaError("verdict: unknown class '" + cls + "'");
  v.graph_class = *c;
  v.member = detail::field<bool>(j, "member", "verdict");
  if (!j.contains("certificate")) throw SchemaError("verdict: missing field 'certificate'");
  v.certificate = detail::certificate_from_json(v.graph_class, j.at("certificate"));
  if (j.contains("component_vertices")) v.component_vertices = detail::field<std::vector<Vertex>>(j, "component_vertices", "verdict");
  if (j.contains("components")) {
    if (!j.at("components").is_array()) throw SchemaError("verdict: 'components' must be an array");
    for (const auto& sub : j.at("components")) v.components.push_back(verdict_from_json(sub));
  }
  return v;
}

}  // namespace certrec

#endif  // CERTREC_VERDICT_JSON_HPP
