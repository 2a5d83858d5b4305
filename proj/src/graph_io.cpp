#include "gradig/graph_io.hpp"

#include <json.hpp>

#include <sstream>

namespace gradig {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json graph_json_body(const Digraph& g, const Grading* values) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v);
  j["edges"] = ordered_json::array();
  for (const auto& [u, v] : g.edges()) {
    j["edges"].push_back(ordered_json::array({g.name(u), g.name(v)}));
  }
  if (values) {
    ordered_json vals = ordered_json::object();
    for (const auto& name : g.vertices()) {
      vals[name] = format_rational(values->at(name));
    }
    j["values"] = std::move(vals);
  }
  return j;
}

}  // namespace

std::string graph_to_json(const Digraph& g, const Grading* values, int indent) {
  return graph_json_body(g, values).dump(indent);
}

std::pair<Digraph, Grading> graph_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw ParseError("graph JSON needs a \"vertices\" array");
  }
  Digraph g;
  try {
    for (const auto& v : j["vertices"]) {
      if (!v.is_string()) throw ParseError("vertex names must be strings");
      g.add_vertex(v.get<std::string>());
    }
    if (j.contains("edges")) {
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) {
          throw ParseError("edges must be [from, to] pairs");
        }
        g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
      }
    }
    Grading values;
    if (j.contains("values")) {
      for (const auto& [name, val] : j["values"].items()) {
        if (!g.has_vertex(name)) {
          throw ParseError("value for unknown vertex '" + name + "'");
        }
        values.values[name] = parse_rational(val.get<std::string>());
      }
    }
    return {std::move(g), std::move(values)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
}

bool json_has_values(const std::string& text) {
  try {
    auto j = ordered_json::parse(text);
    return j.is_object() && j.contains("values") && !j["values"].empty();
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const Digraph& g, const Grading* values) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& v : g.vertices()) {
    os << "  \"" << dot_escape(v) << "\"";
    if (values) {
      os << " [label=\"" << dot_escape(v) << "\\n"
         << format_rational(values->at(v)) << "\"]";
    }
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    os << "  \"" << dot_escape(g.name(u)) << "\" -> \"" << dot_escape(g.name(v))
       << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_text(const Digraph& g, const Grading* values) {
  std::ostringstream os;
  os << g.size() << " vertices, " << g.edge_count() << " edges\n";
  for (const auto& v : g.vertices()) {
    os << v;
    if (values) os << " @ " << format_rational(values->at(v));
    os << "\n";
  }
  for (const auto& [u, v] : g.edges()) {
    os << g.name(u) << " -> " << g.name(v) << "\n";
  }
  return os.str();
}

}  // namespace gradig
