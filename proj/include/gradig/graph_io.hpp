#ifndef GRADIG_GRAPH_IO_HPP
#define GRADIG_GRAPH_IO_HPP

#include <string>
#include <utility>

#include "gradig/digraph.hpp"

namespace gradig {

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

// Wire format:
//   {"vertices": ["a", ...],
//    "edges": [["a","b"], ...],
//    "values": {"a": "3/2", ...}}   // optional; rationals as "p" or "p/q"
std::string graph_to_json(const Digraph& g, const Grading* values = nullptr,
                          int indent = 2);

// Extra top-level fields (already rendered JSON object content) may be
// prepended by callers that wrap this; see Universe::export_json.
std::pair<Digraph, Grading> graph_from_json(const std::string& text);

bool json_has_values(const std::string& text);

// DOT export; grading values become vertex labels.
std::string graph_to_dot(const Digraph& g, const Grading* values = nullptr);

// Plain-text listing, one vertex / edge per line.
std::string graph_to_text(const Digraph& g, const Grading* values = nullptr);

}  // namespace gradig

#endif
