#ifndef GRADIG_COLLAPSE_HPP
#define GRADIG_COLLAPSE_HPP

#include <map>
#include <string>

#include "gradig/digraph.hpp"
#include "gradig/hf.hpp"

namespace gradig {

struct NotExtensional : std::invalid_argument {
  explicit NotExtensional(const std::string& what) : std::invalid_argument(what) {}
};

struct NonInjectiveLabels : std::invalid_argument {
  explicit NonInjectiveLabels(const std::string& what)
      : std::invalid_argument(what) {}
};

struct CollapseResult {
  Hf image;                             // the set of images of g's vertices
  std::map<std::string, Hf> vertex_map;  // vertex -> its set
};

// G+ from an acyclic g: the transitive closure of a fresh chain 0 -> 1 -> ... -> n
// disjoint-union g, plus edges k -> v_k for the k-th vertex of g (1-based).
// The result is acyclic and extensional.
Digraph extensionalize(const Digraph& g);

// True when no two vertices share the same in-neighbor set.
bool is_extensional(const Digraph& g);

// Classic collapse pi(v) = { pi(w) : w -> v }. Requires acyclic + extensional
// input; then w -> v iff pi(w) in pi(v).
CollapseResult mostowski(const Digraph& g);

// extensionalize then mostowski, with the map restricted to g's vertices.
CollapseResult realize_as_set(const Digraph& g);

// pi(x) = { pi(y) : y -> x } union {{0, label(x)}}. The tag makes the map an
// isomorphism without extensionality; labels must be injective. When `labels`
// is null, vertex i gets the von Neumann numeral i.
CollapseResult modified_collapse(const Digraph& g,
                                 const std::map<std::string, Hf>* labels = nullptr);

// The self-embedding j(x) = { j(y) : y in x } union {{0, x}} of the HF
// universe: membership-preserving in both directions and fixed-point-free.
Hf j_embed(Hf x);

}  // namespace gradig

#endif
