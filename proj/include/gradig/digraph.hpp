#ifndef GRADIG_DIGRAPH_HPP
#define GRADIG_DIGRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradig/rational.hpp"

namespace gradig {

struct CyclicInput : std::invalid_argument {
  explicit CyclicInput(const std::string& what) : std::invalid_argument(what) {}
};

struct TooLarge : std::invalid_argument {
  explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// Finite digraph over opaque string vertex names. The vertex-list order is
// the canonical tie-break everywhere (grading, enumeration), so insertion
// order matters and is preserved.
class Digraph {
 public:
  Digraph() = default;

  std::size_t add_vertex(const std::string& name);
  void add_edge(const std::string& from, const std::string& to);
  void add_edge(std::size_t from, std::size_t to);

  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const;
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool has_vertex(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;

  bool has_edge(std::size_t from, std::size_t to) const;
  bool has_edge(const std::string& from, const std::string& to) const;
  const std::set<std::size_t>& out(std::size_t i) const { return out_[i]; }
  const std::set<std::size_t>& in(std::size_t i) const { return in_[i]; }

  // Edges in deterministic (from, to) index order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Subgraph induced on `keep` (indices, in the order given).
  Digraph induced(const std::vector<std::size_t>& keep) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::set<std::size_t>> out_;
  std::vector<std::set<std::size_t>> in_;
};

// Value assignment for a digraph's vertices; strict means injective.
struct Grading {
  std::map<std::string, Rational> values;
  bool strict = false;

  const Rational& at(const std::string& v) const;
  bool has(const std::string& v) const { return values.count(v) != 0; }

  // Every edge must go from lower to higher value; strictness adds injectivity.
  // Returns an explanation on failure.
  std::optional<std::string> check(const Digraph& g) const;
};

bool is_acyclic(const Digraph& g);

// Vertex indices in topological order, list-order tie-break (Kahn with an
// index-ordered frontier). Throws CyclicInput.
std::vector<std::size_t> topological_order(const Digraph& g);

// Transitive closure of the edge relation as a set of index pairs.
std::set<std::pair<std::size_t, std::size_t>> reachability(const Digraph& g);

// Strict Q-grading: consecutive integers along the topological order.
Grading grade(const Digraph& g);

// All permutations of the vertices preserving edges exactly (and values, when
// a grading is given). Exhaustive; refuses graphs larger than `bound`.
std::vector<std::vector<std::size_t>> automorphisms(
    const Digraph& g, const Grading* grading = nullptr, std::size_t bound = 8);

enum class WitnessMode { edge_only, order_preserving, value_exact };

std::string to_string(WitnessMode m);

// A claimed induced-subgraph embedding: injective vertex map whose edge
// condition holds in both directions, with a per-mode value condition.
struct EmbeddingWitness {
  Digraph source;
  Grading source_values;
  std::map<std::string, std::string> map;  // source vertex -> target vertex
  WitnessMode mode = WitnessMode::value_exact;
};

struct VerifyResult {
  bool ok = true;
  std::string reason;  // counterexample description when !ok
  explicit operator bool() const { return ok; }
};

VerifyResult verify_embedding(const EmbeddingWitness& w, const Digraph& target,
                              const Grading& target_values);

}  // namespace gradig

#endif
