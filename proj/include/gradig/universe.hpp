#ifndef GRADIG_UNIVERSE_HPP
#define GRADIG_UNIVERSE_HPP

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gradig/digraph.hpp"
#include "gradig/rational.hpp"

namespace gradig {

struct InvalidPattern : std::invalid_argument {
  explicit InvalidPattern(const std::string& what) : std::invalid_argument(what) {}
};

struct RetryExhausted : std::runtime_error {
  explicit RetryExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct StageBoundExceeded : std::invalid_argument {
  explicit StageBoundExceeded(const std::string& what)
      : std::invalid_argument(what) {}
};

enum class UniverseMode { generic, random };

using UVertex = std::uint32_t;

// One instance of the finite-pattern property: ask for a vertex at `value`
// that every parent points at, that points at every child, and that has no
// edge at all with the vertices in `apart`.
struct PatternQuery {
  std::vector<UVertex> parents;   // values strictly below `value`
  std::vector<UVertex> children;  // values strictly above `value`
  std::vector<UVertex> apart;     // disjoint from the other two sets
  Rational value;
};

// Lazily grown realization of the countable random graded digraph. Generic
// mode mints each requested pattern outright, so every vertex's adjacency to
// earlier vertices is exactly what was asked for. Random mode derives the
// adjacency of any value-ordered pair from a pure hash of (seed, lo, hi), so
// the infinite coin-flip graph is explored consistently without being stored.
//
// Minting requires exclusive access; reads between mints are safe to share.
class Universe {
 public:
  explicit Universe(LinearOrder order = LinearOrder::rationals(),
                    UniverseMode mode = UniverseMode::generic,
                    std::uint64_t seed = 0, std::size_t retry_bound = 1000);

  UniverseMode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }
  const LinearOrder& order() const { return order_; }
  std::size_t retry_bound() const { return retry_bound_; }
  std::size_t size() const { return values_.size(); }

  const Rational& value(UVertex v) const;
  bool edge(UVertex u, UVertex v) const;
  static std::string vertex_name(UVertex v) { return "u" + std::to_string(v); }

  // Fresh vertex with no requested adjacency (generic: isolated; random:
  // adjacency sampled by the hash like any other vertex).
  UVertex mint_free(const Rational& value);

  // The finite-pattern oracle. Generic mode mints; random mode scans the
  // minted prefix and then mints candidates up to the retry bound
  // (RetryExhausted beyond it). fresh_only skips the scan so the result is a
  // brand-new vertex in either mode.
  UVertex find_pattern(const PatternQuery& q, bool fresh_only = false);

  std::vector<Rational> used_values() const { return values_; }

  // Minted prefix (or just `subset`) as a digraph; vertex i is named "u<i>".
  std::pair<Digraph, Grading> snapshot(
      const std::vector<UVertex>* subset = nullptr) const;

  std::string export_json(int indent = 2) const;

  // Scans every minted pair; for tests.
  bool grading_intact() const;

 private:
  void validate(const PatternQuery& q) const;
  bool matches(UVertex v, const PatternQuery& q) const;
  bool hash_edge(UVertex lo, UVertex hi) const;

  LinearOrder order_;
  UniverseMode mode_;
  std::uint64_t seed_;
  std::size_t retry_bound_;
  std::vector<Rational> values_;
  std::unordered_set<std::uint64_t> edges_;  // generic-mode adjacency
};

// Stage k of the exhaustive construction: stage 0 is empty, and each step
// adds one vertex for every extension type over the previous stage — a level
// position (an existing level, a gap between adjacent levels, below all, or
// above all) plus an in-neighbor set from lower levels and an out-neighbor
// set from higher levels.
struct StageGraph {
  std::size_t stage = 0;
  Digraph graph;   // vertices g0, g1, ... in creation order
  Grading values;  // pre-order levels realized as rationals
};

StageGraph build_stage(std::size_t n, std::size_t bound = 3);

// Embeds a graded digraph into the universe vertex by vertex, asking the
// pattern oracle for each vertex's full relation to the already-embedded
// part. value_exact keeps the grading values; order_preserving picks fresh
// order-compatible values instead.
EmbeddingWitness forth_embed(const Digraph& g, const Grading& values,
                             Universe& u,
                             WitnessMode mode = WitnessMode::value_exact);

// A finite partial isomorphism between two universes; pairs are
// (u1 vertex, u2 vertex) in the order they were matched.
struct PartialIso {
  std::vector<std::pair<UVertex, UVertex>> pairs;
};

// Alternately covers the next minted vertex of u1 and of u2, extending a
// value-exact partial isomorphism with each side's pattern oracle. When a
// side's enumeration is exhausted it grows: first by mirroring the other
// side's next uncovered vertex, then by minting a free vertex at a fresh
// value. After `steps` rounds the first `steps` vertices of each side are
// covered.
PartialIso back_and_forth(Universe& u1, Universe& u2, std::size_t steps);

// Checks the partial isomorphism as an induced-subgraph witness in both
// directions.
std::pair<VerifyResult, VerifyResult> verify_partial_iso(const Universe& u1,
                                                         const Universe& u2,
                                                         const PartialIso& iso);

// The undirected Rado extension property, witnessed through the grading: a
// vertex above everything mentioned, adjacent to all of `join` and to none of
// `avoid`.
UVertex rado_extension_check(Universe& u, const std::vector<UVertex>& join,
                             const std::vector<UVertex>& avoid);

}  // namespace gradig

#endif
