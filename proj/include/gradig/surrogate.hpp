#ifndef GRADIG_SURROGATE_HPP
#define GRADIG_SURROGATE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gradig/collapse.hpp"
#include "gradig/digraph.hpp"
#include "gradig/hf.hpp"
#include "gradig/universe.hpp"

namespace gradig {

struct NotCompletelyDisjoint : std::invalid_argument {
  explicit NotCompletelyDisjoint(const std::string& what)
      : std::invalid_argument(what) {}
};

struct ValueOutOfRange : std::invalid_argument {
  explicit ValueOutOfRange(const std::string& what)
      : std::invalid_argument(what) {}
};

struct NotPredecessorClosed : std::invalid_argument {
  explicit NotPredecessorClosed(const std::string& what)
      : std::invalid_argument(what) {}
};

// The layer cutoffs: a strictly increasing finite stand-in for a cofinal
// ordinal sequence. Layer k of the shared universe is its restriction to
// values at most lambdas[k].
struct LayerConfig {
  std::vector<Rational> lambdas;

  static LayerConfig defaults() { return {{Rational(10), Rational(20), Rational(30)}}; }
  void validate() const;
  const Rational& max() const { return lambdas.back(); }
};

using SeqId = std::uint32_t;

// Surrogate digraph over a layered universe. A sequence <v_0,...,v_n> has
// surrogate nodes v_k of value exactly lambda_k in layer k and a terminal
// node in layer n valued at least the earlier lambdas; the sequence's value
// is its terminal's. The edge w >> v holds iff len(w) <= len(v) and w's
// terminal points at v's node of the same index, so earlier entries stand in
// as parents at bounded levels and the relation stays set-like.
class SurrogateDigraph {
 public:
  explicit SurrogateDigraph(LayerConfig cfg,
                            UniverseMode mode = UniverseMode::generic,
                            std::uint64_t seed = 0, std::size_t retry_bound = 1000);

  const LayerConfig& config() const { return cfg_; }
  const Universe& universe() const { return uni_; }
  std::size_t seq_count() const { return seqs_.size(); }
  const std::vector<UVertex>& seq_nodes(SeqId s) const;
  const Rational& seq_value(SeqId s) const;
  static std::string seq_name(SeqId s) { return "q" + std::to_string(s); }

  bool tt_edge(SeqId w, SeqId v) const;

  // The surrogate finite-pattern oracle. Requires the three sets to be
  // completely disjoint (no two sequences among them share a node); the
  // result is a freshly minted sequence of value `value` related exactly as
  // asked to parents, children and apart.
  SeqId find_pattern(const std::vector<SeqId>& parents,
                     const std::vector<SeqId>& children,
                     const std::vector<SeqId>& apart, const Rational& value);

  // Least layer n with value <= lambda_n; ValueOutOfRange above the top.
  std::size_t least_layer(const Rational& value) const;

  // Induced >>-digraph on `subset` (or on every minted sequence);
  // sequence s becomes vertex "q<s>", graded by sequence value.
  std::pair<Digraph, Grading> snapshot(
      const std::vector<SeqId>* subset = nullptr) const;

 private:
  void check_completely_disjoint(const std::vector<SeqId>& all) const;

  LayerConfig cfg_;
  Universe uni_;
  std::vector<std::vector<UVertex>> seqs_;
  std::vector<Rational> seq_values_;
};

// Assigns a sequence to every vertex of an acyclic graded digraph so that
// x -> y iff seq(x) >> seq(y); values are preserved exactly. Sequences are
// freshly minted, so no two share a node.
std::map<std::string, SeqId> embed_into_surrogate(const Digraph& g,
                                                  const Grading& values,
                                                  SurrogateDigraph& t);

struct SurrogateCollapse {
  CollapseResult collapse;      // over the induced >>-digraph
  std::map<SeqId, Hf> seq_map;  // sequence -> its set
};

// Modified collapse of the induced >>-digraph on `seqs` (labels: numerals in
// ascending sequence order). `seqs` must be closed under minted
// >>-predecessors.
SurrogateCollapse collapse_surrogate_prefix(const SurrogateDigraph& t,
                                            const std::vector<SeqId>& seqs);

struct MainTheoremDemo {
  MembershipDigraph membership;
  std::map<std::string, SeqId> embedding;  // vertex -> sequence
  std::map<std::string, Hf> composite;     // vertex -> set image
  bool verified = false;
  std::string failure;  // first counterexample when !verified
};

// membership_digraph |> embed_into_surrogate |> collapse_surrogate_prefix,
// checked on every ordered pair of the closure: x in y iff j(x) in j(y).
MainTheoremDemo main_theorem_demo(Hf s, const LayerConfig& cfg,
                                  std::size_t max_closure = 200);

}  // namespace gradig

#endif
