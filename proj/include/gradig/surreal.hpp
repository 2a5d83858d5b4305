#ifndef GRADIG_SURREAL_HPP
#define GRADIG_SURREAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gradig/digraph.hpp"
#include "gradig/rational.hpp"

namespace gradig {

struct DayBoundExceeded : std::invalid_argument {
  explicit DayBoundExceeded(const std::string& what)
      : std::invalid_argument(what) {}
};

// An unquotiented surreal term {A|B}: interned, immutable, with every left
// member strictly below every right member and birthday one past the newest
// member. Distinct terms stay distinct even when equal as surreal numbers;
// that distinction is the whole point of the hypnagogic digraph.
class Term {
 public:
  Term() : id_(0) {}  // {|}, the first-born zero

  static Term zero() { return Term(); }
  // Validates the cut condition (left < right pointwise).
  static Term make(std::vector<Term> left, std::vector<Term> right);

  std::uint32_t id() const { return id_; }
  friend bool operator==(Term a, Term b) { return a.id_ == b.id_; }
  friend bool operator!=(Term a, Term b) { return a.id_ != b.id_; }

  std::vector<Term> left() const;
  std::vector<Term> right() const;
  std::size_t birthday() const;

  static Term from_id(std::uint32_t id);

 private:
  explicit Term(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

// x <= y iff no obstacle: no left member of x that y sits below-or-equal,
// and no right member of y sitting below-or-equal x. A total pre-order.
bool leq(Term x, Term y);
inline bool less(Term x, Term y) { return !leq(y, x); }
bool equivalent(Term x, Term y);

// One first-born representative per surreal value born by `day`, ascending.
std::vector<Term> born_by(std::size_t day, std::size_t bound = 4);

// Representatives plus their classic dyadic values (new classes take the
// midpoint of their neighbors, or min-1 / max+1 at the ends).
struct BornTable {
  std::vector<Term> reps;       // ascending
  std::vector<Rational> values;  // parallel to reps
  std::size_t day = 0;

  // Index of the class of `t`, by binary search + equivalence.
  std::size_t class_of(Term t) const;
};

BornTable born_table(std::size_t day, std::size_t bound = 4);

// All terms of birthday <= day as a digraph: a -> v for a in left(v) and
// v -> b for b in right(v), graded by the dyadic value of each term's class.
struct HypnagogicStage {
  std::size_t day = 0;
  std::vector<Term> nodes;  // nodes[i] behind vertex "t<i>"
  Digraph graph;
  Grading values;
  BornTable table;
};

HypnagogicStage hypnagogic_stage(std::size_t day, std::size_t bound = 2);

// Finite-pattern search inside a materialized stage: the first node of the
// requested class that every member of `parents` points at, that points at
// every member of `children`, and that shares no edge with `apart`.
// Returns the node index, or npos when the stage is too early to contain one.
std::size_t stage_find_pattern(const HypnagogicStage& stage,
                               const std::vector<std::size_t>& parents,
                               const std::vector<std::size_t>& children,
                               const std::vector<std::size_t>& apart,
                               std::size_t value_class);
inline constexpr std::size_t stage_npos = static_cast<std::size_t>(-1);

// Forth-embedding of a graded digraph whose values all appear in the stage's
// class table; throws when the stage is too early.
std::map<std::string, std::size_t> embed_into_stage(const Digraph& g,
                                                    const Grading& values,
                                                    const HypnagogicStage& stage);

// Syntax: "{|}", "{{|}|}", "{{|},{{|}|}|{...}}" - comma-separated sides.
std::string to_string(Term t);
Term parse_term(const std::string& text);

}  // namespace gradig

#endif
