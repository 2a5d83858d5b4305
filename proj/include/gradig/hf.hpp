#ifndef GRADIG_HF_HPP
#define GRADIG_HF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradig/digraph.hpp"
#include "gradig/rational.hpp"

namespace gradig {

// Canonical hereditarily finite set. Values are interned handles: structural
// equality is id equality, elements are kept strictly increasing in the
// Ackermann code order, and shared subterms are stored once.
class Hf {
 public:
  Hf() : id_(0) {}  // the empty set

  static Hf empty() { return Hf(); }
  static Hf make(std::vector<Hf> elements);

  std::uint32_t id() const { return id_; }
  friend bool operator==(Hf a, Hf b) { return a.id_ == b.id_; }
  friend bool operator!=(Hf a, Hf b) { return a.id_ != b.id_; }

  bool is_empty() const { return id_ == 0; }
  std::size_t arity() const;
  std::vector<Hf> elements() const;  // ascending Ackermann order
  bool contains(Hf x) const;         // x in this
  std::size_t rank() const;

  // Ackermann code order without materializing codes: compares the
  // descending element lists lexicographically, recursively.
  static Ordering cmp(Hf a, Hf b);
  friend bool operator<(Hf a, Hf b) { return cmp(a, b) == Ordering::less; }

  static Hf from_id(std::uint32_t id);

 private:
  explicit Hf(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

// Sum of 2^encode(x) over the elements. Codes grow as iterated exponentials,
// so the result is refused (TooLarge) once it would exceed `max_bits` bits.
BigInt encode(Hf s, std::size_t max_bits = std::size_t{1} << 24);
std::optional<BigInt> encode_checked(Hf s, std::size_t max_bits = std::size_t{1} << 24);

// Inverse of encode: the set of decode(n) over the set bits n of the code.
Hf decode(const BigInt& code);

std::size_t hf_rank(Hf s);

// Elements, elements of elements, and so on; s itself excluded.
Hf transitive_closure(Hf s);
std::vector<Hf> transitive_closure_list(Hf s);  // ascending Ackermann order

struct MembershipDigraph {
  Digraph graph;       // vertices named s0..sk in ascending Ackermann order
  Grading values;      // von Neumann rank
  std::vector<Hf> sets;  // sets[i] is the set behind vertex i
};

// The membership relation on transitive_closure(s) together with s itself,
// graded by rank. Acyclic by foundation.
MembershipDigraph membership_digraph(Hf s);

// Text syntax: "{}", "{{},{{}}}". Output uses canonical element order.
std::string to_string(Hf s);
Hf parse_hf(const std::string& text);

Hf von_neumann(std::size_t n);

// Unordered pair {a, b}; collapses to a singleton when a == b.
Hf pair_set(Hf a, Hf b);

}  // namespace gradig

#endif
