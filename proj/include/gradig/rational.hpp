#ifndef GRADIG_RATIONAL_HPP
#define GRADIG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradig {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic; cpp_rational keeps values normalized
// (lowest terms, denominator > 0), which the grading machinery relies on.
using Rational = boost::multiprecision::cpp_rational;

enum class Ordering { less, equal, greater };

Ordering compare(const Rational& a, const Rational& b);

struct NotOrdered : std::invalid_argument {
  explicit NotOrdered(const std::string& what) : std::invalid_argument(what) {}
};

// Midpoint (a+b)/2, strictly between its arguments. Throws NotOrdered unless a < b.
Rational between(const Rational& a, const Rational& b);

// Where fresh_outside should place its result relative to `used`.
struct FreshPosition {
  enum Kind { below_all, above_all, in_between, avoid_all };
  Kind kind = avoid_all;
  Rational lo;  // only for in_between
  Rational hi;

  static FreshPosition BelowAll() { return {below_all, 0, 0}; }
  static FreshPosition AboveAll() { return {above_all, 0, 0}; }
  static FreshPosition Between(Rational a, Rational b) {
    return {in_between, std::move(a), std::move(b)};
  }
  static FreshPosition AvoidAll() { return {avoid_all, 0, 0}; }
};

// A rational not in `used`, placed as requested:
//   below_all  -> min(used) - 1  (0 when used is empty)
//   above_all  -> max(used) + 1  (0 when used is empty)
//   in_between -> repeated midpoints toward lo until unused
//   avoid_all  -> same policy as above_all
Rational fresh_outside(const std::vector<Rational>& used, const FreshPosition& pos);

// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& q);
Rational parse_rational(const std::string& text);

// Linear orders usable as grading value sets: all of Q, a finite chain,
// the naturals, or a suborder of Q given by a membership predicate.
class LinearOrder {
 public:
  enum class Kind { rationals, finite_chain, naturals, suborder };

  static LinearOrder rationals();
  static LinearOrder finite_chain(std::size_t n);
  static LinearOrder naturals();
  static LinearOrder suborder(std::function<bool(const Rational&)> pred,
                              std::string name);

  Kind kind() const { return kind_; }
  std::size_t chain_size() const { return chain_size_; }
  bool contains(const Rational& q) const;
  const std::string& name() const { return name_; }

 private:
  LinearOrder(Kind k, std::size_t n, std::function<bool(const Rational&)> pred,
              std::string name)
      : kind_(k), chain_size_(n), pred_(std::move(pred)), name_(std::move(name)) {}

  Kind kind_;
  std::size_t chain_size_ = 0;
  std::function<bool(const Rational&)> pred_;
  std::string name_;
};

struct Unsupported : std::runtime_error {
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

// The order-preserving injection into Q: finite_chain(n) maps onto {0,..,n-1},
// naturals (and Q itself) map identically. Suborders are not enumerable and
// throw Unsupported.
Rational embed_order(const LinearOrder& l, const BigInt& element);

}  // namespace gradig

#endif
