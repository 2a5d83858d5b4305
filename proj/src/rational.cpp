#include "gradig/rational.hpp"

#include <algorithm>

namespace gradig {

Ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return Ordering::less;
  if (a == b) return Ordering::equal;
  return Ordering::greater;
}

Rational between(const Rational& a, const Rational& b) {
  if (!(a < b)) {
    throw NotOrdered("between: need a < b, got " + format_rational(a) + " vs " +
                     format_rational(b));
  }
  Rational mid = (a + b) / 2;
  return mid;
}

Rational fresh_outside(const std::vector<Rational>& used, const FreshPosition& pos) {
  auto contains = [&used](const Rational& q) {
    return std::find(used.begin(), used.end(), q) != used.end();
  };
  switch (pos.kind) {
    case FreshPosition::below_all: {
      if (used.empty()) return Rational(0);
      Rational v = *std::min_element(used.begin(), used.end());
      return v - 1;
    }
    case FreshPosition::above_all:
    case FreshPosition::avoid_all: {
      if (used.empty()) return Rational(0);
      Rational v = *std::max_element(used.begin(), used.end());
      return v + 1;
    }
    case FreshPosition::in_between: {
      Rational lo = pos.lo;
      Rational hi = pos.hi;
      if (!(lo < hi)) {
        throw NotOrdered("fresh_outside: between needs lo < hi");
      }
      // Halve toward lo until the midpoint is unused.
      Rational mid = between(lo, hi);
      while (contains(mid)) {
        hi = mid;
        mid = between(lo, hi);
      }
      return mid;
    }
  }
  throw std::logic_error("fresh_outside: bad position kind");
}

std::string format_rational(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&text]() {
    return std::invalid_argument("not a rational: '" + text + "'");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

LinearOrder LinearOrder::rationals() {
  return LinearOrder(Kind::rationals, 0, nullptr, "Q");
}

LinearOrder LinearOrder::finite_chain(std::size_t n) {
  return LinearOrder(Kind::finite_chain, n, nullptr, "chain:" + std::to_string(n));
}

LinearOrder LinearOrder::naturals() {
  return LinearOrder(Kind::naturals, 0, nullptr, "naturals");
}

LinearOrder LinearOrder::suborder(std::function<bool(const Rational&)> pred,
                                  std::string name) {
  return LinearOrder(Kind::suborder, 0, std::move(pred), std::move(name));
}

bool LinearOrder::contains(const Rational& q) const {
  switch (kind_) {
    case Kind::rationals:
      return true;
    case Kind::finite_chain:
      return denominator(q) == 1 && numerator(q) >= 0 &&
             numerator(q) < BigInt(chain_size_);
    case Kind::naturals:
      return denominator(q) == 1 && numerator(q) >= 0;
    case Kind::suborder:
      return pred_(q);
  }
  return false;
}

Rational embed_order(const LinearOrder& l, const BigInt& element) {
  switch (l.kind()) {
    case LinearOrder::Kind::finite_chain:
      if (element < 0 || element >= BigInt(l.chain_size())) {
        throw Unsupported("embed_order: element outside chain:" +
                          std::to_string(l.chain_size()));
      }
      return Rational(element);
    case LinearOrder::Kind::naturals:
      if (element < 0) throw Unsupported("embed_order: negative natural");
      return Rational(element);
    case LinearOrder::Kind::rationals:
      return Rational(element);
    case LinearOrder::Kind::suborder:
      throw Unsupported("embed_order: suborders have no canonical enumeration");
  }
  throw std::logic_error("embed_order: bad kind");
}

}  // namespace gradig
