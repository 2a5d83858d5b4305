#include "gradig/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace gradig {

std::size_t Digraph::add_vertex(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) {
    throw std::invalid_argument("duplicate vertex '" + name + "'");
  }
  std::size_t i = names_.size();
  names_.push_back(name);
  index_.emplace(name, i);
  out_.emplace_back();
  in_.emplace_back();
  return i;
}

void Digraph::add_edge(const std::string& from, const std::string& to) {
  add_edge(index_of(from), index_of(to));
}

void Digraph::add_edge(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  out_[from].insert(to);
  in_[to].insert(from);
}

std::size_t Digraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : out_) n += s.size();
  return n;
}

bool Digraph::has_vertex(const std::string& name) const {
  return index_.count(name) != 0;
}

std::size_t Digraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw std::out_of_range("no vertex '" + name + "'");
  }
  return it->second;
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
  return out_[from].count(to) != 0;
}

bool Digraph::has_edge(const std::string& from, const std::string& to) const {
  return has_edge(index_of(from), index_of(to));
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> es;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : out_[i]) es.emplace_back(i, j);
  }
  return es;
}

Digraph Digraph::induced(const std::vector<std::size_t>& keep) const {
  Digraph h;
  for (std::size_t i : keep) h.add_vertex(names_[i]);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if (a != b && has_edge(keep[a], keep[b])) h.add_edge(a, b);
    }
  }
  return h;
}

const Rational& Grading::at(const std::string& v) const {
  auto it = values.find(v);
  if (it == values.end()) {
    throw std::out_of_range("no grading value for '" + v + "'");
  }
  return it->second;
}

std::optional<std::string> Grading::check(const Digraph& g) const {
  for (const auto& [u, v] : g.edges()) {
    const Rational& qu = at(g.name(u));
    const Rational& qv = at(g.name(v));
    if (!(qu < qv)) {
      return "edge " + g.name(u) + " -> " + g.name(v) +
             " does not increase value (" + format_rational(qu) + " vs " +
             format_rational(qv) + ")";
    }
  }
  if (strict) {
    std::map<Rational, std::string> seen;
    for (const auto& [v, q] : values) {
      auto [it, fresh] = seen.emplace(q, v);
      if (!fresh) {
        return "strict grading repeats value " + format_rational(q) + " at " +
               it->second + " and " + v;
      }
    }
  }
  return std::nullopt;
}

bool is_acyclic(const Digraph& g) {
  // Kahn elimination; acyclic iff every vertex gets removed.
  std::vector<std::size_t> degree(g.size());
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < g.size(); ++i) {
    degree[i] = g.in(i).size();
    if (degree[i] == 0) stack.push_back(i);
  }
  std::size_t removed = 0;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    ++removed;
    for (std::size_t j : g.out(i)) {
      if (--degree[j] == 0) stack.push_back(j);
    }
  }
  return removed == g.size();
}

std::vector<std::size_t> topological_order(const Digraph& g) {
  std::vector<std::size_t> degree(g.size());
  // Index-ordered frontier makes the tie-break the vertex-list order.
  std::set<std::size_t> frontier;
  for (std::size_t i = 0; i < g.size(); ++i) {
    degree[i] = g.in(i).size();
    if (degree[i] == 0) frontier.insert(i);
  }
  std::vector<std::size_t> order;
  order.reserve(g.size());
  while (!frontier.empty()) {
    std::size_t i = *frontier.begin();
    frontier.erase(frontier.begin());
    order.push_back(i);
    for (std::size_t j : g.out(i)) {
      if (--degree[j] == 0) frontier.insert(j);
    }
  }
  if (order.size() != g.size()) {
    throw CyclicInput("topological_order: graph has a directed cycle");
  }
  return order;
}

std::set<std::pair<std::size_t, std::size_t>> reachability(const Digraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) reach[u][v] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) pairs.emplace(i, j);
    }
  }
  return pairs;
}

Grading grade(const Digraph& g) {
  Grading grading;
  grading.strict = true;
  std::vector<std::size_t> order = topological_order(g);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    grading.values[g.name(order[pos])] = Rational(pos);
  }
  return grading;
}

std::vector<std::vector<std::size_t>> automorphisms(const Digraph& g,
                                                    const Grading* grading,
                                                    std::size_t bound) {
  if (g.size() > bound) {
    throw TooLarge("automorphisms: " + std::to_string(g.size()) +
                   " vertices exceeds brute-force bound " + std::to_string(bound));
  }
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> found;
  do {
    bool ok = true;
    if (grading) {
      for (std::size_t i = 0; ok && i < g.size(); ++i) {
        if (grading->at(g.name(i)) != grading->at(g.name(perm[i]))) ok = false;
      }
    }
    for (std::size_t i = 0; ok && i < g.size(); ++i) {
      for (std::size_t j = 0; ok && j < g.size(); ++j) {
        if (i == j) continue;
        if (g.has_edge(i, j) != g.has_edge(perm[i], perm[j])) ok = false;
      }
    }
    if (ok) found.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

std::string to_string(WitnessMode m) {
  switch (m) {
    case WitnessMode::edge_only:
      return "edge-only";
    case WitnessMode::order_preserving:
      return "order-preserving";
    case WitnessMode::value_exact:
      return "value-exact";
  }
  return "?";
}

VerifyResult verify_embedding(const EmbeddingWitness& w, const Digraph& target,
                              const Grading& target_values) {
  const Digraph& src = w.source;
  std::map<std::string, std::string> inverse;
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::string& x = src.name(i);
    auto it = w.map.find(x);
    if (it == w.map.end()) {
      return {false, "vertex " + x + " has no image"};
    }
    if (!target.has_vertex(it->second)) {
      return {false, "image " + it->second + " not in target"};
    }
    auto [jt, fresh] = inverse.emplace(it->second, x);
    if (!fresh) {
      return {false, "not injective: " + jt->second + " and " + x +
                         " both map to " + it->second};
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      if (i == j) continue;
      const std::string& x = src.name(i);
      const std::string& y = src.name(j);
      bool here = src.has_edge(i, j);
      bool there = target.has_edge(w.map.at(x), w.map.at(y));
      if (here != there) {
        return {false, "edge mismatch on (" + x + ", " + y + "): source " +
                           (here ? "has" : "lacks") + " it, image " +
                           (there ? "has" : "lacks") + " it"};
      }
    }
  }
  if (w.mode == WitnessMode::value_exact) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      const std::string& x = src.name(i);
      if (w.source_values.at(x) != target_values.at(w.map.at(x))) {
        return {false, "value mismatch at " + x + ": " +
                           format_rational(w.source_values.at(x)) + " vs " +
                           format_rational(target_values.at(w.map.at(x)))};
      }
    }
  } else if (w.mode == WitnessMode::order_preserving) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (i == j) continue;
        const std::string& x = src.name(i);
        const std::string& y = src.name(j);
        if (w.source_values.at(x) < w.source_values.at(y) &&
            !(target_values.at(w.map.at(x)) < target_values.at(w.map.at(y)))) {
          return {false, "order not preserved on (" + x + ", " + y + ")"};
        }
      }
    }
  }
  return {};
}

}  // namespace gradig
