#include "gradig/surrogate.hpp"

#include <algorithm>

namespace gradig {

void LayerConfig::validate() const {
  if (lambdas.empty()) {
    throw std::invalid_argument("layer config needs at least one lambda");
  }
  for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
    if (!(lambdas[i] < lambdas[i + 1])) {
      throw std::invalid_argument("lambdas must be strictly increasing");
    }
  }
}

SurrogateDigraph::SurrogateDigraph(LayerConfig cfg, UniverseMode mode,
                                   std::uint64_t seed, std::size_t retry_bound)
    : cfg_(std::move(cfg)),
      uni_(LinearOrder::rationals(), mode, seed, retry_bound) {
  cfg_.validate();
}

const std::vector<UVertex>& SurrogateDigraph::seq_nodes(SeqId s) const {
  if (s >= seqs_.size()) throw std::out_of_range("no such sequence");
  return seqs_[s];
}

const Rational& SurrogateDigraph::seq_value(SeqId s) const {
  if (s >= seqs_.size()) throw std::out_of_range("no such sequence");
  return seq_values_[s];
}

bool SurrogateDigraph::tt_edge(SeqId w, SeqId v) const {
  const auto& ws = seq_nodes(w);
  const auto& vs = seq_nodes(v);
  if (ws.size() > vs.size()) return false;
  const std::size_t m = ws.size() - 1;
  return uni_.edge(ws[m], vs[m]);
}

std::size_t SurrogateDigraph::least_layer(const Rational& value) const {
  for (std::size_t n = 0; n < cfg_.lambdas.size(); ++n) {
    if (value <= cfg_.lambdas[n]) return n;
  }
  throw ValueOutOfRange("value " + format_rational(value) + " above top lambda " +
                        format_rational(cfg_.max()));
}

void SurrogateDigraph::check_completely_disjoint(
    const std::vector<SeqId>& all) const {
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) {
        throw NotCompletelyDisjoint("sequence " + seq_name(all[i]) +
                                    " appears twice in the pattern");
      }
      const auto& a = seq_nodes(all[i]);
      const auto& b = seq_nodes(all[j]);
      for (UVertex x : a) {
        if (std::find(b.begin(), b.end(), x) != b.end()) {
          throw NotCompletelyDisjoint("sequences " + seq_name(all[i]) + " and " +
                                      seq_name(all[j]) + " share node " +
                                      Universe::vertex_name(x));
        }
      }
    }
  }
}

SeqId SurrogateDigraph::find_pattern(const std::vector<SeqId>& parents,
                                     const std::vector<SeqId>& children,
                                     const std::vector<SeqId>& apart,
                                     const Rational& value) {
  const std::size_t n = least_layer(value);
  const auto& ls = cfg_.lambdas;

  std::vector<SeqId> all;
  all.insert(all.end(), parents.begin(), parents.end());
  all.insert(all.end(), children.begin(), children.end());
  all.insert(all.end(), apart.begin(), apart.end());
  check_completely_disjoint(all);

  for (SeqId a : parents) {
    if (!(seq_value(a) < value)) {
      throw InvalidPattern("parent " + seq_name(a) + " not below value " +
                           format_rational(value));
    }
    // A sequence whose terminal sits exactly on its own layer's lambda can
    // never gain >>-successors: the needed edge would join equal values.
    const std::size_t m = seq_nodes(a).size() - 1;
    if (m < n && seq_value(a) == ls[m]) {
      throw InvalidPattern("parent " + seq_name(a) +
                           " is >>-maximal (terminal value equals lambda_" +
                           std::to_string(m) + "); no sequence can sit above it");
    }
  }
  for (SeqId b : children) {
    if (!(seq_value(b) > value)) {
      throw InvalidPattern("child " + seq_name(b) + " not above value " +
                           format_rational(value));
    }
  }

  // Layer k gathers the pattern nodes it is responsible for by value
  // interval: [lambda_{k-1}, lambda_k) for the surrogates, everything up to
  // lambda_k for the apart set, and for the terminal layer the parent
  // terminals from lambda_{n-1} up plus the child nodes in (value, lambda_n].
  auto in_layer = [&](const Rational& v, std::size_t k) {
    if (k == 0) return v < ls[0];
    return ls[k - 1] <= v && v < ls[k];
  };

  std::vector<UVertex> nodes(n + 1);
  {
    PatternQuery q;
    q.value = value;
    for (SeqId a : parents) {
      const auto& an = seq_nodes(a);
      const Rational& av = uni_.value(an.back());
      if (n == 0 || ls[n - 1] <= av) q.parents.push_back(an.back());
    }
    for (SeqId b : children) {
      for (UVertex x : seq_nodes(b)) {
        if (value < uni_.value(x) && uni_.value(x) <= ls[n]) {
          q.children.push_back(x);
        }
      }
    }
    for (SeqId c : apart) {
      for (UVertex x : seq_nodes(c)) {
        if (uni_.value(x) <= ls[n]) q.apart.push_back(x);
      }
    }
    nodes[n] = uni_.find_pattern(q, /*fresh_only=*/true);
  }
  for (std::size_t k = 0; k < n; ++k) {
    PatternQuery q;
    q.value = ls[k];
    for (SeqId a : parents) {
      for (UVertex x : seq_nodes(a)) {
        if (in_layer(uni_.value(x), k)) q.parents.push_back(x);
      }
    }
    for (SeqId c : apart) {
      for (UVertex x : seq_nodes(c)) {
        if (uni_.value(x) <= ls[k]) q.apart.push_back(x);
      }
    }
    nodes[k] = uni_.find_pattern(q, /*fresh_only=*/true);
  }

  seqs_.push_back(std::move(nodes));
  seq_values_.push_back(value);
  const SeqId id = static_cast<SeqId>(seqs_.size() - 1);

  for (SeqId a : parents) {
    if (!tt_edge(a, id)) {
      throw std::logic_error("surrogate pattern: lost edge from " + seq_name(a));
    }
  }
  for (SeqId b : children) {
    if (!tt_edge(id, b)) {
      throw std::logic_error("surrogate pattern: lost edge to " + seq_name(b));
    }
  }
  for (SeqId c : apart) {
    if (tt_edge(id, c) || tt_edge(c, id)) {
      throw std::logic_error("surrogate pattern: stray edge with " + seq_name(c));
    }
  }
  return id;
}

std::pair<Digraph, Grading> SurrogateDigraph::snapshot(
    const std::vector<SeqId>* subset) const {
  std::vector<SeqId> keep;
  if (subset) {
    keep = *subset;
  } else {
    keep.resize(seq_count());
    for (SeqId s = 0; s < seq_count(); ++s) keep[s] = s;
  }
  Digraph g;
  Grading values;
  for (SeqId s : keep) {
    g.add_vertex(seq_name(s));
    values.values[seq_name(s)] = seq_value(s);
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i != j && tt_edge(keep[i], keep[j])) g.add_edge(i, j);
    }
  }
  return {std::move(g), std::move(values)};
}

std::map<std::string, SeqId> embed_into_surrogate(const Digraph& g,
                                                  const Grading& values,
                                                  SurrogateDigraph& t) {
  if (auto why = values.check(g)) {
    throw InvalidPattern("embed_into_surrogate: not a grading: " + *why);
  }
  for (const auto& v : g.vertices()) {
    const Rational& q = values.at(v);
    if (q < 0 || q > t.config().max()) {
      throw ValueOutOfRange("vertex " + v + " valued " + format_rational(q) +
                            " outside [0, " + format_rational(t.config().max()) +
                            "]");
    }
  }
  std::map<std::string, SeqId> image;
  std::vector<SeqId> placed(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<SeqId> parents, children, apart;
    for (std::size_t j = 0; j < i; ++j) {
      if (g.has_edge(j, i)) {
        parents.push_back(placed[j]);
      } else if (g.has_edge(i, j)) {
        children.push_back(placed[j]);
      } else {
        apart.push_back(placed[j]);
      }
    }
    placed[i] = t.find_pattern(parents, children, apart, values.at(g.name(i)));
    image[g.name(i)] = placed[i];
  }
  return image;
}

SurrogateCollapse collapse_surrogate_prefix(const SurrogateDigraph& t,
                                            const std::vector<SeqId>& seqs) {
  std::vector<SeqId> sorted = seqs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto included = [&sorted](SeqId s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };
  for (SeqId s : sorted) {
    for (SeqId w = 0; w < t.seq_count(); ++w) {
      if (t.tt_edge(w, s) && !included(w)) {
        throw NotPredecessorClosed("sequence " + SurrogateDigraph::seq_name(w) +
                                   " precedes " + SurrogateDigraph::seq_name(s) +
                                   " but is not in the prefix");
      }
    }
  }
  auto [g, values] = t.snapshot(&sorted);
  SurrogateCollapse out;
  out.collapse = modified_collapse(g);  // numerals in list (= ascending id) order
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out.seq_map.emplace(sorted[i], out.collapse.vertex_map.at(g.name(i)));
  }
  return out;
}

MainTheoremDemo main_theorem_demo(Hf s, const LayerConfig& cfg,
                                  std::size_t max_closure) {
  MainTheoremDemo demo;
  demo.membership = membership_digraph(s);
  if (demo.membership.graph.size() > max_closure) {
    throw TooLarge("transitive closure has " +
                   std::to_string(demo.membership.graph.size()) +
                   " vertices; bound is " + std::to_string(max_closure));
  }
  SurrogateDigraph theta(cfg);
  demo.embedding =
      embed_into_surrogate(demo.membership.graph, demo.membership.values, theta);
  std::vector<SeqId> all(theta.seq_count());
  for (SeqId i = 0; i < theta.seq_count(); ++i) all[i] = i;
  SurrogateCollapse col = collapse_surrogate_prefix(theta, all);
  for (const auto& [vertex, seq] : demo.embedding) {
    demo.composite.emplace(vertex, col.seq_map.at(seq));
  }

  demo.verified = true;
  const auto& sets = demo.membership.sets;
  const Digraph& g = demo.membership.graph;
  for (std::size_t i = 0; i < sets.size() && demo.verified; ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      bool member = sets[j].contains(sets[i]);
      bool image_member =
          demo.composite.at(g.name(j)).contains(demo.composite.at(g.name(i)));
      if (member != image_member) {
        demo.verified = false;
        demo.failure = "pair (" + g.name(i) + ", " + g.name(j) + "): membership " +
                       (member ? "holds" : "fails") + " but image membership " +
                       (image_member ? "holds" : "fails");
        break;
      }
    }
  }
  if (demo.verified) {
    // Injectivity of the composite.
    std::map<std::uint32_t, std::string> seen;
    for (const auto& [vertex, set] : demo.composite) {
      auto [it, fresh] = seen.emplace(set.id(), vertex);
      if (!fresh) {
        demo.verified = false;
        demo.failure = "composite collides on " + it->second + " and " + vertex;
        break;
      }
    }
  }
  return demo;
}

}  // namespace gradig
