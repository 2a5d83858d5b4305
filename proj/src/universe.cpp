#include "gradig/universe.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>

namespace gradig {

namespace {

inline std::uint64_t edge_key(UVertex u, UVertex v) {
  return (std::uint64_t(u) << 32) | v;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Universe::Universe(LinearOrder order, UniverseMode mode, std::uint64_t seed,
                   std::size_t retry_bound)
    : order_(std::move(order)), mode_(mode), seed_(seed), retry_bound_(retry_bound) {}

const Rational& Universe::value(UVertex v) const {
  if (v >= values_.size()) throw std::out_of_range("no such universe vertex");
  return values_[v];
}

bool Universe::hash_edge(UVertex lo, UVertex hi) const {
  std::uint64_t h = splitmix64(seed_ ^ splitmix64(lo));
  h = splitmix64(h ^ (std::uint64_t(hi) << 1));
  return (h & 1) != 0;
}

bool Universe::edge(UVertex u, UVertex v) const {
  if (u == v || u >= size() || v >= size()) return false;
  if (!(values_[u] < values_[v])) return false;
  if (mode_ == UniverseMode::generic) return edges_.count(edge_key(u, v)) != 0;
  return hash_edge(u, v);
}

UVertex Universe::mint_free(const Rational& value) {
  if (!order_.contains(value)) {
    throw InvalidPattern("mint: value " + format_rational(value) +
                         " is outside order " + order_.name());
  }
  values_.push_back(value);
  return static_cast<UVertex>(values_.size() - 1);
}

void Universe::validate(const PatternQuery& q) const {
  if (!order_.contains(q.value)) {
    throw InvalidPattern("pattern value " + format_rational(q.value) +
                         " is outside order " + order_.name());
  }
  std::vector<UVertex> all;
  for (UVertex v : q.parents) all.push_back(v);
  for (UVertex v : q.children) all.push_back(v);
  for (UVertex v : q.apart) all.push_back(v);
  for (UVertex v : all) {
    if (v >= size()) {
      throw InvalidPattern("pattern mentions unminted vertex " + vertex_name(v));
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidPattern("pattern sets are not pairwise disjoint");
  }
  for (UVertex v : q.parents) {
    if (!(values_[v] < q.value)) {
      throw InvalidPattern("parent " + vertex_name(v) + " not below value " +
                           format_rational(q.value));
    }
  }
  for (UVertex v : q.children) {
    if (!(values_[v] > q.value)) {
      throw InvalidPattern("child " + vertex_name(v) + " not above value " +
                           format_rational(q.value));
    }
  }
}

bool Universe::matches(UVertex v, const PatternQuery& q) const {
  if (values_[v] != q.value) return false;
  auto mentioned = [&](const std::vector<UVertex>& vs) {
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  };
  if (mentioned(q.parents) || mentioned(q.children) || mentioned(q.apart)) {
    return false;
  }
  for (UVertex p : q.parents) {
    if (!edge(p, v)) return false;
  }
  for (UVertex c : q.children) {
    if (!edge(v, c)) return false;
  }
  for (UVertex x : q.apart) {
    if (edge(v, x) || edge(x, v)) return false;
  }
  return true;
}

UVertex Universe::find_pattern(const PatternQuery& q, bool fresh_only) {
  validate(q);
  if (mode_ == UniverseMode::generic) {
    UVertex v = static_cast<UVertex>(values_.size());
    values_.push_back(q.value);
    for (UVertex p : q.parents) edges_.insert(edge_key(p, v));
    for (UVertex c : q.children) edges_.insert(edge_key(v, c));
    return v;
  }
  if (!fresh_only) {
    for (UVertex v = 0; v < size(); ++v) {
      if (matches(v, q)) return v;
    }
  }
  for (std::size_t attempt = 0; attempt < retry_bound_; ++attempt) {
    UVertex v = mint_free(q.value);
    if (matches(v, q)) return v;
  }
  throw RetryExhausted("no matching vertex after " +
                       std::to_string(retry_bound_) + " mints (pattern size " +
                       std::to_string(q.parents.size() + q.children.size() +
                                      q.apart.size()) +
                       ")");
}

std::pair<Digraph, Grading> Universe::snapshot(
    const std::vector<UVertex>* subset) const {
  std::vector<UVertex> keep;
  if (subset) {
    keep = *subset;
  } else {
    keep.resize(size());
    for (UVertex v = 0; v < size(); ++v) keep[v] = v;
  }
  Digraph g;
  Grading values;
  for (UVertex v : keep) {
    g.add_vertex(vertex_name(v));
    values.values[vertex_name(v)] = value(v);
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (i != j && edge(keep[i], keep[j])) g.add_edge(i, j);
    }
  }
  return {std::move(g), std::move(values)};
}

std::string Universe::export_json(int indent) const {
  nlohmann::ordered_json j;
  j["mode"] = mode_ == UniverseMode::generic ? "generic" : "random";
  j["seed"] = seed_;
  j["order"] = order_.name();
  auto [g, values] = snapshot();
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v);
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) {
    j["edges"].push_back(nlohmann::ordered_json::array({g.name(u), g.name(v)}));
  }
  nlohmann::ordered_json vals = nlohmann::ordered_json::object();
  for (const auto& v : g.vertices()) vals[v] = format_rational(values.at(v));
  j["values"] = std::move(vals);
  return j.dump(indent);
}

bool Universe::grading_intact() const {
  for (UVertex u = 0; u < size(); ++u) {
    for (UVertex v = 0; v < size(); ++v) {
      if (edge(u, v) && !(values_[u] < values_[v])) return false;
    }
  }
  return true;
}

StageGraph build_stage(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw StageBoundExceeded("stage " + std::to_string(n) + " exceeds bound " +
                             std::to_string(bound));
  }
  StageGraph s;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t old_count = s.graph.size();
    std::vector<Rational> old_values;
    old_values.reserve(old_count);
    for (std::size_t i = 0; i < old_count; ++i) {
      old_values.push_back(s.values.at(s.graph.name(i)));
    }
    // Distinct levels, ascending.
    std::vector<Rational> levels = old_values;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    // Candidate level positions: below all, each level, each gap, above all.
    std::vector<Rational> positions;
    if (levels.empty()) {
      positions.push_back(Rational(0));
    } else {
      positions.push_back(levels.front() - 1);
      for (std::size_t i = 0; i < levels.size(); ++i) {
        positions.push_back(levels[i]);
        if (i + 1 < levels.size()) {
          positions.push_back(between(levels[i], levels[i + 1]));
        }
      }
      positions.push_back(levels.back() + 1);
    }
    // Cost guard; stage 4 over stage 3 would need ~2^300 vertices.
    double projected = 0;
    for (const Rational& p : positions) {
      std::size_t lower = 0, upper = 0;
      for (const Rational& v : old_values) {
        if (v < p) ++lower;
        if (v > p) ++upper;
      }
      projected += std::pow(2.0, double(lower)) * std::pow(2.0, double(upper));
      if (projected > 1e6) {
        throw StageBoundExceeded("stage " + std::to_string(n) +
                                 " would mint over 10^6 vertices");
      }
    }
    for (const Rational& p : positions) {
      std::vector<std::size_t> lower, upper;
      for (std::size_t i = 0; i < old_count; ++i) {
        if (old_values[i] < p) lower.push_back(i);
        if (old_values[i] > p) upper.push_back(i);
      }
      for (std::size_t in_mask = 0; in_mask < (std::size_t{1} << lower.size());
           ++in_mask) {
        for (std::size_t out_mask = 0;
             out_mask < (std::size_t{1} << upper.size()); ++out_mask) {
          std::size_t v = s.graph.add_vertex("g" + std::to_string(s.graph.size()));
          s.values.values[s.graph.name(v)] = p;
          for (std::size_t b = 0; b < lower.size(); ++b) {
            if (in_mask & (std::size_t{1} << b)) s.graph.add_edge(lower[b], v);
          }
          for (std::size_t b = 0; b < upper.size(); ++b) {
            if (out_mask & (std::size_t{1} << b)) s.graph.add_edge(v, upper[b]);
          }
        }
      }
    }
    s.stage = step + 1;
  }
  return s;
}

EmbeddingWitness forth_embed(const Digraph& g, const Grading& values,
                             Universe& u, WitnessMode mode) {
  if (auto why = values.check(g)) {
    throw InvalidPattern("forth_embed: not a grading: " + *why);
  }
  EmbeddingWitness w;
  w.source = g;
  w.source_values = values;
  w.mode = mode;

  std::vector<UVertex> image(g.size());
  // order_preserving picks one fresh target value per source value class.
  std::map<Rational, Rational> value_map;
  std::vector<Rational> used_targets;

  for (std::size_t i = 0; i < g.size(); ++i) {
    const Rational& q = values.at(g.name(i));
    Rational target = q;
    if (mode == WitnessMode::order_preserving) {
      auto it = value_map.find(q);
      if (it != value_map.end()) {
        target = it->second;
      } else {
        auto hi = value_map.upper_bound(q);
        if (value_map.empty()) {
          target = fresh_outside(used_targets, FreshPosition::AboveAll());
        } else if (hi == value_map.begin()) {
          target = fresh_outside(used_targets, FreshPosition::BelowAll());
        } else if (hi == value_map.end()) {
          target = fresh_outside(used_targets, FreshPosition::AboveAll());
        } else {
          auto lo = std::prev(hi);
          target = fresh_outside(used_targets,
                                 FreshPosition::Between(lo->second, hi->second));
        }
        value_map.emplace(q, target);
        used_targets.push_back(target);
      }
    }
    PatternQuery query;
    query.value = target;
    for (std::size_t j = 0; j < i; ++j) {
      if (g.has_edge(j, i)) {
        query.parents.push_back(image[j]);
      } else if (g.has_edge(i, j)) {
        query.children.push_back(image[j]);
      } else {
        query.apart.push_back(image[j]);
      }
    }
    image[i] = u.find_pattern(query);
    w.map[g.name(i)] = Universe::vertex_name(image[i]);
  }
  return w;
}

namespace {

struct IsoState {
  std::map<UVertex, UVertex> fwd;  // u1 vertex -> u2 vertex
  std::map<UVertex, UVertex> rev;  // u2 vertex -> u1 vertex
  std::vector<std::pair<UVertex, UVertex>> pairs;
};

// Extends the isomorphism over `x` on the `from_first` side by querying the
// opposite oracle with x's full relation to the matched part.
void cover(Universe& u1, Universe& u2, IsoState& st, bool from_first, UVertex x) {
  auto& covered = from_first ? st.fwd : st.rev;
  if (covered.count(x)) return;
  Universe& src = from_first ? u1 : u2;
  Universe& dst = from_first ? u2 : u1;
  PatternQuery q;
  q.value = src.value(x);
  for (const auto& [a, b] : st.pairs) {
    UVertex here = from_first ? a : b;
    UVertex there = from_first ? b : a;
    if (src.edge(here, x)) {
      q.parents.push_back(there);
    } else if (src.edge(x, here)) {
      q.children.push_back(there);
    } else {
      q.apart.push_back(there);
    }
  }
  UVertex y = dst.find_pattern(q);
  if (from_first) {
    st.fwd[x] = y;
    st.rev[y] = x;
    st.pairs.emplace_back(x, y);
  } else {
    st.rev[x] = y;
    st.fwd[y] = x;
    st.pairs.emplace_back(y, x);
  }
}

// Makes sure side `first_side` has a vertex with index i, growing it when the
// enumeration is exhausted: mirror the other side's next uncovered vertex if
// any, otherwise mint a free spine vertex at a fresh value.
void ensure_index(Universe& u1, Universe& u2, IsoState& st, bool first_side,
                  std::size_t i) {
  Universe& side = first_side ? u1 : u2;
  Universe& other = first_side ? u2 : u1;
  auto& other_covered = first_side ? st.rev : st.fwd;
  while (side.size() <= i) {
    std::optional<UVertex> next;
    for (UVertex v = 0; v < other.size(); ++v) {
      if (!other_covered.count(v)) {
        next = v;
        break;
      }
    }
    if (next) {
      cover(u1, u2, st, !first_side, *next);
    } else {
      side.mint_free(fresh_outside(side.used_values(), FreshPosition::AboveAll()));
    }
  }
}

}  // namespace

PartialIso back_and_forth(Universe& u1, Universe& u2, std::size_t steps) {
  if (u1.order().name() != u2.order().name()) {
    throw InvalidPattern("back_and_forth: universes use different orders (" +
                         u1.order().name() + " vs " + u2.order().name() + ")");
  }
  IsoState st;
  for (std::size_t round = 0; round < steps; ++round) {
    ensure_index(u1, u2, st, true, round);
    cover(u1, u2, st, true, static_cast<UVertex>(round));
    ensure_index(u1, u2, st, false, round);
    cover(u1, u2, st, false, static_cast<UVertex>(round));
  }
  return PartialIso{st.pairs};
}

std::pair<VerifyResult, VerifyResult> verify_partial_iso(const Universe& u1,
                                                         const Universe& u2,
                                                         const PartialIso& iso) {
  std::vector<UVertex> dom, ran;
  for (const auto& [a, b] : iso.pairs) {
    dom.push_back(a);
    ran.push_back(b);
  }
  auto [g1, v1] = u1.snapshot(&dom);
  auto [g2, v2] = u2.snapshot(&ran);
  EmbeddingWitness forward{g1, v1, {}, WitnessMode::value_exact};
  EmbeddingWitness backward{g2, v2, {}, WitnessMode::value_exact};
  for (const auto& [a, b] : iso.pairs) {
    forward.map[Universe::vertex_name(a)] = Universe::vertex_name(b);
    backward.map[Universe::vertex_name(b)] = Universe::vertex_name(a);
  }
  return {verify_embedding(forward, g2, v2), verify_embedding(backward, g1, v1)};
}

UVertex rado_extension_check(Universe& u, const std::vector<UVertex>& join,
                             const std::vector<UVertex>& avoid) {
  std::vector<Rational> mentioned;
  for (UVertex v : join) mentioned.push_back(u.value(v));
  for (UVertex v : avoid) mentioned.push_back(u.value(v));
  PatternQuery q;
  q.value = fresh_outside(mentioned, FreshPosition::AboveAll());
  q.parents = join;
  q.apart = avoid;
  return u.find_pattern(q);
}

}  // namespace gradig
