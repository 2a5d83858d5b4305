#include "gradig/collapse.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace gradig {

namespace {

// Chain vertices need names disjoint from g's; "#k" plus primes on collision.
std::string chain_name(const Digraph& g, std::size_t k) {
  std::string name = "#" + std::to_string(k);
  while (g.has_vertex(name)) name.push_back('\'');
  return name;
}

}  // namespace

Digraph extensionalize(const Digraph& g) {
  if (!is_acyclic(g)) throw CyclicInput("extensionalize: input has a cycle");
  const std::size_t n = g.size();
  Digraph out;
  std::vector<std::string> chain;
  chain.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    chain.push_back(chain_name(g, k));
    out.add_vertex(chain.back());
  }
  for (const auto& v : g.vertices()) out.add_vertex(v);
  // Transitive closure of the chain: k -> m for k < m.
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t m = k + 1; m <= n; ++m) out.add_edge(chain[k], chain[m]);
  }
  // k -> v_k ties each original vertex to its own chain node.
  for (std::size_t k = 1; k <= n; ++k) out.add_edge(chain[k], g.name(k - 1));
  for (const auto& [u, v] : g.edges()) out.add_edge(g.name(u), g.name(v));
  return out;
}

bool is_extensional(const Digraph& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g.in(i) == g.in(j)) return false;
    }
  }
  return true;
}

namespace {

// pi over a topological order; memoized per vertex.
std::vector<Hf> collapse_images(const Digraph& g, const std::vector<Hf>* tags) {
  std::vector<std::size_t> order = topological_order(g);
  std::vector<Hf> image(g.size());
  for (std::size_t v : order) {
    std::vector<Hf> members;
    for (std::size_t w : g.in(v)) {
      members.push_back(image[w]);
    }
    if (tags) members.push_back((*tags)[v]);
    image[v] = Hf::make(std::move(members));
  }
  return image;
}

}  // namespace

CollapseResult mostowski(const Digraph& g) {
  if (!is_acyclic(g)) throw CyclicInput("mostowski: input has a cycle");
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g.in(i) == g.in(j)) {
        throw NotExtensional("mostowski: " + g.name(i) + " and " + g.name(j) +
                             " share the same in-neighbor set");
      }
    }
  }
  std::vector<Hf> image = collapse_images(g, nullptr);
  CollapseResult result;
  std::vector<Hf> all;
  for (std::size_t i = 0; i < g.size(); ++i) {
    result.vertex_map[g.name(i)] = image[i];
    all.push_back(image[i]);
  }
  result.image = Hf::make(std::move(all));
  return result;
}

CollapseResult realize_as_set(const Digraph& g) {
  Digraph plus = extensionalize(g);
  CollapseResult full = mostowski(plus);
  CollapseResult restricted;
  std::vector<Hf> kept;
  for (const auto& v : g.vertices()) {
    Hf s = full.vertex_map.at(v);
    restricted.vertex_map[v] = s;
    kept.push_back(s);
  }
  restricted.image = Hf::make(std::move(kept));
  return restricted;
}

CollapseResult modified_collapse(const Digraph& g,
                                 const std::map<std::string, Hf>* labels) {
  if (!is_acyclic(g)) throw CyclicInput("modified_collapse: input has a cycle");
  std::vector<Hf> tags(g.size());
  std::vector<Hf> label_of(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Hf label;
    if (labels) {
      auto it = labels->find(g.name(i));
      if (it == labels->end()) {
        throw std::invalid_argument("modified_collapse: no label for " + g.name(i));
      }
      label = it->second;
    } else {
      label = von_neumann(i);
    }
    label_of[i] = label;
    tags[i] = pair_set(Hf::empty(), label);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (label_of[i] == label_of[j]) {
        throw NonInjectiveLabels("modified_collapse: " + g.name(i) + " and " +
                                 g.name(j) + " carry the same label");
      }
    }
  }
  std::vector<Hf> image = collapse_images(g, &tags);
  CollapseResult result;
  std::vector<Hf> all;
  for (std::size_t i = 0; i < g.size(); ++i) {
    result.vertex_map[g.name(i)] = image[i];
    all.push_back(image[i]);
  }
  result.image = Hf::make(std::move(all));
  return result;
}

Hf j_embed(Hf x) {
  static std::unordered_map<std::uint32_t, std::uint32_t>* memo =
      new std::unordered_map<std::uint32_t, std::uint32_t>();
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo->find(x.id());
    if (it != memo->end()) return Hf::from_id(it->second);
  }
  std::vector<Hf> members;
  for (Hf y : x.elements()) members.push_back(j_embed(y));
  members.push_back(pair_set(Hf::empty(), x));
  Hf r = Hf::make(std::move(members));
  {
    std::lock_guard<std::mutex> lock(mu);
    memo->emplace(x.id(), r.id());
  }
  return r;
}

}  // namespace gradig
