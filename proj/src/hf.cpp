#include "gradig/hf.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <unordered_map>

namespace gradig {

namespace {

struct Node {
  std::vector<std::uint32_t> children;  // ascending Ackermann order
  std::uint32_t rank = 0;
};

struct Registry {
  std::deque<Node> nodes;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  std::unordered_map<std::uint64_t, Ordering> cmp_memo;
  std::mutex mu;

  Registry() {
    nodes.push_back(Node{});  // id 0: the empty set
    buckets[hash_children({})].push_back(0);
  }

  static std::uint64_t hash_children(const std::vector<std::uint32_t>& cs) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint32_t c : cs) {
      h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Registry& reg() {
  static Registry* r = new Registry();
  return *r;
}

Ordering cmp_ids(std::uint32_t a, std::uint32_t b);

// Lexicographic on the descending element lists: the larger maximal
// differing element decides, a strict prefix is smaller.
Ordering cmp_ids_uncached(std::uint32_t a, std::uint32_t b) {
  const auto& ca = reg().nodes[a].children;
  const auto& cb = reg().nodes[b].children;
  std::size_t i = ca.size();
  std::size_t j = cb.size();
  while (i > 0 && j > 0) {
    Ordering c = cmp_ids(ca[i - 1], cb[j - 1]);
    if (c != Ordering::equal) return c;
    --i;
    --j;
  }
  if (i > 0) return Ordering::greater;
  if (j > 0) return Ordering::less;
  return Ordering::equal;
}

Ordering cmp_ids(std::uint32_t a, std::uint32_t b) {
  if (a == b) return Ordering::equal;
  std::uint64_t key = (std::uint64_t(std::min(a, b)) << 32) | std::max(a, b);
  {
    std::lock_guard<std::mutex> lock(reg().mu);
    auto it = reg().cmp_memo.find(key);
    if (it != reg().cmp_memo.end()) {
      if (a < b) return it->second;
      return it->second == Ordering::less ? Ordering::greater : Ordering::less;
    }
  }
  Ordering r = cmp_ids_uncached(a, b);
  {
    std::lock_guard<std::mutex> lock(reg().mu);
    Ordering canon = (a < b) ? r
                     : (r == Ordering::less ? Ordering::greater
                        : r == Ordering::greater ? Ordering::less
                                                 : Ordering::equal);
    reg().cmp_memo.emplace(key, canon);
  }
  return r;
}

std::uint32_t intern(std::vector<std::uint32_t> children) {
  std::sort(children.begin(), children.end(), [](std::uint32_t x, std::uint32_t y) {
    return cmp_ids(x, y) == Ordering::less;
  });
  children.erase(std::unique(children.begin(), children.end()), children.end());
  std::uint64_t h = Registry::hash_children(children);
  std::lock_guard<std::mutex> lock(reg().mu);
  auto& bucket = reg().buckets[h];
  for (std::uint32_t id : bucket) {
    if (reg().nodes[id].children == children) return id;
  }
  Node node;
  std::uint32_t rank = 0;
  for (std::uint32_t c : children) {
    rank = std::max(rank, reg().nodes[c].rank + 1);
  }
  node.children = std::move(children);
  node.rank = rank;
  reg().nodes.push_back(std::move(node));
  auto id = static_cast<std::uint32_t>(reg().nodes.size() - 1);
  bucket.push_back(id);
  return id;
}

}  // namespace

Hf Hf::make(std::vector<Hf> elements) {
  std::vector<std::uint32_t> ids;
  ids.reserve(elements.size());
  for (Hf e : elements) ids.push_back(e.id());
  return Hf::from_id(intern(std::move(ids)));
}

Hf Hf::from_id(std::uint32_t id) { return Hf(id); }

std::size_t Hf::arity() const { return reg().nodes[id_].children.size(); }

std::vector<Hf> Hf::elements() const {
  std::vector<Hf> out;
  out.reserve(arity());
  for (std::uint32_t c : reg().nodes[id_].children) out.push_back(Hf::from_id(c));
  return out;
}

bool Hf::contains(Hf x) const {
  const auto& cs = reg().nodes[id_].children;
  return std::binary_search(cs.begin(), cs.end(), x.id(),
                            [](std::uint32_t a, std::uint32_t b) {
                              return cmp_ids(a, b) == Ordering::less;
                            });
}

std::size_t Hf::rank() const { return reg().nodes[id_].rank; }

Ordering Hf::cmp(Hf a, Hf b) { return cmp_ids(a.id(), b.id()); }

std::size_t hf_rank(Hf s) { return s.rank(); }

std::optional<BigInt> encode_checked(Hf s, std::size_t max_bits) {
  // Iterative over a post-order worklist with a per-call cache; exponents are
  // bounded before shifting so oversized codes fail fast instead of crawling.
  std::unordered_map<std::uint32_t, BigInt> cache;
  std::vector<std::pair<Hf, bool>> stack{{s, false}};
  while (!stack.empty()) {
    auto [x, expanded] = stack.back();
    stack.pop_back();
    if (cache.count(x.id())) continue;
    if (!expanded) {
      stack.push_back({x, true});
      for (Hf e : x.elements()) {
        if (!cache.count(e.id())) stack.push_back({e, false});
      }
      continue;
    }
    BigInt code = 0;
    for (Hf e : x.elements()) {
      const BigInt& sub = cache.at(e.id());
      if (sub > max_bits) return std::nullopt;
      code += BigInt(1) << static_cast<std::size_t>(sub);
    }
    cache.emplace(x.id(), std::move(code));
  }
  return cache.at(s.id());
}

BigInt encode(Hf s, std::size_t max_bits) {
  auto code = encode_checked(s, max_bits);
  if (!code) {
    throw TooLarge("encode: Ackermann code exceeds " + std::to_string(max_bits) +
                   " bits");
  }
  return *code;
}

namespace {

constexpr std::uint32_t kNotCached = 0xffffffffu;

// Bit positions recurse far below the code itself, so a dense cache of the
// small values covers nearly all of the work.
std::vector<std::uint32_t>& decode_cache() {
  static std::vector<std::uint32_t>* cache =
      new std::vector<std::uint32_t>{0};  // decode(0) = {}
  return *cache;
}
std::mutex decode_mu;
constexpr std::size_t kSmallDecodeLimit = 1 << 20;

Hf decode_rec(const BigInt& c) {
  std::size_t slot = kSmallDecodeLimit;
  if (c < kSmallDecodeLimit) {
    slot = static_cast<std::size_t>(c);
    std::lock_guard<std::mutex> lock(decode_mu);
    auto& cache = decode_cache();
    if (slot < cache.size() && cache[slot] != kNotCached) {
      return Hf::from_id(cache[slot]);
    }
  }
  std::vector<Hf> elems;
  BigInt rest = c;
  std::size_t bit = 0;
  while (rest > 0) {
    if ((rest & 1) != 0) elems.push_back(decode_rec(BigInt(bit)));
    rest >>= 1;
    ++bit;
  }
  Hf r = Hf::make(std::move(elems));
  if (slot < kSmallDecodeLimit) {
    std::lock_guard<std::mutex> lock(decode_mu);
    auto& cache = decode_cache();
    if (cache.size() <= slot) cache.resize(slot + 1, kNotCached);
    cache[slot] = r.id();
  }
  return r;
}

}  // namespace

Hf decode(const BigInt& code) {
  if (code < 0) throw std::invalid_argument("decode: negative code");
  return decode_rec(code);
}

std::vector<Hf> transitive_closure_list(Hf s) {
  // Gather by id, then sort into Ackermann order for a canonical listing.
  std::vector<std::uint32_t> seen;
  std::vector<Hf> stack = s.elements();
  while (!stack.empty()) {
    Hf x = stack.back();
    stack.pop_back();
    if (std::find(seen.begin(), seen.end(), x.id()) != seen.end()) continue;
    seen.push_back(x.id());
    for (Hf e : x.elements()) stack.push_back(e);
  }
  std::vector<Hf> out;
  out.reserve(seen.size());
  for (std::uint32_t id : seen) out.push_back(Hf::from_id(id));
  std::sort(out.begin(), out.end());
  return out;
}

Hf transitive_closure(Hf s) { return Hf::make(transitive_closure_list(s)); }

MembershipDigraph membership_digraph(Hf s) {
  std::vector<Hf> sets = transitive_closure_list(s);
  if (std::find(sets.begin(), sets.end(), s) == sets.end()) {
    sets.push_back(s);
    std::sort(sets.begin(), sets.end());
  }
  MembershipDigraph out;
  out.sets = sets;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out.graph.add_vertex("s" + std::to_string(i));
    out.values.values["s" + std::to_string(i)] = Rational(BigInt(sets[i].rank()));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && sets[j].contains(sets[i])) out.graph.add_edge(i, j);
    }
  }
  return out;
}

std::string to_string(Hf s) {
  std::string out = "{";
  bool first = true;
  for (Hf e : s.elements()) {
    if (!first) out.push_back(',');
    first = false;
    out += to_string(e);
  }
  out.push_back('}');
  return out;
}

namespace {

Hf parse_hf_at(const std::string& text, std::size_t& pos) {
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '{') {
    throw std::invalid_argument("set syntax: expected '{' at position " +
                                std::to_string(pos));
  }
  ++pos;
  std::vector<Hf> elems;
  skip_ws();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
    return Hf::make({});
  }
  while (true) {
    elems.push_back(parse_hf_at(text, pos));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws();
      continue;
    }
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return Hf::make(std::move(elems));
    }
    throw std::invalid_argument("set syntax: expected ',' or '}' at position " +
                                std::to_string(pos));
  }
}

}  // namespace

Hf parse_hf(const std::string& text) {
  std::size_t pos = 0;
  Hf s = parse_hf_at(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) {
    throw std::invalid_argument("set syntax: trailing input at position " +
                                std::to_string(pos));
  }
  return s;
}

Hf von_neumann(std::size_t n) {
  std::vector<Hf> below;
  Hf current = Hf::empty();
  for (std::size_t k = 0; k < n; ++k) {
    below.push_back(current);
    current = Hf::make(below);
  }
  return current;
}

Hf pair_set(Hf a, Hf b) { return Hf::make({a, b}); }

}  // namespace gradig
