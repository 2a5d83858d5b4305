#include "gradig/surreal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace gradig {

namespace {

struct Node {
  std::vector<std::uint32_t> left;   // sorted by id
  std::vector<std::uint32_t> right;  // sorted by id
  std::uint32_t birthday = 0;
};

struct Registry {
  std::deque<Node> nodes;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  std::unordered_map<std::uint64_t, bool> leq_memo;
  std::mutex mu;

  Registry() {
    nodes.push_back(Node{});  // id 0: {|}
    buckets[hash_node({}, {})].push_back(0);
  }

  static std::uint64_t hash_node(const std::vector<std::uint32_t>& l,
                                 const std::vector<std::uint32_t>& r) {
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    for (std::uint32_t c : l) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h = ~h;
    for (std::uint32_t c : r) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

Registry& reg() {
  static Registry* r = new Registry();
  return *r;
}

constexpr std::size_t kLeqMemoCap = std::size_t{1} << 22;

// The no-obstacle recursion. A per-call memo keeps each top-level query
// polynomial in the number of subterm pairs; the global memo is a bounded
// accelerator shared across queries.
bool leq_ids(std::uint32_t x, std::uint32_t y,
             std::unordered_map<std::uint64_t, bool>& local) {
  if (x == y) return true;
  const std::uint64_t key = (std::uint64_t(x) << 32) | y;
  {
    std::lock_guard<std::mutex> lock(reg().mu);
    auto it = reg().leq_memo.find(key);
    if (it != reg().leq_memo.end()) return it->second;
  }
  if (auto it = local.find(key); it != local.end()) return it->second;
  bool ok = true;
  for (std::uint32_t xl : reg().nodes[x].left) {
    if (leq_ids(y, xl, local)) {
      ok = false;
      break;
    }
  }
  if (ok) {
    for (std::uint32_t yr : reg().nodes[y].right) {
      if (leq_ids(yr, x, local)) {
        ok = false;
        break;
      }
    }
  }
  local.emplace(key, ok);
  {
    std::lock_guard<std::mutex> lock(reg().mu);
    if (reg().leq_memo.size() < kLeqMemoCap) reg().leq_memo.emplace(key, ok);
  }
  return ok;
}

bool leq_ids(std::uint32_t x, std::uint32_t y) {
  std::unordered_map<std::uint64_t, bool> local;
  return leq_ids(x, y, local);
}

}  // namespace

Term Term::make(std::vector<Term> left, std::vector<Term> right) {
  std::vector<std::uint32_t> l, r;
  l.reserve(left.size());
  r.reserve(right.size());
  for (Term t : left) l.push_back(t.id());
  for (Term t : right) r.push_back(t.id());
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());

  for (std::uint32_t a : l) {
    for (std::uint32_t b : r) {
      if (leq_ids(b, a)) {  // not (a < b)
        throw std::invalid_argument(
            "surreal term: left member not strictly below right member");
      }
    }
  }

  const std::uint64_t h = Registry::hash_node(l, r);
  std::lock_guard<std::mutex> lock(reg().mu);
  auto& bucket = reg().buckets[h];
  for (std::uint32_t id : bucket) {
    if (reg().nodes[id].left == l && reg().nodes[id].right == r) {
      return Term::from_id(id);
    }
  }
  Node node;
  std::uint32_t birthday = 0;
  for (std::uint32_t c : l) birthday = std::max(birthday, reg().nodes[c].birthday + 1);
  for (std::uint32_t c : r) birthday = std::max(birthday, reg().nodes[c].birthday + 1);
  node.left = std::move(l);
  node.right = std::move(r);
  node.birthday = birthday;
  reg().nodes.push_back(std::move(node));
  auto id = static_cast<std::uint32_t>(reg().nodes.size() - 1);
  bucket.push_back(id);
  return Term::from_id(id);
}

Term Term::from_id(std::uint32_t id) { return Term(id); }

std::vector<Term> Term::left() const {
  std::vector<Term> out;
  for (std::uint32_t c : reg().nodes[id_].left) out.push_back(Term::from_id(c));
  return out;
}

std::vector<Term> Term::right() const {
  std::vector<Term> out;
  for (std::uint32_t c : reg().nodes[id_].right) out.push_back(Term::from_id(c));
  return out;
}

std::size_t Term::birthday() const { return reg().nodes[id_].birthday; }

bool leq(Term x, Term y) { return leq_ids(x.id(), y.id()); }

bool equivalent(Term x, Term y) { return leq(x, y) && leq(y, x); }

namespace {

// Candidate cuts (A, B) over the ascending representatives of the previous
// day: any A, any B drawn from indices strictly above max(A).
template <typename Fn>
void enumerate_cuts(std::size_t n, Fn&& fn) {
  // masks over n representatives; kept well under 2^20 by the day bound
  for (std::size_t a_mask = 0; a_mask < (std::size_t{1} << n); ++a_mask) {
    std::size_t first_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a_mask & (std::size_t{1} << i)) first_b = i + 1;
    }
    const std::size_t b_bits = n - first_b;
    for (std::size_t b_sub = 0; b_sub < (std::size_t{1} << b_bits); ++b_sub) {
      fn(a_mask, b_sub << first_b);
    }
  }
}

}  // namespace

BornTable born_table(std::size_t day, std::size_t bound) {
  if (day > bound) {
    throw DayBoundExceeded("day " + std::to_string(day) + " exceeds bound " +
                           std::to_string(bound) +
                           " (value counts double per day)");
  }
  BornTable table;
  table.day = day;
  table.reps = {Term::zero()};
  table.values = {Rational(0)};
  for (std::size_t d = 1; d <= day; ++d) {
    const std::vector<Term> prev = table.reps;  // snapshot: members born < d
    enumerate_cuts(prev.size(), [&](std::size_t a_mask, std::size_t b_mask) {
      std::vector<Term> left, right;
      for (std::size_t i = 0; i < prev.size(); ++i) {
        if (a_mask & (std::size_t{1} << i)) left.push_back(prev[i]);
        if (b_mask & (std::size_t{1} << i)) right.push_back(prev[i]);
      }
      Term t = Term::make(std::move(left), std::move(right));
      // Insertion point among current reps (strictly ordered).
      auto it = std::lower_bound(table.reps.begin(), table.reps.end(), t,
                                 [](Term rep, Term probe) { return less(rep, probe); });
      std::size_t idx = static_cast<std::size_t>(it - table.reps.begin());
      if (it != table.reps.end() && equivalent(*it, t)) return;  // known value
      Rational v;
      if (table.reps.empty()) {
        v = 0;
      } else if (idx == 0) {
        v = table.values.front() - 1;
      } else if (idx == table.reps.size()) {
        v = table.values.back() + 1;
      } else {
        v = between(table.values[idx - 1], table.values[idx]);
      }
      table.reps.insert(table.reps.begin() + idx, t);
      table.values.insert(table.values.begin() + idx, v);
    });
  }
  return table;
}

std::vector<Term> born_by(std::size_t day, std::size_t bound) {
  return born_table(day, bound).reps;
}

std::size_t BornTable::class_of(Term t) const {
  auto it = std::lower_bound(reps.begin(), reps.end(), t,
                             [](Term rep, Term probe) { return less(rep, probe); });
  if (it == reps.end() || !equivalent(*it, t)) {
    throw std::out_of_range("term's value not born by day " + std::to_string(day));
  }
  return static_cast<std::size_t>(it - reps.begin());
}

HypnagogicStage hypnagogic_stage(std::size_t day, std::size_t bound) {
  if (day > bound) {
    throw DayBoundExceeded("stage day " + std::to_string(day) +
                           " exceeds bound " + std::to_string(bound) +
                           " (node counts explode past day 2)");
  }
  HypnagogicStage stage;
  stage.day = day;
  stage.nodes = {Term::zero()};
  std::vector<std::uint32_t> have{Term::zero().id()};
  for (std::size_t d = 1; d <= day; ++d) {
    const std::vector<Term> prev = stage.nodes;  // all terms born < d
    // A < B pointwise, over unquotiented terms; ties between equivalent
    // terms make an index split insufficient, so filter directly.
    const std::size_t n = prev.size();
    for (std::size_t a_mask = 0; a_mask < (std::size_t{1} << n); ++a_mask) {
      std::vector<Term> left;
      for (std::size_t i = 0; i < n; ++i) {
        if (a_mask & (std::size_t{1} << i)) left.push_back(prev[i]);
      }
      for (std::size_t b_mask = 0; b_mask < (std::size_t{1} << n); ++b_mask) {
        if ((a_mask & b_mask) != 0) continue;  // shared term would violate the cut
        std::vector<Term> right;
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i) {
          if (!(b_mask & (std::size_t{1} << i))) continue;
          right.push_back(prev[i]);
          for (const Term& a : left) {
            if (!less(a, prev[i])) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        Term t = Term::make(left, right);
        if (std::find(have.begin(), have.end(), t.id()) == have.end()) {
          have.push_back(t.id());
          stage.nodes.push_back(t);
        }
      }
    }
  }
  stage.table = born_table(day, std::max<std::size_t>(day, 4));
  std::unordered_map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < stage.nodes.size(); ++i) {
    index.emplace(stage.nodes[i].id(), i);
    stage.graph.add_vertex("t" + std::to_string(i));
    stage.values.values["t" + std::to_string(i)] =
        stage.table.values[stage.table.class_of(stage.nodes[i])];
  }
  for (std::size_t i = 0; i < stage.nodes.size(); ++i) {
    for (Term a : stage.nodes[i].left()) {
      stage.graph.add_edge(index.at(a.id()), i);
    }
    for (Term b : stage.nodes[i].right()) {
      stage.graph.add_edge(i, index.at(b.id()));
    }
  }
  return stage;
}

std::size_t stage_find_pattern(const HypnagogicStage& stage,
                               const std::vector<std::size_t>& parents,
                               const std::vector<std::size_t>& children,
                               const std::vector<std::size_t>& apart,
                               std::size_t value_class) {
  for (std::size_t v = 0; v < stage.nodes.size(); ++v) {
    if (stage.table.class_of(stage.nodes[v]) != value_class) continue;
    bool ok = std::all_of(parents.begin(), parents.end(), [&](std::size_t p) {
      return p != v && stage.graph.has_edge(p, v);
    });
    ok = ok && std::all_of(children.begin(), children.end(), [&](std::size_t c) {
      return c != v && stage.graph.has_edge(v, c);
    });
    ok = ok && std::all_of(apart.begin(), apart.end(), [&](std::size_t x) {
      return x != v && !stage.graph.has_edge(v, x) && !stage.graph.has_edge(x, v);
    });
    if (ok) return v;
  }
  return stage_npos;
}

std::map<std::string, std::size_t> embed_into_stage(const Digraph& g,
                                                    const Grading& values,
                                                    const HypnagogicStage& stage) {
  if (auto why = values.check(g)) {
    throw std::invalid_argument("embed_into_stage: not a grading: " + *why);
  }
  // Map each grading value to its class index in the stage's table.
  auto class_of_value = [&stage](const Rational& q) {
    for (std::size_t i = 0; i < stage.table.values.size(); ++i) {
      if (stage.table.values[i] == q) return i;
    }
    throw std::out_of_range("value " + format_rational(q) +
                            " is not a day-" + std::to_string(stage.day) +
                            " surreal value");
  };
  std::map<std::string, std::size_t> image;
  std::vector<std::size_t> placed(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::vector<std::size_t> parents, children, apart;
    for (std::size_t j = 0; j < i; ++j) {
      if (g.has_edge(j, i)) {
        parents.push_back(placed[j]);
      } else if (g.has_edge(i, j)) {
        children.push_back(placed[j]);
      } else {
        apart.push_back(placed[j]);
      }
    }
    std::size_t v = stage_find_pattern(stage, parents, children, apart,
                                       class_of_value(values.at(g.name(i))));
    if (v == stage_npos) {
      throw std::runtime_error("embed_into_stage: stage day " +
                               std::to_string(stage.day) +
                               " has no node for vertex " + g.name(i) +
                               "; a later stage is needed");
    }
    placed[i] = v;
    image[g.name(i)] = v;
  }
  return image;
}

std::string to_string(Term t) {
  // Elements print in value order, ties broken textually, so output is
  // independent of interning history.
  auto sorted_side = [](std::vector<Term> side) {
    std::vector<std::string> texts;
    std::vector<std::pair<Term, std::string>> keyed;
    for (Term e : side) keyed.emplace_back(e, to_string(e));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (less(a.first, b.first)) return true;
      if (less(b.first, a.first)) return false;
      return a.second < b.second;
    });
    for (auto& [e, s] : keyed) texts.push_back(std::move(s));
    return texts;
  };
  std::string out = "{";
  bool first = true;
  for (const auto& s : sorted_side(t.left())) {
    if (!first) out.push_back(',');
    first = false;
    out += s;
  }
  out.push_back('|');
  first = true;
  for (const auto& s : sorted_side(t.right())) {
    if (!first) out.push_back(',');
    first = false;
    out += s;
  }
  out.push_back('}');
  return out;
}

namespace {

Term parse_term_at(const std::string& text, std::size_t& pos) {
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument(std::string("term syntax: expected '") + c +
                                  "' at position " + std::to_string(pos));
    }
    ++pos;
  };
  expect('{');
  std::vector<Term> left, right;
  skip_ws();
  while (pos < text.size() && text[pos] != '|') {
    left.push_back(parse_term_at(text, pos));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws();
    }
  }
  expect('|');
  skip_ws();
  while (pos < text.size() && text[pos] != '}') {
    right.push_back(parse_term_at(text, pos));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      skip_ws();
    }
  }
  expect('}');
  return Term::make(std::move(left), std::move(right));
}

}  // namespace

Term parse_term(const std::string& text) {
  std::size_t pos = 0;
  Term t = parse_term_at(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) {
    throw std::invalid_argument("term syntax: trailing input at position " +
                                std::to_string(pos));
  }
  return t;
}

}  // namespace gradig
