#include "mcg/fatgraph.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

namespace mcg {

std::string to_string(DirectedEdge e) {
  std::string s = e.rev ? "-e" : "e";
  s += std::to_string(e.id);
  return s;
}

Star normalize_rotation(Star s) {
  if (s.size() < 2) return s;
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] < s[best]) best = i;
  std::rotate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(best), s.end());
  return s;
}

bool star_less(const Star &a, const Star &b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

OrderedGraph::OrderedGraph(Star base, std::vector<Star> others)
    : base_(std::move(base)), others_(std::move(others)) {
  for (auto &s : others_) s = normalize_rotation(std::move(s));
  std::sort(others_.begin(), others_.end(), star_less);
}

std::vector<int> OrderedGraph::edge_ids() const {
  std::set<int> ids;
  for (const auto &e : base_) ids.insert(e.id);
  for (const auto &s : others_)
    for (const auto &e : s) ids.insert(e.id);
  return {ids.begin(), ids.end()};
}

std::string encode(const OrderedGraph &g) {
  std::ostringstream out;
  auto put_star = [&](const Star &s) {
    out << '(';
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ',';
      out << to_string(s[i]);
    }
    out << ')';
  };
  put_star(g.base());
  if (!g.others().empty()) {
    out << ';';
    for (std::size_t i = 0; i < g.others().size(); ++i) {
      if (i) out << ',';
      put_star(g.others()[i]);
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string &s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(i));
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
};

DirectedEdge parse_edge(Cursor &c) {
  c.skip_ws();
  bool rev = c.eat('-');
  if (!c.eat('e')) throw ParseError("expected edge token at offset " + std::to_string(c.i));
  std::size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  if (c.i == start) throw ParseError("expected edge number at offset " + std::to_string(c.i));
  int id = std::stoi(c.s.substr(start, c.i - start));
  if (id <= 0) throw ParseError("edge ids must be positive");
  return {id, rev};
}

Star parse_star(Cursor &c) {
  c.expect('(');
  Star star;
  if (!c.eat(')')) {
    star.push_back(parse_edge(c));
    while (c.eat(',')) star.push_back(parse_edge(c));
    c.expect(')');
  }
  return star;
}

} // namespace

OrderedGraph parse_graph(const std::string &text) {
  Cursor c{text};
  Star base = parse_star(c);
  std::vector<Star> others;
  if (c.eat(';')) {
    others.push_back(parse_star(c));
    while (c.eat(',')) others.push_back(parse_star(c));
  }
  if (!c.done()) throw ParseError("trailing input at offset " + std::to_string(c.i));
  return OrderedGraph(std::move(base), std::move(others));
}

StarIndex::StarIndex(const OrderedGraph &g) {
  map_.reserve(2 * g.base().size());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Star &s = g.star(v);
    for (std::size_t i = 0; i < s.size(); ++i) map_.emplace(key(s[i]), Position{v, i});
  }
}

std::optional<Position> StarIndex::find(DirectedEdge e) const {
  auto it = map_.find(key(e));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Bridge search: DFS lowlink on the underlying multigraph, entering each
// undirected edge at most once. Loops and parallel edges are handled by
// tracking the edge instance, not the parent vertex.
struct BridgeFinder {
  const std::vector<std::vector<std::pair<int, int>>> &adj; // vertex -> (neighbor, edge index)
  std::vector<int> disc, low;
  int timer = 1;
  bool found_bridge = false;
  int bridge_edge = -1;

  explicit BridgeFinder(const std::vector<std::vector<std::pair<int, int>>> &a)
      : adj(a), disc(a.size(), 0), low(a.size(), 0) {}

  void run(int v, int in_edge) {
    disc[v] = low[v] = timer++;
    for (auto [w, eidx] : adj[v]) {
      if (eidx == in_edge) continue;
      if (w == v) continue; // loop
      if (disc[w]) {
        low[v] = std::min(low[v], disc[w]);
      } else {
        run(w, eidx);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v] && !found_bridge) {
          found_bridge = true;
          bridge_edge = eidx;
        }
      }
    }
  }
};

} // namespace

ValidationReport validate(const OrderedGraph &g) {
  // Partition: every id occurs once forward and once reversed, nothing else.
  std::set<std::pair<int, bool>> seen;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (const auto &e : g.star(v)) {
      if (e.id <= 0)
        return {ValidationReport::Code::partition, "nonpositive edge id " + std::to_string(e.id)};
      if (!seen.insert({e.id, e.rev}).second)
        return {ValidationReport::Code::partition, to_string(e) + " occurs twice"};
    }
  }
  for (const auto &[id, rev] : seen) {
    if (!seen.count({id, !rev}))
      return {ValidationReport::Code::partition,
              to_string(DirectedEdge{id, rev}) + " present without " + to_string(DirectedEdge{id, !rev})};
  }
  if (seen.empty()) return {ValidationReport::Code::partition, "graph has no edges"};

  if (g.base().size() < 2)
    return {ValidationReport::Code::valence, "base star has " + std::to_string(g.base().size()) + " < 2 elements"};
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (g.star(v).size() < 3)
      return {ValidationReport::Code::valence,
              "star " + std::to_string(v) + " has " + std::to_string(g.star(v).size()) + " < 3 elements"};

  // Connectivity and bridges on the underlying multigraph.
  StarIndex index(g);
  const int V = static_cast<int>(g.vertex_count());
  std::vector<std::vector<std::pair<int, int>>> adj(V);
  int eidx = 0;
  for (int id : g.edge_ids()) {
    auto pf = index.find({id, false});
    auto pr = index.find({id, true});
    int a = static_cast<int>(pf->star);
    int b = static_cast<int>(pr->star);
    adj[a].push_back({b, eidx});
    adj[b].push_back({a, eidx});
    ++eidx;
  }
  BridgeFinder bf(adj);
  bf.run(0, -1);
  for (int v = 0; v < V; ++v)
    if (!bf.disc[v])
      return {ValidationReport::Code::disconnected, "vertex " + std::to_string(v) + " unreachable from the base"};
  if (bf.found_bridge) {
    int id = g.edge_ids()[static_cast<std::size_t>(bf.bridge_edge)];
    return {ValidationReport::Code::bridge, "edge e" + std::to_string(id) + " is separating"};
  }
  return {};
}

namespace {

void require_valid(const OrderedGraph &g) {
  ValidationReport r = validate(g);
  if (!r.ok()) throw StructuralError("invalid graph: " + r.detail);
}

} // namespace

BoundaryDecomposition boundary_words(const OrderedGraph &g) {
  require_valid(g);
  StarIndex index(g);
  auto next = [&](DirectedEdge a) {
    Position p = *index.find(a.bar());
    const Star &s = g.star(p.star);
    return s[(p.pos + 1) % s.size()];
  };

  std::set<std::pair<int, bool>> visited;
  auto walk = [&](DirectedEdge start) {
    Star word;
    DirectedEdge cur = start;
    do {
      word.push_back(cur);
      visited.insert({cur.id, cur.rev});
      cur = next(cur);
    } while (cur != start);
    return word;
  };

  BoundaryDecomposition out;
  out.w0 = walk(g.base()[0]);

  // Remaining orbits in ascending token order; each cycle therefore starts
  // at its own least element.
  std::vector<DirectedEdge> all;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (const auto &e : g.star(v)) all.push_back(e);
  std::sort(all.begin(), all.end());
  for (const auto &e : all)
    if (!visited.count({e.id, e.rev})) out.cycles.push_back(walk(e));
  return out;
}

GraphInvariants invariants(const OrderedGraph &g) {
  BoundaryDecomposition bd = boundary_words(g);
  GraphInvariants inv;
  const int k = static_cast<int>(g.edge_count());
  const int V = static_cast<int>(g.vertex_count());
  inv.n = k - V + 1;
  inv.p = static_cast<int>(bd.cycles.size());
  if ((inv.n - inv.p) % 2 != 0)
    throw std::logic_error("parity violation: n - p odd on a validated graph");
  inv.genus = (inv.n - inv.p) / 2;
  inv.degree = 2 * inv.n - static_cast<int>(g.base().size());
  int degree_sum = 0;
  for (const auto &s : g.others()) degree_sum += static_cast<int>(s.size()) - 2;
  if (degree_sum != inv.degree)
    throw std::logic_error("degree identity violation on a validated graph");
  return inv;
}

} // namespace mcg
