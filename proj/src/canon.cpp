#include "mcg/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace mcg {

Relabeling Relabeling::identity(const std::vector<int> &ids) {
  std::map<int, DirectedEdge> images;
  for (int id : ids) images[id] = {id, false};
  return Relabeling(std::move(images));
}

DirectedEdge Relabeling::operator()(DirectedEdge e) const {
  auto it = images_.find(e.id);
  if (it == images_.end()) throw DomainError("relabeling undefined on e" + std::to_string(e.id));
  DirectedEdge img = it->second;
  if (e.rev) img = img.bar();
  return img;
}

Relabeling Relabeling::inverse() const {
  std::map<int, DirectedEdge> inv;
  for (const auto &[id, img] : images_) inv[img.id] = {id, img.rev};
  return Relabeling(std::move(inv));
}

std::string Relabeling::to_string() const {
  std::string out;
  for (const auto &[id, img] : images_) {
    if (!out.empty()) out += ", ";
    out += "e" + std::to_string(id) + "->" + mcg::to_string(img);
  }
  return out;
}

Relabeling compose(const Relabeling &g, const Relabeling &h) {
  std::map<int, DirectedEdge> images;
  for (const auto &[id, img] : h.images()) images[id] = g(img);
  return Relabeling(std::move(images));
}

OrderedGraph apply(const Relabeling &g, const OrderedGraph &graph) {
  auto map_star = [&](const Star &s) {
    Star out;
    out.reserve(s.size());
    for (const auto &e : s) out.push_back(g(e));
    return out;
  };
  Star base = map_star(graph.base());
  std::vector<Star> others;
  others.reserve(graph.others().size());
  for (const auto &s : graph.others()) others.push_back(map_star(s));
  return OrderedGraph(std::move(base), std::move(others));
}

namespace {

// Token comparison order matches DirectedEdge: id first, forward before
// reversed.
using Token = std::uint32_t;
inline Token make_token(int new_id, bool rev) {
  return static_cast<Token>((new_id << 1) | (rev ? 1 : 0));
}

struct Searcher {
  const OrderedGraph &g;
  std::vector<int> old_ids;
  std::map<int, int> old_index;

  // assignment[i]: image of the forward edge of old_ids[i]; id 0 = unset.
  std::vector<DirectedEdge> assignment;
  int next_free = 1;
  std::vector<int> trail; // old indices assigned, in order

  std::vector<Token> cur;
  std::vector<Token> best;
  std::vector<std::vector<DirectedEdge>> minimizers;

  std::vector<std::vector<std::size_t>> groups; // star indices grouped by size, ascending

  explicit Searcher(const OrderedGraph &graph) : g(graph) {
    old_ids = g.edge_ids();
    for (std::size_t i = 0; i < old_ids.size(); ++i) old_index[old_ids[i]] = static_cast<int>(i);
    assignment.assign(old_ids.size(), DirectedEdge{0, false});

    std::vector<std::size_t> order(g.others().size());
    std::iota(order.begin(), order.end(), 0);
    // Stars are stored sorted by (size, content), so sizes are already
    // ascending; group runs of equal size.
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      while (j < order.size() && g.others()[order[j]].size() == g.others()[order[i]].size()) ++j;
      groups.push_back({order.begin() + static_cast<std::ptrdiff_t>(i),
                        order.begin() + static_cast<std::ptrdiff_t>(j)});
      i = j;
    }
  }

  Token materialize(DirectedEdge a) {
    int idx = old_index.at(a.id);
    if (assignment[idx].id == 0) {
      assignment[idx] = {next_free++, a.rev}; // first occurrence becomes forward
      trail.push_back(idx);
    }
    DirectedEdge img = assignment[idx];
    if (a.rev) img = img.bar();
    return make_token(img.id, img.rev);
  }

  void undo_to(std::size_t trail_mark, std::size_t cur_mark) {
    while (trail.size() > trail_mark) {
      assignment[trail.back()] = {0, false};
      trail.pop_back();
      --next_free;
    }
    cur.resize(cur_mark);
  }

  // Appends the tokens of `seq`, comparing against `best` unless already
  // strictly below it. Returns false when the branch is dominated.
  bool emit(const Star &seq, std::size_t rot, bool &lt) {
    for (std::size_t t = 0; t < seq.size(); ++t) {
      Token tok = materialize(seq[(rot + t) % seq.size()]);
      if (!best.empty() && !lt) {
        Token ref = best[cur.size()];
        if (tok > ref) return false;
        if (tok < ref) lt = true;
      }
      cur.push_back(tok);
    }
    return true;
  }

  // `lt` only guides pruning and may be stale once deeper leaves improved
  // `best`; the leaf decides by a full comparison.
  void leaf(bool) {
    if (best.empty() || cur < best) {
      best = cur;
      minimizers.clear();
      minimizers.push_back(assignment);
    } else if (cur == best) {
      minimizers.push_back(assignment);
    }
  }

  static constexpr std::size_t kNoBlock = static_cast<std::size_t>(-1);

  void rec(std::size_t group_idx, std::vector<bool> &used, std::size_t used_count, bool lt,
           std::size_t prev_block) {
    if (group_idx == groups.size()) {
      leaf(lt);
      return;
    }
    const auto &group = groups[group_idx];
    if (used_count == group.size()) {
      std::vector<bool> next_used(group_idx + 1 < groups.size() ? groups[group_idx + 1].size() : 0, false);
      rec(group_idx + 1, next_used, 0, lt, kNoBlock);
      return;
    }
    for (std::size_t gi = 0; gi < group.size(); ++gi) {
      if (used[gi]) continue;
      const Star &s = g.others()[group[gi]];
      for (std::size_t rot = 0; rot < s.size(); ++rot) {
        std::size_t tmark = trail.size(), cmark = cur.size();
        bool lt2 = lt;
        if (emit(s, rot, lt2)) {
          // Only streams with the group's blocks in nondecreasing order are
          // encodings; other placements of the same assignment are skipped.
          bool sorted = true;
          if (prev_block != kNoBlock) {
            const std::size_t len = s.size();
            for (std::size_t t = 0; t < len; ++t) {
              Token a = cur[prev_block + t], b = cur[cmark + t];
              if (a != b) {
                sorted = a < b;
                break;
              }
            }
          }
          if (sorted) {
            used[gi] = true;
            rec(group_idx, used, used_count + 1, lt2, cmark);
            used[gi] = false;
          }
        }
        undo_to(tmark, cmark);
      }
    }
  }

  void run() {
    bool lt = false;
    if (!emit(g.base(), 0, lt)) return; // best is empty here, cannot happen
    std::vector<bool> used(groups.empty() ? 0 : groups[0].size(), false);
    rec(0, used, 0, lt, kNoBlock);
  }

  Relabeling snapshot_to_relabeling(const std::vector<DirectedEdge> &snap) const {
    std::map<int, DirectedEdge> images;
    for (std::size_t i = 0; i < old_ids.size(); ++i) images[old_ids[i]] = snap[i];
    return Relabeling(std::move(images));
  }
};

} // namespace

CanonicalForm canonical_form_full(const OrderedGraph &g) {
  Searcher s(g);
  s.run();
  CanonicalForm out;
  out.witness = s.snapshot_to_relabeling(s.minimizers.front());
  out.representative = apply(out.witness, g);
  out.minimizers.reserve(s.minimizers.size());
  for (const auto &snap : s.minimizers) out.minimizers.push_back(s.snapshot_to_relabeling(snap));
  return out;
}

std::pair<OrderedGraph, Relabeling> canonical_form(const OrderedGraph &g) {
  CanonicalForm cf = canonical_form_full(g);
  return {cf.representative, cf.witness};
}

std::vector<Relabeling> automorphisms(const OrderedGraph &g) {
  CanonicalForm cf = canonical_form_full(g);
  Relabeling inv = cf.witness.inverse();
  std::vector<Relabeling> out;
  out.reserve(cf.minimizers.size());
  for (const auto &m : cf.minimizers) out.push_back(compose(inv, m));
  return out;
}

std::map<int, int> canonical_id_orbit_min(const CanonicalForm &cf) {
  std::vector<int> ids = cf.representative.edge_ids();
  std::map<int, int> parent;
  for (int id : ids) parent[id] = id;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a > b) std::swap(a, b);
    parent[b] = a; // keep the least id as the root
  };
  Relabeling inv = cf.witness.inverse();
  for (const auto &m : cf.minimizers) {
    Relabeling aut = compose(m, inv); // automorphism of the representative
    for (int id : ids) unite(id, aut(DirectedEdge{id, false}).id);
  }
  std::map<int, int> out;
  for (int id : ids) out[id] = find(id);
  return out;
}

std::optional<Relabeling> orbit_witness(const OrderedGraph &g1, const OrderedGraph &g2) {
  if (g1.edge_count() != g2.edge_count()) return std::nullopt;
  CanonicalForm c1 = canonical_form_full(g1);
  CanonicalForm c2 = canonical_form_full(g2);
  if (c1.representative != c2.representative) return std::nullopt;
  return compose(c1.witness.inverse(), c2.witness);
}

} // namespace mcg
