#include "mcg/moves.hpp"

#include <algorithm>
#include <set>

namespace mcg {

namespace {

// Moves need only the partition structure; connectivity and bridge-freeness
// of the input are not required (split outputs may transiently violate them).
void require_partition(const OrderedGraph &g) {
  std::set<std::pair<int, bool>> seen;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (const auto &e : g.star(v)) {
      if (e.id <= 0 || !seen.insert({e.id, e.rev}).second)
        throw StructuralError("stars do not partition the directed edges");
    }
  for (const auto &[id, rev] : seen)
    if (!seen.count({id, !rev})) throw StructuralError("stars do not partition the directed edges");
}

} // namespace

bool collapsible(const OrderedGraph &g, int id) {
  StarIndex index(g);
  auto pf = index.find({id, false});
  auto pr = index.find({id, true});
  if (!pf || !pr) return false;
  return pf->star != pr->star;
}

std::vector<int> collapsible_ids(const OrderedGraph &g) {
  std::vector<int> out;
  for (int id : g.edge_ids())
    if (collapsible(g, id)) out.push_back(id);
  return out;
}

OrderedGraph collapse(const OrderedGraph &g, int id) {
  require_partition(g);
  StarIndex index(g);
  auto pf = index.find({id, false});
  auto pr = index.find({id, true});
  if (!pf || !pr) throw MoveError("edge e" + std::to_string(id) + " not in graph");
  if (pf->star == pr->star) throw MoveError("edge e" + std::to_string(id) + " is a loop, not collapsible");

  Position pi = *pf, pj = *pr;
  if (pj.star == 0) std::swap(pi, pj); // keep the spliced-in star cyclic

  const Star &si = g.star(pi.star);
  const Star &sj = g.star(pj.star);
  Star merged;
  merged.reserve(si.size() + sj.size() - 2);
  merged.insert(merged.end(), si.begin(), si.begin() + static_cast<std::ptrdiff_t>(pi.pos));
  for (std::size_t t = 1; t < sj.size(); ++t) merged.push_back(sj[(pj.pos + t) % sj.size()]);
  merged.insert(merged.end(), si.begin() + static_cast<std::ptrdiff_t>(pi.pos) + 1, si.end());

  Star base = g.base();
  std::vector<Star> others;
  for (std::size_t v = 1; v < g.vertex_count(); ++v) {
    if (v == pi.star || v == pj.star) continue;
    others.push_back(g.star(v));
  }
  if (pi.star == 0)
    base = std::move(merged);
  else
    others.push_back(std::move(merged));
  return OrderedGraph(std::move(base), std::move(others));
}

int fresh_edge_id(const OrderedGraph &g) {
  int id = 1;
  for (int used : g.edge_ids()) {
    if (used == id)
      ++id;
    else if (used > id)
      break;
  }
  return id;
}

namespace {

// Partition admissibility of arc A against its complement B within one star:
// some element of each side has its reverse outside that side.
bool arc_partition_ok(const Star &s, std::size_t start, std::size_t len) {
  auto in_arc = [&](std::size_t pos) {
    std::size_t rel = (pos + s.size() - start) % s.size();
    return rel < len;
  };
  bool a_ok = false, b_ok = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    // locate bar(s[i]) within this star, if present
    bool bar_inside_same_side = false;
    bool bar_in_star = false;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] == s[i].bar()) {
        bar_in_star = true;
        bar_inside_same_side = (in_arc(i) == in_arc(j));
        break;
      }
    }
    bool bar_same = bar_in_star && bar_inside_same_side;
    if (in_arc(i) && !bar_same) a_ok = true;
    if (!in_arc(i) && !bar_same) b_ok = true;
  }
  return a_ok && b_ok;
}

} // namespace

bool valid_split(const OrderedGraph &g, const SplitSpec &spec) {
  if (spec.star >= g.vertex_count()) return false;
  const Star &s = g.star(spec.star);
  const std::size_t r = s.size();
  const std::size_t a = spec.arc_len, b = r - spec.arc_len;
  if (a < 1 || a >= r) return false;
  if (spec.star == 0) {
    if (spec.base_side == SplitSpec::BaseSide::none) return false;
    if (spec.arc_start + spec.arc_len > r) return false; // linear order: no wrap
    if (spec.base_side == SplitSpec::BaseSide::arc) {
      if (b < 2) return false; // non-base side keeps >= 3 after adding bar(e)
    } else {
      if (a < 2 || b < 1) return false;
    }
  } else {
    if (spec.base_side != SplitSpec::BaseSide::none) return false;
    if (spec.arc_start >= r) return false;
    if (a < 2 || b < 2) return false;
  }
  return arc_partition_ok(s, spec.arc_start, spec.arc_len);
}

std::vector<SplitSpec> enumerate_splits(const OrderedGraph &g) {
  std::vector<SplitSpec> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::size_t r = g.star(v).size();
    for (std::size_t start = 0; start < r; ++start) {
      for (std::size_t len = 1; len < r; ++len) {
        if (v == 0) {
          for (auto side : {SplitSpec::BaseSide::arc, SplitSpec::BaseSide::complement}) {
            SplitSpec spec{v, start, len, side};
            if (valid_split(g, spec)) out.push_back(spec);
          }
        } else {
          SplitSpec spec{v, start, len, SplitSpec::BaseSide::none};
          if (valid_split(g, spec)) out.push_back(spec);
        }
      }
    }
  }
  return out;
}

OrderedGraph split(const OrderedGraph &g, const SplitSpec &spec) {
  require_partition(g);
  if (spec.star >= g.vertex_count()) throw MoveError("split: no such vertex");
  const Star &s = g.star(spec.star);
  if (spec.star == 0 && spec.base_side == SplitSpec::BaseSide::none)
    throw MoveError("split: splitting the base requires a base side choice");
  if (!valid_split(g, spec)) throw MoveError("split: inadmissible arc");

  const std::size_t r = s.size();
  const int f = fresh_edge_id(g);
  const DirectedEdge e{f, false};

  Star arc_side;
  arc_side.push_back(e);
  for (std::size_t t = 0; t < spec.arc_len; ++t) arc_side.push_back(s[(spec.arc_start + t) % r]);

  // Complement keeps the original order with bar(e) in the arc's place.
  Star comp_side;
  if (spec.star == 0) {
    comp_side.insert(comp_side.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(spec.arc_start));
    comp_side.push_back(e.bar());
    comp_side.insert(comp_side.end(), s.begin() + static_cast<std::ptrdiff_t>(spec.arc_start + spec.arc_len),
                     s.end());
  } else {
    comp_side.push_back(e.bar());
    for (std::size_t t = spec.arc_len; t < r; ++t) comp_side.push_back(s[(spec.arc_start + t) % r]);
  }

  Star base = g.base();
  std::vector<Star> others;
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (v != spec.star) others.push_back(g.star(v));

  if (spec.star == 0) {
    if (spec.base_side == SplitSpec::BaseSide::arc) {
      base = std::move(arc_side);
      others.push_back(std::move(comp_side));
    } else {
      base = std::move(comp_side);
      others.push_back(std::move(arc_side));
    }
  } else {
    others.push_back(std::move(arc_side));
    others.push_back(std::move(comp_side));
  }
  return OrderedGraph(std::move(base), std::move(others));
}

} // namespace mcg
