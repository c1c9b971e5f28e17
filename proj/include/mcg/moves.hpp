#ifndef MCG_MOVES_HPP
#define MCG_MOVES_HPP

#include <vector>

#include "mcg/fatgraph.hpp"

namespace mcg {

/// True iff edge `id` joins two distinct vertices of g.
bool collapsible(const OrderedGraph &g, int id);

/// Ids of all collapsible edges, ascending.
std::vector<int> collapsible_ids(const OrderedGraph &g);

/// Collapse a non-loop edge: the two endpoint stars merge, the second star
/// spliced into the position of the collapsed pair, opened right after the
/// reversed half. If one endpoint is the base, the merged vertex is the base
/// and keeps a linear order. Throws MoveError on loops, StructuralError on
/// invalid input.
OrderedGraph collapse(const OrderedGraph &g, int id);

/// A vertex split: insert a fresh edge separating the contiguous arc
/// A = star[arc_start .. arc_start+arc_len) from the rest of the star.
/// The arc side becomes (e, A...), the other side keeps its order with
/// bar(e) in the arc's place. Non-base arcs may wrap around the cyclic
/// order; base arcs may not. When splitting the base, `base_side` picks
/// which side keeps the basepoint (that side may end up with valence 2).
struct SplitSpec {
  std::size_t star = 0; // 0 = base
  std::size_t arc_start = 0;
  std::size_t arc_len = 0;
  enum class BaseSide { none, arc, complement } base_side = BaseSide::none;

  friend auto operator<=>(const SplitSpec &, const SplitSpec &) = default;
};

/// Nonthrowing admissibility check for split().
bool valid_split(const OrderedGraph &g, const SplitSpec &spec);

/// All admissible splits of g, in deterministic order.
std::vector<SplitSpec> enumerate_splits(const OrderedGraph &g);

/// The fresh edge always takes the smallest unused positive id.
int fresh_edge_id(const OrderedGraph &g);

OrderedGraph split(const OrderedGraph &g, const SplitSpec &spec);

} // namespace mcg

#endif
