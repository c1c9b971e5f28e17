#ifndef MCG_FATGRAPH_HPP
#define MCG_FATGRAPH_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcg/errors.hpp"

namespace mcg {

/// A directed edge of a fat graph. Edge ids are positive integers; `rev`
/// marks the reversed direction, so bar() is the orientation involution.
struct DirectedEdge {
  int id = 0;
  bool rev = false;

  DirectedEdge bar() const { return {id, !rev}; }
  friend auto operator<=>(const DirectedEdge &, const DirectedEdge &) = default;
};

/// Textual form `e3` / `-e3`.
std::string to_string(DirectedEdge e);

/// A star: the sequence of directed edges leaving one vertex. Linear at the
/// base vertex, cyclic everywhere else.
using Star = std::vector<DirectedEdge>;

/// Ordered fat graph with a distinguished base vertex.
///
/// The base star keeps its linear order as given. Every other star is cyclic;
/// it is stored rotated to its lexicographically least rotation, and the
/// non-base stars are kept sorted by (length, content) so that structurally
/// equal graphs compare equal. Vertex identity is positional: vertex 0 is the
/// base, vertex i >= 1 is others()[i-1]. Edge ids need not be contiguous
/// (collapsed graphs keep the surviving original ids).
class OrderedGraph {
public:
  OrderedGraph() = default;
  OrderedGraph(Star base, std::vector<Star> others);

  const Star &base() const { return base_; }
  const std::vector<Star> &others() const { return others_; }

  std::size_t vertex_count() const { return 1 + others_.size(); }
  const Star &star(std::size_t v) const { return v == 0 ? base_ : others_[v - 1]; }

  /// Distinct edge ids, ascending.
  std::vector<int> edge_ids() const;
  std::size_t edge_count() const { return edge_ids().size(); }

  friend bool operator==(const OrderedGraph &, const OrderedGraph &) = default;
  friend auto operator<=>(const OrderedGraph &, const OrderedGraph &) = default;

private:
  Star base_;
  std::vector<Star> others_;
};

/// Least-rotation normal form of a cyclic star.
Star normalize_rotation(Star s);

/// Ordering used for the non-base star list: length first, then content.
bool star_less(const Star &a, const Star &b);

/// Canonical textual encoding, e.g.
/// `(e1,e2);(-e1,e3,-e3,e4,e5),(-e2,-e5,-e4)`.
std::string encode(const OrderedGraph &g);
OrderedGraph parse_graph(const std::string &text);

/// Position of a directed edge: which star, and where in it.
struct Position {
  std::size_t star = 0;
  std::size_t pos = 0;
};

/// Occupancy index over all stars of a graph.
class StarIndex {
public:
  explicit StarIndex(const OrderedGraph &g);
  std::optional<Position> find(DirectedEdge e) const;

private:
  static long long key(DirectedEdge e) { return 2LL * e.id + (e.rev ? 1 : 0); }
  std::unordered_map<long long, Position> map_;
};

struct ValidationReport {
  enum class Code { ok, partition, valence, disconnected, bridge };
  Code code = Code::ok;
  std::string detail;
  bool ok() const { return code == Code::ok; }
};

/// Total check of the fat-graph conditions, reporting the first violation:
/// the stars partition the directed edges, the base star has >= 2 elements
/// and every other star >= 3, the underlying multigraph is connected and has
/// no bridges (loops are never bridges).
ValidationReport validate(const OrderedGraph &g);

/// The boundary decomposition: the base boundary path w0 plus the cyclic
/// boundary words. Together they use every directed edge exactly once.
struct BoundaryDecomposition {
  Star w0;                  // starts at base()[0]
  std::vector<Star> cycles; // each rotated to start at its least element
};

/// Successor walk next(a) = element after bar(a) in the star of a's terminus
/// (cyclic successor; at the base star the wrap from last to first closes
/// w0). Throws StructuralError if the graph fails validate().
BoundaryDecomposition boundary_words(const OrderedGraph &g);

struct GraphInvariants {
  int n = 0;      // rank of the fundamental group
  int p = 0;      // number of boundary cycles
  int genus = 0;  // (n - p) / 2
  int degree = 0; // 2n - |base star|
};

/// Throws StructuralError on invalid graphs; a parity or degree-identity
/// violation throws std::logic_error (it would be a bug, not bad input).
GraphInvariants invariants(const OrderedGraph &g);

} // namespace mcg

#endif
