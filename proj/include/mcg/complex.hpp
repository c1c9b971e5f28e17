#ifndef MCG_COMPLEX_HPP
#define MCG_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mcg/budget.hpp"
#include "mcg/fatgraph.hpp"
#include "mcg/present.hpp"

namespace mcg {

/// Label of a collapse-tree edge: which list element, and the collapsed edge
/// ids along the path (one id: root to first collapse; two: first to second).
struct TreeEdgeLabel {
  int z_index = 0;        // 0-based position in the list
  std::vector<int> path;  // 1 or 2 edge ids of the root graph

  /// `z3e1e5` (1-based list position).
  std::string name() const;

  friend bool operator==(const TreeEdgeLabel &, const TreeEdgeLabel &) = default;
  friend auto operator<=>(const TreeEdgeLabel &, const TreeEdgeLabel &) = default;
};

/// The two-level tree of all single and double collapses of a root graph.
/// Node 0 is the root; edge ids keep their identity across levels.
struct CollapseTree {
  struct Edge {
    std::vector<int> path;
    std::size_t source = 0;
    std::size_t target = 0;
    int collapsed = 0; // the edge collapsed along this step (last path entry)
  };
  std::vector<OrderedGraph> nodes;
  std::vector<Edge> edges; // path-lexicographic order
};

CollapseTree build_tree(const OrderedGraph &z);

/// The quotient of the union of collapse trees under the relabeling action,
/// with commutation 2-cells attached. Tree edges land in the same class
/// exactly when a relabeling matches their source graphs and carries one
/// collapsed edge to the other (up to orientation).
struct QuotientComplex {
  std::vector<OrderedGraph> list;  // the canonical roots, sorted
  std::vector<CollapseTree> trees; // parallel to `list`

  std::vector<OrderedGraph> vertices; // canonical representatives

  struct EdgeClass {
    std::vector<TreeEdgeLabel> labels; // sorted; labels[0] is the representative
    std::size_t source = 0;            // vertex index (higher stratum)
    std::size_t target = 0;            // vertex index (lower stratum)
  };
  std::vector<EdgeClass> edges; // sorted by representative label

  struct TwoCell {
    TreeEdgeLabel first_leg;        // ze_i
    TreeEdgeLabel second_leg;       // ze_ie_j
    TreeEdgeLabel opposite_second;  // ze_je_i (traversed reversed)
    TreeEdgeLabel opposite_first;   // ze_j (traversed reversed)
  };
  std::vector<TwoCell> two_cells;

  std::map<TreeEdgeLabel, std::size_t> label_class; // label -> edge class index

  std::size_t vertex_of_root(int z_index) const;
};

QuotientComplex build_quotient_complex(const std::vector<OrderedGraph> &list,
                                       const Budget *budget = nullptr);

/// Every 2-cell boundary must be a closed edge path through the classes of
/// its four labels. Throws std::logic_error otherwise.
void validate_two_cells(const QuotientComplex &qc);

/// Deterministic BFS tree over the edge classes from the vertex of list[0].
/// seed 0 explores classes in representative-label order; a nonzero seed
/// shuffles the exploration order (the tree stays a spanning tree).
/// Returned indices are in discovery order.
std::vector<std::size_t> spanning_tree(const QuotientComplex &qc, unsigned seed = 0);

struct PresentationBundle {
  Presentation presentation;
  int tree_relations = 0;           // spanning-tree edge = 1
  int identification_relations = 0; // equal labels within a class
  int commutation_relations = 0;    // ze_i . ze_ie_j = ze_j . ze_je_i
};

/// Generators are all tree-edge labels; relations trivialize the spanning
/// tree, equate the labels of each class to its representative, and add one
/// commutation relation per 2-cell.
PresentationBundle emit_presentation(const QuotientComplex &qc, const std::vector<std::size_t> &tree);

} // namespace mcg

#endif
