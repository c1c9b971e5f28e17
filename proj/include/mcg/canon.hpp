#ifndef MCG_CANON_HPP
#define MCG_CANON_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcg/fatgraph.hpp"

namespace mcg {

/// An edge relabeling with orientation flips: for each edge id, the image of
/// its forward direction. Commutes with bar() by construction. Domains are
/// explicit id sets, so relabelings act on collapsed graphs whose ids are
/// not contiguous.
class Relabeling {
public:
  Relabeling() = default;
  explicit Relabeling(std::map<int, DirectedEdge> images) : images_(std::move(images)) {}

  static Relabeling identity(const std::vector<int> &ids);

  bool defined_on(int id) const { return images_.count(id) != 0; }
  const std::map<int, DirectedEdge> &images() const { return images_; }

  /// Image of a directed edge; throws DomainError if the id is unmapped.
  DirectedEdge operator()(DirectedEdge e) const;

  Relabeling inverse() const;

  /// `e1->e3, e3->-e4, ...` in ascending id order.
  std::string to_string() const;

  friend bool operator==(const Relabeling &, const Relabeling &) = default;

private:
  std::map<int, DirectedEdge> images_;
};

/// g after h: apply(compose(g, h), x) == apply(g, apply(h, x)).
Relabeling compose(const Relabeling &g, const Relabeling &h);

/// Relabel every directed edge of every star, then renormalize rotations and
/// the non-base star order.
OrderedGraph apply(const Relabeling &g, const OrderedGraph &graph);

/// Result of canonicalization: the orbit representative with the least
/// textual encoding, one witness mapping the input onto it, and the complete
/// list of relabelings that achieve it (their count is the stabilizer order).
struct CanonicalForm {
  OrderedGraph representative;
  Relabeling witness;
  std::vector<Relabeling> minimizers;
};

/// Backtracking search over label assignments, pruned against the best
/// encoding found so far. Branches only over the placement order and
/// rotation of the non-base stars; id assignment is forced greedily.
CanonicalForm canonical_form_full(const OrderedGraph &g);

std::pair<OrderedGraph, Relabeling> canonical_form(const OrderedGraph &g);

/// The full stabilizer of g under relabelings of its own id set.
std::vector<Relabeling> automorphisms(const OrderedGraph &g);

/// For each id of the canonical representative, the least id in its orbit
/// under the representative's automorphism group.
std::map<int, int> canonical_id_orbit_min(const CanonicalForm &cf);

/// Some relabeling g with apply(g, g2) == g1, or nullopt when the graphs are
/// not in the same orbit.
std::optional<Relabeling> orbit_witness(const OrderedGraph &g1, const OrderedGraph &g2);

} // namespace mcg

#endif
