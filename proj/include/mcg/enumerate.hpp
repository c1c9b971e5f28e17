#ifndef MCG_ENUMERATE_HPP
#define MCG_ENUMERATE_HPP

#include <string>
#include <vector>

#include "mcg/budget.hpp"
#include "mcg/fatgraph.hpp"

namespace mcg {

struct EnumerationResult {
  std::vector<OrderedGraph> graphs; // canonical representatives, sorted by encoding
  std::string note;                 // nonempty when the parameters are degenerate
};

/// The list of degree-2, three-vertex ordered graphs for (g, p): base star of
/// length 2n-2 (n = 2g+p), two trivalent non-base stars, connected,
/// bridge-free, exactly p boundary cycles — one canonical representative per
/// relabeling orbit. Throws std::invalid_argument for g < 0, p < 0 or
/// (g, p) = (0, 0); n = 1 yields an empty list with a diagnosis.
EnumerationResult list_L(int genus, int punctures, const Budget *budget = nullptr);

/// All canonical orbit representatives of degree <= d (d <= 2) for (g, p):
/// the rose stratum, the one- and two-split strata.
std::vector<OrderedGraph> enumerate_degree_at_most(int genus, int punctures, int d,
                                                   const Budget *budget = nullptr);

struct CrossCheckVerdict {
  bool equal = false;
  std::string detail;
};

/// Independent generator for list_L: apply split twice to every rose orbit in
/// all admissible ways, keep the results with two trivalent non-base stars,
/// canonicalize, and compare with the direct enumeration.
CrossCheckVerdict cross_check_by_splitting(int genus, int punctures);

namespace detail {

/// Exhaustive generation for one star-size shape (sizes[0] = base): every
/// pairing of the directed-edge slots, filtered by validity and boundary
/// cycle count, deduplicated by canonical form. `reverse_order` flips the
/// pairing search order; the output is independent of it.
std::vector<OrderedGraph> enumerate_shape(const std::vector<int> &star_sizes, int required_cycles,
                                          const Budget *budget = nullptr, bool reverse_order = false);

} // namespace detail

} // namespace mcg

#endif
