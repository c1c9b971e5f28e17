#ifndef MCG_GROUPS_HPP
#define MCG_GROUPS_HPP

#include <string>
#include <vector>

namespace mcg {

/// A finite group as a multiplication table. Element 0 is the identity.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> table; // table[a][b] = a * b
  std::vector<int> inverse;

  int order() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
};

FiniteGroup cyclic_group(int m);
FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);
FiniteGroup dihedral_group(int m);  // order 2m
FiniteGroup dicyclic_group(int m);  // order 4m; m = 2 is the quaternion group
FiniteGroup symmetric_group(int n); // n <= 5
FiniteGroup alternating_group(int n);

/// Closure, identity, inverse and associativity, checked exhaustively.
bool check_group_axioms(const FiniteGroup &g);

/// The fixed, versioned target list for presentation-equivalence evidence:
/// every group of order <= 12 up to isomorphism, plus S4.
const std::vector<FiniteGroup> &standard_targets();

} // namespace mcg

#endif
