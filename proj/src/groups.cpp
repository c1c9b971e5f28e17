#include "mcg/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mcg {

namespace {

void finish(FiniteGroup &g) {
  const int n = g.order();
  g.inverse.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == 0) g.inverse[static_cast<std::size_t>(a)] = b;
}

FiniteGroup from_permutations(std::string name, std::vector<std::vector<int>> perms) {
  // Element 0 must be the identity; sort so the identity permutation leads.
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  FiniteGroup g;
  g.name = std::move(name);
  const int n = static_cast<int>(perms.size());
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(perms[static_cast<std::size_t>(a)].size());
      for (std::size_t i = 0; i < prod.size(); ++i)
        prod[i] =
            perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][i])];
      g.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index.at(prod);
    }
  finish(g);
  return g;
}

bool is_even_permutation(const std::vector<int> &p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

} // namespace

FiniteGroup cyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  FiniteGroup g;
  g.name = "C" + std::to_string(m);
  g.table.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % m;
  finish(g);
  return g;
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  FiniteGroup g;
  g.name = a.name + "x" + b.name;
  const int n = a.order() * b.order();
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto id = [&](int x, int y) { return x * b.order() + y; };
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          g.table[static_cast<std::size_t>(id(x1, y1))][static_cast<std::size_t>(id(x2, y2))] =
              id(a.mul(x1, x2), b.mul(y1, y2));
  finish(g);
  return g;
}

FiniteGroup dihedral_group(int m) {
  if (m < 1) throw std::invalid_argument("dihedral_group: need m >= 1");
  FiniteGroup g;
  g.name = "D" + std::to_string(m);
  const int n = 2 * m;
  // element i + m*j  <->  r^i s^j with s r s = r^-1
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot = (i + (j ? m - k : k)) % m;
          int refl = j ^ l;
          g.table[static_cast<std::size_t>(i + m * j)][static_cast<std::size_t>(k + m * l)] = rot + m * refl;
        }
  finish(g);
  return g;
}

FiniteGroup dicyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("dicyclic_group: need m >= 1");
  FiniteGroup g;
  g.name = m == 2 ? "Q8" : "Dic" + std::to_string(m);
  const int n = 4 * m;
  // element i + 2m*j  <->  a^i x^j with a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1
  g.table.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < 2 * m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2 * m; ++k)
        for (int l = 0; l < 2; ++l) {
          int rot = (i + (j ? 2 * m - k : k)) % (2 * m);
          int x = j + l;
          if (x == 2) {
            rot = (rot + m) % (2 * m);
            x = 0;
          }
          g.table[static_cast<std::size_t>(i + 2 * m * j)][static_cast<std::size_t>(k + 2 * m * l)] =
              rot + 2 * m * x;
        }
  finish(g);
  return g;
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric_group: need 1 <= n <= 5");
  return from_permutations("S" + std::to_string(n), all_permutations(n));
}

FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("alternating_group: need 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  for (auto &p : all_permutations(n))
    if (is_even_permutation(p)) perms.push_back(p);
  return from_permutations("A" + std::to_string(n), std::move(perms));
}

bool check_group_axioms(const FiniteGroup &g) {
  const int n = g.order();
  if (n == 0 || static_cast<int>(g.inverse.size()) != n) return false;
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.inv(a) < 0 || g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0) return false;
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) < 0 || g.mul(a, b) >= n) return false;
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    }
  }
  return true;
}

const std::vector<FiniteGroup> &standard_targets() {
  static const std::vector<FiniteGroup> targets = [] {
    std::vector<FiniteGroup> t;
    t.push_back(cyclic_group(1));
    t.push_back(cyclic_group(2));
    t.push_back(cyclic_group(3));
    t.push_back(cyclic_group(4));
    t.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
    t.push_back(cyclic_group(5));
    t.push_back(cyclic_group(6));
    t.push_back(symmetric_group(3));
    t.push_back(cyclic_group(7));
    t.push_back(cyclic_group(8));
    t.push_back(direct_product(cyclic_group(4), cyclic_group(2)));
    t.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)));
    t.push_back(dihedral_group(4));
    t.push_back(dicyclic_group(2)); // Q8
    t.push_back(cyclic_group(9));
    t.push_back(direct_product(cyclic_group(3), cyclic_group(3)));
    t.push_back(cyclic_group(10));
    t.push_back(dihedral_group(5));
    t.push_back(cyclic_group(11));
    t.push_back(cyclic_group(12));
    t.push_back(direct_product(cyclic_group(6), cyclic_group(2)));
    t.push_back(dihedral_group(6));
    t.push_back(alternating_group(4));
    t.push_back(dicyclic_group(3));
    t.push_back(symmetric_group(4));
    return t;
  }();
  return targets;
}

} // namespace mcg
