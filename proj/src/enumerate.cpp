#include "mcg/enumerate.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <stdexcept>

#include "mcg/canon.hpp"
#include "mcg/moves.hpp"

namespace mcg {

namespace {

void check_parameters(int genus, int punctures) {
  if (genus < 0 || punctures < 0 || (genus == 0 && punctures == 0))
    throw std::invalid_argument("need g >= 0, p >= 0 and (g, p) != (0, 0)");
}

struct PairingEnumerator {
  std::vector<int> star_sizes;
  int required_cycles;
  const Budget *budget;
  bool reverse_order;

  int total = 0;
  std::vector<int> star_of_slot;
  std::set<OrderedGraph> seen;      // stored forms, to skip rotation duplicates
  std::set<OrderedGraph> canonical; // output set
  long long steps = 0;

  PairingEnumerator(std::vector<int> sizes, int cycles, const Budget *b, bool rev)
      : star_sizes(std::move(sizes)), required_cycles(cycles), budget(b), reverse_order(rev) {
    for (std::size_t s = 0; s < star_sizes.size(); ++s) {
      total += star_sizes[s];
      for (int i = 0; i < star_sizes[s]; ++i) star_of_slot.push_back(static_cast<int>(s));
    }
  }

  void emit(const std::vector<int> &partner) {
    // Edge ids in order of first slot; the first slot of a pair is forward.
    std::vector<DirectedEdge> slot_edge(static_cast<std::size_t>(total));
    int next_id = 1;
    for (int s = 0; s < total; ++s) {
      if (partner[static_cast<std::size_t>(s)] > s) {
        slot_edge[static_cast<std::size_t>(s)] = {next_id, false};
        slot_edge[static_cast<std::size_t>(partner[static_cast<std::size_t>(s)])] = {next_id, true};
        ++next_id;
      }
    }
    Star base;
    std::vector<Star> others(star_sizes.size() - 1);
    int slot = 0;
    for (std::size_t st = 0; st < star_sizes.size(); ++st)
      for (int i = 0; i < star_sizes[st]; ++i, ++slot) {
        if (st == 0)
          base.push_back(slot_edge[static_cast<std::size_t>(slot)]);
        else
          others[st - 1].push_back(slot_edge[static_cast<std::size_t>(slot)]);
      }
    OrderedGraph g(std::move(base), std::move(others));
    if (!seen.insert(g).second) return;
    if (!validate(g).ok()) return;
    if (static_cast<int>(boundary_words(g).cycles.size()) != required_cycles) return;
    canonical.insert(canonical_form_full(g).representative);
  }

  void rec(std::vector<int> &partner, int first_fixed_partner) {
    if (budget && (++steps & 0xfff) == 0) budget->check();
    int i = 0;
    while (i < total && partner[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == total) {
      emit(partner);
      return;
    }
    std::vector<int> candidates;
    for (int j = i + 1; j < total; ++j)
      if (partner[static_cast<std::size_t>(j)] < 0) candidates.push_back(j);
    if (reverse_order) std::reverse(candidates.begin(), candidates.end());
    for (int j : candidates) {
      if (first_fixed_partner >= 0 && j != first_fixed_partner) continue;
      partner[static_cast<std::size_t>(i)] = j;
      partner[static_cast<std::size_t>(j)] = i;
      rec(partner, -1);
      partner[static_cast<std::size_t>(i)] = -1;
      partner[static_cast<std::size_t>(j)] = -1;
    }
  }

  std::set<OrderedGraph> run(int first_fixed_partner = -1) {
    std::vector<int> partner(static_cast<std::size_t>(total), -1);
    rec(partner, first_fixed_partner);
    return std::move(canonical);
  }
};

} // namespace

namespace detail {

std::vector<OrderedGraph> enumerate_shape(const std::vector<int> &star_sizes, int required_cycles,
                                          const Budget *budget, bool reverse_order) {
  int total = 0;
  for (int s : star_sizes) total += s;
  if (total % 2 != 0) return {};

  std::set<OrderedGraph> out;
  if (total >= 12) {
    // Fan out over the partner of slot 0; the merge is a set union, so the
    // result does not depend on completion order.
    std::vector<std::future<std::set<OrderedGraph>>> futures;
    for (int j = 1; j < total; ++j)
      futures.push_back(std::async(std::launch::async, [=]() {
        PairingEnumerator en(star_sizes, required_cycles, budget, reverse_order);
        return en.run(j);
      }));
    for (auto &f : futures) {
      auto part = f.get();
      out.insert(part.begin(), part.end());
    }
  } else {
    PairingEnumerator en(star_sizes, required_cycles, budget, reverse_order);
    out = en.run();
  }
  return {out.begin(), out.end()};
}

} // namespace detail

EnumerationResult list_L(int genus, int punctures, const Budget *budget) {
  check_parameters(genus, punctures);
  const int n = 2 * genus + punctures;
  if (n < 2)
    return {{},
            "n = 2g+p = 1: a three-vertex graph would need base valence 2n-2 = 0 < 2; "
            "the degree-2 stratum is empty and the presentation is trivial"};
  return {detail::enumerate_shape({2 * n - 2, 3, 3}, punctures, budget), ""};
}

std::vector<OrderedGraph> enumerate_degree_at_most(int genus, int punctures, int d, const Budget *budget) {
  check_parameters(genus, punctures);
  if (d < 0 || d > 2) throw std::invalid_argument("degree bound must be 0, 1 or 2");
  const int n = 2 * genus + punctures;
  std::vector<std::vector<int>> shapes;
  shapes.push_back({2 * n}); // rose stratum
  if (n >= 2) {
    if (d >= 1) shapes.push_back({2 * n - 1, 3});
    if (d >= 2) shapes.push_back({2 * n - 2, 4});
    if (d >= 2) shapes.push_back({2 * n - 2, 3, 3});
  }
  std::set<OrderedGraph> out;
  for (const auto &shape : shapes) {
    auto part = detail::enumerate_shape(shape, punctures, budget);
    out.insert(part.begin(), part.end());
  }
  return {out.begin(), out.end()};
}

CrossCheckVerdict cross_check_by_splitting(int genus, int punctures) {
  check_parameters(genus, punctures);
  auto direct = list_L(genus, punctures);

  std::set<OrderedGraph> from_splits;
  auto is_top_shape = [](const OrderedGraph &g) {
    return g.others().size() == 2 && g.others()[0].size() == 3 && g.others()[1].size() == 3;
  };
  const int n = 2 * genus + punctures;
  auto roses = detail::enumerate_shape({2 * n}, punctures);
  for (const auto &rose : roses) {
    for (const auto &s1 : enumerate_splits(rose)) {
      OrderedGraph mid = split(rose, s1);
      for (const auto &s2 : enumerate_splits(mid)) {
        OrderedGraph top = split(mid, s2);
        if (!is_top_shape(top)) continue;
        if (!validate(top).ok()) continue;
        if (static_cast<int>(boundary_words(top).cycles.size()) != punctures) continue;
        from_splits.insert(canonical_form_full(top).representative);
      }
    }
  }

  std::set<OrderedGraph> direct_set(direct.graphs.begin(), direct.graphs.end());
  if (direct_set == from_splits) return {true, ""};

  CrossCheckVerdict v{false, ""};
  for (const auto &g : direct_set)
    if (!from_splits.count(g)) {
      v.detail = "direct enumeration found " + encode(g) + " unreachable by double splitting";
      return v;
    }
  for (const auto &g : from_splits)
    if (!direct_set.count(g)) {
      v.detail = "double splitting produced " + encode(g) + " missed by direct enumeration";
      return v;
    }
  return v;
}

} // namespace mcg
