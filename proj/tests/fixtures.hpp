#ifndef MCG_TESTS_FIXTURES_HPP
#define MCG_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "mcg/fatgraph.hpp"

namespace fixtures {

// Five-edge, three-vertex graph with one loop pair at the middle vertex.
inline mcg::OrderedGraph five_edge() {
  return mcg::parse_graph("(e1,e2);(-e1,e3,-e3,e4,e5),(-e2,-e5,-e4)");
}

// The single degree-2 three-vertex graph for genus 1, no punctures.
inline mcg::OrderedGraph torus_top() {
  return mcg::parse_graph("(e1,e2);(-e1,e3,e4),(-e2,-e3,-e4)");
}

inline mcg::OrderedGraph one_loop_rose() { return mcg::parse_graph("(e1,-e1)"); }

// The six degree-2 three-vertex graphs for the three-punctured disc.
inline std::vector<mcg::OrderedGraph> disc3_tops() {
  return {
      mcg::parse_graph("(e1,e2,e3,e4);(-e1,e5,-e2),(-e3,-e5,-e4)"),
      mcg::parse_graph("(e1,e2,e3,e4);(-e1,-e4,e5),(-e2,-e5,-e3)"),
      mcg::parse_graph("(e1,-e1,e2,e3);(-e2,e4,e5),(-e3,-e5,-e4)"),
      mcg::parse_graph("(e1,e2,-e2,e3);(-e1,e4,e5),(-e3,-e5,-e4)"),
      mcg::parse_graph("(e1,e2,e3,-e3);(-e1,e4,e5),(-e2,-e5,-e4)"),
      mcg::parse_graph("(e1,e2,e3,-e1);(-e2,e4,e5),(-e3,-e5,-e4)"),
  };
}

inline std::size_t pick(std::mt19937 &rng, std::size_t n) { return rng() % n; }

// Uniform-ish valid graph with at most max_k edges: random star sizes, random
// slot assignment, retried until validate() passes.
inline mcg::OrderedGraph random_graph(std::mt19937 &rng, int max_k = 8) {
  for (;;) {
    int k = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(max_k)));
    int total = 2 * k;
    int max_m = (total - 2) / 3;
    int m = static_cast<int>(pick(rng, static_cast<std::size_t>(max_m + 1)));
    std::vector<int> sizes(static_cast<std::size_t>(m), 3);
    int base_size = 2;
    int rem = total - 2 - 3 * m;
    for (int t = 0; t < rem; ++t) {
      std::size_t who = pick(rng, static_cast<std::size_t>(m + 1));
      if (who == 0)
        ++base_size;
      else
        ++sizes[who - 1];
    }
    std::vector<mcg::DirectedEdge> slots;
    for (int id = 1; id <= k; ++id) {
      slots.push_back({id, false});
      slots.push_back({id, true});
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    mcg::Star base(slots.begin(), slots.begin() + base_size);
    std::vector<mcg::Star> others;
    std::size_t at = static_cast<std::size_t>(base_size);
    for (int s : sizes) {
      others.emplace_back(slots.begin() + static_cast<std::ptrdiff_t>(at),
                          slots.begin() + static_cast<std::ptrdiff_t>(at) + s);
      at += static_cast<std::size_t>(s);
    }
    mcg::OrderedGraph g(std::move(base), std::move(others));
    if (mcg::validate(g).ok()) return g;
  }
}

} // namespace fixtures

#endif
