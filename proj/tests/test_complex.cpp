#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "mcg/canon.hpp"
#include "mcg/complex.hpp"
#include "mcg/enumerate.hpp"
#include "mcg/pipeline.hpp"

using namespace mcg;

namespace {

std::set<std::vector<int>> paths_of(const CollapseTree &tree) {
  std::set<std::vector<int>> out;
  for (const auto &e : tree.edges) out.insert(e.path);
  return out;
}

const OrderedGraph &node_at(const CollapseTree &tree, const std::vector<int> &path) {
  for (const auto &e : tree.edges)
    if (e.path == path) return tree.nodes[e.target];
  throw std::runtime_error("no such tree edge");
}

} // namespace

TEST_CASE("collapse tree of the torus-top graph") {
  CollapseTree tree = build_tree(fixtures::torus_top());
  std::set<std::vector<int>> expected{{1},    {2},    {3},    {4},    {1, 2}, {1, 3}, {1, 4},
                                      {2, 1}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {4, 1}, {4, 2}};
  CHECK(paths_of(tree) == expected);
  CHECK(node_at(tree, {1}) == parse_graph("(e3,e4,e2);(-e2,-e3,-e4)"));
  CHECK(node_at(tree, {1, 3}) == parse_graph("(-e4,-e2,e4,e2)"));
}

TEST_CASE("collapse tree of the first three-punctured-disc graph") {
  CollapseTree tree = build_tree(fixtures::disc3_tops()[0]);
  std::set<std::vector<int>> expected{
      {1},    {2},    {3},    {4},    {5},    {1, 5}, {1, 3}, {1, 4}, {2, 5}, {2, 3}, {2, 4},
      {3, 1}, {3, 2}, {3, 5}, {4, 1}, {4, 2}, {4, 5}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
  CHECK(paths_of(tree) == expected);
  int level1 = 0, level2 = 0;
  for (const auto &e : tree.edges) (e.path.size() == 1 ? level1 : level2)++;
  CHECK(level1 == 5);
  CHECK(level2 == 16);
}

TEST_CASE("torus quotient complex") {
  auto L = list_L(1, 0).graphs;
  QuotientComplex qc = build_quotient_complex(L);
  CHECK(qc.vertices.size() == 4);
  CHECK(qc.edges.size() == 9);
  CHECK(qc.two_cells.size() == 5);
  validate_two_cells(qc);

  // The documented identifications of double-collapse edges.
  auto same_class = [&](std::vector<int> a, std::vector<int> b) {
    return qc.label_class.at({0, a}) == qc.label_class.at({0, b});
  };
  CHECK(same_class({2, 1}, {1, 3}));
  CHECK(same_class({2, 3}, {1, 4}));
  CHECK(same_class({2, 4}, {1, 2}));
  CHECK(same_class({4, 1}, {3, 1}));
  CHECK(same_class({4, 2}, {3, 2}));
  // Single collapses stay distinct: the root has no splitting symmetry.
  CHECK(!same_class({1}, {2}));
  CHECK(!same_class({3}, {4}));

  std::vector<std::size_t> tree = spanning_tree(qc);
  REQUIRE(tree.size() == 3);
  std::set<std::vector<int>> reps;
  for (std::size_t c : tree) reps.insert(qc.edges[c].labels[0].path);
  CHECK(reps == std::set<std::vector<int>>{{1}, {3}, {1, 2}});
}

TEST_CASE("torus presentation counts and relators") {
  auto L = list_L(1, 0).graphs;
  QuotientComplex qc = build_quotient_complex(L);
  PresentationBundle bundle = emit_presentation(qc, spanning_tree(qc));
  const Presentation &p = bundle.presentation;
  CHECK(p.generators().size() == 14);
  CHECK(p.relators().size() == 13);
  CHECK(bundle.tree_relations == 3);
  CHECK(bundle.identification_relations == 5);
  CHECK(bundle.commutation_relations == 5);

  auto gen = [&](const std::string &name) {
    for (std::size_t i = 0; i < p.generators().size(); ++i)
      if (p.generators()[i] == name) return static_cast<int>(i);
    FAIL("missing generator ", name);
    return -1;
  };
  std::set<Word> relators(p.relators().begin(), p.relators().end());
  CHECK(relators.count({{gen("z1e1"), 1}}));
  CHECK(relators.count({{gen("z1e3"), 1}}));
  CHECK(relators.count({{gen("z1e1e2"), 1}}));
  CHECK(relators.count({{gen("z1e2e1"), 1}, {gen("z1e1e3"), -1}}));
  CHECK(relators.count({{gen("z1e4e2"), 1}, {gen("z1e3e2"), -1}}));
  CHECK(relators.count(
      {{gen("z1e1"), 1}, {gen("z1e1e2"), 1}, {gen("z1e2e1"), -1}, {gen("z1e2"), -1}}));
}

TEST_CASE("three-punctured-disc quotient identifications span different roots") {
  auto L = list_L(0, 3).graphs;
  QuotientComplex qc = build_quotient_complex(L);

  // Locate the two known roots inside the canonical list.
  auto find_index = [&](const OrderedGraph &g) {
    for (std::size_t i = 0; i < L.size(); ++i)
      if (L[i] == g) return static_cast<int>(i);
    FAIL("root not found in the list");
    return -1;
  };
  int idx1 = find_index(fixtures::disc3_tops()[0]);
  int idx2 = find_index(fixtures::disc3_tops()[1]);
  CHECK(qc.label_class.at({idx2, {2, 1}}) == qc.label_class.at({idx1, {4, 1}}));
  validate_two_cells(qc);

  std::vector<std::size_t> tree = spanning_tree(qc);
  CHECK(tree.size() + 1 == qc.vertices.size());
}

TEST_CASE("complex vertices coincide with the degree strata") {
  for (auto [g, p] : std::vector<std::pair<int, int>>{{1, 0}, {0, 3}, {0, 2}}) {
    auto L = list_L(g, p).graphs;
    QuotientComplex qc = build_quotient_complex(L);
    auto strata = enumerate_degree_at_most(g, p, 2);
    std::set<OrderedGraph> vs(qc.vertices.begin(), qc.vertices.end());
    std::set<OrderedGraph> ss(strata.begin(), strata.end());
    CHECK(vs == ss);
  }
}

TEST_CASE("seeded spanning trees stay spanning and leave the abelianization alone") {
  auto L = list_L(0, 3).graphs;
  QuotientComplex qc = build_quotient_complex(L);
  auto base_tree = spanning_tree(qc);
  Abelianization reference = abelianization(emit_presentation(qc, base_tree).presentation);
  for (unsigned seed : {1u, 2u, 3u}) {
    auto tree = spanning_tree(qc, seed);
    CHECK(tree.size() == base_tree.size());
    CHECK(abelianization(emit_presentation(qc, tree).presentation) == reference);
  }
}

TEST_CASE("a single-vertex complex has an empty tree and presentation") {
  QuotientComplex qc;
  qc.vertices.push_back(fixtures::one_loop_rose());
  CHECK(spanning_tree(qc).empty());
  PresentationBundle bundle = emit_presentation(qc, {});
  CHECK(bundle.presentation.generators().empty());
  CHECK(bundle.presentation.relators().empty());
}

TEST_CASE("the degenerate pipeline emits the trivial presentation") {
  PipelineOptions o;
  o.genus = 0;
  o.punctures = 1;
  PipelineResult r = run_pipeline(o);
  CHECK(r.list.graphs.empty());
  CHECK(r.complex.vertices.empty());
  CHECK(r.tree.empty());
  CHECK(r.presentation.generators().empty());
  CHECK(r.presentation.relators().empty());
  CHECK(r.ab.free_rank == 0);
  CHECK(r.ab.torsion.empty());
}
