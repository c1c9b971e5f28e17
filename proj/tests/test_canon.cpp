#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mcg/canon.hpp"
#include "mcg/moves.hpp"
#include "oracles.hpp"

using namespace mcg;

namespace {

Relabeling make(const std::map<int, std::pair<int, bool>> &entries) {
  std::map<int, DirectedEdge> images;
  for (const auto &[id, img] : entries) images[id] = {img.first, img.second};
  return Relabeling(images);
}

Relabeling random_relabeling(std::mt19937 &rng, const std::vector<int> &ids) {
  std::vector<int> perm = ids;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<int, DirectedEdge> images;
  for (std::size_t i = 0; i < ids.size(); ++i) images[ids[i]] = {perm[i], rng() % 2 == 0};
  return Relabeling(images);
}

} // namespace

TEST_CASE("relabeling group laws") {
  std::mt19937 rng(7);
  std::vector<int> ids{1, 2, 3, 4, 5};
  for (int trial = 0; trial < 50; ++trial) {
    Relabeling a = random_relabeling(rng, ids);
    Relabeling b = random_relabeling(rng, ids);
    Relabeling id = Relabeling::identity(ids);
    CHECK(compose(a, a.inverse()) == id);
    CHECK(compose(a.inverse(), a) == id);
    for (int e = 1; e <= 5; ++e) {
      DirectedEdge fwd{e, false};
      CHECK(compose(a, b)(fwd) == a(b(fwd)));
      CHECK(a(fwd.bar()) == a(fwd).bar()); // commutes with the involution
    }
  }
}

TEST_CASE("identity relabeling fixes every graph") {
  OrderedGraph g = fixtures::five_edge();
  CHECK(apply(Relabeling::identity(g.edge_ids()), g) == g);
  CHECK_THROWS_AS(apply(Relabeling::identity({1, 2}), g), DomainError);
}

TEST_CASE("the documented relabeling carries one torus collapse to the other") {
  OrderedGraph z = fixtures::torus_top();
  OrderedGraph z1 = collapse(z, 1);
  OrderedGraph z2 = collapse(z, 2);
  Relabeling g21 = make({{1, {3, false}}, {3, {4, true}}, {4, {2, true}}, {2, {1, false}}});
  CHECK(apply(g21, z2) == z1);

  OrderedGraph z3 = collapse(z, 3);
  OrderedGraph z4 = collapse(z, 4);
  Relabeling g43 = make({{1, {1, false}}, {2, {2, false}}, {3, {4, true}}, {4, {3, false}}});
  CHECK(apply(g43, z4) == z3);
}

TEST_CASE("flipping a loop edge swaps its two halves in the star") {
  OrderedGraph g = fixtures::five_edge(); // loop e3 at the middle vertex
  Relabeling flip = make({{1, {1, false}}, {2, {2, false}}, {3, {3, true}}, {4, {4, false}}, {5, {5, false}}});
  OrderedGraph flipped = apply(flip, g);
  CHECK(flipped == parse_graph("(e1,e2);(-e1,-e3,e3,e4,e5),(-e2,-e5,-e4)"));
  CHECK(apply(flip, flipped) == g); // involution
}

TEST_CASE("canonical forms identify the torus collapse orbits") {
  OrderedGraph z = fixtures::torus_top();
  CHECK(canonical_form(collapse(z, 1)).first == canonical_form(collapse(z, 2)).first);
  CHECK(canonical_form(collapse(z, 3)).first == canonical_form(collapse(z, 4)).first);
  CHECK(canonical_form(collapse(z, 1)).first != canonical_form(collapse(z, 3)).first);

  // All five double collapses land in one orbit.
  std::vector<std::pair<int, int>> pairs{{1, 3}, {1, 4}, {1, 2}, {3, 1}, {3, 2}};
  std::set<OrderedGraph> reps;
  for (auto [i, j] : pairs) reps.insert(canonical_form(collapse(collapse(z, i), j)).first);
  CHECK(reps.size() == 1);
}

TEST_CASE("canonicalization is invariant under random relabelings") {
  std::mt19937 rng(20250102);
  for (int trial = 0; trial < 300; ++trial) {
    OrderedGraph g = fixtures::random_graph(rng);
    CanonicalForm cf = canonical_form_full(g);
    CHECK(apply(cf.witness, g) == cf.representative); // witness is sound
    Relabeling r = random_relabeling(rng, g.edge_ids());
    CHECK(canonical_form(apply(r, g)).first == cf.representative);
  }
}

TEST_CASE("canonical search agrees with full exhaustion up to five edges") {
  std::mt19937 rng(20250103);
  for (int trial = 0; trial < 60; ++trial) {
    OrderedGraph g = fixtures::random_graph(rng, 5);
    CHECK(canonical_form(g).first == oracles::brute_canonical(g));
  }
}

TEST_CASE("orbit witnesses are sound and complete at small scale") {
  std::mt19937 rng(20250104);
  for (int trial = 0; trial < 60; ++trial) {
    OrderedGraph a = fixtures::random_graph(rng, 5);
    OrderedGraph b = trial % 2 == 0 ? apply(random_relabeling(rng, a.edge_ids()), a)
                                    : fixtures::random_graph(rng, 5);
    auto witness = orbit_witness(a, b);
    auto reference = oracles::brute_witness(a, b);
    CHECK(witness.has_value() == reference.has_value());
    if (witness) CHECK(apply(*witness, b) == a);
  }
}

TEST_CASE("orbit invariants match whenever a witness exists") {
  std::mt19937 rng(20250105);
  for (int trial = 0; trial < 100; ++trial) {
    OrderedGraph a = fixtures::random_graph(rng, 6);
    OrderedGraph b = apply(random_relabeling(rng, a.edge_ids()), a);
    REQUIRE(orbit_witness(a, b).has_value());
    GraphInvariants ia = invariants(a), ib = invariants(b);
    CHECK(ia.n == ib.n);
    CHECK(ia.p == ib.p);
    CHECK(ia.degree == ib.degree);
    auto lengths = [](const OrderedGraph &g) {
      std::multiset<std::size_t> out;
      for (const auto &c : boundary_words(g).cycles) out.insert(c.size());
      return out;
    };
    CHECK(lengths(a) == lengths(b));
  }
}

TEST_CASE("graphs with different boundary multisets are never in one orbit") {
  // One boundary cycle of length 2 against cycle lengths {1, 3}.
  OrderedGraph a = parse_graph("(e1,e2,-e1,-e2)");
  OrderedGraph b = parse_graph("(e1,e2,-e2,-e1)");
  CHECK_FALSE(orbit_witness(a, b).has_value());
}

TEST_CASE("automorphism groups of the fixtures") {
  // The rose's flip moves (e1,-e1) to (-e1,e1): only the identity survives.
  auto rose_auts = automorphisms(fixtures::one_loop_rose());
  CHECK(rose_auts.size() == 1);
  CHECK(rose_auts[0] == Relabeling::identity({1}));

  // Regression pin, confirmed by exhaustion over 5! * 2^5 relabelings.
  CHECK(automorphisms(fixtures::disc3_tops()[0]).size() == 1);

  // Exhaustive stabilizer count agrees on small random graphs.
  std::mt19937 rng(20250106);
  for (int trial = 0; trial < 25; ++trial) {
    OrderedGraph g = fixtures::random_graph(rng, 4);
    std::size_t expected = 0;
    for (const auto &r : oracles::all_relabelings(g.edge_ids()))
      if (apply(r, g) == g) ++expected;
    auto auts = automorphisms(g);
    CHECK(auts.size() == expected);
    for (const auto &a : auts) CHECK(apply(a, g) == g);
  }
}

TEST_CASE("torus-collapse witness composition matches the class structure") {
  // The witness z1^4 <- z2^2 of the three-punctured disc run extends
  // e1->e1, e3->-e3, e4->-e5, e5->-e2.
  OrderedGraph z1 = fixtures::disc3_tops()[0];
  OrderedGraph z2 = fixtures::disc3_tops()[1];
  OrderedGraph z1_4 = collapse(z1, 4);
  OrderedGraph z2_2 = collapse(z2, 2);
  Relabeling documented =
      make({{1, {1, false}}, {3, {3, true}}, {4, {5, true}}, {5, {2, true}}});
  CHECK(apply(documented, z2_2) == z1_4);
  auto witness = orbit_witness(z1_4, z2_2);
  REQUIRE(witness.has_value());
  CHECK(apply(*witness, z2_2) == z1_4);
}

TEST_CASE("relabeling textual form") {
  Relabeling g21 = make({{1, {3, false}}, {2, {1, false}}, {3, {4, true}}, {4, {2, true}}});
  CHECK(g21.to_string() == "e1->e3, e2->e1, e3->-e4, e4->-e2");
}
