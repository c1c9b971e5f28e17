#include <doctest.h>

#include <array>
#include <functional>

#include <numeric>
#include <random>

#include "mcg/pipeline.hpp"
#include "mcg/present.hpp"

using namespace mcg;

namespace {

Presentation make(std::vector<std::string> gens, std::vector<Word> rels) {
  return Presentation(std::move(gens), std::move(rels));
}

// a b a (b a b)^-1
Presentation braid3() {
  return make({"a", "b"},
              {{{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}});
}

} // namespace

TEST_CASE("construction validates and freely reduces") {
  CHECK_THROWS_AS(make({"a"}, {{{1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(make({"a"}, {{{0, 2}}}), std::invalid_argument);
  Presentation p = make({"a", "b"}, {{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {0, 1}}});
  CHECK(p.relators()[0] == Word{{0, 1}});
}

TEST_CASE("word helpers") {
  Word w{{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  CHECK(free_reduce(w) == Word{{0, 1}, {0, 1}});
  CHECK(cyclic_reduce(Word{{0, 1}, {1, 1}, {0, -1}}) == Word{{1, 1}});
  CHECK(invert_word(Word{{0, 1}, {1, -1}}) == Word{{1, 1}, {0, -1}});
}

TEST_CASE("simplification leaves a free presentation alone") {
  Presentation p = make({"a"}, {});
  CHECK(tietze_simplify(p) == p);
}

TEST_CASE("simplification collapses the torus pipeline output") {
  PipelineOptions o;
  o.genus = 1;
  o.punctures = 0;
  PipelineResult r = run_pipeline(o);
  Presentation s = tietze_simplify(r.raw.presentation);
  CHECK(s.generators().size() == 2);
  REQUIRE(s.relators().size() == 1);
  CHECK(s.relators()[0].size() == 5);
  CHECK(tietze_simplify(s) == s); // idempotent

  Abelianization ab = abelianization(s);
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion.empty());
}

TEST_CASE("abelianization examples") {
  // Braid relation: rank 1, no torsion.
  Abelianization ab = abelianization(braid3());
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion.empty());

  // a^2 = bab, row (1, -2).
  ab = abelianization(make({"a", "b"}, {{{0, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}}));
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion.empty());

  // a^3: torsion 3.
  ab = abelianization(make({"a"}, {{{0, 1}, {0, 1}, {0, 1}}}));
  CHECK(ab.free_rank == 0);
  CHECK(ab.torsion == std::vector<long long>{3});
}

TEST_CASE("smith diagonal satisfies the divisibility chain and minor gcds") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    for (auto &row : m)
      for (auto &x : row) x = static_cast<long long>(rng() % 11) - 5;
    auto diag = smith_diagonal(m);
    for (std::size_t i = 1; i < diag.size(); ++i) {
      CHECK(diag[i - 1] > 0);
      CHECK(diag[i] % diag[i - 1] == 0);
    }
    // Independent check: the product d1...dt equals the gcd of all t x t
    // minors, computed by brute force.
    auto minor_gcd = [&](std::size_t t) {
      long long g = 0;
      std::vector<std::size_t> ri(t), ci(t);
      std::function<void(std::size_t, std::size_t)> rows_rec = [&](std::size_t pos, std::size_t from) {
        if (pos == t) {
          std::function<void(std::size_t, std::size_t)> cols_rec = [&](std::size_t cpos,
                                                                       std::size_t cfrom) {
            if (cpos == t) {
              // determinant of the t x t submatrix by Laplace expansion
              std::function<long long(std::vector<std::size_t>, std::vector<std::size_t>)> det =
                  [&](std::vector<std::size_t> rs, std::vector<std::size_t> cs) -> long long {
                if (rs.size() == 1) return m[rs[0]][cs[0]];
                long long acc = 0;
                for (std::size_t j = 0; j < cs.size(); ++j) {
                  std::vector<std::size_t> sub_rs(rs.begin() + 1, rs.end());
                  std::vector<std::size_t> sub_cs;
                  for (std::size_t jj = 0; jj < cs.size(); ++jj)
                    if (jj != j) sub_cs.push_back(cs[jj]);
                  long long term = m[rs[0]][cs[j]] * det(sub_rs, sub_cs);
                  acc += (j % 2 == 0 ? term : -term);
                }
                return acc;
              };
              g = std::gcd(g, det(ri, ci));
              return;
            }
            for (std::size_t c = cfrom; c < cols; ++c) {
              ci[cpos] = c;
              cols_rec(cpos + 1, c + 1);
            }
          };
          cols_rec(0, 0);
          return;
        }
        for (std::size_t r = from; r < rows; ++r) {
          ri[pos] = r;
          rows_rec(pos + 1, r + 1);
        }
      };
      rows_rec(0, 0);
      return g < 0 ? -g : g;
    };
    long long product = 1;
    for (std::size_t t = 1; t <= diag.size(); ++t) {
      product *= diag[t - 1];
      CHECK(product == minor_gcd(t));
    }
    if (diag.size() < std::min(rows, cols)) CHECK(minor_gcd(diag.size() + 1) == 0);
  }
}

TEST_CASE("hom counts into small groups") {
  FiniteGroup s3 = symmetric_group(3);

  // Independent oracle: all 36 pairs by a literal loop over a hand-rolled
  // composition table.
  auto compose3 = [](std::array<int, 3> p, std::array<int, 3> q) {
    return std::array<int, 3>{p[q[0]], p[q[1]], p[q[2]]};
  };
  std::vector<std::array<int, 3>> elems{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  int expected = 0;
  for (const auto &a : elems)
    for (const auto &b : elems)
      if (compose3(compose3(a, b), a) == compose3(compose3(b, a), b)) ++expected;
  CHECK(expected == 12);
  CHECK(count_homs(braid3(), s3) == 12);

  // A free generator maps anywhere.
  CHECK(count_homs(make({"a"}, {}), s3) == 6);
  CHECK(count_homs(make({"a"}, {}), cyclic_group(5)) == 5);

  // Involutions in S3: identity plus the three transpositions.
  CHECK(count_homs(make({"a"}, {{{0, 1}, {0, 1}}}), s3) == 4);
}

TEST_CASE("hom counts survive simplification of the torus output") {
  PipelineOptions o;
  o.genus = 1;
  o.punctures = 0;
  PipelineResult r = run_pipeline(o);
  Presentation s = tietze_simplify(r.raw.presentation);
  for (const auto &target : standard_targets()) {
    if (target.order() > 24) continue;
    CHECK(count_homs(r.raw.presentation, target) == count_homs(s, target));
  }
}

TEST_CASE("equivalence evidence distinguishes and confirms") {
  EquivalenceReport rep = equivalence_evidence(make({"a"}, {{{0, 1}, {0, 1}}}),
                                               make({"a"}, {{{0, 1}, {0, 1}, {0, 1}}}));
  CHECK_FALSE(rep.consistent);
  CHECK(rep.distinguished_by == "abelianization");

  rep = equivalence_evidence(braid3(), braid3());
  CHECK(rep.consistent);
  CHECK_FALSE(rep.caveat.empty());
}

TEST_CASE("simplification preserves invariants on random presentations") {
  std::mt19937 rng(4242);
  FiniteGroup s3 = symmetric_group(3);
  FiniteGroup c4 = cyclic_group(4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n_gens = 2 + rng() % 3;
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < n_gens; ++i) gens.push_back("g" + std::to_string(i));
    std::vector<Word> rels;
    std::size_t n_rels = rng() % 4;
    for (std::size_t r = 0; r < n_rels; ++r) {
      Word w;
      std::size_t len = 1 + rng() % 6;
      for (std::size_t i = 0; i < len; ++i)
        w.push_back({static_cast<int>(rng() % n_gens), rng() % 2 ? 1 : -1});
      rels.push_back(w);
    }
    Presentation p = make(gens, rels);
    Presentation s = tietze_simplify(p);
    CHECK(abelianization(p) == abelianization(s));
    CHECK(count_homs(p, s3) == count_homs(s, s3));
    CHECK(count_homs(p, c4) == count_homs(s, c4));
    CHECK(tietze_simplify(s) == s);
  }
}
