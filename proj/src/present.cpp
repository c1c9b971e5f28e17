#include "mcg/present.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "mcg/errors.hpp"

namespace mcg {

Word free_reduce(Word w) {
  Word out;
  for (const auto &letter : w) {
    if (!out.empty() && out.back().first == letter.first && out.back().second == -letter.second)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front().first == w.back().first && w.front().second == -w.back().second) {
    w.pop_back();
    w.erase(w.begin());
  }
  return w;
}

Word invert_word(const Word &w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->first, -it->second});
  return out;
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  relators_.reserve(relators.size());
  for (auto &r : relators) {
    for (const auto &[gen, exp] : r) {
      if (gen < 0 || gen >= static_cast<int>(generators_.size()))
        throw std::invalid_argument("relator references undeclared generator");
      if (exp != 1 && exp != -1) throw std::invalid_argument("relator exponents must be +1 or -1");
    }
    relators_.push_back(free_reduce(std::move(r)));
  }
}

std::size_t Presentation::total_relator_length() const {
  std::size_t total = 0;
  for (const auto &r : relators_) total += r.size();
  return total;
}

namespace {

struct SimplState {
  std::vector<std::string> gens;
  std::vector<Word> rels;

  std::size_t total_length() const {
    std::size_t t = 0;
    for (const auto &r : rels) t += r.size();
    return t;
  }

  void drop_empty() {
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word &w) { return w.empty(); }),
               rels.end());
  }

  // Remove generator `gen` replacing each occurrence by `value` (word over the
  // remaining indexing), then reindex.
  void substitute_and_remove(int gen, const Word &value, std::size_t drop_relator) {
    std::vector<Word> next;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (i == drop_relator) continue;
      Word w;
      for (const auto &[g, e] : rels[i]) {
        if (g == gen) {
          const Word &rep = e == 1 ? value : invert_word(value);
          w.insert(w.end(), rep.begin(), rep.end());
        } else {
          w.push_back({g, e});
        }
      }
      next.push_back(cyclic_reduce(std::move(w)));
    }
    for (auto &w : next)
      for (auto &[g, e] : w)
        if (g > gen) --g;
    gens.erase(gens.begin() + gen);
    rels = std::move(next);
    drop_empty();
  }

  // Kill generators equal to the identity (length-1 relators). Returns true
  // if anything changed.
  bool kill_trivial() {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (rels[i].size() == 1) {
        substitute_and_remove(rels[i][0].first, {}, i);
        return true;
      }
    }
    return false;
  }
};

// The word the generator equals when relator `rel_idx` (single occurrence,
// position `pos`) is solved for it.
Word solve_for(const Word &r, std::size_t pos) {
  Word rot(r.begin() + static_cast<std::ptrdiff_t>(pos), r.end());
  rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(pos));
  int e = rot[0].second;
  Word t(rot.begin() + 1, rot.end());
  return e == 1 ? invert_word(t) : t;
}

Word substitute(const Word &w, int gen, const Word &value) {
  Word out;
  for (const auto &[g, e] : w) {
    if (g == gen) {
      const Word &rep = e == 1 ? value : invert_word(value);
      out.insert(out.end(), rep.begin(), rep.end());
    } else {
      out.push_back({g, e});
    }
  }
  return cyclic_reduce(std::move(out));
}

// Exact resulting total length of the elimination, touching only the
// relators that contain the generator.
std::size_t elimination_cost(const SimplState &st, std::size_t rel_idx, int gen,
                             std::size_t current_total) {
  const Word &r = st.rels[rel_idx];
  std::size_t pos = 0;
  while (r[pos].first != gen) ++pos;
  Word value = solve_for(r, pos);
  std::size_t total = current_total - r.size();
  for (std::size_t i = 0; i < st.rels.size(); ++i) {
    if (i == rel_idx) continue;
    bool contains = false;
    for (const auto &[g, e] : st.rels[i])
      if (g == gen) {
        contains = true;
        break;
      }
    if (!contains) continue;
    total -= st.rels[i].size();
    total += substitute(st.rels[i], gen, value).size();
  }
  return total;
}

} // namespace

Presentation tietze_simplify(const Presentation &p) {
  SimplState st{p.generators(), {}};
  for (const auto &r : p.relators()) st.rels.push_back(cyclic_reduce(r));
  st.drop_empty();

  for (;;) {
    if (st.kill_trivial()) continue;

    // Candidate eliminations: a generator occurring exactly once in a relator.
    std::vector<std::vector<int>> counts(st.rels.size(),
                                         std::vector<int>(st.gens.size(), 0));
    for (std::size_t ri = 0; ri < st.rels.size(); ++ri)
      for (const auto &[g, e] : st.rels[ri]) ++counts[ri][static_cast<std::size_t>(g)];
    const std::size_t current_total = st.total_length();

    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    int best_gen = -1;
    std::size_t best_rel = 0;
    for (int gen = 0; gen < static_cast<int>(st.gens.size()); ++gen) {
      for (std::size_t ri = 0; ri < st.rels.size(); ++ri) {
        if (counts[ri][static_cast<std::size_t>(gen)] != 1) continue;
        std::size_t cost = elimination_cost(st, ri, gen, current_total);
        if (cost < best_cost) {
          best_cost = cost;
          best_gen = gen;
          best_rel = ri;
        }
      }
    }
    if (best_gen < 0) break;

    const Word &r = st.rels[best_rel];
    std::size_t pos = 0;
    while (r[pos].first != best_gen) ++pos;
    st.substitute_and_remove(best_gen, solve_for(r, pos), best_rel);
  }

  return Presentation(std::move(st.gens), std::move(st.rels));
}

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<long long> diag;
  std::size_t s = 0;
  while (s < rows && s < cols) {
    // Pivot: entry of least nonzero magnitude in the trailing submatrix.
    std::size_t pi = s, pj = s;
    long long best = 0;
    for (std::size_t i = s; i < rows; ++i)
      for (std::size_t j = s; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(m[s], m[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][s], m[i][pj]);

    bool clean = true;
    for (std::size_t i = s + 1; i < rows && clean; ++i) clean = m[i][s] % m[s][s] == 0;
    for (std::size_t j = s + 1; j < cols && clean; ++j) clean = m[s][j] % m[s][s] == 0;
    if (!clean) {
      // Reduce one offending entry and retry with a smaller pivot.
      for (std::size_t i = s + 1; i < rows; ++i)
        if (m[i][s] % m[s][s] != 0) {
          long long q = m[i][s] / m[s][s];
          for (std::size_t j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
        }
      for (std::size_t j = s + 1; j < cols; ++j)
        if (m[s][j] % m[s][s] != 0) {
          long long q = m[s][j] / m[s][s];
          for (std::size_t i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
        }
      continue;
    }
    for (std::size_t i = s + 1; i < rows; ++i) {
      long long q = m[i][s] / m[s][s];
      if (q)
        for (std::size_t j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
    }
    for (std::size_t j = s + 1; j < cols; ++j) {
      long long q = m[s][j] / m[s][s];
      if (q)
        for (std::size_t i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
    }
    diag.push_back(std::llabs(m[s][s]));
    ++s;
  }

  // Enforce the divisibility chain d1 | d2 | ...
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      long long a = diag[i], b = diag[j];
      long long g = std::gcd(a, b);
      diag[i] = g;
      diag[j] = a / g * b;
    }
  return diag;
}

Abelianization abelianization(const Presentation &p) {
  const std::size_t cols = p.generators().size();
  std::vector<std::vector<long long>> m;
  for (const auto &r : p.relators()) {
    std::vector<long long> row(cols, 0);
    for (const auto &[g, e] : r) row[static_cast<std::size_t>(g)] += e;
    m.push_back(std::move(row));
  }
  auto diag = smith_diagonal(std::move(m));
  Abelianization ab;
  ab.free_rank = static_cast<long long>(cols) - static_cast<long long>(diag.size());
  for (long long d : diag)
    if (d > 1) ab.torsion.push_back(d);
  return ab;
}

namespace {

struct HomSearch {
  const Presentation &p;
  const FiniteGroup &g;
  long long budget;
  long long nodes = 0;

  // -1 = unassigned
  long long run() {
    std::vector<int> images(p.generators().size(), -1);
    return count(images);
  }

  void bump() {
    if (++nodes > budget) throw BudgetExceeded("hom-count search budget exceeded");
  }

  // Evaluates relator; returns nullopt when some letter is unassigned.
  std::optional<int> eval(const Word &w, const std::vector<int> &images) const {
    int acc = 0;
    for (const auto &[gen, exp] : w) {
      int img = images[static_cast<std::size_t>(gen)];
      if (img < 0) return std::nullopt;
      acc = g.mul(acc, exp == 1 ? img : g.inv(img));
    }
    return acc;
  }

  // Forces images pinned by relators with a single unassigned letter whose
  // generator occurs exactly once in that relator. Returns false on
  // contradiction; appends forced generators to `trail`.
  bool force(std::vector<int> &images, std::vector<int> &trail) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const auto &w : p.relators()) {
        int unknown = -1;
        std::size_t unknown_pos = 0;
        int unknown_count = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
          if (images[static_cast<std::size_t>(w[i].first)] < 0) {
            ++unknown_count;
            unknown = w[i].first;
            unknown_pos = i;
          }
        if (unknown_count == 0) {
          if (eval(w, images) != 0) return false;
          continue;
        }
        if (unknown_count != 1) continue;
        bump();
        // prefix . x^e . suffix = 1
        int pre = 0, suf = 0;
        for (std::size_t i = 0; i < unknown_pos; ++i) {
          const auto &[gen, exp] = w[i];
          int img = images[static_cast<std::size_t>(gen)];
          pre = g.mul(pre, exp == 1 ? img : g.inv(img));
        }
        for (std::size_t i = unknown_pos + 1; i < w.size(); ++i) {
          const auto &[gen, exp] = w[i];
          int img = images[static_cast<std::size_t>(gen)];
          suf = g.mul(suf, exp == 1 ? img : g.inv(img));
        }
        int rhs = g.mul(g.inv(pre), g.inv(suf)); // x^e
        int value = w[unknown_pos].second == 1 ? rhs : g.inv(rhs);
        images[static_cast<std::size_t>(unknown)] = value;
        trail.push_back(unknown);
        progress = true;
      }
    }
    return true;
  }

  long long count(std::vector<int> &images) {
    bump();
    std::vector<int> trail;
    if (!force(images, trail)) {
      for (int gen : trail) images[static_cast<std::size_t>(gen)] = -1;
      return 0;
    }
    int first_unknown = -1;
    for (std::size_t i = 0; i < images.size(); ++i)
      if (images[i] < 0) {
        first_unknown = static_cast<int>(i);
        break;
      }
    long long total = 0;
    if (first_unknown < 0) {
      total = 1; // force() already revalidated every fully assigned relator
    } else {
      for (int v = 0; v < g.order(); ++v) {
        images[static_cast<std::size_t>(first_unknown)] = v;
        total += count(images);
      }
      images[static_cast<std::size_t>(first_unknown)] = -1;
    }
    for (int gen : trail) images[static_cast<std::size_t>(gen)] = -1;
    return total;
  }
};

} // namespace

long long count_homs(const Presentation &p, const FiniteGroup &target, long long node_budget) {
  HomSearch search{p, target, node_budget};
  return search.run();
}

EquivalenceReport equivalence_evidence(const Presentation &p1, const Presentation &p2) {
  EquivalenceReport report;
  report.caveat = "matching abelianization and hom counts are evidence, not a proof of isomorphism";
  if (abelianization(p1) != abelianization(p2)) {
    report.consistent = false;
    report.distinguished_by = "abelianization";
    return report;
  }
  for (const auto &target : standard_targets()) {
    long long c1 = count_homs(p1, target);
    long long c2 = count_homs(p2, target);
    report.hom_counts.push_back({target.name, c1, c2});
    if (c1 != c2) {
      report.consistent = false;
      report.distinguished_by = target.name;
      return report;
    }
  }
  report.consistent = true;
  return report;
}

} // namespace mcg
