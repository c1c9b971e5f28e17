#include "mcg/complex.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "mcg/canon.hpp"
#include "mcg/moves.hpp"

namespace mcg {

std::string TreeEdgeLabel::name() const {
  std::string out = "z" + std::to_string(z_index + 1);
  for (int id : path) out += "e" + std::to_string(id);
  return out;
}

CollapseTree build_tree(const OrderedGraph &z) {
  CollapseTree tree;
  tree.nodes.push_back(z);
  for (int i : collapsible_ids(z)) {
    OrderedGraph child = collapse(z, i);
    std::size_t child_idx = tree.nodes.size();
    tree.nodes.push_back(child);
    tree.edges.push_back({{i}, 0, child_idx, i});
    for (int j : collapsible_ids(child)) {
      OrderedGraph grandchild = collapse(child, j);
      std::size_t g_idx = tree.nodes.size();
      tree.nodes.push_back(grandchild);
      tree.edges.push_back({{i, j}, child_idx, g_idx, j});
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end(),
            [](const CollapseTree::Edge &a, const CollapseTree::Edge &b) { return a.path < b.path; });
  return tree;
}

namespace {

struct CanonCache {
  std::map<OrderedGraph, CanonicalForm> forms;
  std::map<OrderedGraph, std::map<int, int>> orbit_mins;

  const CanonicalForm &form(const OrderedGraph &g) {
    auto it = forms.find(g);
    if (it == forms.end()) it = forms.emplace(g, canonical_form_full(g)).first;
    return it->second;
  }

  // Least id in the automorphism orbit, on the canonical representative.
  int orbit_min(const OrderedGraph &g, int canonical_id) {
    auto it = orbit_mins.find(g);
    if (it == orbit_mins.end()) it = orbit_mins.emplace(g, canonical_id_orbit_min(form(g))).first;
    return it->second.at(canonical_id);
  }
};

} // namespace

std::size_t QuotientComplex::vertex_of_root(int z_index) const {
  const OrderedGraph &z = list[static_cast<std::size_t>(z_index)];
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (vertices[v] == z) return v;
  throw std::logic_error("root graph missing from the vertex set");
}

QuotientComplex build_quotient_complex(const std::vector<OrderedGraph> &list, const Budget *budget) {
  QuotientComplex qc;
  qc.list = list;
  CanonCache cache;

  std::map<OrderedGraph, std::size_t> vertex_index;
  auto vertex_of = [&](const OrderedGraph &canonical) {
    auto it = vertex_index.find(canonical);
    if (it == vertex_index.end()) {
      it = vertex_index.emplace(canonical, qc.vertices.size()).first;
      qc.vertices.push_back(canonical);
    }
    return it->second;
  };

  struct ClassData {
    std::vector<TreeEdgeLabel> labels;
    std::size_t source = 0, target = 0;
  };
  std::map<std::pair<std::string, int>, ClassData> classes;

  for (std::size_t zi = 0; zi < list.size(); ++zi) {
    if (budget) budget->check();
    qc.trees.push_back(build_tree(list[zi]));
    const CollapseTree &tree = qc.trees.back();
    vertex_of(cache.form(tree.nodes[0]).representative);
    for (const auto &edge : tree.edges) {
      const OrderedGraph &source = tree.nodes[edge.source];
      const OrderedGraph &target = tree.nodes[edge.target];
      const CanonicalForm &cf = cache.form(source);
      int canonical_id = cf.witness(DirectedEdge{edge.collapsed, false}).id;
      int orbit = cache.orbit_min(source, canonical_id);
      std::pair<std::string, int> key{encode(cf.representative), orbit};

      std::size_t sv = vertex_of(cf.representative);
      std::size_t tv = vertex_of(cache.form(target).representative);
      auto [it, inserted] = classes.try_emplace(key);
      if (inserted) {
        it->second.source = sv;
        it->second.target = tv;
      } else if (it->second.source != sv || it->second.target != tv) {
        throw std::logic_error("edge class members disagree on endpoints");
      }
      it->second.labels.push_back({static_cast<int>(zi), edge.path});
    }
  }

  for (auto &[key, data] : classes) {
    std::sort(data.labels.begin(), data.labels.end());
    qc.edges.push_back({data.labels, data.source, data.target});
  }
  std::sort(qc.edges.begin(), qc.edges.end(),
            [](const QuotientComplex::EdgeClass &a, const QuotientComplex::EdgeClass &b) {
              return a.labels[0] < b.labels[0];
            });
  for (std::size_t c = 0; c < qc.edges.size(); ++c)
    for (const auto &label : qc.edges[c].labels) qc.label_class[label] = c;

  // One 2-cell per unordered pair {i, j} with both double-collapse edges.
  for (std::size_t zi = 0; zi < list.size(); ++zi) {
    std::set<std::vector<int>> paths;
    for (const auto &edge : qc.trees[zi].edges) paths.insert(edge.path);
    int z = static_cast<int>(zi);
    for (const auto &path : paths) {
      if (path.size() != 2) continue;
      int i = path[0], j = path[1];
      if (i >= j) continue;
      if (!paths.count({j, i})) continue;
      qc.two_cells.push_back({TreeEdgeLabel{z, {i}}, TreeEdgeLabel{z, {i, j}}, TreeEdgeLabel{z, {j, i}},
                              TreeEdgeLabel{z, {j}}});
    }
  }
  validate_two_cells(qc);
  return qc;
}

void validate_two_cells(const QuotientComplex &qc) {
  for (const auto &cell : qc.two_cells) {
    const auto &ei = qc.edges[qc.label_class.at(cell.first_leg)];
    const auto &eij = qc.edges[qc.label_class.at(cell.second_leg)];
    const auto &eji = qc.edges[qc.label_class.at(cell.opposite_second)];
    const auto &ej = qc.edges[qc.label_class.at(cell.opposite_first)];
    bool closed = ei.source == ej.source &&          // both leave [z]
                  ei.target == eij.source &&         // through [z^i]
                  ej.target == eji.source &&         // through [z^j]
                  eij.target == eji.target;          // meeting at [z^(i,j)]
    if (!closed) throw std::logic_error("2-cell boundary is not a closed edge path");
  }
}

std::vector<std::size_t> spanning_tree(const QuotientComplex &qc, unsigned seed) {
  std::vector<std::size_t> tree;
  if (qc.vertices.empty()) return tree;

  std::vector<std::size_t> order(qc.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (seed != 0) {
    std::mt19937 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  std::vector<bool> visited(qc.vertices.size(), false);
  std::vector<std::size_t> queue;
  std::size_t root = qc.list.empty() ? 0 : qc.vertex_of_root(0);
  visited[root] = true;
  queue.push_back(root);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::size_t v = queue[qi];
    for (std::size_t c : order) {
      const auto &e = qc.edges[c];
      std::size_t other;
      if (e.source == v)
        other = e.target;
      else if (e.target == v)
        other = e.source;
      else
        continue;
      if (visited[other]) continue;
      visited[other] = true;
      tree.push_back(c);
      queue.push_back(other);
    }
  }
  for (bool v : visited)
    if (!v) throw std::logic_error("quotient 1-skeleton is disconnected");
  return tree;
}

PresentationBundle emit_presentation(const QuotientComplex &qc, const std::vector<std::size_t> &tree) {
  // Generators: every tree-edge label, grouped by list element, single
  // collapses before double ones.
  std::vector<TreeEdgeLabel> labels;
  for (const auto &e : qc.edges) labels.insert(labels.end(), e.labels.begin(), e.labels.end());
  std::sort(labels.begin(), labels.end(), [](const TreeEdgeLabel &a, const TreeEdgeLabel &b) {
    return std::tuple(a.z_index, a.path.size(), a.path) < std::tuple(b.z_index, b.path.size(), b.path);
  });
  std::map<TreeEdgeLabel, int> gen_index;
  std::vector<std::string> names;
  for (const auto &l : labels) {
    gen_index[l] = static_cast<int>(names.size());
    names.push_back(l.name());
  }

  PresentationBundle bundle;
  std::vector<Word> relators;

  // Spanning-tree trivializations, in discovery order.
  for (std::size_t c : tree) {
    relators.push_back({{gen_index.at(qc.edges[c].labels[0]), 1}});
    ++bundle.tree_relations;
  }

  // Class identifications, ordered by the equated (non-representative) label.
  std::vector<std::pair<TreeEdgeLabel, TreeEdgeLabel>> pairs;
  for (const auto &e : qc.edges)
    for (std::size_t i = 1; i < e.labels.size(); ++i) pairs.push_back({e.labels[i], e.labels[0]});
  std::sort(pairs.begin(), pairs.end());
  for (const auto &[member, rep] : pairs) {
    relators.push_back({{gen_index.at(member), 1}, {gen_index.at(rep), -1}});
    ++bundle.identification_relations;
  }

  // Commutation relations: ze_i . ze_ie_j . (ze_je_i)^-1 . (ze_j)^-1.
  for (const auto &cell : qc.two_cells) {
    relators.push_back({{gen_index.at(cell.first_leg), 1},
                        {gen_index.at(cell.second_leg), 1},
                        {gen_index.at(cell.opposite_second), -1},
                        {gen_index.at(cell.opposite_first), -1}});
    ++bundle.commutation_relations;
  }

  bundle.presentation = Presentation(std::move(names), std::move(relators));
  return bundle;
}

} // namespace mcg
