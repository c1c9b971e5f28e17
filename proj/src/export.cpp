#include "mcg/export.hpp"

#include <sstream>

#include <json.hpp>

namespace mcg {

namespace {

std::string group_name(const PipelineOptions &o) {
  return "M_{" + std::to_string(o.genus) + ",1," + std::to_string(o.punctures) + "}";
}

std::string word_string(const Presentation &p, const Word &w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += p.generators()[static_cast<std::size_t>(w[i].first)];
    if (w[i].second == -1) out += "^-1";
  }
  return out;
}

std::string abelianization_string(const Abelianization &ab) {
  std::string out;
  if (ab.free_rank > 0) {
    out = "Z";
    if (ab.free_rank > 1) out += "^" + std::to_string(ab.free_rank);
  }
  for (long long d : ab.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + std::to_string(d);
  }
  return out.empty() ? "trivial" : out;
}

nlohmann::ordered_json relator_json(const Presentation &p, const Word &w) {
  nlohmann::ordered_json arr = nlohmann::json::array();
  for (const auto &[gen, exp] : w)
    arr.push_back({p.generators()[static_cast<std::size_t>(gen)], exp});
  return arr;
}

} // namespace

std::string run_summary(const PipelineResult &run) {
  std::ostringstream out;
  const auto &p = run.presentation;
  out << group_name(run.options) << ": genus " << run.options.genus << ", one boundary component, "
      << run.options.punctures << " punctures\n";
  if (!run.list.note.empty()) out << "note: " << run.list.note << "\n";
  out << "list size:        " << run.list.graphs.size() << "\n";
  out << "complex:          " << run.complex.vertices.size() << " vertices, " << run.complex.edges.size()
      << " edge classes, " << run.complex.two_cells.size() << " 2-cells\n";
  out << "relations:        " << run.raw.tree_relations << " tree, " << run.raw.identification_relations
      << " identification, " << run.raw.commutation_relations << " commutation\n";
  out << "presentation:     " << p.generators().size() << " generators, " << p.relators().size()
      << " relators" << (run.options.simplify ? " (simplified)" : "") << "\n";
  out << "abelianization:   " << abelianization_string(run.ab) << "\n";
  if (run.cache.hit) out << "cache:            hit\n";
  if (run.cache.corrupt) out << "cache:            corrupt entry ignored and rebuilt\n";
  return out.str();
}

std::string presentation_text(const PipelineResult &run) {
  std::ostringstream out;
  const auto &p = run.presentation;
  out << "# " << group_name(run.options) << "\n";
  out << "generators (" << p.generators().size() << "):";
  for (const auto &g : p.generators()) out << " " << g;
  out << "\n";
  out << "relators (" << p.relators().size() << "):\n";
  for (const auto &r : p.relators()) out << "  " << word_string(p, r) << "\n";
  out << "abelianization: " << abelianization_string(run.ab) << "\n";
  return out.str();
}

std::string presentation_json(const PipelineResult &run) {
  const auto &p = run.presentation;
  nlohmann::ordered_json doc;
  doc["group"] = group_name(run.options);
  doc["genus"] = run.options.genus;
  doc["punctures"] = run.options.punctures;
  doc["seed"] = run.options.seed;
  doc["simplified"] = run.options.simplify;
  doc["list_size"] = run.list.graphs.size();
  doc["complex"] = {{"vertices", run.complex.vertices.size()},
                    {"edge_classes", run.complex.edges.size()},
                    {"two_cells", run.complex.two_cells.size()}};
  doc["relation_counts"] = {{"tree", run.raw.tree_relations},
                            {"identification", run.raw.identification_relations},
                            {"commutation", run.raw.commutation_relations}};
  doc["generators"] = p.generators();
  doc["relators"] = nlohmann::json::array();
  for (const auto &r : p.relators()) doc["relators"].push_back(relator_json(p, r));
  doc["abelianization"] = {{"free_rank", run.ab.free_rank}, {"torsion", run.ab.torsion}};
  return doc.dump(2) + "\n";
}

std::string presentation_gap(const PipelineResult &run) {
  const auto &p = run.presentation;
  std::ostringstream out;
  out << "# " << group_name(run.options) << ": genus " << run.options.genus
      << ", one boundary component, " << run.options.punctures << " punctures\n";
  if (p.generators().empty()) {
    out << "F := FreeGroup( 0 );\n";
  } else {
    out << "F := FreeGroup( ";
    for (std::size_t i = 0; i < p.generators().size(); ++i) {
      if (i) out << ", ";
      out << '"' << p.generators()[i] << '"';
    }
    out << " );\n";
  }
  out << "rels := [";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out << (i ? ", " : " ");
    const Word &w = p.relators()[i];
    if (w.empty()) {
      out << "One(F)";
      continue;
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j) out << "*";
      out << "F." << (w[j].first + 1);
      if (w[j].second == -1) out << "^-1";
    }
  }
  out << (p.relators().empty() ? "];\n" : " ];\n");
  out << "G := F / rels;\n";
  return out.str();
}

std::string presentation_magma(const PipelineResult &run) {
  const auto &p = run.presentation;
  std::ostringstream out;
  out << "// " << group_name(run.options) << ": genus " << run.options.genus
      << ", one boundary component, " << run.options.punctures << " punctures\n";
  if (p.generators().empty()) {
    out << "G := Group< x | x >;\n"; // trivial group
    return out.str();
  }
  out << "G< ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) out << ", ";
    out << p.generators()[i];
  }
  out << " > := Group< ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) out << ", ";
    out << p.generators()[i];
  }
  out << " |";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out << (i ? ", " : " ");
    out << word_string(p, p.relators()[i]);
  }
  out << (p.relators().empty() ? ">;\n" : " >;\n");
  return out.str();
}

std::string complex_json(const PipelineResult &run) {
  nlohmann::ordered_json doc;
  doc["group"] = group_name(run.options);
  doc["genus"] = run.options.genus;
  doc["punctures"] = run.options.punctures;
  doc["list"] = nlohmann::json::array();
  for (const auto &g : run.list.graphs) doc["list"].push_back(encode(g));
  doc["vertices"] = nlohmann::json::array();
  for (const auto &v : run.complex.vertices) doc["vertices"].push_back(encode(v));
  doc["edges"] = nlohmann::json::array();
  for (const auto &e : run.complex.edges) {
    nlohmann::ordered_json edge;
    edge["labels"] = nlohmann::json::array();
    for (const auto &l : e.labels) edge["labels"].push_back(l.name());
    edge["source"] = e.source;
    edge["target"] = e.target;
    doc["edges"].push_back(edge);
  }
  doc["two_cells"] = nlohmann::json::array();
  for (const auto &c : run.complex.two_cells)
    doc["two_cells"].push_back({c.first_leg.name(), c.second_leg.name(), c.opposite_second.name(),
                                c.opposite_first.name()});
  doc["spanning_tree"] = nlohmann::json::array();
  for (std::size_t c : run.tree) doc["spanning_tree"].push_back(run.complex.edges[c].labels[0].name());
  return doc.dump(2) + "\n";
}

} // namespace mcg
