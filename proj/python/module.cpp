#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "mcg/canon.hpp"
#include "mcg/export.hpp"
#include "mcg/moves.hpp"
#include "mcg/pipeline.hpp"

namespace py = pybind11;

namespace {

mcg::OrderedGraph graph_of(const std::string &enc) { return mcg::parse_graph(enc); }

mcg::Presentation presentation_of(const std::vector<std::string> &generators,
                                  const std::vector<std::vector<std::pair<std::string, int>>> &relators) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < generators.size(); ++i) index[generators[i]] = static_cast<int>(i);
  std::vector<mcg::Word> words;
  for (const auto &r : relators) {
    mcg::Word w;
    for (const auto &[name, exp] : r) {
      auto it = index.find(name);
      if (it == index.end()) throw std::invalid_argument("unknown generator " + name);
      w.push_back({it->second, exp});
    }
    words.push_back(std::move(w));
  }
  return mcg::Presentation(generators, std::move(words));
}

std::vector<std::vector<std::pair<std::string, int>>> relators_out(const mcg::Presentation &p) {
  std::vector<std::vector<std::pair<std::string, int>>> out;
  for (const auto &r : p.relators()) {
    std::vector<std::pair<std::string, int>> w;
    for (const auto &[gen, exp] : r) w.push_back({p.generators()[static_cast<std::size_t>(gen)], exp});
    out.push_back(std::move(w));
  }
  return out;
}

mcg::PipelineResult run(int genus, int punctures, unsigned seed, bool simplify) {
  mcg::PipelineOptions o;
  o.genus = genus;
  o.punctures = punctures;
  o.seed = seed;
  o.simplify = simplify;
  o.cache_dir = ""; // bindings never touch the filesystem
  return mcg::run_pipeline(o);
}

py::dict presentation_dict(const mcg::PipelineResult &r) {
  py::dict out;
  out["group"] = "M_{" + std::to_string(r.options.genus) + ",1," + std::to_string(r.options.punctures) + "}";
  out["list"] = [&] {
    std::vector<std::string> encs;
    for (const auto &g : r.list.graphs) encs.push_back(mcg::encode(g));
    return encs;
  }();
  out["vertices"] = r.complex.vertices.size();
  out["edge_classes"] = r.complex.edges.size();
  out["two_cells"] = r.complex.two_cells.size();
  out["relation_counts"] =
      py::make_tuple(r.raw.tree_relations, r.raw.identification_relations, r.raw.commutation_relations);
  out["generators"] = r.presentation.generators();
  out["relators"] = relators_out(r.presentation);
  out["abelianization"] = py::make_tuple(r.ab.free_rank, r.ab.torsion);
  return out;
}

} // namespace

PYBIND11_MODULE(mcgpres, m) {
  m.doc() = "Presentations of mapping-class groups of surfaces with one boundary component, "
            "computed from ordered fat graphs.";

  m.def("validate", [](const std::string &enc) {
    auto r = mcg::validate(graph_of(enc));
    return py::make_tuple(r.ok(), r.detail);
  });
  m.def("boundary_words", [](const std::string &enc) {
    auto bd = mcg::boundary_words(graph_of(enc));
    std::vector<std::string> w0;
    for (const auto &e : bd.w0) w0.push_back(mcg::to_string(e));
    std::vector<std::vector<std::string>> cycles;
    for (const auto &c : bd.cycles) {
      std::vector<std::string> cycle;
      for (const auto &e : c) cycle.push_back(mcg::to_string(e));
      cycles.push_back(std::move(cycle));
    }
    return py::make_tuple(w0, cycles);
  });
  m.def("invariants", [](const std::string &enc) {
    auto inv = mcg::invariants(graph_of(enc));
    py::dict d;
    d["n"] = inv.n;
    d["p"] = inv.p;
    d["genus"] = inv.genus;
    d["degree"] = inv.degree;
    return d;
  });
  m.def("collapse",
        [](const std::string &enc, int id) { return mcg::encode(mcg::collapse(graph_of(enc), id)); });
  m.def(
      "split",
      [](const std::string &enc, std::size_t star, std::size_t arc_start, std::size_t arc_len,
         const std::string &base_side) {
        mcg::SplitSpec spec{star, arc_start, arc_len, mcg::SplitSpec::BaseSide::none};
        if (base_side == "arc")
          spec.base_side = mcg::SplitSpec::BaseSide::arc;
        else if (base_side == "complement")
          spec.base_side = mcg::SplitSpec::BaseSide::complement;
        else if (!base_side.empty())
          throw std::invalid_argument("base_side must be '', 'arc' or 'complement'");
        return mcg::encode(mcg::split(graph_of(enc), spec));
      },
      py::arg("graph"), py::arg("star"), py::arg("arc_start"), py::arg("arc_len"),
      py::arg("base_side") = "");
  m.def("canonical_form", [](const std::string &enc) {
    auto [rep, witness] = mcg::canonical_form(graph_of(enc));
    return py::make_tuple(mcg::encode(rep), witness.to_string());
  });
  m.def("orbit_witness", [](const std::string &a, const std::string &b) -> std::optional<std::string> {
    auto w = mcg::orbit_witness(graph_of(a), graph_of(b));
    if (!w) return std::nullopt;
    return w->to_string();
  });
  m.def("automorphism_count",
        [](const std::string &enc) { return mcg::automorphisms(graph_of(enc)).size(); });

  m.def(
      "list_l",
      [](int genus, int punctures) {
        auto r = mcg::list_L(genus, punctures);
        std::vector<std::string> out;
        for (const auto &g : r.graphs) out.push_back(mcg::encode(g));
        return py::make_tuple(out, r.note);
      },
      py::arg("genus"), py::arg("punctures"));
  m.def(
      "present",
      [](int genus, int punctures, unsigned seed, bool simplify) {
        return presentation_dict(run(genus, punctures, seed, simplify));
      },
      py::arg("genus"), py::arg("punctures"), py::arg("seed") = 0, py::arg("simplify") = false);
  m.def(
      "export_presentation",
      [](int genus, int punctures, const std::string &format, unsigned seed, bool simplify) {
        auto r = run(genus, punctures, seed, simplify);
        if (format == "json") return mcg::presentation_json(r);
        if (format == "gap") return mcg::presentation_gap(r);
        if (format == "magma") return mcg::presentation_magma(r);
        if (format == "text") return mcg::presentation_text(r);
        throw std::invalid_argument("format must be text, json, gap or magma");
      },
      py::arg("genus"), py::arg("punctures"), py::arg("format") = "text", py::arg("seed") = 0,
      py::arg("simplify") = false);

  m.def("simplify_presentation",
        [](const std::vector<std::string> &generators,
           const std::vector<std::vector<std::pair<std::string, int>>> &relators) {
          mcg::Presentation s = mcg::tietze_simplify(presentation_of(generators, relators));
          return py::make_tuple(s.generators(), relators_out(s));
        });
  m.def("abelianization", [](const std::vector<std::string> &generators,
                             const std::vector<std::vector<std::pair<std::string, int>>> &relators) {
    auto ab = mcg::abelianization(presentation_of(generators, relators));
    return py::make_tuple(ab.free_rank, ab.torsion);
  });
  m.def("count_homs", [](const std::vector<std::string> &generators,
                         const std::vector<std::vector<std::pair<std::string, int>>> &relators,
                         const std::string &target) {
    for (const auto &g : mcg::standard_targets())
      if (g.name == target) return mcg::count_homs(presentation_of(generators, relators), g);
    throw std::invalid_argument("unknown target group " + target);
  });
  m.def("target_names", [] {
    std::vector<std::string> names;
    for (const auto &g : mcg::standard_targets()) names.push_back(g.name);
    return names;
  });
  m.def("cross_check_by_splitting", [](int genus, int punctures) {
    auto v = mcg::cross_check_by_splitting(genus, punctures);
    return py::make_tuple(v.equal, v.detail);
  });
}
