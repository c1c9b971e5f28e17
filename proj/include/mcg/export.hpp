#ifndef MCG_EXPORT_HPP
#define MCG_EXPORT_HPP

#include <string>

#include "mcg/pipeline.hpp"

namespace mcg {

/// Human-readable presentation with the run summary.
std::string presentation_text(const PipelineResult &run);

/// Deterministic JSON: {generators: [...], relators: [[["z1e1", 1], ...]], ...}.
std::string presentation_json(const PipelineResult &run);

/// GAP input defining `G` as a finitely presented group.
std::string presentation_gap(const PipelineResult &run);

/// Magma input defining `G` as a finitely presented group.
std::string presentation_magma(const PipelineResult &run);

/// The quotient complex: vertices, edge classes with label lists, 2-cells and
/// the chosen spanning tree.
std::string complex_json(const PipelineResult &run);

/// One-screen summary printed by the command line after a run.
std::string run_summary(const PipelineResult &run);

} // namespace mcg

#endif
