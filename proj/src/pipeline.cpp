#include "mcg/pipeline.hpp"

namespace mcg {

PipelineResult run_pipeline(const PipelineOptions &options) {
  PipelineResult result;
  result.options = options;
  result.list = list_L_cached(options.genus, options.punctures, options.cache_dir, options.budget,
                              &result.cache);
  if (options.budget) options.budget->check();
  result.complex = build_quotient_complex(result.list.graphs, options.budget);
  result.tree = spanning_tree(result.complex, options.seed);
  result.raw = emit_presentation(result.complex, result.tree);
  if (options.budget) options.budget->check();
  result.presentation = options.simplify ? tietze_simplify(result.raw.presentation) : result.raw.presentation;
  result.ab = abelianization(result.presentation);
  return result;
}

} // namespace mcg
