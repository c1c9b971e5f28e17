#ifndef MCG_PIPELINE_HPP
#define MCG_PIPELINE_HPP

#include <string>
#include <vector>

#include "mcg/budget.hpp"
#include "mcg/cache.hpp"
#include "mcg/complex.hpp"
#include "mcg/enumerate.hpp"
#include "mcg/present.hpp"

namespace mcg {

struct PipelineOptions {
  int genus = 0;
  int punctures = 0;
  unsigned seed = 0;    // spanning-tree tie-break randomization; 0 = canonical order
  bool simplify = false;
  std::string cache_dir; // empty disables caching
  const Budget *budget = nullptr;
};

/// End-to-end run: list -> collapse trees -> quotient complex -> spanning
/// tree -> presentation (optionally Tietze-simplified).
struct PipelineResult {
  PipelineOptions options;
  EnumerationResult list;
  CacheOutcome cache;
  QuotientComplex complex;
  std::vector<std::size_t> tree;
  PresentationBundle raw;
  Presentation presentation; // simplified when requested, otherwise raw
  Abelianization ab;         // of `presentation`
};

PipelineResult run_pipeline(const PipelineOptions &options);

} // namespace mcg

#endif
