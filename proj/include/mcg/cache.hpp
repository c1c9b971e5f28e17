#ifndef MCG_CACHE_HPP
#define MCG_CACHE_HPP

#include <string>

#include "mcg/budget.hpp"
#include "mcg/enumerate.hpp"

namespace mcg {

std::string cache_path(const std::string &dir, int genus, int punctures);

struct CacheOutcome {
  bool hit = false;     // a valid cache entry was used
  bool corrupt = false; // a cache file existed but failed re-verification
};

/// list_L backed by `.mcgcache/L-g{g}-p{p}.json`. Entries are re-parsed,
/// re-validated and re-canonicalized on load; any mismatch marks the file
/// corrupt and falls back to a cold run (rewriting the file). An empty dir
/// disables caching.
EnumerationResult list_L_cached(int genus, int punctures, const std::string &dir,
                                const Budget *budget = nullptr, CacheOutcome *outcome = nullptr);

void store_L(const std::string &dir, int genus, int punctures, const EnumerationResult &result);

} // namespace mcg

#endif
