//
// combine.cc
//
// Synchronized product of a siteswap pattern with a poi label word.
//
// This file is distributed under the MIT License.
//

#include "jugglegraph/combine.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace juggle {

CombinedPattern combine(const SiteswapPattern& toss, const PoiWord& spin,
                        int max_throw) {
  const std::vector<TossState> cycle = pattern_states(toss, max_throw);
  if (spin.empty()) {
    throw std::invalid_argument("empty poi word");
  }

  CombinedPattern result{toss, spin, max_throw, 1, 1, PoiState{}, false, {}};
  const std::int64_t n = static_cast<std::int64_t>(toss.period());
  const std::int64_t w = static_cast<std::int64_t>(spin.size());
  result.notation_period = std::lcm(n, w);

  // Start the poi layer on the pattern's own cycle when it avoids ground.
  try {
    const EntryResult entry = find_entry(spin);
    result.poi_start = entry.anchor;
    result.poi_starts_at_ground = entry.anchor.is_ground();
  } catch (const NoCycle&) {
    result.poi_start = kGroundLeftUp;
    result.poi_starts_at_ground = true;
  }

  // Replay until both layers return to their start at a multiple of the
  // notation period. The poi move group has exponent 4, so at most four
  // multiples are needed; the toss layer closes at every one.
  const TossState toss_start = cycle.front();
  TossState toss_at = toss_start;
  PoiState poi_at = result.poi_start;
  std::int64_t beat = 0;
  for (int rounds = 0; rounds < 8; ++rounds) {
    for (std::int64_t i = 0; i < result.notation_period; ++i, ++beat) {
      TimelineEntry entry;
      entry.beat = beat;
      entry.throw_value = toss.throws()[beat % n];
      entry.label = spin[beat % w];
      entry.toss_before = toss_at;
      entry.poi_before = poi_at;
      result.timeline.push_back(entry);

      toss_at = advance(toss_at, entry.throw_value);
      poi_at = poi_advance(poi_at, entry.label);
    }
    if (toss_at == toss_start && poi_at == result.poi_start) {
      result.full_period = beat;
      return result;
    }
  }
  throw std::logic_error("combined pattern failed to close");
}

CombinedPattern combine(const SiteswapPattern& toss, const PoiWord& spin) {
  return combine(toss, spin, std::max(toss.max_throw(), 1));
}

}  // namespace juggle
