//
// combine.h
//
// Synchronized product of a siteswap pattern with a poi label word: toss
// throws and spin moves advance together, beat by beat.
//
// This file is distributed under the MIT License.
//

#ifndef JUGGLEGRAPH_COMBINE_H_
#define JUGGLEGRAPH_COMBINE_H_

#include <cstdint>
#include <vector>

#include "jugglegraph/poi.h"
#include "jugglegraph/siteswap.h"
#include "jugglegraph/toss.h"

namespace juggle {

struct TimelineEntry {
  std::int64_t beat = 0;
  int throw_value = 0;
  MoveLabel label = MoveLabel::B;
  TossState toss_before;  // toss state just before the beat
  PoiState poi_before;    // poi state just before the beat
};

struct CombinedPattern {
  SiteswapPattern toss;
  PoiWord spin;
  int max_throw = 1;
  std::int64_t notation_period = 1;  // lcm(toss period, word length)
  std::int64_t full_period = 1;      // both state layers return to start
  PoiState poi_start;
  bool poi_starts_at_ground = false;
  std::vector<TimelineEntry> timeline;  // one entry per beat of full_period
};

// Align beat i with throw toss[i mod n] and label spin[i mod w]. The toss
// layer starts at the pattern's first state; the poi layer starts at the
// word's post-entry state when the word closes only away from ground, and at
// a ground state otherwise. The full state period is the smallest positive
// multiple of the notation period after which both layers are back at their
// start states.
CombinedPattern combine(const SiteswapPattern& toss, const PoiWord& spin,
                        int max_throw);
// Capacity defaults to the pattern's largest throw (at least 1).
CombinedPattern combine(const SiteswapPattern& toss, const PoiWord& spin);

}  // namespace juggle

#endif  // JUGGLEGRAPH_COMBINE_H_
