//
// siteswap.h
//
// Siteswap notation: parsing, validation, particle counts, canonical form.
//
// This file is distributed under the MIT License.
//

#ifndef JUGGLEGRAPH_SITESWAP_H_
#define JUGGLEGRAPH_SITESWAP_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace juggle {

// Largest throw value expressible in notation (digits 0-9, letters a-z).
inline constexpr int kMaxThrowValue = 35;

// Character for a throw value: '0'-'9' then 'a'-'z'.
char throw_char(int value);

// Numeric value of a notation character, or -1 if not a valid throw char.
int throw_value(char c);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& msg, std::size_t position, char character)
      : std::invalid_argument(msg), position_(position),
        character_(character) {}

  // Offset of the offending character; 0 for empty input.
  std::size_t position() const { return position_; }
  // The offending character; '\0' for empty input.
  char character() const { return character_; }

 private:
  std::size_t position_;
  char character_;
};

// A periodic throw schedule: one throw value per beat, repeating with the
// period equal to the sequence length.
class SiteswapPattern {
 public:
  // Throws must be nonempty and each in [0, kMaxThrowValue].
  explicit SiteswapPattern(std::vector<int> throws);

  const std::vector<int>& throws() const { return throws_; }
  std::size_t period() const { return throws_.size(); }
  int max_throw() const;

  // Lowercase notation text; parse_siteswap(render()) reproduces the pattern.
  std::string render() const;

  bool operator==(const SiteswapPattern&) const = default;

 private:
  std::vector<int> throws_;
};

// Parse notation text ('0'-'9', 'a'-'z', case-insensitive).
// Throws ParseError on empty input or an invalid character.
SiteswapPattern parse_siteswap(const std::string& text);

struct ValidityReport {
  bool valid = false;
  // Defined only when valid.
  int particle_count = 0;
  // Beat index pairs (i, j), i < j, whose landings collide; all pairs are
  // reported. Empty exactly when valid.
  std::vector<std::pair<int, int>> collisions;
};

// A pattern is valid iff the landing residues (i + throws[i]) mod n are
// pairwise distinct. Invalid notation is a report, not an error.
ValidityReport validate(const SiteswapPattern& pattern);

// (sum of throws) / period. Throws std::invalid_argument if the pattern is
// not valid.
int particle_count(const SiteswapPattern& pattern);

// Lexicographically smallest rotation of the throw sequence.
SiteswapPattern canonical_rotation(const SiteswapPattern& pattern);

}  // namespace juggle

#endif  // JUGGLEGRAPH_SITESWAP_H_
