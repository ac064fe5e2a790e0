//
// siteswap.cc
//
// Siteswap notation: parsing, validation, particle counts, canonical form.
//
// This file is distributed under the MIT License.
//

#include "jugglegraph/siteswap.h"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

namespace juggle {

char throw_char(int value) {
  assert(value >= 0 && value <= kMaxThrowValue);
  return value < 10 ? static_cast<char>('0' + value)
                    : static_cast<char>('a' + value - 10);
}

int throw_value(char c) {
  if (c >= '0' && c <= '9')
    return c - '0';
  const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower >= 'a' && lower <= 'z')
    return 10 + lower - 'a';
  return -1;
}

SiteswapPattern::SiteswapPattern(std::vector<int> throws)
    : throws_(std::move(throws)) {
  if (throws_.empty()) {
    throw std::invalid_argument("pattern must have period >= 1");
  }
  for (const int t : throws_) {
    if (t < 0 || t > kMaxThrowValue) {
      std::ostringstream oss;
      oss << "throw value " << t << " outside [0, " << kMaxThrowValue << "]";
      throw std::invalid_argument(oss.str());
    }
  }
}

int SiteswapPattern::max_throw() const {
  return *std::max_element(throws_.begin(), throws_.end());
}

std::string SiteswapPattern::render() const {
  std::string out;
  out.reserve(throws_.size());
  for (const int t : throws_) {
    out.push_back(throw_char(t));
  }
  return out;
}

SiteswapPattern parse_siteswap(const std::string& text) {
  if (text.empty()) {
    throw ParseError("empty siteswap", 0, '\0');
  }
  std::vector<int> throws;
  throws.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int value = throw_value(text[i]);
    if (value < 0) {
      std::ostringstream oss;
      oss << "invalid character '" << text[i] << "' at position " << i;
      throw ParseError(oss.str(), i, text[i]);
    }
    throws.push_back(value);
  }
  return SiteswapPattern(std::move(throws));
}

ValidityReport validate(const SiteswapPattern& pattern) {
  const auto& throws = pattern.throws();
  const int n = static_cast<int>(pattern.period());

  ValidityReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((i + throws[i]) % n == (j + throws[j]) % n) {
        report.collisions.emplace_back(i, j);
      }
    }
  }
  report.valid = report.collisions.empty();
  if (report.valid) {
    const int sum = std::accumulate(throws.begin(), throws.end(), 0);
    assert(sum % n == 0);  // distinct residues force divisibility
    report.particle_count = sum / n;
  }
  return report;
}

int particle_count(const SiteswapPattern& pattern) {
  const ValidityReport report = validate(pattern);
  if (!report.valid) {
    throw std::invalid_argument("pattern " + pattern.render() +
                                " is not a valid siteswap");
  }
  return report.particle_count;
}

SiteswapPattern canonical_rotation(const SiteswapPattern& pattern) {
  const auto& throws = pattern.throws();
  const std::size_t n = pattern.period();
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t i = 0; i < n; ++i) {
      const int a = throws[(start + i) % n];
      const int b = throws[(best + i) % n];
      if (a != b) {
        if (a < b)
          best = start;
        break;
      }
    }
  }
  std::vector<int> rotated(n);
  for (std::size_t i = 0; i < n; ++i) {
    rotated[i] = throws[(best + i) % n];
  }
  return SiteswapPattern(std::move(rotated));
}

}  // namespace juggle
