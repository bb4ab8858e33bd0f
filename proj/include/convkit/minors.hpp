#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convkit/matrix.hpp"

namespace convkit {

/// Enumeration limits. Exceeding one raises BudgetExceeded instead of truncating.
struct Budgets {
  /// Messages enumerated by column-distance and brute-force searches.
  std::uint64_t enumeration = std::uint64_t{1} << 24;
  /// Minors examined by a minor-based predicate.
  std::uint64_t minors = std::uint64_t{1} << 20;
  /// Trellis edges (states times inputs) for state-graph searches.
  std::uint64_t trellis = std::uint64_t{1} << 22;
};

/// Failure evidence of a predicate.
struct Witness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  /// Column-distance index when the failure is a distance deficit.
  int index = -1;
  /// Offending value (distance found) when applicable.
  long value = -1;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  /// Number of minors or distances examined.
  std::uint64_t examined = 0;
};

/// Row-major zero pattern; nonzero entries mark positions that may be nonzero.
using Pattern = std::vector<std::uint8_t>;

Pattern entry_pattern(const Matrix& m);

/// Whether the pattern restricted to (rows, cols) admits a permutation through allowed positions.
bool pattern_has_matching(const Pattern& pattern, std::size_t width, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols);

/// Every square minor of m that the pattern does not force to vanish is nonzero.
Verdict nontrivial_minors_nonzero(const Matrix& m, const Pattern& pattern, std::uint64_t budget);

/// Bounds on a strictly increasing 1-based column index sequence j_1 < ... < j_r:
/// lower[p] <= j_p <= upper[p] for p = 1..r (index 0 unused).
struct IndexBounds {
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
  explicit IndexBounds(std::size_t r, std::size_t ncols) : lower(r + 1, 1), upper(r + 1, ncols) {}
};

/// Number of admissible column sets, saturating at UINT64_MAX.
std::uint64_t count_admissible(std::size_t ncols, const IndexBounds& bounds);

/// Every full-size minor of m over admissible column sets is nonzero.
Verdict admissible_full_minors_nonzero(const Matrix& m, const IndexBounds& bounds, std::uint64_t budget);

/// Saturating binomial coefficient.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r);

}  // namespace convkit
