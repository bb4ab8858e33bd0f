#include "convkit/minors.hpp"

#include <functional>
#include <limits>
#include <numeric>

#include "convkit/poly_matrix.hpp"

namespace convkit {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSat / b ? kSat : a * b;
}

}  // namespace

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // acc * (n - r + i) / i stays integral at each step
    const std::uint64_t num = n - r + i;
    const std::uint64_t g = std::gcd(acc, i);
    const std::uint64_t a = acc / g, d = i / g;
    acc = sat_mul(a, num / d);
    if (acc == kSat) return kSat;
  }
  return acc;
}

Pattern entry_pattern(const Matrix& m) {
  Pattern p(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p[i * m.cols() + j] = m(i, j) != 0;
  return p;
}

bool pattern_has_matching(const Pattern& pattern, std::size_t width, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
  const std::size_t r = rows.size();
  if (cols.size() != r) return false;
  std::vector<int> match_col(r, -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t i, std::vector<bool>& seen) {
    for (std::size_t c = 0; c < r; ++c) {
      if (!pattern[rows[i] * width + cols[c]] || seen[c]) continue;
      seen[c] = true;
      if (match_col[c] < 0 || augment(static_cast<std::size_t>(match_col[c]), seen)) {
        match_col[c] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<bool> seen(r, false);
    if (!augment(i, seen)) return false;
  }
  return true;
}

Verdict nontrivial_minors_nonzero(const Matrix& m, const Pattern& pattern, std::uint64_t budget) {
  const std::size_t a = m.rows(), b = m.cols();
  if (pattern.size() != a * b) throw InvalidArgument("pattern shape mismatch");
  // sum over s of C(a,s) C(b,s) equals C(a+b, a)
  const std::uint64_t total = binomial_saturating(a + b, a);
  if (total > budget) throw BudgetExceeded("minor enumeration exceeds budget");
  Verdict v;
  for (std::size_t s = 1; s <= std::min(a, b); ++s) {
    const auto row_sets = combinations(a, s);
    const auto col_sets = combinations(b, s);
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) {
        if (!pattern_has_matching(pattern, b, rs, cs)) continue;
        ++v.examined;
        if (determinant(m.submatrix(rs, cs)) == 0) {
          v.holds = false;
          v.witness = Witness{rs, cs, -1, -1};
          return v;
        }
      }
  }
  return v;
}

std::uint64_t count_admissible(std::size_t ncols, const IndexBounds& bounds) {
  const std::size_t r = bounds.lower.size() - 1;
  // ways[j] = number of admissible prefixes of length p ending at column j
  std::vector<std::uint64_t> ways(ncols + 2, 0), next(ncols + 2, 0);
  if (r == 0) return 1;
  for (std::size_t j = 1; j <= ncols; ++j) ways[j] = (j >= bounds.lower[1] && j <= bounds.upper[1]) ? 1 : 0;
  for (std::size_t p = 2; p <= r; ++p) {
    std::fill(next.begin(), next.end(), 0);
    std::uint64_t prefix = 0;
    for (std::size_t j = 1; j <= ncols; ++j) {
      if (j >= bounds.lower[p] && j <= bounds.upper[p]) next[j] = prefix;
      prefix = sat_add(prefix, ways[j]);
    }
    std::swap(ways, next);
  }
  std::uint64_t total = 0;
  for (std::size_t j = 1; j <= ncols; ++j) total = sat_add(total, ways[j]);
  return total;
}

Verdict admissible_full_minors_nonzero(const Matrix& m, const IndexBounds& bounds, std::uint64_t budget) {
  const std::size_t r = m.rows(), ncols = m.cols();
  if (bounds.lower.size() != r + 1) throw InvalidArgument("index bounds do not match the row count");
  if (r > ncols) throw InvalidArgument("full-size minors need rows <= cols");
  const std::uint64_t total = count_admissible(ncols, bounds);
  if (total > budget) throw BudgetExceeded("admissible minor count exceeds budget");
  Verdict v;
  std::vector<std::size_t> all_rows(r);
  for (std::size_t i = 0; i < r; ++i) all_rows[i] = i;
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t p, std::size_t prev) -> bool {
    if (p > r) {
      ++v.examined;
      if (determinant(m.submatrix(all_rows, chosen)) == 0) {
        v.holds = false;
        v.witness = Witness{all_rows, chosen, -1, -1};
        return false;
      }
      return true;
    }
    const std::size_t lo = std::max(prev + 1, bounds.lower[p]);
    const std::size_t hi = std::min(bounds.upper[p], ncols - (r - p));
    for (std::size_t j = lo; j <= hi; ++j) {
      chosen.push_back(j - 1);
      const bool ok = rec(p + 1, j);
      chosen.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  rec(1, 0);
  return v;
}

}  // namespace convkit
