#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "convkit/poly_matrix.hpp"

namespace convkit {

/// Seeded generator: std::mt19937_64 with fixed mappings to bounded integers and unit doubles.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound) by rejection sampling; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// n symbols per time step.
struct SymbolStream {
  std::size_t n = 0;
  std::vector<Vec> steps;
};

using MaybeSymbol = std::optional<Elem>;

/// Stream with erased positions marked as nullopt.
struct ErasureStream {
  std::size_t n = 0;
  std::vector<std::vector<MaybeSymbol>> steps;

  static ErasureStream from(const SymbolStream& s);
  std::size_t erasures() const;
  std::vector<std::pair<std::size_t, std::size_t>> erased_positions() const;
  bool step_known(std::size_t t) const;
};

/// Coefficient vectors c_0 .. c_{steps-1} of a polynomial vector; steps = degree + 1 when 0.
SymbolStream stream_from_codeword(const PolyVector& c, std::size_t steps = 0);
PolyVector codeword_from_stream(const FieldPtr& field, const SymbolStream& s);

struct ErasureModel {
  enum class Kind { Iid, Pattern, Burst };
  Kind kind = Kind::Iid;
  /// Iid erasure probability per symbol.
  double rate = 0.0;
  /// Pattern positions (step, symbol index).
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  /// Burst of whole steps [start, start + length).
  std::size_t start = 0;
  std::size_t length = 0;

  static ErasureModel iid(double rate);
  static ErasureModel pattern(std::vector<std::pair<std::size_t, std::size_t>> positions);
  static ErasureModel burst(std::size_t start, std::size_t length);
};

ErasureStream erase_channel(const SymbolStream& s, const ErasureModel& model, std::uint64_t seed = kDefaultSeed);

/// Each symbol is replaced with probability eps by a uniformly chosen different element.
SymbolStream qsc_channel(const SymbolStream& s, const FieldPtr& field, double eps, std::uint64_t seed = kDefaultSeed);

}  // namespace convkit
