#include "convkit/channel.hpp"

#include <algorithm>
#include <limits>

namespace convkit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

ErasureStream ErasureStream::from(const SymbolStream& s) {
  ErasureStream e;
  e.n = s.n;
  for (const auto& step : s.steps) e.steps.emplace_back(step.begin(), step.end());
  return e;
}

std::size_t ErasureStream::erasures() const {
  std::size_t count = 0;
  for (const auto& step : steps) count += static_cast<std::size_t>(std::count(step.begin(), step.end(), std::nullopt));
  return count;
}

std::vector<std::pair<std::size_t, std::size_t>> ErasureStream::erased_positions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t t = 0; t < steps.size(); ++t)
    for (std::size_t i = 0; i < steps[t].size(); ++i)
      if (!steps[t][i]) out.emplace_back(t, i);
  return out;
}

bool ErasureStream::step_known(std::size_t t) const {
  if (t >= steps.size()) return false;
  return std::all_of(steps[t].begin(), steps[t].end(), [](const MaybeSymbol& s) { return s.has_value(); });
}

SymbolStream stream_from_codeword(const PolyVector& c, std::size_t steps) {
  SymbolStream s;
  s.n = c.size();
  if (steps == 0) steps = static_cast<std::size_t>(std::max(degree(c), 0)) + 1;
  for (std::size_t t = 0; t < steps; ++t) {
    Vec v(s.n, 0);
    for (std::size_t i = 0; i < s.n; ++i) v[i] = c[i].coeff(static_cast<int>(t));
    s.steps.push_back(std::move(v));
  }
  return s;
}

PolyVector codeword_from_stream(const FieldPtr& field, const SymbolStream& s) {
  PolyVector out;
  for (std::size_t i = 0; i < s.n; ++i) {
    std::vector<Elem> c;
    for (const auto& step : s.steps) c.push_back(step[i]);
    out.emplace_back(field, c);
  }
  return out;
}

ErasureModel ErasureModel::iid(double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw InvalidArgument("erasure rate must lie in [0, 1]");
  ErasureModel m;
  m.kind = Kind::Iid;
  m.rate = rate;
  return m;
}

ErasureModel ErasureModel::pattern(std::vector<std::pair<std::size_t, std::size_t>> positions) {
  ErasureModel m;
  m.kind = Kind::Pattern;
  m.positions = std::move(positions);
  return m;
}

ErasureModel ErasureModel::burst(std::size_t start, std::size_t length) {
  ErasureModel m;
  m.kind = Kind::Burst;
  m.start = start;
  m.length = length;
  return m;
}

ErasureStream erase_channel(const SymbolStream& s, const ErasureModel& model, std::uint64_t seed) {
  ErasureStream out = ErasureStream::from(s);
  switch (model.kind) {
    case ErasureModel::Kind::Iid: {
      if (!(model.rate >= 0.0 && model.rate <= 1.0)) throw InvalidArgument("erasure rate must lie in [0, 1]");
      Rng rng(seed);
      for (auto& step : out.steps)
        for (auto& sym : step)
          if (rng.unit() < model.rate) sym.reset();
      break;
    }
    case ErasureModel::Kind::Pattern:
      for (const auto& [t, i] : model.positions) {
        if (t >= out.steps.size() || i >= out.n) throw InvalidArgument("erasure position out of range");
        out.steps[t][i].reset();
      }
      break;
    case ErasureModel::Kind::Burst:
      if (model.start + model.length > out.steps.size()) throw InvalidArgument("burst exceeds the stream");
      for (std::size_t t = model.start; t < model.start + model.length; ++t)
        for (auto& sym : out.steps[t]) sym.reset();
      break;
  }
  return out;
}

SymbolStream qsc_channel(const SymbolStream& s, const FieldPtr& field, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw InvalidArgument("error probability must lie in [0, 1]");
  const std::uint64_t q = field->order();
  Rng rng(seed);
  SymbolStream out = s;
  for (auto& step : out.steps)
    for (auto& sym : step) {
      if (!field->contains(sym)) throw InvalidArgument("symbol outside the field");
      if (rng.unit() >= eps) continue;
      const auto r = static_cast<Elem>(rng.below(q - 1));
      sym = r < sym ? r : r + 1;
    }
  return out;
}

}  // namespace convkit
