#include "convkit/decoders.hpp"

#include <algorithm>
#include <limits>

#include "convkit/sysrep.hpp"

namespace convkit {

namespace {

struct WindowSolution {
  std::vector<std::pair<long, std::size_t>> unknowns;  // (step, symbol)
  std::size_t rank = 0;
  bool consistent = false;
  std::vector<bool> determined;
  Vec values;
};

std::vector<Matrix> parity_blocks(const ConvolutionalCode& C) {
  const PolyMatrix& H = C.require_parity_check();
  std::vector<Matrix> blocks;
  for (int i = 0; i <= std::max(H.degree(), 0); ++i) blocks.push_back(H.coefficient(i));
  return blocks;
}

/// Known value of symbol (step, i): steps before 0 are zero, steps past the end are zero when
/// terminated and unknown otherwise.
MaybeSymbol lookup(const ErasureStream& w, long step, std::size_t i, bool terminated) {
  if (step < 0) return Elem{0};
  if (static_cast<std::size_t>(step) >= w.steps.size()) return terminated ? MaybeSymbol{Elem{0}} : std::nullopt;
  return w.steps[static_cast<std::size_t>(step)][i];
}

/// Equations sum_i H_i c_{tau-i} = 0 for tau = first + nu .. last over the symbols of steps first..last.
WindowSolution solve_window(const std::vector<Matrix>& H, const ErasureStream& w, long first, long last,
                            bool terminated) {
  const FieldPtr& f = H[0].field();
  const std::size_t p = H[0].rows(), n = H[0].cols();
  const long nu = static_cast<long>(H.size()) - 1;
  WindowSolution out;
  for (long s = first; s <= last; ++s)
    for (std::size_t i = 0; i < n; ++i)
      if (!lookup(w, s, i, terminated)) out.unknowns.emplace_back(s, i);
  const long taus = last - first - nu + 1;
  if (taus <= 0) throw InvalidArgument("window shorter than the parity-check memory");
  const std::size_t rows = static_cast<std::size_t>(taus) * p;
  Matrix E(f, rows, out.unknowns.size());
  Vec rhs(rows, 0);
  std::size_t col = 0;
  for (long s = first; s <= last; ++s)
    for (std::size_t i = 0; i < n; ++i) {
      const MaybeSymbol v = lookup(w, s, i, terminated);
      for (long tau = std::max(first + nu, s); tau <= std::min(last, s + nu); ++tau) {
        const Matrix& Hi = H[static_cast<std::size_t>(tau - s)];
        const std::size_t r0 = static_cast<std::size_t>(tau - first - nu) * p;
        for (std::size_t r = 0; r < p; ++r) {
          if (v)
            rhs[r0 + r] = f->sub(rhs[r0 + r], f->mul(Hi(r, i), *v));
          else
            E(r0 + r, col) = Hi(r, i);
        }
      }
      if (!v) ++col;
    }
  out.rank = rank(E);
  const Matrix N = right_nullspace(E);
  out.determined.assign(out.unknowns.size(), true);
  for (std::size_t u = 0; u < out.unknowns.size(); ++u)
    for (std::size_t c = 0; c < N.cols(); ++c)
      if (N(u, c) != 0) out.determined[u] = false;
  if (out.unknowns.empty()) {
    out.consistent = std::all_of(rhs.begin(), rhs.end(), [](Elem e) { return e == 0; });
    return out;
  }
  const auto x = solve(E, rhs);
  out.consistent = x.has_value();
  if (x) out.values = *x;
  return out;
}

/// Writes determined unknowns inside the stream; returns how many were written.
std::size_t fill(ErasureStream& w, const WindowSolution& sol) {
  std::size_t written = 0;
  for (std::size_t u = 0; u < sol.unknowns.size(); ++u) {
    const auto [s, i] = sol.unknowns[u];
    if (!sol.determined[u] || s < 0 || static_cast<std::size_t>(s) >= w.steps.size()) continue;
    w.steps[static_cast<std::size_t>(s)][i] = sol.values[u];
    ++written;
  }
  return written;
}

bool step_determined(const WindowSolution& sol, long step) {
  if (!sol.consistent) return false;
  for (std::size_t u = 0; u < sol.unknowns.size(); ++u)
    if (sol.unknowns[u].first == step && !sol.determined[u]) return false;
  return true;
}

DecodeStatus status_of(std::size_t before, std::size_t after) {
  if (after == 0) return DecodeStatus::Complete;
  return after < before ? DecodeStatus::Partial : DecodeStatus::Failed;
}

ErasureStream reversed(const ErasureStream& w) {
  ErasureStream r = w;
  std::reverse(r.steps.begin(), r.steps.end());
  return r;
}

}  // namespace

std::string to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Complete:
      return "complete";
    case DecodeStatus::Partial:
      return "partial";
    case DecodeStatus::Failed:
      return "failed";
  }
  return "";
}

std::string to_string(WindowTrace::Kind k) {
  switch (k) {
    case WindowTrace::Kind::Forward:
      return "forward";
    case WindowTrace::Kind::Backward:
      return "backward";
    case WindowTrace::Kind::GuardSpace:
      return "guard";
  }
  return "";
}

BlockDecodeResult erasure_decode_block(const ConvolutionalCode& C, const std::vector<MaybeSymbol>& received) {
  if (C.degree() != 0) throw InvalidArgument("block erasure decoding needs a degree-zero code");
  if (received.size() != C.n()) throw InvalidArgument("received word has the wrong length");
  ErasureStream w;
  w.n = C.n();
  w.steps.push_back(received);
  const auto H = parity_blocks(C);
  const WindowSolution sol = solve_window({H[0]}, w, 0, 0, true);
  BlockDecodeResult out;
  out.erasures = sol.unknowns.size();
  out.rank = sol.rank;
  out.solved = sol.consistent && out.rank == out.erasures;
  if (out.solved) {
    fill(w, sol);
    for (const auto& s : w.steps[0]) out.values.push_back(*s);
  }
  return out;
}

bool guard_space_condition(const ConvolutionalCode& C, const ErasureStream& w, std::size_t window_start,
                           bool terminated) {
  const std::size_t n = C.n(), p = n - C.k();
  const std::size_t L = static_cast<std::size_t>(C.L());
  const std::size_t nu = static_cast<std::size_t>(std::max(C.require_parity_check().degree(), 0));
  const std::size_t len = (L + nu + 1) * n;
  std::vector<std::uint8_t> erased(len, 0);
  for (std::size_t pos = 0; pos < len; ++pos)
    erased[pos] = !lookup(w, static_cast<long>(window_start + pos / n), pos % n, terminated);
  const std::size_t total = static_cast<std::size_t>(std::count(erased.begin(), erased.end(), 1));
  if (total > (L + 1) * p) return false;
  for (std::size_t s = 1; s <= L + 1; ++s) {
    const std::size_t head = static_cast<std::size_t>(std::count(erased.begin(), erased.begin() + static_cast<long>(s * n), 1));
    const std::size_t tail = static_cast<std::size_t>(std::count(erased.end() - static_cast<long>(s * n), erased.end(), 1));
    if (head > s * p || tail > s * p) return false;
  }
  return true;
}

WindowTrace guard_space_recovery(const ConvolutionalCode& C, ErasureStream& w, std::size_t window_start,
                                 bool terminated) {
  const auto H = parity_blocks(C);
  const long L = C.L(), nu = static_cast<long>(H.size()) - 1;
  WindowTrace tr;
  tr.kind = WindowTrace::Kind::GuardSpace;
  tr.start = window_start;
  tr.j = static_cast<int>(L);
  const long first = static_cast<long>(window_start), last = first + L + nu;
  if (!guard_space_condition(C, w, window_start, terminated)) {
    for (long s = first; s <= last; ++s)
      for (std::size_t i = 0; i < C.n(); ++i)
        if (!lookup(w, s, i, terminated)) ++tr.unknowns;
    return tr;
  }
  const WindowSolution sol = solve_window(H, w, first, last, terminated);
  tr.unknowns = sol.unknowns.size();
  tr.rank = sol.rank;
  tr.solved = sol.consistent && sol.rank == sol.unknowns.size();
  if (tr.solved) fill(w, sol);
  return tr;
}

DecodeReport erasure_decode_forward(const ConvolutionalCode& C, const ErasureStream& w,
                                    const ErasureDecoderOptions& options) {
  if (w.n != C.n()) throw InvalidArgument("stream width differs from the code length");
  const auto H = parity_blocks(C);
  const long nu = static_cast<long>(H.size()) - 1;
  const int j_max = options.j_max < 0 ? C.L() : options.j_max;
  DecodeReport rep;
  rep.recovered = w;
  rep.initial_erasures = w.erasures();
  ErasureStream& cur = rep.recovered;
  const std::size_t T = cur.steps.size();
  std::size_t t = 0;
  while (t < T) {
    if (cur.step_known(t)) {
      ++t;
      continue;
    }
    bool clean = true;
    for (long s = static_cast<long>(t) - nu; s < static_cast<long>(t); ++s)
      if (s >= 0 && !cur.step_known(static_cast<std::size_t>(s))) clean = false;
    bool done = false;
    if (clean) {
      for (int j = 0; j <= j_max && !done; ++j) {
        const long first = static_cast<long>(t) - nu, last = static_cast<long>(t) + j;
        const WindowSolution sol = solve_window(H, cur, first, last, options.terminated);
        WindowTrace tr;
        tr.kind = WindowTrace::Kind::Forward;
        tr.start = t;
        tr.j = j;
        tr.unknowns = sol.unknowns.size();
        tr.rank = sol.rank;
        tr.solved = step_determined(sol, static_cast<long>(t));
        rep.trace.push_back(tr);
        if (tr.solved) {
          fill(cur, sol);
          done = true;
        }
      }
    } else if (options.guard_space) {
      for (long s = std::max(0L, static_cast<long>(t) - nu); s <= static_cast<long>(t) && !done; ++s) {
        const WindowTrace tr = guard_space_recovery(C, cur, static_cast<std::size_t>(s), options.terminated);
        rep.trace.push_back(tr);
        done = tr.solved;
      }
    }
    if (!done) ++t;
  }
  rep.unrecovered = cur.erased_positions();
  rep.status = status_of(rep.initial_erasures, rep.unrecovered.size());
  return rep;
}

DecodeReport erasure_decode_bidirectional(const ConvolutionalCode& C, const ErasureStream& w,
                                          const ErasureDecoderOptions& options) {
  ErasureDecoderOptions opts = options;
  opts.terminated = true;
  const ConvolutionalCode R = reverse_code(C);
  DecodeReport rep;
  rep.recovered = w;
  rep.initial_erasures = w.erasures();
  const std::size_t T = w.steps.size();
  while (rep.recovered.erasures() > 0) {
    const std::size_t before = rep.recovered.erasures();
    DecodeReport fwd = erasure_decode_forward(C, rep.recovered, opts);
    rep.recovered = std::move(fwd.recovered);
    rep.trace.insert(rep.trace.end(), fwd.trace.begin(), fwd.trace.end());
    if (rep.recovered.erasures() == 0) break;
    DecodeReport bwd = erasure_decode_forward(R, reversed(rep.recovered), opts);
    rep.recovered = reversed(bwd.recovered);
    for (auto tr : bwd.trace) {
      tr.kind = tr.kind == WindowTrace::Kind::Forward ? WindowTrace::Kind::Backward : tr.kind;
      tr.start = T - 1 - tr.start;
      rep.trace.push_back(tr);
    }
    if (rep.recovered.erasures() == before) break;
  }
  rep.unrecovered = rep.recovered.erased_positions();
  rep.status = status_of(rep.initial_erasures, rep.unrecovered.size());
  return rep;
}

ViterbiResult viterbi_decode(const ConvolutionalCode& C, const SymbolStream& r, const Budgets& budgets) {
  if (r.n != C.n()) throw InvalidArgument("received stream width differs from the code length");
  const Realization real = iso_from_code(C);
  const IsoRep& sys = real.system;
  const FieldPtr& field = C.field();
  const std::size_t q = field->order(), s = sys.s(), k = sys.k(), n = C.n();
  std::uint64_t states = 1, inputs = 1;
  for (std::size_t i = 0; i < s; ++i) {
    states *= q;
    if (states > budgets.trellis) throw BudgetExceeded("trellis state count exceeds budget");
  }
  for (std::size_t i = 0; i < k; ++i) inputs *= q;
  if (states * inputs > budgets.trellis) throw BudgetExceeded("trellis edge count exceeds budget");

  auto to_vec = [q](std::size_t idx, std::size_t len) {
    Vec v(len);
    for (std::size_t d = 0; d < len; ++d) {
      v[d] = static_cast<Elem>(idx % q);
      idx /= q;
    }
    return v;
  };
  auto to_idx = [q](const Vec& v) {
    std::size_t idx = 0;
    for (std::size_t d = v.size(); d-- > 0;) idx = idx * q + v[d];
    return idx;
  };
  // transition tables
  std::vector<std::size_t> next(states * inputs);
  std::vector<Vec> label(states * inputs);
  for (std::size_t x = 0; x < states; ++x) {
    const Vec xv = to_vec(x, s);
    const Vec xA = vec_mul(field, xv, sys.A), xC = vec_mul(field, xv, sys.C);
    for (std::size_t u = 0; u < inputs; ++u) {
      const Vec uv = to_vec(u, k);
      Vec nx = vec_mul(field, uv, sys.B), y = vec_mul(field, uv, sys.D);
      for (std::size_t i = 0; i < s; ++i) nx[i] = field->add(nx[i], xA[i]);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = field->add(y[i], xC[i]);
      y.insert(y.end(), uv.begin(), uv.end());
      next[x * inputs + u] = to_idx(nx);
      label[x * inputs + u] = std::move(y);
    }
  }
  const std::size_t T = r.steps.size();
  auto received = [&](std::size_t t) {
    Vec v(n, 0);
    if (t < T)
      for (std::size_t i = 0; i < n; ++i) v[i] = r.steps[t][real.columns[i]];
    return v;
  };
  std::vector<long> tail(T + 1, 0);
  for (std::size_t t = T; t-- > 0;) tail[t] = tail[t + 1] + static_cast<long>(hamming_weight(r.steps[t]));

  constexpr long kInf = std::numeric_limits<long>::max();
  const std::size_t cap = T + 4096;
  std::vector<long> dist(states, kInf);
  dist[0] = 0;
  std::vector<std::vector<std::uint32_t>> pred_state, pred_input;
  long d_min = kInf;
  std::size_t end_time = 0;
  std::size_t t = 0;
  for (;; ++t) {
    if (t >= cap) throw Error("trellis search did not terminate");
    const Vec rt = received(t);
    std::vector<long> nd(states, kInf);
    std::vector<std::uint32_t> ps(states, 0), pi(states, 0);
    for (std::size_t x = 0; x < states; ++x) {
      if (dist[x] == kInf || dist[x] >= d_min) continue;
      for (std::size_t u = 0; u < inputs; ++u) {
        const Vec& lab = label[x * inputs + u];
        long w = 0;
        for (std::size_t i = 0; i < n; ++i) w += lab[i] != rt[i];
        const std::size_t x2 = next[x * inputs + u];
        if (dist[x] + w < nd[x2]) {
          nd[x2] = dist[x] + w;
          ps[x2] = static_cast<std::uint32_t>(x);
          pi[x2] = static_cast<std::uint32_t>(u);
        }
      }
    }
    pred_state.push_back(std::move(ps));
    pred_input.push_back(std::move(pi));
    if (nd[0] != kInf) {
      const long cand = nd[0] + tail[std::min(t + 1, T)];
      if (cand < d_min) {
        d_min = cand;
        end_time = t + 1;
      }
    }
    dist = std::move(nd);
    if (std::all_of(dist.begin(), dist.end(), [&](long d) { return d >= d_min; })) break;
  }
  // trace back from the zero state at end_time
  std::vector<Vec> iso_steps(end_time);
  std::size_t x = 0;
  for (std::size_t tt = end_time; tt-- > 0;) {
    const std::size_t px = pred_state[tt][x], pu = pred_input[tt][x];
    iso_steps[tt] = label[px * inputs + pu];
    x = px;
  }
  SymbolStream cw;
  cw.n = n;
  for (const auto& v : iso_steps) {
    Vec c(n, 0);
    for (std::size_t i = 0; i < n; ++i) c[real.columns[i]] = v[i];
    cw.steps.push_back(std::move(c));
  }
  ViterbiResult out;
  out.distance = d_min;
  out.steps = t + 1;
  out.codeword = cw.steps.empty() ? PolyVector(n, Poly(field)) : codeword_from_stream(field, cw);
  const Membership m = C.contains(out.codeword);
  if (!m.member) throw Error("decoded path is not a codeword");
  out.message = *m.message;
  return out;
}

}  // namespace convkit
