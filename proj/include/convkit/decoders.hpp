#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convkit/channel.hpp"
#include "convkit/code.hpp"
#include "convkit/minors.hpp"

namespace convkit {

enum class DecodeStatus { Complete, Partial, Failed };
std::string to_string(DecodeStatus s);

/// One attempted window.
struct WindowTrace {
  enum class Kind { Forward, Backward, GuardSpace };
  Kind kind = Kind::Forward;
  /// First step of the sliding part (forward), or of the whole window (guard space).
  std::size_t start = 0;
  /// Window size index j; the sliding part covers steps start..start+j.
  int j = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  bool solved = false;
};
std::string to_string(WindowTrace::Kind k);

struct DecodeReport {
  ErasureStream recovered;
  std::vector<WindowTrace> trace;
  std::vector<std::pair<std::size_t, std::size_t>> unrecovered;
  std::size_t initial_erasures = 0;
  DecodeStatus status = DecodeStatus::Complete;
};

struct ErasureDecoderOptions {
  /// Largest window index tried; negative means L.
  int j_max = -1;
  /// Steps past the end of the stream are known zeros (the whole codeword was sent).
  bool terminated = false;
  /// Try partial-parity-check windows to recover a lost block.
  bool guard_space = true;
};

struct BlockDecodeResult {
  bool solved = false;
  Vec values;
  std::size_t erasures = 0;
  /// Rank of the erased-column submatrix of H_0.
  std::size_t rank = 0;
};
/// Recovers the erasures of one received word of a degree-zero code.
BlockDecodeResult erasure_decode_block(const ConvolutionalCode& C, const std::vector<MaybeSymbol>& received);

/// Left-to-right sliding-window recovery with windows j = 0..j_max at each erased step whose
/// nu-step history is known; lost steps are skipped until a guard space or a recoverable window.
DecodeReport erasure_decode_forward(const ConvolutionalCode& C, const ErasureStream& w,
                                    const ErasureDecoderOptions& options = {});

/// Alternates forward passes and passes of the reverse code over the reversed stream until no
/// further symbol is recovered. The stream is treated as a complete codeword.
DecodeReport erasure_decode_bidirectional(const ConvolutionalCode& C, const ErasureStream& w,
                                          const ErasureDecoderOptions& options = {});

/// Whether the erasures of the (L+nu+1)-step window starting at window_start satisfy the
/// distribution condition: at most (L+1)(n-k) in total and at most s(n-k) among the first and
/// among the last sn symbols, s = 1..L+1.
bool guard_space_condition(const ConvolutionalCode& C, const ErasureStream& w, std::size_t window_start,
                           bool terminated = false);

/// Solves the partial parity check over the window when the condition holds and the erased columns
/// have full rank; fills the window in place. Returns the trace of the attempt.
WindowTrace guard_space_recovery(const ConvolutionalCode& C, ErasureStream& w, std::size_t window_start,
                                 bool terminated = false);

struct ViterbiResult {
  PolyVector codeword;
  PolyVector message;
  long distance = 0;
  /// Trellis steps processed before the stopping rule fired.
  std::size_t steps = 0;
};
/// Minimum-distance decoding over the controller-form trellis. Received symbols past the end are zero.
ViterbiResult viterbi_decode(const ConvolutionalCode& C, const SymbolStream& r, const Budgets& budgets = {});

}  // namespace convkit
