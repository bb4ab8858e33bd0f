#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convkit/channel.hpp"
#include "convkit/code.hpp"
#include "convkit/sysrep.hpp"

namespace convkit {

/// `.ccode` text:
///
///     # optional comments
///     field 2 1 [1 1]
///     params 3 2
///     generator            (or paritycheck)
///     1 ; 1 ; 0 1
///     0 0 1 ; 1 ; 1 1
///
/// Entries are ascending coefficient lists separated by ';', one matrix row per line.
struct CodeFile {
  enum class Kind { Generator, ParityCheck };
  Kind kind = Kind::Generator;
  PolyMatrix matrix;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::string> comments;
  ConvolutionalCode code() const;
};
CodeFile parse_code_file(std::string_view text);
std::string format_code_file(const ConvolutionalCode& C, const std::vector<std::string>& comments = {});
std::string format_code_file(const FieldPtr& field, CodeFile::Kind kind, const PolyMatrix& m, std::size_t n,
                             std::size_t k, const std::vector<std::string>& comments = {});

/// `.iso` text: a field line, `dims s k n`, then sections `A`, `B`, `C`, `D` with one matrix row per
/// line, and optionally `columns c_0 ... c_{n-1}` mapping system coordinates to code columns.
struct IsoFile {
  IsoRep system;
  std::optional<std::vector<std::size_t>> columns;
};
IsoFile parse_iso_file(std::string_view text);
std::string format_iso_file(const IsoRep& sys, const std::vector<std::size_t>* columns = nullptr);

/// Stream text: one step per line, whitespace-separated element encodings, `?` for an erasure.
ErasureStream parse_stream(std::string_view text);
std::string format_stream(const ErasureStream& s);
std::string format_stream(const SymbolStream& s);
/// Throws ParseError when the stream contains erasures.
SymbolStream to_symbol_stream(const ErasureStream& s);

/// Message vector: one polynomial literal per component separated by ';'.
PolyVector parse_poly_vector(const FieldPtr& field, std::string_view text);
std::string format_poly_vector(const PolyVector& v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace convkit
