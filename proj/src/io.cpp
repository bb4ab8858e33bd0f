#include "convkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace convkit {

namespace {

struct Lines {
  std::vector<std::string> content;
  std::vector<std::string> comments;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Lines split_lines(std::string_view text) {
  Lines out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      const std::string c = trim(line.substr(hash + 1));
      if (!c.empty()) out.comments.push_back(c);
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) out.content.push_back(line);
  }
  return out;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::size_t parse_count(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  }
  if (pos != tok.size() || tok[0] == '-') throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  return v;
}

Elem parse_elem(const FieldPtr& f, const std::string& tok) {
  const std::size_t v = parse_count(tok, "field element");
  if (v >= f->order()) throw ParseError("field element out of range: " + tok);
  return static_cast<Elem>(v);
}

void write_matrix(std::ostringstream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

}  // namespace

ConvolutionalCode CodeFile::code() const {
  return kind == Kind::Generator ? ConvolutionalCode::from_generator(matrix)
                                 : ConvolutionalCode::from_parity_check(matrix);
}

CodeFile parse_code_file(std::string_view text) {
  const Lines lines = split_lines(text);
  if (lines.content.size() < 4) throw ParseError("code file needs field, params, kind and matrix rows");
  CodeFile out;
  out.comments = lines.comments;
  const FieldPtr field = parse_field_literal(lines.content[0]);
  const auto params = words(lines.content[1]);
  if (params.size() != 3 || params[0] != "params") throw ParseError("expected 'params n k'");
  out.n = parse_count(params[1], "n");
  out.k = parse_count(params[2], "k");
  if (out.k == 0 || out.k >= out.n) throw ParseError("params need 0 < k < n");
  if (lines.content[2] == "generator")
    out.kind = CodeFile::Kind::Generator;
  else if (lines.content[2] == "paritycheck")
    out.kind = CodeFile::Kind::ParityCheck;
  else
    throw ParseError("expected 'generator' or 'paritycheck'");
  std::string body;
  for (std::size_t i = 3; i < lines.content.size(); ++i) body += lines.content[i] + '\n';
  out.matrix = parse_poly_matrix(field, body);
  const std::size_t rows = out.kind == CodeFile::Kind::Generator ? out.k : out.n - out.k;
  if (out.matrix.rows() != rows || out.matrix.cols() != out.n) throw ParseError("matrix shape does not match params");
  return out;
}

std::string format_code_file(const FieldPtr& field, CodeFile::Kind kind, const PolyMatrix& m, std::size_t n,
                             std::size_t k, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << field->literal() << '\n';
  os << "params " << n << ' ' << k << '\n';
  os << (kind == CodeFile::Kind::Generator ? "generator" : "paritycheck") << '\n';
  os << format_poly_matrix(m);
  return os.str();
}

std::string format_code_file(const ConvolutionalCode& C, const std::vector<std::string>& comments) {
  return format_code_file(C.field(), CodeFile::Kind::Generator, C.generator(), C.n(), C.k(), comments);
}

IsoFile parse_iso_file(std::string_view text) {
  const Lines lines = split_lines(text);
  if (lines.content.size() < 2) throw ParseError("iso file needs a field line and dims");
  const FieldPtr field = parse_field_literal(lines.content[0]);
  const auto dims = words(lines.content[1]);
  if (dims.size() != 4 || dims[0] != "dims") throw ParseError("expected 'dims s k n'");
  const std::size_t s = parse_count(dims[1], "s"), k = parse_count(dims[2], "k"), n = parse_count(dims[3], "n");
  if (k == 0 || k >= n) throw ParseError("dims need 0 < k < n");
  const struct {
    const char* name;
    std::size_t rows, cols;
  } shapes[] = {{"A", s, s}, {"B", k, s}, {"C", s, n - k}, {"D", k, n - k}};
  std::size_t pos = 2;
  std::vector<Matrix> mats;
  for (const auto& sh : shapes) {
    if (pos >= lines.content.size() || lines.content[pos] != sh.name)
      throw ParseError(std::string("expected section ") + sh.name);
    ++pos;
    Matrix m(field, sh.rows, sh.cols);
    for (std::size_t i = 0; i < sh.rows; ++i, ++pos) {
      if (pos >= lines.content.size()) throw ParseError(std::string("section ") + sh.name + " is short");
      const auto toks = words(lines.content[pos]);
      if (toks.size() != sh.cols) throw ParseError(std::string("section ") + sh.name + " has a row of wrong length");
      for (std::size_t j = 0; j < sh.cols; ++j) m(i, j) = parse_elem(field, toks[j]);
    }
    mats.push_back(m);
  }
  IsoFile out;
  out.system = IsoRep{mats[0], mats[1], mats[2], mats[3]};
  if (pos < lines.content.size()) {
    const auto toks = words(lines.content[pos]);
    if (toks.empty() || toks[0] != "columns" || toks.size() != n + 1) throw ParseError("expected 'columns' with n entries");
    std::vector<std::size_t> cols;
    for (std::size_t i = 1; i < toks.size(); ++i) cols.push_back(parse_count(toks[i], "column"));
    std::vector<std::size_t> sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
      if (sorted[i] != i) throw ParseError("columns must be a permutation of 0..n-1");
    out.columns = cols;
    ++pos;
  }
  if (pos != lines.content.size()) throw ParseError("trailing content in iso file");
  return out;
}

std::string format_iso_file(const IsoRep& sys, const std::vector<std::size_t>* columns) {
  std::ostringstream os;
  os << sys.field()->literal() << '\n';
  os << "dims " << sys.s() << ' ' << sys.k() << ' ' << sys.n() << '\n';
  os << "A\n";
  write_matrix(os, sys.A);
  os << "B\n";
  write_matrix(os, sys.B);
  os << "C\n";
  write_matrix(os, sys.C);
  os << "D\n";
  write_matrix(os, sys.D);
  if (columns) {
    os << "columns";
    for (auto c : *columns) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

ErasureStream parse_stream(std::string_view text) {
  const Lines lines = split_lines(text);
  ErasureStream out;
  for (const auto& line : lines.content) {
    const auto toks = words(line);
    if (out.steps.empty()) out.n = toks.size();
    if (toks.size() != out.n) throw ParseError("stream rows must have equal width");
    std::vector<MaybeSymbol> step;
    for (const auto& t : toks) step.push_back(t == "?" ? MaybeSymbol{} : MaybeSymbol{static_cast<Elem>(parse_count(t, "symbol"))});
    out.steps.push_back(std::move(step));
  }
  return out;
}

std::string format_stream(const ErasureStream& s) {
  std::ostringstream os;
  for (const auto& step : s.steps) {
    for (std::size_t i = 0; i < step.size(); ++i) {
      os << (i ? " " : "");
      if (step[i])
        os << *step[i];
      else
        os << '?';
    }
    os << '\n';
  }
  return os.str();
}

std::string format_stream(const SymbolStream& s) { return format_stream(ErasureStream::from(s)); }

SymbolStream to_symbol_stream(const ErasureStream& s) {
  SymbolStream out;
  out.n = s.n;
  for (const auto& step : s.steps) {
    Vec v;
    for (const auto& sym : step) {
      if (!sym) throw ParseError("stream contains erasures");
      v.push_back(*sym);
    }
    out.steps.push_back(std::move(v));
  }
  return out;
}

PolyVector parse_poly_vector(const FieldPtr& field, std::string_view text) {
  const PolyMatrix m = parse_poly_matrix(field, text);
  if (m.rows() != 1) throw ParseError("expected a single row");
  return m.row(0);
}

std::string format_poly_vector(const PolyVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " ; " : "") + format_poly_literal(v[i]);
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace convkit
