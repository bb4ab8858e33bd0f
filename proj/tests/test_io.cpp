#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "convkit/constructions.hpp"
#include "convkit/errors.hpp"
#include "convkit/io.hpp"
#include "convkit/sysrep.hpp"
#include "oracles.hpp"

using namespace convkit;

namespace {

constexpr const char* kExampleFile =
    "# example\n"
    "field 2 1\n"
    "params 3 2\n"
    "generator\n"
    "1 ; 1 ; 0 1\n"
    "0 0 1 ; 1 ; 1 1\n";

}  // namespace

TEST(Io, ParsesCodeFile) {
  const CodeFile cf = parse_code_file(kExampleFile);
  EXPECT_EQ(cf.kind, CodeFile::Kind::Generator);
  EXPECT_EQ(cf.n, 3u);
  EXPECT_EQ(cf.k, 2u);
  ASSERT_EQ(cf.comments.size(), 1u);
  const auto C = cf.code();
  EXPECT_EQ(C.degree(), 3);
  EXPECT_EQ(C.generator(), parse_poly_matrix(Field::make(2, 1), "1 ; 1 ; 0 1 | 0 0 1 ; 1 ; 1 1"));
}

TEST(Io, CodeFileRoundTrips) {
  std::mt19937_64 rng(7);
  for (auto f : {Field::make(2, 1), Field::make(5, 1), Field::make(2, 3), Field::make(3, 2)}) {
    const auto C = oracle::random_code(f, 3, 2, 2, rng);
    const std::string text = format_code_file(C, {"recipe: random"});
    const CodeFile back = parse_code_file(text);
    EXPECT_EQ(back.code().generator(), C.generator());
    EXPECT_EQ(back.comments, std::vector<std::string>{"recipe: random"});
    EXPECT_EQ(format_code_file(back.code(), back.comments), text);

    const std::string ptext = format_code_file(f, CodeFile::Kind::ParityCheck, C.require_parity_check(), 3, 2);
    const CodeFile pback = parse_code_file(ptext);
    EXPECT_EQ(pback.kind, CodeFile::Kind::ParityCheck);
    EXPECT_TRUE(same_code(pback.code(), C));
  }
}

TEST(Io, IsoFileRoundTrips) {
  const auto res = anp_mdp(2, 1, 2, 2, 4);
  const Realization r = iso_from_code(res.code);
  const std::string text = format_iso_file(r.system, &r.columns);
  const IsoFile back = parse_iso_file(text);
  EXPECT_EQ(back.system.A, r.system.A);
  EXPECT_EQ(back.system.B, r.system.B);
  EXPECT_EQ(back.system.C, r.system.C);
  EXPECT_EQ(back.system.D, r.system.D);
  ASSERT_TRUE(back.columns.has_value());
  EXPECT_EQ(*back.columns, r.columns);
  EXPECT_FALSE(parse_iso_file(format_iso_file(r.system)).columns.has_value());
}

TEST(Io, StreamsRoundTrip) {
  const std::string text = "1 0 ?\n? ? 2\n0 0 0\n";
  const ErasureStream s = parse_stream(text);
  EXPECT_EQ(s.n, 3u);
  EXPECT_EQ(s.steps.size(), 3u);
  EXPECT_EQ(s.erasures(), 3u);
  EXPECT_EQ(format_stream(s), text);
  EXPECT_THROW(to_symbol_stream(s), ParseError);
  const SymbolStream full = to_symbol_stream(parse_stream("1 2\n3 4\n"));
  EXPECT_EQ(full.steps[1], (Vec{3, 4}));
  EXPECT_EQ(format_stream(full), "1 2\n3 4\n");
}

TEST(Io, PolyVectors) {
  const auto f = Field::make(7, 1);
  const PolyVector v = parse_poly_vector(f, "1 2 3 ; 0 ; 4 0 6");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], Poly(f, {1, 2, 3}));
  EXPECT_TRUE(v[1].is_zero());
  EXPECT_EQ(parse_poly_vector(f, format_poly_vector(v)), v);
}

TEST(Io, RejectsMalformedInput) {
  EXPECT_THROW(parse_code_file("params 3 2\ngenerator\n1 ; 1 ; 1\n"), ParseError);
  EXPECT_THROW(parse_code_file("field 2 1\nparams 3 2\ngenerator\n1 ; 1 ; 0 1\n"), ParseError);
  EXPECT_THROW(parse_code_file("field 2 1\nparams 3 2\nmatrix\n1 ; 1 ; 0 1\n0 ; 1 ; 1\n"), ParseError);
  EXPECT_THROW(parse_code_file("field 2 1\nparams 3 2\ngenerator\n1 ; 1\n0 ; 1\n"), ParseError);
  EXPECT_THROW(parse_code_file("field 4 1\nparams 2 1\ngenerator\n1 ; 1\n"), Error);
  EXPECT_THROW(parse_stream("1 2\n3\n"), ParseError);
  EXPECT_THROW(parse_stream("1 x\n"), ParseError);
  EXPECT_THROW(parse_iso_file("field 2 1\ndims 1 1 2\nA\n1\n"), ParseError);
}

TEST(Io, TextFiles) {
  const auto path = std::filesystem::temp_directory_path() / "convkit_io_test.txt";
  write_text_file(path.string(), kExampleFile);
  EXPECT_EQ(read_text_file(path.string()), kExampleFile);
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file((path / "missing").string()), Error);
}
