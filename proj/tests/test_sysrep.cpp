#include <gtest/gtest.h>

#include <random>

#include "convkit/errors.hpp"
#include "convkit/metrics.hpp"
#include "convkit/sysrep.hpp"
#include "oracles.hpp"

using namespace convkit;

namespace {

ConvolutionalCode example_code() {
  return ConvolutionalCode::from_generator(parse_poly_matrix(Field::make(2, 1), "1 ; 1 ; 0 1 | 0 0 1 ; 1 ; 1 1"));
}

ConvolutionalCode back_to_code_order(const IsoRep& sys, const std::vector<std::size_t>& columns) {
  std::vector<std::size_t> order(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) order[columns[i]] = i;
  return permute_columns(code_from_iso(sys), order);
}

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(rng() % f->order());
  return m;
}

}  // namespace

TEST(Sysrep, ExampleRealizationRoundTrip) {
  const auto C = example_code();
  const Realization r = iso_from_code(C);
  EXPECT_EQ(r.system.s(), 3u);
  EXPECT_EQ(r.system.k(), 2u);
  EXPECT_EQ(r.system.n(), 3u);
  const auto ro = reachability_observability(r.system);
  EXPECT_TRUE(ro.reachable);
  EXPECT_TRUE(ro.observable);
  EXPECT_TRUE(pbh_reachable(r.system));
  EXPECT_TRUE(pbh_observable(r.system));
  EXPECT_TRUE(same_code(back_to_code_order(r.system, r.columns), C));
}

TEST(Sysrep, RandomRealizationsRoundTrip) {
  std::mt19937_64 rng(77);
  const std::vector<std::tuple<std::size_t, std::size_t, int>> params{{2, 1, 1}, {2, 1, 2}, {3, 1, 1}, {3, 2, 1}, {3, 2, 2}};
  for (auto f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
    for (auto [n, k, d] : params) {
      const auto C = oracle::random_code(f, n, k, d, rng);
      const Realization r = iso_from_code(C);
      EXPECT_EQ(r.system.s(), static_cast<std::size_t>(d));
      EXPECT_TRUE(same_code(back_to_code_order(r.system, r.columns), C));
      EXPECT_TRUE(reachability_observability(r.system).observable);
      EXPECT_EQ(code_from_iso(r.system).degree(), d);
    }
  }
}

TEST(Sysrep, TrajectoriesReproduceCodewords) {
  std::mt19937_64 rng(8);
  const auto f = Field::make(3, 1);
  const auto C = oracle::random_code(f, 3, 2, 2, rng);
  const Realization r = iso_from_code(C);
  for (int trial = 0; trial < 20; ++trial) {
    const PolyVector c = C.encode({oracle::random_poly(f, 3, rng), oracle::random_poly(f, 3, rng)});
    const std::size_t steps = static_cast<std::size_t>(std::max(degree(c), 0)) + 1;
    std::vector<Vec> inputs(steps, Vec(2));
    for (std::size_t t = 0; t < steps; ++t)
      for (std::size_t j = 0; j < 2; ++j) inputs[t][j] = c[r.columns[1 + j]].coeff(static_cast<int>(t));
    const Trajectory tr = encode_iso(r.system, inputs);
    ASSERT_TRUE(tr.returned_to_zero);
    ASSERT_LE(tr.codewords.size(), steps);
    for (std::size_t t = 0; t < steps; ++t)
      for (std::size_t i = 0; i < 3; ++i) {
        const Elem got = t < tr.codewords.size() ? tr.codewords[t][i] : 0;
        EXPECT_EQ(got, c[r.columns[i]].coeff(static_cast<int>(t)));
      }
  }
}

TEST(Sysrep, CatastrophicCodeRealizationIsNotObservable) {
  const auto Ct = ConvolutionalCode::from_generator(
      parse_poly_matrix(Field::make(2, 1), "1 1 1 ; 0 1 ; 1 0 1 | 0 0 1 ; 1 ; 1 1"));
  const Realization r = iso_from_code(Ct);
  EXPECT_EQ(r.system.s(), 4u);
  EXPECT_TRUE(reachability_observability(r.system).reachable);
  EXPECT_FALSE(reachability_observability(r.system).observable);
  EXPECT_FALSE(pbh_observable(r.system));
}

TEST(Sysrep, RankAndPbhTestsAgree) {
  std::mt19937_64 rng(19);
  for (auto f : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t s = 1 + rng() % 3;
      IsoRep sys{random_matrix(f, s, s, rng), random_matrix(f, 1, s, rng), random_matrix(f, s, 1, rng),
                 random_matrix(f, 1, 1, rng)};
      const auto ro = reachability_observability(sys);
      EXPECT_EQ(ro.reachable, pbh_reachable(sys));
      EXPECT_EQ(ro.observable, pbh_observable(sys));
      EXPECT_EQ(ro.reachable, ro.reachability_rank == s);
    }
  }
}

TEST(Sysrep, KalmanFormSplitsUnreachablePart) {
  std::mt19937_64 rng(4);
  const auto f = Field::make(3, 1);
  const auto C = oracle::random_code(f, 2, 1, 2, rng);
  const IsoRep base = iso_from_code(C).system;
  // Append an unreachable state.
  Matrix A(f, 3, 3), B(f, 1, 3), Cm(f, 3, 1);
  A.set_block(0, 0, base.A);
  A(2, 2) = 2;
  B.set_block(0, 0, base.B);
  Cm.set_block(0, 0, base.C);
  Cm(2, 0) = 1;
  const IsoRep big{A, B, Cm, base.D};
  EXPECT_FALSE(reachability_observability(big).reachable);
  const KalmanForm kf = kalman_form(big);
  EXPECT_EQ(kf.reachable_dimension, 2u);
  const auto Sinv = inverse(kf.S);
  ASSERT_TRUE(Sinv.has_value());
  EXPECT_EQ(*Sinv * big.A * kf.S, kf.system.A);
  EXPECT_EQ(big.B * kf.S, kf.system.B);
  EXPECT_EQ(*Sinv * big.C, kf.system.C);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(kf.system.A(i, 2), 0u);
  EXPECT_EQ(kf.system.B(0, 2), 0u);
  const IsoRep small = minimal_iso(big);
  EXPECT_EQ(small.s(), 2u);
  EXPECT_TRUE(reachability_observability(small).reachable);
  EXPECT_TRUE(same_code(code_from_iso(small), code_from_iso(big)));
}

TEST(Sysrep, SystemsMdsConstruction) {
  const auto f5 = Field::make(5, 1);
  const auto small = mds_from_system(2, 1, f5);
  EXPECT_EQ(small.code.generator(), parse_poly_matrix(f5, "2 2 ; 2 1"));
  EXPECT_TRUE(is_mds(small.code).holds);
  EXPECT_TRUE(mdp_criterion_FL(small.system).holds);
  EXPECT_TRUE(is_mdp(small.code).holds);

  const auto f7 = Field::make(7, 1);
  const auto big = mds_from_system(3, 2, f7);
  EXPECT_EQ(big.code.degree(), 2);
  EXPECT_EQ(free_distance(big.code).value, 9);
  EXPECT_EQ(oracle::bounded_free_distance(big.code, 3), 9);
  EXPECT_TRUE(is_mds(big.code).holds);

  EXPECT_THROW(mds_from_system(3, 2, f5), InvalidArgument);
}

TEST(Sysrep, MarkovCriterionMatchesDistances) {
  std::mt19937_64 rng(55);
  for (auto f : {Field::make(5, 1), Field::make(7, 1), Field::make(2, 3)}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto C = oracle::random_code(f, 2, 1, 1, rng);
      const IsoRep sys = iso_from_code(C).system;
      EXPECT_EQ(mdp_criterion_FL(sys).holds, is_mdp(C).holds);
      const Matrix F = markov_parameter_matrix(sys, C.L());
      EXPECT_EQ(F.rows(), static_cast<std::size_t>(C.L() + 1) * C.k());
      EXPECT_EQ(F.cols(), static_cast<std::size_t>(C.L() + 1) * (C.n() - C.k()));
    }
  }
}

TEST(Sysrep, ValidateRejectsBadShapes) {
  const auto f = Field::make(2, 1);
  const IsoRep bad{Matrix(f, 2, 2), Matrix(f, 1, 3), Matrix(f, 2, 1), Matrix(f, 1, 1)};
  EXPECT_THROW(bad.validate(), InvalidArgument);
}
