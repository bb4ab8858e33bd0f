#include <gtest/gtest.h>

#include "convkit/constructions.hpp"
#include "convkit/errors.hpp"
#include "convkit/metrics.hpp"
#include "oracles.hpp"

using namespace convkit;

TEST(Constructions, JustesenSmallFields) {
  const auto r5 = justesen_mds(2, Field::make(5, 1));
  EXPECT_EQ(r5.code.generator(), parse_poly_matrix(Field::make(5, 1), "3 1 ; 3 4"));
  EXPECT_EQ(r5.code.degree(), 1);
  EXPECT_EQ(free_distance(r5.code).value, 4);
  EXPECT_EQ(oracle::bounded_free_distance(r5.code, 4), 4);

  const auto r7 = justesen_mds(2, Field::make(7, 1));
  EXPECT_EQ(r7.code.degree(), 1);
  EXPECT_EQ(oracle::bounded_free_distance(r7.code, 3), 4);

  const auto r37 = justesen_mds(3, Field::make(7, 1));
  EXPECT_EQ(r37.code.degree(), 2);
  EXPECT_EQ(r37.code.k(), 1u);
  EXPECT_EQ(free_distance(r37.code).value, 9);
  EXPECT_EQ(oracle::bounded_free_distance(r37.code, 3), 9);

  EXPECT_THROW(justesen_mds(3, Field::make(3, 1)), InvalidArgument);
}

TEST(Constructions, GllMeetsSingletonBound) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u}) {
    FieldPtr f = q == 4 ? Field::make(2, 2) : q == 8 ? Field::make(2, 3) : Field::make(q, 1);
    for (std::size_t n = 2; n <= 4 && q >= n + 1; ++n)
      for (int d = 1; d <= static_cast<int>(n) - 1; ++d) {
        const auto res = gll_mds(n, d, f);
        EXPECT_EQ(res.code.k(), 1u);
        EXPECT_EQ(internal_degree(res.code.generator()), d);
        EXPECT_EQ(free_distance(res.code).value, bounds(res.code).singleton) << "q=" << q << " n=" << n << " d=" << d;
      }
  }
  const auto g = gll_mds(2, 1, Field::make(5, 1));
  EXPECT_EQ(g.code.generator(), parse_poly_matrix(Field::make(5, 1), "1 1 ; 1 2"));
  EXPECT_THROW(gll_mds(3, 3, Field::make(5, 1)), InvalidArgument);
}

TEST(Constructions, SmithCyclicConstruction) {
  const auto a = smith_mds(3, 1, 2, 4, 13, 1);
  EXPECT_TRUE(is_mds(a.code).holds);
  const auto b = smith_mds(2, 1, 1, 3, 7, 1);
  EXPECT_TRUE(is_mds(b.code).holds);
  EXPECT_EQ(free_distance(b.code).value, oracle::bounded_free_distance(b.code, 3));
  EXPECT_THROW(smith_mds(2, 1, 1, 4, 7, 1), InvalidArgument);
}

TEST(Constructions, PolyphaseSplitReassembles) {
  const auto f = Field::make(7, 1);
  const Poly g(f, {1, 2, 3, 4, 5, 6, 1});
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto phases = polyphase_split(g, n);
    ASSERT_EQ(phases.size(), n);
    Poly sum(f);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Elem> spread;
      for (int d = 0; d <= std::max(phases[i].degree(), 0); ++d) {
        spread.push_back(phases[i].coeff(d));
        if (d < phases[i].degree()) spread.insert(spread.end(), n - 1, 0);
      }
      sum = sum + Poly(f, spread).shifted(static_cast<int>(i));
    }
    EXPECT_EQ(sum, g);
  }
}

TEST(Constructions, BinomialToeplitzPrimes) {
  const auto t = binomial_toeplitz(4);
  EXPECT_EQ(t[3][0], 1u);
  EXPECT_EQ(t[2][0], 3u);
  EXPECT_EQ(t[3][1], 3u);
  EXPECT_EQ(t[0][1], 0u);
  // Smallest primes for which the b x b matrix is superregular, from an exhaustive Leibniz search.
  const std::vector<std::uint32_t> primes{2, 2, 5, 7, 11, 23, 43};
  for (std::size_t b = 1; b <= primes.size(); ++b) {
    const auto s = binomial_superregular(b);
    EXPECT_EQ(s.prime, primes[b - 1]) << b;
    EXPECT_TRUE(is_superregular(s.matrix, SuperregularShape::LowerTriangularToeplitz).holds);
  }
}

TEST(Constructions, MdpFromSuperregular) {
  const auto [I, J] = superregular_selection(3, 2, 1);
  EXPECT_FALSE(I.empty());
  EXPECT_TRUE(std::is_sorted(I.begin(), I.end()));
  EXPECT_TRUE(std::is_sorted(J.begin(), J.end()));
  const auto T = binomial_superregular(6);
  const auto res = mdp_from_superregular(3, 2, 1, T.matrix);
  EXPECT_EQ(res.code.n(), 3u);
  EXPECT_EQ(res.code.k(), 2u);
  EXPECT_EQ(res.code.degree(), 1);
  EXPECT_TRUE(is_mdp(res.code, MdpMethod::Distances).holds);
  EXPECT_TRUE(is_mdp(res.code, MdpMethod::Minors).holds);
  EXPECT_THROW(mdp_from_superregular(2, 1, 1, T.matrix), InvalidArgument);
  EXPECT_THROW(mdp_from_superregular(4, 2, 1, T.matrix), InvalidArgument);
}

TEST(Constructions, AlphaPowerSuperregularAndMdp) {
  const auto sr = anp_superregular(2, 1, 1, 2, 8);
  EXPECT_TRUE(sr.guaranteed);
  EXPECT_TRUE(is_superregular(sr.matrix).holds);
  const auto f = Field::make(2, 8);
  EXPECT_EQ(sr.blocks[0](0, 0), f->alpha_pow(1));

  for (auto [d, N] : std::vector<std::pair<int, std::uint32_t>>{{1, 8}, {1, 6}, {2, 4}}) {
    const auto res = anp_mdp(2, 1, d, 2, N);
    EXPECT_EQ(res.code.degree(), d);
    EXPECT_TRUE(is_mdp(res.code, MdpMethod::Minors).holds) << d << " " << N;
  }
  EXPECT_TRUE(anp_mdp(2, 1, 1, 2, 6).guaranteed);
  EXPECT_FALSE(anp_mdp(2, 1, 2, 2, 4).guaranteed);
  EXPECT_TRUE(is_mdp(anp_mdp(2, 1, 2, 2, 4).code, MdpMethod::Distances).holds);
}

TEST(Constructions, CompleteMdpBinomial) {
  const auto small = complete_mdp_binomial(2, 1, 1, 101);
  EXPECT_EQ(small.characteristic_bound, "140");
  EXPECT_FALSE(small.result.guaranteed);
  EXPECT_TRUE(is_complete_mdp(small.result.code).holds);
  EXPECT_FALSE(exceeds_characteristic_bound(2, 1, 1, 139));
  EXPECT_TRUE(exceeds_characteristic_bound(2, 1, 1, 149));

  const auto two = complete_mdp_binomial(2, 1, 2, 101);
  EXPECT_TRUE(is_complete_mdp(two.result.code).holds);
  const auto weak = complete_mdp_binomial(2, 1, 2, 11);
  EXPECT_TRUE(is_mdp(weak.result.code).holds);
  EXPECT_FALSE(is_complete_mdp(weak.result.code).holds);
  EXPECT_THROW(complete_mdp_binomial(3, 1, 1, 101), InvalidArgument);
}

TEST(Constructions, CompleteMdpAlpha) {
  const auto res = complete_mdp_alpha(2, 1, 1, 2, 10);
  EXPECT_TRUE(is_complete_mdp(res.code).holds);
  EXPECT_TRUE(is_mdp(res.code, MdpMethod::Minors).holds);
}

TEST(Constructions, AlphaPowerOfTwo) {
  const auto f = Field::make(2, 5);
  Elem x = f->primitive();
  for (std::uint64_t e = 0; e < 40; ++e) {
    EXPECT_EQ(alpha_power_of_two(*f, e), x) << e;
    x = f->mul(x, x);
  }
}

TEST(Constructions, ProvenanceRecorded) {
  const auto res = gll_mds(3, 2, Field::make(2, 2));
  EXPECT_EQ(res.recipe, "gll-mds");
  EXPECT_FALSE(res.params.empty());
  EXPECT_EQ(free_distance(res.code).value, 9);
}
