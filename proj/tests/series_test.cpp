#include <gtest/gtest.h>

#include <random>

#include "eulerlab/errors.hpp"
#include "eulerlab/series.hpp"

using namespace eulerlab;

namespace {

TruncatedSeries S(std::size_t order, std::vector<long> coeffs) {
  std::vector<BigInt> big;
  for (long c : coeffs) big.emplace_back(c);
  return TruncatedSeries(order, std::move(big));
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool unit) {
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::vector<BigInt> c(order + 1);
  for (auto& x : c) x = coeff(rng);
  if (unit) c[0] = rng() % 2 ? 1 : -1;
  return TruncatedSeries(order, std::move(c));
}

}  // namespace

TEST(SeriesAdd, Examples) {
  EXPECT_EQ(S(3, {1, 1}) + S(3, {1, -1}), S(3, {2}));
  const TruncatedSeries s = S(4, {3, 0, -2, 7});
  EXPECT_EQ(TruncatedSeries(4) + s, s);
  EXPECT_EQ(S(2, {1, 2}) + S(2, {0, 3, 1}), S(2, {1, 5, 1}));
}

TEST(SeriesAdd, MixedOrdersTruncateToSmaller) {
  const TruncatedSeries sum = S(5, {1, 1, 1, 1, 1, 1}) + S(2, {1, 1, 1});
  EXPECT_EQ(sum.order(), 2u);
  EXPECT_EQ(sum, S(2, {2, 2, 2}));
}

TEST(SeriesMul, Examples) {
  EXPECT_EQ(S(4, {1, 1}) * S(4, {1, -1}), S(4, {1, 0, -1}));
  const TruncatedSeries s = S(5, {2, -1, 0, 4});
  EXPECT_EQ(s * TruncatedSeries::one(5), s);
  EXPECT_EQ(S(3, {1, 1, 1}) * S(3, {1, -1}), S(3, {1, 0, 0, -1}));
  // truncation drops q^3 and above
  EXPECT_EQ(S(2, {1, 1, 1}) * S(2, {1, -1}), S(2, {1}));
}

TEST(SeriesReciprocal, Examples) {
  const TruncatedSeries geometric = series_reciprocal(S(10, {1, -1}));
  for (std::size_t j = 0; j <= 10; ++j) EXPECT_EQ(geometric[j], 1);
  EXPECT_EQ(series_reciprocal(TruncatedSeries::one(6)), TruncatedSeries::one(6));
  EXPECT_EQ(series_reciprocal(S(4, {-1})), S(4, {-1}));
}

TEST(SeriesReciprocal, NonUnitConstantThrows) {
  EXPECT_THROW(series_reciprocal(S(3, {2, 1})), InvertibilityError);
  EXPECT_THROW(series_reciprocal(S(3, {0, 1})), InvertibilityError);
}

TEST(Pochhammer, Examples) {
  // (-q;q)_inf counts distinct parts; A(6) = 4
  EXPECT_EQ(pochhammer(PochSpec::infinite(-1, 1, 1), 6)[6], 4);
  EXPECT_EQ(pochhammer(PochSpec::finite(1, 3, 2, 0), 8), TruncatedSeries::one(8));
  // 1/(q;q^2)_inf counts odd parts; B(6) = 4
  EXPECT_EQ(series_reciprocal(pochhammer(PochSpec::infinite(1, 1, 2), 6))[6], 4);
}

TEST(Pochhammer, FiniteProductByHand) {
  // (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
  EXPECT_EQ(pochhammer(PochSpec::finite(1, 1, 1, 3), 8),
            S(8, {1, -1, -1, 0, 1, 1, -1}));
  // (1+q^2)(1+q^5) = 1 + q^2 + q^5 + q^7
  EXPECT_EQ(pochhammer(PochSpec::finite(-1, 2, 3, 2), 8),
            S(8, {1, 0, 1, 0, 0, 1, 0, 1}));
}

TEST(Pochhammer, InfiniteStopsAtOrder) {
  EXPECT_EQ(pochhammer(PochSpec::infinite(1, 50, 1), 10), TruncatedSeries::one(10));
  EXPECT_EQ(pochhammer(PochSpec::infinite(1, 1, 1), 0), TruncatedSeries::one(0));
}

TEST(Pochhammer, InvalidSpecs) {
  EXPECT_THROW(PochSpec::infinite(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(PochSpec::infinite(1, 0, 1), std::invalid_argument);
  EXPECT_THROW(PochSpec::finite(1, 1, 0, 3), std::invalid_argument);
}

TEST(Pochhammer, ReciprocalRoutesAgree) {
  for (int sign : {1, -1})
    for (std::uint64_t offset : {1, 2, 5})
      for (std::uint64_t step : {1, 2, 3}) {
        const auto spec = PochSpec::infinite(sign, offset, step);
        EXPECT_EQ(reciprocal_pochhammer(spec, 60), series_reciprocal(pochhammer(spec, 60)));
        const auto finite = PochSpec::finite(sign, offset, step, 4);
        EXPECT_EQ(reciprocal_pochhammer(finite, 60),
                  series_reciprocal(pochhammer(finite, 60)));
      }
}

TEST(Binomials, DivideUndoesMultiply) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const TruncatedSeries s = random_series(rng, 30, false);
    for (int sign : {1, -1})
      for (std::size_t e : {1u, 4u, 17u, 31u}) {
        TruncatedSeries t = s;
        t.multiply_binomial(sign, e);
        t.divide_binomial(sign, e);
        ASSERT_EQ(t, s);
      }
  }
}

TEST(RingLaws, RandomProperties) {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t order = rng() % 25;
    const TruncatedSeries a = random_series(rng, order, false);
    const TruncatedSeries b = random_series(rng, order, false);
    const TruncatedSeries c = random_series(rng, order, false);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a - b) + b, a);

    const TruncatedSeries u = random_series(rng, order, true);
    const TruncatedSeries inv = series_reciprocal(u);
    ASSERT_EQ(u * inv, TruncatedSeries::one(order));
    ASSERT_EQ(inv * u, TruncatedSeries::one(order));
    ASSERT_EQ(series_reciprocal(inv), u);
  }
}

TEST(Truncation, BuildThenTruncateEqualsDirectBuild) {
  const auto spec = PochSpec::infinite(-1, 2, 3);
  for (std::size_t m : {0u, 1u, 7u, 39u}) {
    EXPECT_EQ(pochhammer(spec, 40).truncated(m), pochhammer(spec, m));
    EXPECT_EQ(reciprocal_pochhammer(spec, 40).truncated(m), reciprocal_pochhammer(spec, m));
  }
  EXPECT_THROW(TruncatedSeries(3).truncated(4), std::invalid_argument);
}

TEST(Series, ValuationShiftMonomial) {
  EXPECT_FALSE(TruncatedSeries(5).valuation());
  EXPECT_TRUE(TruncatedSeries(5).is_zero());
  EXPECT_EQ(S(5, {0, 0, 3}).valuation(), 2u);
  EXPECT_EQ(S(5, {1, 2}).shifted(4), S(5, {0, 0, 0, 0, 1, 2}));
  EXPECT_EQ(S(5, {1, 2}).shifted(5), S(5, {0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(TruncatedSeries::monomial(3, 9), TruncatedSeries(3));
  EXPECT_EQ(TruncatedSeries::monomial(3, 2, -4), S(3, {0, 0, -4}));
}

TEST(ExportFormat, TabSeparatedRoundTrip) {
  const TruncatedSeries s = S(4, {1, -1, 0, 12345678});
  EXPECT_EQ(format_series(s), "0\t1\n1\t-1\n2\t0\n3\t12345678\n4\t0\n");
  EXPECT_EQ(parse_series(format_series(s)), s);
  TruncatedSeries big(1);
  big[1] = BigInt("123456789012345678901234567890");
  EXPECT_EQ(parse_series(format_series(big)), big);
}

TEST(ExportFormat, ParseErrors) {
  EXPECT_THROW(parse_series(""), ParseError);
  EXPECT_THROW(parse_series("0\t1\n2\t1\n"), ParseError);
  EXPECT_THROW(parse_series("0 1\n"), ParseError);
  EXPECT_THROW(parse_series("0\tx\n"), ParseError);
}
