#include "ordlat/oracle.hpp"

#include <random>

#include <gtest/gtest.h>

#include "ordlat/error.hpp"
#include "ordlat/group.hpp"
#include "support/oracles.hpp"

using namespace ordlat;

namespace {

std::vector<Natural> nat(std::initializer_list<unsigned long> xs) {
  std::vector<Natural> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(ElementOrder, Examples) {
  const std::vector<std::uint64_t> f{4, 16};
  EXPECT_EQ(oracle::element_order(std::vector<oracle::Residue>{0, 0}, f), 1u);
  EXPECT_EQ(oracle::element_order(std::vector<oracle::Residue>{2, 8}, f), 2u);
  EXPECT_EQ(oracle::element_order(std::vector<oracle::Residue>{1, 2}, f), 8u);
  EXPECT_EQ(oracle::element_order(nat({1, 2}), nat({4, 16})), 8);
  EXPECT_THROW(oracle::element_order(std::vector<oracle::Residue>{4, 0}, f), InvalidArgument);
  EXPECT_THROW(oracle::element_order(std::vector<oracle::Residue>{0}, f), InvalidArgument);
}

TEST(EnumerateSpectrum, Examples) {
  const auto s = oracle::enumerate_spectrum(nat({4, 16}));
  EXPECT_EQ(s.entries, (std::map<Natural, Natural>{{1, 1}, {2, 3}, {4, 12}, {8, 16}, {16, 32}}));
  EXPECT_EQ(s.exponent, 16);
  EXPECT_FALSE(s.group.has_value());

  EXPECT_EQ(oracle::enumerate_spectrum({}).entries, (std::map<Natural, Natural>{{1, 1}}));

  const auto t = oracle::enumerate_spectrum(nat({6, 12}));
  EXPECT_EQ(t.total(), 72);
  EXPECT_EQ(t.count(6), 24);
}

TEST(EnumerateSpectrum, Cap) {
  EXPECT_THROW(oracle::enumerate_spectrum(nat({1000, 101})), SizeError);
  EXPECT_NO_THROW(oracle::enumerate_spectrum(nat({10, 10}), 100));
  EXPECT_THROW(oracle::enumerate_spectrum(nat({10, 11}), 100), SizeError);
}

TEST(EnumerateSpectrum, TallyTotalIsProductOfFactors) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<unsigned long> f(1, 30);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Natural> fs;
    Natural product = 1;
    for (int i = 0; i < 3; ++i) {
      fs.emplace_back(f(rng));
      product *= fs.back();
    }
    ASSERT_EQ(oracle::enumerate_spectrum(fs).total(), product);
  }
}

TEST(EnumerateSpectrum, IsomorphicFactorListsAgree) {
  // Z_{mn} and Z_m x Z_n agree exactly when gcd(m, n) = 1.
  EXPECT_EQ(oracle::enumerate_spectrum(nat({6})), oracle::enumerate_spectrum(nat({2, 3})));
  EXPECT_FALSE(oracle::enumerate_spectrum(nat({4})) == oracle::enumerate_spectrum(nat({2, 2})));
  std::mt19937_64 rng(5);
  for (unsigned long n = 1; n <= 400; ++n) {
    for (const auto& raw : ordlat::testing::raw_groups_of_order(n, rng)) {
      const auto fs = ordlat::testing::to_naturals(raw);
      const auto g = from_cyclic_factors(fs);
      ASSERT_EQ(oracle::enumerate_spectrum(fs), oracle::enumerate_spectrum(g.invariant_factors()));
    }
  }
}
