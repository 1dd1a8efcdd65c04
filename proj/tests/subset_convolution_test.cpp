// Copyright 2026 The equicolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "equicolor/subset_convolution.hpp"

#include <random>

#include "gtest/gtest.h"

#include "equicolor/ring.hpp"

namespace equicolor {
namespace {

using F = SetFunction<Count>;

F naive_zeta(const F& f) {
  F out(f.ground_size());
  for (Mask s = 0; s < f.size(); ++s) {
    for (Mask t = 0; t < f.size(); ++t) {
      if ((t & ~s) == 0) out[s] += f[t];
    }
  }
  return out;
}

F naive_mobius(const F& f) {
  F out(f.ground_size());
  for (Mask s = 0; s < f.size(); ++s) {
    for (Mask t = 0; t < f.size(); ++t) {
      if ((t & ~s) != 0) continue;
      if (std::popcount(s ^ t) % 2) {
        out[s] -= f[t];
      } else {
        out[s] += f[t];
      }
    }
  }
  return out;
}

F random_function(int m, std::mt19937_64& rng, std::uint64_t bound) {
  F f(m);
  for (Mask s = 0; s < f.size(); ++s) f[s] = rng() % bound;
  return f;
}

TEST(ZetaTest, Examples) {
  EXPECT_EQ(zeta(F(1, {5, 7})), F(1, {5, 12}));
  F f(2, {1, 2, 3, 4});
  EXPECT_EQ(zeta(f), F(2, {1, 3, 4, 10}));
  EXPECT_EQ(zeta(f), naive_zeta(f));
  EXPECT_EQ(zeta(F(3)), F(3));
}

TEST(MobiusTest, Examples) {
  EXPECT_EQ(mobius(F(1, {5, 12})), F(1, {5, 7}));
  F delta(3);
  delta[7] = 1;
  EXPECT_EQ(mobius(delta), naive_mobius(delta));
  F ones(3, std::vector<Count>(8, 1));
  EXPECT_EQ(mobius(ones), naive_mobius(ones));
}

TEST(TransformTest, InverseExhaustiveSmall) {
  for (int m = 0; m <= 4; ++m) {
    const std::size_t size = std::size_t{1} << m;
    // Every function with values in {0, 1, 2} for m <= 2; a sample above.
    std::mt19937_64 rng(m);
    const int count = m <= 2 ? static_cast<int>(std::pow(3, size)) : 300;
    for (int code = 0; code < count; ++code) {
      F f(m);
      int c = code;
      for (Mask s = 0; s < size; ++s) {
        if (m <= 2) {
          f[s] = c % 3;
          c /= 3;
        } else {
          f[s] = rng() % 3;
        }
      }
      EXPECT_EQ(mobius(zeta(f)), f);
      EXPECT_EQ(zeta(mobius(f)), f);
      EXPECT_EQ(zeta(f), naive_zeta(f));
      EXPECT_EQ(mobius(f), naive_mobius(f));
    }
  }
}

TEST(TransformTest, InverseRandom) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_function(static_cast<int>(rng() % 13), rng, 1000000);
    EXPECT_EQ(mobius(zeta(f)), f);
  }
}

TEST(SubsetConvolveTest, IdentityElement) {
  std::mt19937_64 rng(10);
  auto f = random_function(4, rng, 50);
  F delta(4);
  delta[0] = 1;
  EXPECT_EQ(subset_convolve(f, delta), f);
  EXPECT_EQ(subset_convolve(delta, f), f);
}

TEST(SubsetConvolveTest, AllOnes) {
  F ones(2, {1, 1, 1, 1});
  EXPECT_EQ(subset_convolve(ones, ones), F(2, {1, 2, 2, 4}));
  EXPECT_EQ(naive_convolve(ones, ones), F(2, {1, 2, 2, 4}));
}

TEST(SubsetConvolveTest, NaiveIsTheDefinition) {
  F f(2, {1, 2, 3, 4});
  F g(2, {5, 6, 7, 8});
  // S = {0,1}: f(0)g(3) + f(1)g(2) + f(2)g(1) + f(3)g(0).
  EXPECT_EQ(naive_convolve(f, g)[3], Count(1 * 8 + 2 * 7 + 3 * 6 + 4 * 5));
  EXPECT_EQ(naive_convolve(f, g)[0], Count(5));
}

TEST(SubsetConvolveTest, MatchesNaiveOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(rng() % 11);
    auto f = random_function(m, rng, trial % 2 ? 3 : 1u << 30);
    auto g = random_function(m, rng, trial % 3 ? 5 : 1u << 30);
    EXPECT_EQ(subset_convolve(f, g), naive_convolve(f, g));
  }
}

TEST(SubsetConvolveTest, SparseRanksAreHandled) {
  // Functions living on a single rank exercise the rank skipping.
  F f(5), g(5);
  for (Mask s = 0; s < 32; ++s) {
    if (std::popcount(s) == 2) f[s] = s;
    if (std::popcount(s) == 1) g[s] = 3;
  }
  EXPECT_EQ(subset_convolve(f, g), naive_convolve(f, g));
  EXPECT_EQ(subset_convolve(F(5), g), F(5));
}

TEST(SubsetConvolveTest, CommutativeAndAssociative) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = static_cast<int>(rng() % 9);
    auto a = random_function(m, rng, 100);
    auto b = random_function(m, rng, 100);
    auto c = random_function(m, rng, 100);
    EXPECT_EQ(subset_convolve(a, b), subset_convolve(b, a));
    EXPECT_EQ(subset_convolve(subset_convolve(a, b), c), subset_convolve(a, subset_convolve(b, c)));
  }
}

TEST(SubsetConvolveTest, AccumulatorSumsProducts) {
  std::mt19937_64 rng(13);
  auto a = random_function(6, rng, 10), b = random_function(6, rng, 10);
  auto c = random_function(6, rng, 10), d = random_function(6, rng, 10);
  RankedAccumulator<Count> acc(6);
  acc.add_product(RankedTransform<Count>(a), RankedTransform<Count>(b));
  acc.add_product(RankedTransform<Count>(c), RankedTransform<Count>(d));
  auto expected = naive_convolve(a, b);
  auto second = naive_convolve(c, d);
  for (Mask s = 0; s < expected.size(); ++s) expected[s] += second[s];
  EXPECT_EQ(acc.finish(), expected);
}

TEST(SubsetConvolveTest, RejectsMismatchedGrounds) { EXPECT_THROW(subset_convolve(F(2), F(3)), std::invalid_argument); }

TEST(SubsetConvolveTest, ModularAgreesWithExact) {
  std::mt19937_64 rng(14);
  const std::uint64_t p = random_prime_62(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = static_cast<int>(rng() % 9);
    auto f = random_function(m, rng, ~std::uint64_t{0});
    auto g = random_function(m, rng, ~std::uint64_t{0});
    SetFunction<ModNum> fm(m), gm(m);
    for (Mask s = 0; s < f.size(); ++s) {
      fm[s] = ModNum(static_cast<std::uint64_t>(f[s] % p), p);
      gm[s] = ModNum(static_cast<std::uint64_t>(g[s] % p), p);
    }
    auto exact = subset_convolve(f, g);
    auto mod = subset_convolve(fm, gm);
    for (Mask s = 0; s < f.size(); ++s) EXPECT_EQ(mod[s].value(), static_cast<std::uint64_t>(exact[s] % p));
  }
}

TEST(SetFunctionTest, SizeChecks) {
  EXPECT_EQ(F(0).size(), 1u);
  EXPECT_THROW(F(kMaxGroundSize + 1), std::invalid_argument);
  EXPECT_THROW(F(2, std::vector<Count>(3)), std::invalid_argument);
}

TEST(RingTest, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    EXPECT_EQ(is_prime_u64(n), prime) << n;
  }
  EXPECT_TRUE(is_prime_u64(2305843009213693951ull));  // 2^61 - 1
  EXPECT_FALSE(is_prime_u64(2305843009213693953ull));
}

TEST(RingTest, RandomPrimesAreDeterministicAndInRange) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto p = random_prime_62(seed);
    EXPECT_EQ(p, random_prime_62(seed));
    EXPECT_TRUE(is_prime_u64(p));
    EXPECT_GE(p, std::uint64_t{1} << 61);
    EXPECT_LT(p, std::uint64_t{1} << 62);
  }
  EXPECT_NE(random_prime_62(1), random_prime_62(2));
}

TEST(RingTest, ChineseRemainder) {
  const auto p1 = random_prime_62(1), p2 = random_prime_62(2);
  Count x("123456789012345678901234567890");
  const auto r1 = static_cast<std::uint64_t>(x % p1), r2 = static_cast<std::uint64_t>(x % p2);
  EXPECT_EQ(crt_combine(r1, p1, r2, p2), x % (Count(p1) * p2));
  EXPECT_EQ(crt_combine(3, 5, 2, 7), Count(23));
}

TEST(RingTest, ModNumArithmetic) {
  ModNum a(5, 7), b(4, 7);
  EXPECT_EQ((a + b).value(), 2u);
  EXPECT_EQ((b - a).value(), 6u);
  EXPECT_EQ((a * b).value(), 6u);
  ModNum zero;
  zero += a;
  EXPECT_EQ(zero.modulus(), 7u);
  EXPECT_EQ(zero.value(), 5u);
}

}  // namespace
}  // namespace equicolor
