// Copyright 2026 The prngforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prngforge/primality.hpp"

#include <cstdint>

#include <gtest/gtest.h>

#include "oracle/reference.hpp"
#include "support/testing.hpp"

namespace prngforge {
namespace {

TEST(Primality, SmallSafeprimes) {
  EXPECT_TRUE(is_safeprime(7));
  EXPECT_FALSE(is_safeprime(13));
  EXPECT_TRUE(is_safeprime(47));
  EXPECT_TRUE(is_safeprime(5));
  EXPECT_FALSE(is_safeprime(3));
  EXPECT_FALSE(is_safeprime(2));
  EXPECT_FALSE(is_safeprime(0));
  EXPECT_FALSE(is_safeprime(1));
}

TEST(Primality, AgreesWithTrialDivisionBelow100000) {
  for (std::uint64_t n = 0; n < 100'000; ++n) {
    ASSERT_EQ(is_prime(n), oracle::prime_by_trial_division(n)) << n;
  }
}

TEST(Primality, StrongPseudoprimesAndLargeValues) {
  // Strong pseudoprimes to several small bases.
  for (std::uint64_t n : {2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL,
                          2152302898747ULL, 3474749660383ULL,
                          341550071728321ULL, 3825123056546413051ULL}) {
    EXPECT_FALSE(is_prime(n)) << n;
  }
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(18446744073709551615ULL));
  EXPECT_TRUE(is_prime(4294967291ULL));
  EXPECT_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
}

TEST(Primality, RandomOddValuesAgreeWithTrialDivision) {
  testing::for_all(2000, 11, [](std::mt19937_64& rng, unsigned) {
    const std::uint64_t n = (rng() % (std::uint64_t{1} << 34)) | 1;
    ASSERT_EQ(is_prime(n), oracle::prime_by_trial_division(n)) << n;
  });
}

TEST(Primality, MwcMultiplierPredicate) {
  EXPECT_TRUE(is_mwc_multiplier(3, 4));
  EXPECT_EQ(is_mwc_multiplier(36969, 16), is_safeprime(36969ULL * 65536 - 1));
  EXPECT_EQ(is_mwc_multiplier(18000, 16), is_safeprime(18000ULL * 65536 - 1));
  EXPECT_FALSE(is_mwc_multiplier(0, 16));
  EXPECT_FALSE(is_mwc_multiplier(1, 16));
  EXPECT_FALSE(is_mwc_multiplier(3, 33));
}

}  // namespace
}  // namespace prngforge
