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

#ifndef PRNGFORGE_PRIMALITY_HPP_
#define PRNGFORGE_PRIMALITY_HPP_

#include <cstdint>

namespace prngforge {

/// Deterministic Miller-Rabin over the full 64-bit range. The witness set
/// {2, 3, 5, ..., 37} has no strong pseudoprime below 3.3e24.
bool is_prime(std::uint64_t n) noexcept;

/// True iff p is prime and (p - 1) / 2 is prime. Values below 5 are never
/// safeprimes (the smallest is 5 = 2*2 + 1).
bool is_safeprime(std::uint64_t p) noexcept;

/// True iff multiplier * 2^base_bits - 1 is a safeprime, i.e. the multiplier
/// yields a maximal-period multiply-with-carry lane in that base.
bool is_mwc_multiplier(std::uint64_t multiplier, unsigned base_bits) noexcept;

}  // namespace prngforge

#endif  // PRNGFORGE_PRIMALITY_HPP_
