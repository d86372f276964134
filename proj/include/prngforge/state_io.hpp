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

// Text format for saved generator states:
//
//   prngforge-state v1 <kind>
//   <word>
//   <word>
//   ...
//
// Words are decimal, one per line, streams back to back. Per stream:
//   mwc       hi.a hi.x hi.c lo.a lo.x lo.c
//   xorshift  cursor v0 .. v7
//   kiss      <mwc words> shr3.y lcg.x lcg.a lcg.c
//   lcg       x a c
//   shr3      y

#ifndef PRNGFORGE_STATE_IO_HPP_
#define PRNGFORGE_STATE_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "prngforge/generators.hpp"

namespace prngforge {

std::size_t state_word_count(GeneratorKind kind) noexcept;

std::vector<std::uint64_t> state_words(const AnyGenerator& g);

/// Throws Error{io_error} on a wrong word count and rethrows the
/// constructors' errors for invalid states.
AnyGenerator generator_from_words(GeneratorKind kind,
                                  std::span<const std::uint64_t> words);

/// All states must have the same kind.
void write_states(std::ostream& out, std::span<const AnyGenerator> states);

std::vector<AnyGenerator> read_states(std::istream& in);

}  // namespace prngforge

#endif  // PRNGFORGE_STATE_IO_HPP_
