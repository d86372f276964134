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

#ifndef PRNGFORGE_ERROR_HPP_
#define PRNGFORGE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace prngforge {

enum class Errc {
  invalid_multiplier,
  absorbing_state,
  zero_state,
  invalid_seed,
  misaligned_cursor,
  out_of_range,
  unsupported,
  invalid_argument,
  budget_exceeded,
  clock_failure,
  io_error,
  sink_failure,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace prngforge

#endif  // PRNGFORGE_ERROR_HPP_
