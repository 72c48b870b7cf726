// Copyright 2026 The parikh Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARIKH_ERRORS_HPP_
#define PARIKH_ERRORS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parikh {

  /// Root of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: bad words, bad orderings, out-of-range arguments,
  // malformed specs. The CLI maps these to a usage error.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // The input is well formed but a rewriting rule's side condition fails on
  // the given word. The CLI maps these to a negative answer.
  class RuleError : public Error {
   public:
    using Error::Error;
  };

  class MembershipError : public InputError {
   public:
    MembershipError(std::string const& letter, std::size_t position)
        : InputError("letter '" + letter + "' at position "
                     + std::to_string(position) + " is not in the alphabet"),
          _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  class DegenerateError : public InputError {
   public:
    using InputError::InputError;
  };

  class RangeError : public InputError {
   public:
    using InputError::InputError;
  };

  class TernaryOnlyError : public InputError {
   public:
    explicit TernaryOnlyError(std::size_t k)
        : InputError("operation requires a ternary alphabet, got "
                     + std::to_string(k) + " letters") {}
  };

  class CapError : public InputError {
   public:
    using InputError::InputError;
  };

  class SpecError : public InputError {
   public:
    using InputError::InputError;
  };

  class OverflowError : public Error {
   public:
    OverflowError() : Error("64-bit subword count overflow") {}
  };

  class NotE1Error : public RuleError {
   public:
    using RuleError::RuleError;
  };

  class OverlapError : public RuleError {
   public:
    using RuleError::RuleError;
  };

  class PatternError : public RuleError {
   public:
    using RuleError::RuleError;
  };

  class NotAlphaBetaError : public RuleError {
   public:
    using RuleError::RuleError;
  };

  class ShapeError : public RuleError {
   public:
    using RuleError::RuleError;
  };

  class NotStrong2tError : public RuleError {
   public:
    NotStrong2tError(std::int64_t p_sum, std::int64_t q_sum)
        : RuleError("strong (2.t) condition fails: sum p = "
                    + std::to_string(p_sum) + ", sum q = "
                    + std::to_string(q_sum)),
          _p_sum(p_sum),
          _q_sum(q_sum) {}

    [[nodiscard]] std::int64_t p_sum() const noexcept {
      return _p_sum;
    }
    [[nodiscard]] std::int64_t q_sum() const noexcept {
      return _q_sum;
    }

   private:
    std::int64_t _p_sum;
    std::int64_t _q_sum;
  };

  class NotStrong3tError : public RuleError {
   public:
    // sums are ordered (AB: |x|_c, BC: |x|_a, CA: |x|_b)
    explicit NotStrong3tError(std::array<std::int64_t, 3> sums)
        : RuleError("strong (3.t) condition fails: sums "
                    + std::to_string(sums[0]) + ", " + std::to_string(sums[1])
                    + ", " + std::to_string(sums[2]) + " are not all equal"),
          _sums(sums) {}

    [[nodiscard]] std::array<std::int64_t, 3> const& sums() const noexcept {
      return _sums;
    }

   private:
    std::array<std::int64_t, 3> _sums;
  };

}  // namespace parikh

#endif  // PARIKH_ERRORS_HPP_
