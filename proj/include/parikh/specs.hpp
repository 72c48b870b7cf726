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

#ifndef PARIKH_SPECS_HPP_
#define PARIKH_SPECS_HPP_

#include <algorithm>  // for sort, all_of
#include <array>      // for array
#include <cstddef>    // for size_t
#include <cstdint>    // for int64_t, uint8_t
#include <string>     // for to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "errors.hpp"
#include "words.hpp"

namespace parikh {

  ////////////////////////////////////////////////////////////////////////
  // Two-letter blocks and swap specs
  ////////////////////////////////////////////////////////////////////////

  // Relative to a declared letter pair (x, y): `ab` means the block reads xy
  // in the source word, `ba` that it reads yx.
  enum class BlockKind : std::uint8_t { ab, ba };

  constexpr BlockKind flip(BlockKind k) noexcept {
    return k == BlockKind::ab ? BlockKind::ba : BlockKind::ab;
  }

  struct SwapBlock {
    std::size_t pos;
    BlockKind   kind;

    friend bool operator==(SwapBlock const&, SwapBlock const&) = default;
  };

  /// Position data for a strong (2.t) transformation: a letter pair and
  /// pairwise disjoint two-letter blocks, each reading xy or yx, sorted by
  /// position.
  class SwapSpec {
   public:
    using LetterPair = std::array<Letter, 2>;

    SwapSpec(LetterPair pair, std::vector<SwapBlock> blocks)
        : _pair(pair), _blocks(std::move(blocks)) {
      if (_pair[0] == _pair[1]) {
        throw SpecError("the two letters of a swap pair must differ");
      }
      std::sort(_blocks.begin(),
                _blocks.end(),
                [](SwapBlock const& x, SwapBlock const& y) {
                  return x.pos < y.pos;
                });
      for (std::size_t i = 1; i < _blocks.size(); ++i) {
        if (_blocks[i].pos < _blocks[i - 1].pos + 2) {
          throw OverlapError("blocks at positions "
                             + std::to_string(_blocks[i - 1].pos) + " and "
                             + std::to_string(_blocks[i].pos) + " overlap");
        }
      }
    }

    /// Builds the spec for the blocks of `w` starting at `positions`, reading
    /// each block's kind off the word.
    static SwapSpec on(Word const&              w,
                       LetterPair               pair,
                       std::vector<std::size_t> positions) {
      if (pair[0] >= w.alphabet_size() || pair[1] >= w.alphabet_size()) {
        throw RangeError("letter pair is not in the word's alphabet");
      }
      std::vector<SwapBlock> blocks;
      blocks.reserve(positions.size());
      for (auto pos : positions) {
        if (pos + 1 >= w.size()) {
          throw RangeError("no two-letter block at position "
                           + std::to_string(pos));
        }
        BlockKind kind = BlockKind::ab;
        if (w[pos] == pair[0] && w[pos + 1] == pair[1]) {
          kind = BlockKind::ab;
        } else if (w[pos] == pair[1] && w[pos + 1] == pair[0]) {
          kind = BlockKind::ba;
        } else {
          throw PatternError("block at position " + std::to_string(pos)
                             + " does not hold the declared letter pair");
        }
        blocks.push_back({pos, kind});
      }
      return SwapSpec(pair, std::move(blocks));
    }

    [[nodiscard]] LetterPair const& pair() const noexcept {
      return _pair;
    }

    [[nodiscard]] std::vector<SwapBlock> const& blocks() const noexcept {
      return _blocks;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _blocks.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _blocks.empty();
    }

    [[nodiscard]] std::vector<std::size_t> positions() const {
      std::vector<std::size_t> result;
      result.reserve(_blocks.size());
      for (auto const& b : _blocks) {
        result.push_back(b.pos);
      }
      return result;
    }

    /// The spec describing the same blocks in the rewritten word.
    [[nodiscard]] SwapSpec flipped() const {
      auto blocks = _blocks;
      for (auto& b : blocks) {
        b.kind = flip(b.kind);
      }
      return SwapSpec(_pair, std::move(blocks));
    }

    /// The sub-spec made of the blocks with the given (sorted) indices.
    [[nodiscard]] SwapSpec subset(std::vector<std::size_t> const& idx) const {
      std::vector<SwapBlock> blocks;
      blocks.reserve(idx.size());
      for (auto i : idx) {
        blocks.push_back(_blocks.at(i));
      }
      return SwapSpec(_pair, std::move(blocks));
    }

    /// Throws unless every block lies in `w` and reads as its kind says.
    void check_on(Word const& w) const {
      for (auto const& b : _blocks) {
        if (b.pos + 1 >= w.size()) {
          throw RangeError("no two-letter block at position "
                           + std::to_string(b.pos));
        }
        auto first  = b.kind == BlockKind::ab ? _pair[0] : _pair[1];
        auto second = b.kind == BlockKind::ab ? _pair[1] : _pair[0];
        if (w[b.pos] != first || w[b.pos + 1] != second) {
          throw PatternError("block at position " + std::to_string(b.pos)
                             + " does not match the word");
        }
      }
    }

    friend bool operator==(SwapSpec const&, SwapSpec const&) = default;

   private:
    LetterPair             _pair;
    std::vector<SwapBlock> _blocks;
  };

  ////////////////////////////////////////////////////////////////////////
  // Triple factor specs
  ////////////////////////////////////////////////////////////////////////

  // The three factor shapes ab...ba, bc...cb and ca...ac, with a, b, c the
  // letters of a ternary alphabet in registration order.
  enum class FactorClass : std::uint8_t { AB, BC, CA };

  // The two letters opening a factor of class `cls` read forwards.
  constexpr std::array<Letter, 2> class_letters(FactorClass cls) noexcept {
    switch (cls) {
      case FactorClass::AB:
        return {0, 1};
      case FactorClass::BC:
        return {1, 2};
      case FactorClass::CA:
      default:
        return {2, 0};
    }
  }

  // The letter whose interior count enters the balance condition.
  constexpr Letter counted_letter(FactorClass cls) noexcept {
    switch (cls) {
      case FactorClass::AB:
        return 2;
      case FactorClass::BC:
        return 0;
      case FactorClass::CA:
      default:
        return 1;
    }
  }

  struct FactorPlacement {
    std::size_t start;
    std::size_t end;  // inclusive
    FactorClass cls;

    friend bool operator==(FactorPlacement const&, FactorPlacement const&)
        = default;
  };

  struct TripleFactor {
    std::size_t start;
    std::size_t end;  // inclusive
    FactorClass cls;
    // false: xy ... yx as listed in class_letters; true: yx ... xy
    bool reversed;

    friend bool operator==(TripleFactor const&, TripleFactor const&) = default;
  };

  /// Position data for a strong (3.t) transformation. All factors share one
  /// orientation; the four boundary positions of distinct factors are
  /// pairwise disjoint. Interiors may contain other factors' boundaries.
  class TripleFactorSpec {
   public:
    explicit TripleFactorSpec(std::vector<TripleFactor> factors)
        : _factors(std::move(factors)) {
      std::sort(_factors.begin(),
                _factors.end(),
                [](TripleFactor const& x, TripleFactor const& y) {
                  return x.start < y.start;
                });
      for (auto const& f : _factors) {
        if (f.end < f.start + 3) {
          throw PatternError("factor " + std::to_string(f.start) + "-"
                             + std::to_string(f.end)
                             + " is shorter than four letters");
        }
        if (f.reversed != _factors.front().reversed) {
          throw PatternError("factors must all have the same orientation");
        }
      }
      auto bounds = boundary_blocks();
      std::sort(bounds.begin(), bounds.end());
      for (std::size_t i = 1; i < bounds.size(); ++i) {
        if (bounds[i] < bounds[i - 1] + 2) {
          throw OverlapError("boundary blocks at positions "
                             + std::to_string(bounds[i - 1]) + " and "
                             + std::to_string(bounds[i]) + " overlap");
        }
      }
    }

    /// Builds the spec for `w`, reading each factor's orientation off the
    /// word.
    static TripleFactorSpec on(Word const&                         w,
                               std::vector<FactorPlacement> const& placements) {
      detail::require_ternary(w);
      std::vector<TripleFactor> factors;
      factors.reserve(placements.size());
      for (auto const& p : placements) {
        if (p.end >= w.size() || p.start > p.end) {
          throw RangeError("factor " + std::to_string(p.start) + "-"
                           + std::to_string(p.end)
                           + " does not fit in the word");
        }
        if (p.end < p.start + 3) {
          throw PatternError("factor " + std::to_string(p.start) + "-"
                             + std::to_string(p.end)
                             + " is shorter than four letters");
        }
        auto [x, y] = class_letters(p.cls);
        if (w[p.start] == x && w[p.start + 1] == y && w[p.end - 1] == y
            && w[p.end] == x) {
          factors.push_back({p.start, p.end, p.cls, false});
        } else if (w[p.start] == y && w[p.start + 1] == x && w[p.end - 1] == x
                   && w[p.end] == y) {
          factors.push_back({p.start, p.end, p.cls, true});
        } else {
          throw PatternError("factor " + std::to_string(p.start) + "-"
                             + std::to_string(p.end)
                             + " does not match its class pattern");
        }
      }
      TripleFactorSpec result(std::move(factors));
      result.check_on(w);
      return result;
    }

    [[nodiscard]] std::vector<TripleFactor> const& factors() const noexcept {
      return _factors;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _factors.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _factors.empty();
    }

    /// Start positions of the two boundary blocks of every factor.
    [[nodiscard]] std::vector<std::size_t> boundary_blocks() const {
      std::vector<std::size_t> result;
      result.reserve(2 * _factors.size());
      for (auto const& f : _factors) {
        result.push_back(f.start);
        result.push_back(f.end - 1);
      }
      return result;
    }

    [[nodiscard]] TripleFactorSpec flipped() const {
      auto factors = _factors;
      for (auto& f : factors) {
        f.reversed = !f.reversed;
      }
      return TripleFactorSpec(std::move(factors));
    }

    void check_on(Word const& w) const {
      detail::require_ternary(w);
      for (auto const& f : _factors) {
        if (f.end >= w.size()) {
          throw RangeError("factor " + std::to_string(f.start) + "-"
                           + std::to_string(f.end)
                           + " does not fit in the word");
        }
        auto [x, y] = class_letters(f.cls);
        if (f.reversed) {
          std::swap(x, y);
        }
        if (w[f.start] != x || w[f.start + 1] != y || w[f.end - 1] != y
            || w[f.end] != x) {
          throw PatternError("factor " + std::to_string(f.start) + "-"
                             + std::to_string(f.end)
                             + " does not match its class pattern");
        }
      }
    }

    friend bool operator==(TripleFactorSpec const&, TripleFactorSpec const&)
        = default;

   private:
    std::vector<TripleFactor> _factors;
  };

  ////////////////////////////////////////////////////////////////////////
  // Counters
  ////////////////////////////////////////////////////////////////////////

  /// Differences |w|_v - |w'|_v for v in (abc, acb, bac), letters taken in
  /// registration order.
  struct Counter {
    std::int64_t d_abc = 0;
    std::int64_t d_acb = 0;
    std::int64_t d_bac = 0;

    [[nodiscard]] bool is_zero() const noexcept {
      return d_abc == 0 && d_acb == 0 && d_bac == 0;
    }

    Counter& operator+=(Counter const& other) noexcept {
      d_abc += other.d_abc;
      d_acb += other.d_acb;
      d_bac += other.d_bac;
      return *this;
    }

    friend Counter operator+(Counter x, Counter const& y) noexcept {
      return x += y;
    }

    friend bool operator==(Counter const&, Counter const&) = default;
    friend auto operator<=>(Counter const&, Counter const&) = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // (p, q) pairs
  ////////////////////////////////////////////////////////////////////////

  /// Per-block contribution of a swap to |w|_{xy} (p) and |w|_{xyz} (q),
  /// where (x, y) is the declared pair and z the remaining letter.
  struct PQPair {
    std::int64_t p;
    std::int64_t q;

    friend bool operator==(PQPair const&, PQPair const&) = default;
    friend auto operator<=>(PQPair const&, PQPair const&) = default;
  };

  namespace detail {
    inline Letter third_letter(SwapSpec::LetterPair const& pair) {
      if (pair[0] > 2 || pair[1] > 2 || pair[0] == pair[1]) {
        throw SpecError("letter pair must be two distinct ternary letters");
      }
      return static_cast<Letter>(3 - pair[0] - pair[1]);
    }
  }  // namespace detail

  /// For block i with w = x_i mu_i y_i: p_i = -1 and q_i = -|y_i|_z when the
  /// block reads xy, p_i = 1 and q_i = |y_i|_z when it reads yx.
  inline std::vector<PQPair> compute_pq_pairs(Word const&     w,
                                              SwapSpec const& spec) {
    detail::require_ternary(w);
    spec.check_on(w);
    Letter z = detail::third_letter(spec.pair());

    std::vector<std::int64_t> after(w.size() + 1, 0);
    for (std::size_t i = w.size(); i > 0; --i) {
      after[i - 1] = after[i] + (w[i - 1] == z ? 1 : 0);
    }
    std::vector<PQPair> result;
    result.reserve(spec.size());
    for (auto const& b : spec.blocks()) {
      std::int64_t tail = after[b.pos + 2];
      if (b.kind == BlockKind::ab) {
        result.push_back({-1, -tail});
      } else {
        result.push_back({1, tail});
      }
    }
    return result;
  }

  inline PQPair pq_sum(std::vector<PQPair> const& pairs) {
    PQPair total{0, 0};
    for (auto const& x : pairs) {
      total.p += x.p;
      total.q += x.q;
    }
    return total;
  }

}  // namespace parikh

#endif  // PARIKH_SPECS_HPP_
