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

#ifndef PARIKH_TRANSFORMS_HPP_
#define PARIKH_TRANSFORMS_HPP_

#include <algorithm>  // for min, max
#include <array>    // for array
#include <cassert>  // for assert
#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t
#include <string>   // for to_string
#include <utility>  // for pair
#include <vector>   // for vector

#include "errors.hpp"
#include "parikh_matrix.hpp"
#include "specs.hpp"
#include "words.hpp"

namespace parikh {

  namespace detail {
    inline std::int64_t count_letter(Word const& w,
                                     Letter      x,
                                     std::size_t first,
                                     std::size_t last) {
      std::int64_t n = 0;
      for (std::size_t i = first; i < last; ++i) {
        n += (w[i] == x);
      }
      return n;
    }

    inline std::int64_t signed_difference(Count x, Count y) {
      return static_cast<std::int64_t>(x) - static_cast<std::int64_t>(y);
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Rule E1
  ////////////////////////////////////////////////////////////////////////

  /// Exchanges the letters at `pos` and `pos + 1`, which must not be
  /// consecutive in `ordering`. The result is M-equivalent to `w`.
  inline Word apply_e1(Word const&            w,
                       std::size_t            pos,
                       OrderedAlphabet const& ordering) {
    if (w.alphabet_size() != ordering.size()) {
      throw InputError("word and ordering have different alphabet sizes");
    }
    if (pos + 1 >= w.size()) {
      throw RangeError("no two-letter block at position "
                       + std::to_string(pos));
    }
    auto r = ordering.rank(w[pos]);
    auto s = ordering.rank(w[pos + 1]);
    if ((r > s ? r - s : s - r) < 2) {
      throw NotE1Error("letters at positions " + std::to_string(pos) + " and "
                       + std::to_string(pos + 1)
                       + " are equal or consecutive in the ordering");
    }
    auto result = w.with_swapped(pos);
    assert(m_equivalent(w, result, ordering));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rule E2.t
  ////////////////////////////////////////////////////////////////////////

  /// Pairs of block indices (into SwapSpec::blocks()) forming the factors.
  using BlockGrouping = std::vector<std::pair<std::size_t, std::size_t>>;

  /// Checks the side conditions of the classic (2.t) rule under `ordering`:
  /// the letter pair is (alpha, b) with b the middle letter; every block is
  /// grouped exactly once into a factor alpha b x b alpha or b alpha x alpha b;
  /// and the interior counts of the remaining end letter balance between the
  /// two factor shapes. Structurally malformed groupings throw SpecError.
  inline bool validate_classic_2t(Word const&            w,
                                  SwapSpec const&        spec,
                                  BlockGrouping const&   grouping,
                                  OrderedAlphabet const& ordering) {
    detail::require_ternary(w);
    if (ordering.size() != 3) {
      throw InputError("ordering must be over the ternary alphabet");
    }
    spec.check_on(w);

    std::vector<bool> used(spec.size(), false);
    for (auto [i, j] : grouping) {
      if (i >= spec.size() || j >= spec.size() || i == j) {
        throw SpecError("grouping refers to block indices "
                        + std::to_string(i) + " and " + std::to_string(j)
                        + " which do not form a pair of blocks");
      }
      if (used[i] || used[j]) {
        throw SpecError("a block appears in more than one factor");
      }
      used[i] = used[j] = true;
    }
    if (spec.empty()) {
      return false;
    }
    for (bool u : used) {
      if (!u) {
        return false;
      }
    }

    Letter middle = ordering.letter_of_rank(2);
    auto   pair   = spec.pair();
    if (pair[0] != middle && pair[1] != middle) {
      return false;
    }
    Letter alpha     = pair[0] == middle ? pair[1] : pair[0];
    Letter alpha_bar = static_cast<Letter>(3 - alpha - middle);

    std::int64_t opening_sum = 0;  // factors alpha b x b alpha
    std::int64_t closing_sum = 0;  // factors b alpha x alpha b
    for (auto [i, j] : grouping) {
      auto const& lo = spec.blocks()[std::min(i, j)];
      auto const& hi = spec.blocks()[std::max(i, j)];
      bool lo_alpha_first = w[lo.pos] == alpha;
      bool hi_alpha_first = w[hi.pos] == alpha;
      if (lo_alpha_first == hi_alpha_first) {
        return false;
      }
      auto n = detail::count_letter(w, alpha_bar, lo.pos + 2, hi.pos);
      (lo_alpha_first ? opening_sum : closing_sum) += n;
    }
    return opening_sum == closing_sum;
  }

  ////////////////////////////////////////////////////////////////////////
  // Strong (2.t)
  ////////////////////////////////////////////////////////////////////////

  /// Reverses every block of `spec` simultaneously. Valid exactly when the
  /// (p, q) pairs of the blocks sum to zero in both coordinates; any pairing
  /// of xy with yx blocks then satisfies the factor balance condition.
  inline Word apply_strong_2t(Word const& w, SwapSpec const& spec) {
    detail::require_ternary(w);
    if (spec.empty()) {
      throw SpecError("a strong (2.t) transformation needs t >= 1");
    }
    auto total = pq_sum(compute_pq_pairs(w, spec));
    if (total.p != 0 || total.q != 0) {
      throw NotStrong2tError(total.p, total.q);
    }
    auto positions = spec.positions();
    auto result    = w.with_swapped_blocks(positions);
    assert(strongly_m_equivalent(w, result));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Strong (3.t)
  ////////////////////////////////////////////////////////////////////////

  /// Interior sums (AB: |x|_c, BC: |x|_a, CA: |x|_b) over the factors of
  /// each class. Empty classes contribute 0.
  inline std::array<std::int64_t, 3> triple_sums(Word const&             w,
                                                 TripleFactorSpec const& spec) {
    spec.check_on(w);
    std::array<std::int64_t, 3> sums{0, 0, 0};
    for (auto const& f : spec.factors()) {
      sums[static_cast<std::size_t>(f.cls)] += detail::count_letter(
          w, counted_letter(f.cls), f.start + 2, f.end - 1);
    }
    return sums;
  }

  /// Reverses the two boundary blocks of every factor simultaneously
  /// (ab <-> ba, bc <-> cb, ca <-> ac). Requires the three interior sums
  /// to be equal.
  inline Word apply_strong_3t(Word const& w, TripleFactorSpec const& spec) {
    detail::require_ternary(w);
    if (spec.empty()) {
      throw SpecError("a strong (3.t) transformation needs t >= 1");
    }
    auto sums = triple_sums(w, spec);
    if (sums[0] != sums[1] || sums[1] != sums[2]) {
      throw NotStrong3tError(sums);
    }
    auto bounds = spec.boundary_blocks();
    auto result = w.with_swapped_blocks(bounds);
    assert(strongly_m_equivalent(w, result));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // alpha-beta transformations
  ////////////////////////////////////////////////////////////////////////

  /// Subword-count differences |from|_v - |to|_v for v in (abc, acb, bac).
  inline Counter counter_between(Word const& from, Word const& to) {
    detail::require_ternary(from);
    detail::require_same_alphabet(from, to);
    static Word const abc(3, {0, 1, 2});
    static Word const acb(3, {0, 2, 1});
    static Word const bac(3, {1, 0, 2});
    return {detail::signed_difference(count_subword(from, abc),
                                      count_subword(to, abc)),
            detail::signed_difference(count_subword(from, acb),
                                      count_subword(to, acb)),
            detail::signed_difference(count_subword(from, bac),
                                      count_subword(to, bac))};
  }

  namespace detail {
    // Throws unless w = x (alpha beta) y (beta alpha) z with the first block
    // at `ab_pos` and the second at `ba_pos`.
    inline void check_alpha_beta_site(Word const& w,
                                      std::size_t ab_pos,
                                      std::size_t ba_pos) {
      if (ab_pos + 1 >= w.size() || ba_pos + 1 >= w.size()) {
        throw RangeError("alpha-beta block position out of range");
      }
      if (ba_pos < ab_pos + 2) {
        throw NotAlphaBetaError("the second block must start at least two "
                                "positions after the first");
      }
      if (w[ab_pos] == w[ab_pos + 1]) {
        throw NotAlphaBetaError("block at position " + std::to_string(ab_pos)
                                + " does not hold two distinct letters");
      }
      if (w[ba_pos] != w[ab_pos + 1] || w[ba_pos + 1] != w[ab_pos]) {
        throw NotAlphaBetaError("block at position " + std::to_string(ba_pos)
                                + " is not the reverse of the block at "
                                + std::to_string(ab_pos));
      }
    }
  }  // namespace detail

  struct AlphaBetaStep {
    Word    result;
    Counter counter;
  };

  /// x (alpha beta) y (beta alpha) z -> x (beta alpha) y (alpha beta) z,
  /// together with its counter.
  inline AlphaBetaStep apply_alpha_beta(Word const& w,
                                        std::size_t ab_pos,
                                        std::size_t ba_pos) {
    detail::require_ternary(w);
    detail::check_alpha_beta_site(w, ab_pos, ba_pos);
    std::array<std::size_t, 2> blocks{ab_pos, ba_pos};
    auto result  = w.with_swapped_blocks(blocks);
    auto counter = counter_between(w, result);
    return {std::move(result), counter};
  }

  struct PermutationDelta {
    Word         pattern;
    std::int64_t delta;
  };

  /// Predicted |w|_v - |w'|_v for the six permutations v of the alphabet
  /// when w = x (alpha beta) y (beta alpha) z and w' = x (beta alpha) y
  /// (alpha beta) z, with gamma the third letter and n = |y|_gamma:
  /// alpha beta gamma and gamma beta alpha change by n, beta alpha gamma and
  /// gamma alpha beta by -n, alpha gamma beta and beta gamma alpha by 0.
  inline std::array<PermutationDelta, 6>
  lemma38_deltas(Word const& w, std::size_t ab_pos, std::size_t ba_pos) {
    detail::require_ternary(w);
    detail::check_alpha_beta_site(w, ab_pos, ba_pos);
    Letter alpha = w[ab_pos];
    Letter beta  = w[ab_pos + 1];
    Letter gamma = static_cast<Letter>(3 - alpha - beta);
    auto   n     = detail::count_letter(w, gamma, ab_pos + 2, ba_pos);
    auto   word  = [](Letter x, Letter y, Letter z) {
      return Word(3, {x, y, z});
    };
    return {{{word(alpha, beta, gamma), n},
             {word(gamma, beta, alpha), n},
             {word(beta, alpha, gamma), -n},
             {word(gamma, alpha, beta), -n},
             {word(alpha, gamma, beta), 0},
             {word(beta, gamma, alpha), 0}}};
  }

}  // namespace parikh

#endif  // PARIKH_TRANSFORMS_HPP_
