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

#ifndef PARIKH_IRREDUCIBILITY_HPP_
#define PARIKH_IRREDUCIBILITY_HPP_

#include <algorithm>  // for set_difference
#include <cstddef>   // for size_t
#include <cstdint>   // for int64_t
#include <cstdlib>   // for llabs
#include <initializer_list>
#include <iterator>  // for back_inserter
#include <optional>  // for optional
#include <string>    // for to_string
#include <utility>   // for move
#include <vector>    // for vector

#include "errors.hpp"
#include "parikh_matrix.hpp"
#include "search.hpp"
#include "specs.hpp"
#include "transforms.hpp"
#include "words.hpp"

namespace parikh {

  inline constexpr std::size_t max_analyzed_blocks = 24;

  struct ReducibilityReport {
    std::vector<PQPair> pairs;
    PQPair              total;
    bool                valid;
    bool                reducible;
    // Block indices (sorted) of a proper nonempty subset whose p and q sums
    // both vanish; present exactly when `reducible`.
    std::optional<std::vector<std::size_t>> witness;
  };

  namespace detail {
    // Lexicographically smallest nonempty subset of `pairs` (as a sorted
    // index sequence) with zero p and q sums and fewer than `pairs.size()`
    // elements. Pre-order traversal visits index sequences in
    // lexicographic order, so the first hit is the answer.
    inline std::optional<std::vector<std::size_t>>
    smallest_zero_subset(std::vector<PQPair> const& pairs) {
      std::size_t              n = pairs.size();
      std::vector<std::size_t> chosen;
      auto visit = [&](auto& self, std::size_t from, std::int64_t p,
                       std::int64_t q) -> bool {
        for (std::size_t j = from; j < n; ++j) {
          chosen.push_back(j);
          auto pj = p + pairs[j].p;
          auto qj = q + pairs[j].q;
          if (pj == 0 && qj == 0 && chosen.size() < n) {
            return true;
          }
          // p can only return to zero if enough blocks remain
          auto remaining = static_cast<std::int64_t>(n - 1 - j);
          if (std::llabs(pj) <= remaining && self(self, j + 1, pj, qj)) {
            return true;
          }
          chosen.pop_back();
        }
        return false;
      };
      if (visit(visit, 0, 0, 0)) {
        return chosen;
      }
      return std::nullopt;
    }

    // Among `candidates` (indices into `pairs`), a zero-sum subset of
    // minimum size, lexicographically smallest among those. Nonempty; may
    // be all of `candidates`.
    inline std::vector<std::size_t>
    minimum_zero_subset(std::vector<PQPair> const&      pairs,
                        std::vector<std::size_t> const& candidates) {
      std::size_t              n = candidates.size();
      std::vector<std::size_t> chosen;
      auto pick = [&](auto& self, std::size_t from, std::size_t left,
                      std::int64_t p, std::int64_t q) -> bool {
        if (left == 0) {
          return p == 0 && q == 0;
        }
        for (std::size_t j = from; j + left <= n; ++j) {
          auto const& x = pairs[candidates[j]];
          chosen.push_back(candidates[j]);
          if (std::llabs(p + x.p) <= static_cast<std::int64_t>(left - 1)
              && self(self, j + 1, left - 1, p + x.p, q + x.q)) {
            return true;
          }
          chosen.pop_back();
        }
        return false;
      };
      for (std::size_t size = 2; size <= n; size += 2) {
        chosen.clear();
        if (pick(pick, 0, size, 0, 0)) {
          return chosen;
        }
      }
      return candidates;
    }
  }  // namespace detail

  /// Validity (both pq sums vanish) and reducibility (some proper nonempty
  /// subset of blocks has vanishing sums) of the strong (2.t) transformation
  /// described by `spec`. Reducibility is decided by exhaustive subset
  /// search, so at most max_analyzed_blocks blocks are accepted.
  inline ReducibilityReport analyze(Word const& w, SwapSpec const& spec) {
    if (spec.empty()) {
      throw SpecError("a strong (2.t) transformation needs t >= 1");
    }
    if (spec.size() > max_analyzed_blocks) {
      throw CapError("reducibility analysis is limited to "
                     + std::to_string(max_analyzed_blocks) + " blocks, got "
                     + std::to_string(spec.size()));
    }
    ReducibilityReport report;
    report.pairs     = compute_pq_pairs(w, spec);
    report.total     = pq_sum(report.pairs);
    report.valid     = report.total.p == 0 && report.total.q == 0;
    report.reducible = false;
    if (report.valid) {
      report.witness   = detail::smallest_zero_subset(report.pairs);
      report.reducible = report.witness.has_value();
    }
    return report;
  }

  struct DecompositionStage {
    Word     source;
    SwapSpec spec;  // blocks positioned in `source`
    Word     target;
  };

  /// Splits a valid strong (2.t) transformation into irreducible stages by
  /// repeatedly peeling off a minimum-size zero-sum subset of the remaining
  /// blocks. Swapping blocks does not move any letter outside them, so the
  /// (p, q) pairs of the remaining blocks are unchanged between stages.
  inline std::vector<DecompositionStage> decompose(Word const&     w,
                                                   SwapSpec const& spec) {
    auto report = analyze(w, spec);
    if (!report.valid) {
      throw NotStrong2tError(report.total.p, report.total.q);
    }
    std::vector<std::size_t> remaining(spec.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      remaining[i] = i;
    }
    std::vector<DecompositionStage> stages;
    Word                            current = w;
    while (!remaining.empty()) {
      auto part = detail::minimum_zero_subset(report.pairs, remaining);
      SwapSpec stage_spec = spec.subset(part);
      Word     next       = apply_strong_2t(current, stage_spec);
      stages.push_back({current, stage_spec, next});
      current = std::move(next);
      std::vector<std::size_t> rest;
      std::set_difference(remaining.begin(),
                          remaining.end(),
                          part.begin(),
                          part.end(),
                          std::back_inserter(rest));
      remaining = std::move(rest);
    }
    return stages;
  }

  /// Whether w -> v has the shape of an irreducible strong (2.2)
  /// transformation: w = w1 ab w2 ba w3 ba w4 ab w5 and
  /// v = w1 ba w2 ab w3 ab w4 ba w5 for some labelling of two letters as
  /// a, b, with |w2|_c = |w4|_c > 0.
  inline bool check_irreducible_22_structure(Word const& w, Word const& v) {
    detail::require_ternary(w);
    detail::require_same_shape(w, v);
    // The transposed blocks are forced by the positions where w and v
    // differ, so there is only one placement to test.
    auto blocks = detail::transposed_blocks(w, v);
    if (!blocks || blocks->size() != 4) {
      return false;
    }
    auto const& b = *blocks;
    Letter      x = w[b[0]];
    Letter      y = w[b[0] + 1];
    auto reads = [&](std::size_t pos, Letter first, Letter second) {
      return w[pos] == first && w[pos + 1] == second;
    };
    if (!reads(b[1], y, x) || !reads(b[2], y, x) || !reads(b[3], x, y)) {
      return false;
    }
    Letter z      = static_cast<Letter>(3 - x - y);
    auto   second = detail::count_letter(w, z, b[0] + 2, b[1]);
    auto   fourth = detail::count_letter(w, z, b[2] + 2, b[3]);
    return second == fourth && second > 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Example families
  ////////////////////////////////////////////////////////////////////////

  struct SwapFamilyPair {
    Word     w;
    Word     w_prime;
    SwapSpec spec;
  };

  struct TripleFamilyPair {
    Word             w;
    Word             w_prime;
    TripleFactorSpec spec;
  };

  namespace detail {
    inline Word abc_word(std::initializer_list<std::pair<char const*,
                                                         std::size_t>> parts) {
      std::vector<Letter> letters;
      for (auto [text, times] : parts) {
        for (std::size_t r = 0; r < times; ++r) {
          for (char const* c = text; *c != '\0'; ++c) {
            letters.push_back(static_cast<Letter>(*c - 'a'));
          }
        }
      }
      return Word(3, std::move(letters));
    }

    inline std::vector<std::size_t> changed_blocks(Word const& w,
                                                   Word const& v) {
      auto blocks = transposed_blocks(w, v);
      if (!blocks) {
        throw SpecError("family words do not differ in transposed blocks");
      }
      return *blocks;
    }
  }  // namespace detail

  /// For t >= 2, w = (ab)^{t-1} c (ba)^t c^{t-1} ab with every block
  /// reversed in w'; an irreducible strong (2.t) transformation. For t = 1,
  /// the minimal pair abba -> baab.
  inline SwapFamilyPair gen_irreducible_family(std::size_t t) {
    if (t < 1) {
      throw RangeError("family parameter t must be at least 1");
    }
    Word w, v;
    if (t == 1) {
      w = detail::abc_word({{"abba", 1}});
      v = detail::abc_word({{"baab", 1}});
    } else {
      w = detail::abc_word(
          {{"ab", t - 1}, {"c", 1}, {"ba", t}, {"c", t - 1}, {"ab", 1}});
      v = detail::abc_word(
          {{"ba", t - 1}, {"c", 1}, {"ab", t}, {"c", t - 1}, {"ba", 1}});
    }
    auto spec = SwapSpec::on(w, {0, 1}, detail::changed_blocks(w, v));
    return {std::move(w), std::move(v), std::move(spec)};
  }

  /// (abcbabacab)^t -> (bacababcba)^t: a strong (2.2t) transformation that
  /// no strong (3.t) transformation realises.
  inline SwapFamilyPair gen_not3t_family(std::size_t t) {
    if (t < 1) {
      throw RangeError("family parameter t must be at least 1");
    }
    Word w    = detail::abc_word({{"abcbabacab", t}});
    Word v    = detail::abc_word({{"bacababcba", t}});
    auto spec = SwapSpec::on(w, {0, 1}, detail::changed_blocks(w, v));
    return {std::move(w), std::move(v), std::move(spec)};
  }

  /// a^m bcbabcacbcaba c^m -> a^{m-1} bacabcbabcacbca c^{m-1}: a strong
  /// (3.3) transformation that no strong (2.t) transformation realises.
  inline TripleFamilyPair gen_not2t_family(std::size_t m) {
    if (m < 1) {
      throw RangeError("family parameter m must be at least 1");
    }
    Word w = detail::abc_word({{"a", m}, {"bcbabcacbcaba", 1}, {"c", m}});
    Word v = detail::abc_word(
        {{"a", m - 1}, {"bacabcbabcacbca", 1}, {"c", m - 1}});
    std::size_t o    = m - 1;
    auto        spec = TripleFactorSpec::on(w,
                                     {{o, o + 4, FactorClass::AB},
                                      {o + 5, o + 9, FactorClass::BC},
                                      {o + 10, o + 14, FactorClass::CA}});
    return {std::move(w), std::move(v), std::move(spec)};
  }

  struct NotMseCheck {
    Word         w_prime;
    bool         confirmed;  // strongly M-equivalent and not MSE-equivalent
    SearchResult mse;
  };

  /// Applies a strong (2.t) transformation whose consecutive block pairs
  /// form factors with at most one third letter inside each factor (and
  /// exactly one in some factor) and at most one in every gap between
  /// factors, then confirms by exhaustive SE-closure search that the two
  /// words are strongly M-equivalent but not MSE-equivalent.
  inline NotMseCheck gen_thm36_check(Word const&     w,
                                     SwapSpec const& spec,
                                     std::size_t node_cap = default_node_cap) {
    detail::require_ternary(w);
    spec.check_on(w);
    if (spec.empty() || spec.size() % 2 != 0) {
      throw ShapeError("the blocks must form consecutive factors");
    }
    Letter      z      = detail::third_letter(spec.pair());
    auto const& blocks = spec.blocks();
    bool        some_one = false;
    std::size_t gap_start = 0;
    for (std::size_t k = 0; k < blocks.size(); k += 2) {
      auto const& open  = blocks[k];
      auto const& close = blocks[k + 1];
      if (open.kind == close.kind) {
        throw ShapeError("blocks " + std::to_string(open.pos) + " and "
                         + std::to_string(close.pos)
                         + " do not form a factor");
      }
      if (detail::count_letter(w, z, gap_start, open.pos) > 1) {
        throw ShapeError("a gap between factors holds more than one "
                         "third letter");
      }
      auto inside = detail::count_letter(w, z, open.pos + 2, close.pos);
      if (inside > 1) {
        throw ShapeError("a factor interior holds more than one third letter");
      }
      some_one  = some_one || inside == 1;
      gap_start = close.pos + 2;
    }
    if (detail::count_letter(w, z, gap_start, w.size()) > 1) {
      throw ShapeError("a gap between factors holds more than one third letter");
    }
    if (!some_one) {
      throw ShapeError("no factor interior holds exactly one third letter");
    }
    Word v   = apply_strong_2t(w, spec);
    auto mse = mse_equivalent(w, v, node_cap);
    bool ok
        = mse.outcome == SearchOutcome::exhausted && strongly_m_equivalent(w, v);
    return {std::move(v), ok, std::move(mse)};
  }

}  // namespace parikh

#endif  // PARIKH_IRREDUCIBILITY_HPP_
