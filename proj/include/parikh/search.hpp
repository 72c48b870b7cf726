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

#ifndef PARIKH_SEARCH_HPP_
#define PARIKH_SEARCH_HPP_

#include <algorithm>      // for sort, next_permutation
#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <string>         // for to_string
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair, move
#include <vector>         // for vector

#include "errors.hpp"
#include "parikh_matrix.hpp"
#include "specs.hpp"
#include "transforms.hpp"
#include "words.hpp"

namespace parikh {

  ////////////////////////////////////////////////////////////////////////
  // Derivations
  ////////////////////////////////////////////////////////////////////////

  enum class StepKind { SE, E1, S2T, S3T, ALPHA_BETA };

  /// One rewriting step. Every supported rule reverses a set of disjoint
  /// two-letter blocks, so `positions` holds the start of each reversed
  /// block (for S3T, the boundary blocks of every factor).
  struct DerivationStep {
    StepKind                 kind;
    std::vector<std::size_t> positions;
    std::optional<Counter>   counter;
    Word                     result;
  };

  struct Derivation {
    Word                        start;
    std::vector<DerivationStep> steps;

    [[nodiscard]] Word const& end() const noexcept {
      return steps.empty() ? start : steps.back().result;
    }

    [[nodiscard]] Counter counter_sum() const noexcept {
      Counter total;
      for (auto const& s : steps) {
        if (s.counter) {
          total += *s.counter;
        }
      }
      return total;
    }
  };

  /// Replays `d` from its start word and returns the final word. Throws
  /// SpecError if some step does not produce its recorded result.
  inline Word replay(Derivation const& d) {
    Word current = d.start;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      auto const& step = d.steps[i];
      current          = current.with_swapped_blocks(step.positions);
      if (current != step.result) {
        throw SpecError("derivation step " + std::to_string(i)
                        + " does not reproduce its recorded result");
      }
    }
    return current;
  }

  ////////////////////////////////////////////////////////////////////////
  // Breadth-first search
  ////////////////////////////////////////////////////////////////////////

  enum class SearchOutcome {
    found,      // target reached; a derivation is attached
    exhausted,  // every reachable state within the depth bound was visited
    capped      // the node cap was hit first; nothing can be concluded
  };

  struct SearchResult {
    SearchOutcome             outcome = SearchOutcome::exhausted;
    std::optional<Derivation> derivation;
    std::size_t               nodes = 0;
    // true when exhaustion happened at the depth bound rather than because
    // the closure ran out
    bool depth_limited = false;
  };

  namespace detail {
    // State must be totally ordered and hashable by StateHash. `expand`
    // returns (successor, step) pairs; the step's `result` is filled in by
    // the caller. Layers are visited in sorted order so results do not
    // depend on hash-table iteration order.
    template <typename State,
              typename StateHash,
              typename WordOf,
              typename Expand,
              typename IsGoal>
    SearchResult layered_bfs(State       start,
                             WordOf      word_of,
                             Expand      expand,
                             IsGoal      is_goal,
                             std::size_t node_cap,
                             std::size_t max_depth) {
      struct Node {
        State          state;
        std::size_t    parent;
        DerivationStep step;
      };
      constexpr std::size_t no_parent = static_cast<std::size_t>(-1);

      std::vector<Node>                                 nodes;
      std::unordered_map<State, std::size_t, StateHash> seen;
      SearchResult                                      result;

      auto trace = [&](std::size_t idx) {
        Derivation d{word_of(nodes.front().state), {}};
        for (; nodes[idx].parent != no_parent; idx = nodes[idx].parent) {
          d.steps.push_back(nodes[idx].step);
        }
        std::reverse(d.steps.begin(), d.steps.end());
        return d;
      };

      nodes.push_back(
          {start, no_parent, {StepKind::SE, {}, std::nullopt, word_of(start)}});
      seen.emplace(std::move(start), 0);
      if (is_goal(nodes[0].state)) {
        result.outcome    = SearchOutcome::found;
        result.derivation = trace(0);
        result.nodes      = 1;
        return result;
      }

      std::vector<std::size_t> layer{0};
      for (std::size_t depth = 0; !layer.empty(); ++depth) {
        if (depth == max_depth) {
          result.depth_limited = true;
          break;
        }
        std::sort(layer.begin(), layer.end(), [&](auto x, auto y) {
          return nodes[x].state < nodes[y].state;
        });
        std::vector<std::size_t> next;
        for (auto idx : layer) {
          auto successors = expand(nodes[idx].state);
          std::sort(successors.begin(),
                    successors.end(),
                    [](auto const& x, auto const& y) {
                      return x.first < y.first;
                    });
          for (auto& [state, step] : successors) {
            if (seen.count(state) != 0) {
              continue;
            }
            if (nodes.size() >= node_cap) {
              result.outcome = SearchOutcome::capped;
              result.nodes   = nodes.size();
              return result;
            }
            step.result = word_of(state);
            nodes.push_back({state, idx, std::move(step)});
            seen.emplace(std::move(state), nodes.size() - 1);
            if (is_goal(nodes.back().state)) {
              result.outcome    = SearchOutcome::found;
              result.derivation = trace(nodes.size() - 1);
              result.nodes      = nodes.size();
              return result;
            }
            next.push_back(nodes.size() - 1);
          }
        }
        layer = std::move(next);
      }
      result.outcome = SearchOutcome::exhausted;
      result.nodes   = nodes.size();
      return result;
    }

    // All (i, j) with w = x (uv) y (vu) z, u != v, block starts i < j, and y
    // restricted to the letters u, v when `interior_over_pair` is set.
    inline std::vector<std::pair<std::size_t, std::size_t>>
    block_pair_sites(Word const& w, bool interior_over_pair) {
      std::vector<std::pair<std::size_t, std::size_t>> result;
      std::size_t                                      n = w.size();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Letter u = w[i];
        Letter v = w[i + 1];
        if (u == v) {
          continue;
        }
        for (std::size_t j = i + 2; j + 1 < n; ++j) {
          if (w[j] == v && w[j + 1] == u) {
            result.emplace_back(i, j);
          }
          if (interior_over_pair && w[j] != u && w[j] != v) {
            break;
          }
        }
      }
      return result;
    }

    // Splits the positions where w and v differ into adjacent blocks, each
    // reading xy in w and yx in v. nullopt if the difference has any other
    // shape.
    inline std::optional<std::vector<std::size_t>>
    transposed_blocks(Word const& w, Word const& v) {
      std::vector<std::size_t> blocks;
      std::size_t              n = w.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == v[i]) {
          continue;
        }
        if (i + 1 >= n || w[i] == w[i + 1] || v[i] != w[i + 1]
            || v[i + 1] != w[i]) {
          return std::nullopt;
        }
        blocks.push_back(i);
        ++i;
      }
      return blocks;
    }

    inline void require_same_shape(Word const& w, Word const& v) {
      require_same_alphabet(w, v);
      if (w.size() != v.size()) {
        throw InputError("words have different lengths ("
                         + std::to_string(w.size()) + " and "
                         + std::to_string(v.size()) + ")");
      }
    }

    struct MsaeState {
      Word    word;
      Counter counter;

      friend bool operator==(MsaeState const&, MsaeState const&) = default;
      friend auto operator<=>(MsaeState const&, MsaeState const&) = default;
    };

    struct MsaeStateHash {
      std::size_t operator()(MsaeState const& s) const noexcept {
        std::size_t h = Word::Hash{}(s.word);
        for (auto x : {s.counter.d_abc, s.counter.d_acb, s.counter.d_bac}) {
          h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
               + (h >> 2);
        }
        return h;
      }
    };
  }  // namespace detail

  inline constexpr std::size_t default_node_cap  = 1'000'000;
  inline constexpr std::size_t default_max_steps = 6;

  /// All (ab_pos, ba_pos) with w = x (alpha beta) y (beta alpha) z for some
  /// distinct letters alpha, beta, in increasing order of (ab_pos, ba_pos).
  inline std::vector<std::pair<std::size_t, std::size_t>>
  detect_alpha_beta_sites(Word const& w) {
    return detail::block_pair_sites(w, false);
  }

  /// Decides whether v is reachable from w by Rule SE (x ab y ba z ->
  /// x ba y ab z with y over {a, b}). The closure is finite, so `exhausted`
  /// is a definitive negative.
  inline SearchResult mse_equivalent(Word const& w,
                                     Word const& v,
                                     std::size_t node_cap = default_node_cap) {
    detail::require_same_alphabet(w, v);
    if (w.size() != v.size() || letter_counts(w) != letter_counts(v)) {
      return {SearchOutcome::exhausted, std::nullopt, 0, false};
    }
    auto expand = [](Word const& x) {
      std::vector<std::pair<Word, DerivationStep>> out;
      for (auto [i, j] : detail::block_pair_sites(x, true)) {
        std::array<std::size_t, 2> blocks{i, j};
        out.push_back({x.with_swapped_blocks(blocks),
                       {StepKind::SE, {i, j}, std::nullopt, Word()}});
      }
      return out;
    };
    return detail::layered_bfs<Word, Word::Hash>(
        w,
        [](Word const& x) { return x; },
        expand,
        [&v](Word const& x) { return x == v; },
        node_cap,
        static_cast<std::size_t>(-1));
  }

  /// Bounded search for a chain of alpha-beta transformations from w to v
  /// whose counters sum to zero. States are (word, cumulative counter).
  inline SearchResult msae_search(Word const& w,
                                  Word const& v,
                                  std::size_t max_steps = default_max_steps,
                                  std::size_t node_cap  = default_node_cap) {
    detail::require_ternary(w);
    detail::require_same_alphabet(w, v);
    using detail::MsaeState;
    if (w.size() != v.size() || letter_counts(w) != letter_counts(v)) {
      return {SearchOutcome::exhausted, std::nullopt, 0, false};
    }
    auto expand = [](MsaeState const& s) {
      std::vector<std::pair<MsaeState, DerivationStep>> out;
      for (auto [i, j] : detect_alpha_beta_sites(s.word)) {
        auto step = apply_alpha_beta(s.word, i, j);
        out.push_back(
            {MsaeState{step.result, s.counter + step.counter},
             {StepKind::ALPHA_BETA, {i, j}, step.counter, Word()}});
      }
      return out;
    };
    return detail::layered_bfs<MsaeState, detail::MsaeStateHash>(
        MsaeState{w, Counter{}},
        [](MsaeState const& s) { return s.word; },
        expand,
        [&v](MsaeState const& s) { return s.word == v && s.counter.is_zero(); },
        node_cap,
        max_steps);
  }

  ////////////////////////////////////////////////////////////////////////
  // Detection
  ////////////////////////////////////////////////////////////////////////

  /// The swap spec of a strong (2.t) transformation taking w to v, if
  /// there is one: v must differ from w in disjoint transposed blocks over
  /// one letter pair whose (p, q) pairs sum to zero.
  inline std::optional<SwapSpec> detect_strong_2t(Word const& w,
                                                  Word const& v) {
    detail::require_ternary(w);
    detail::require_same_shape(w, v);
    auto blocks = detail::transposed_blocks(w, v);
    if (!blocks || blocks->empty()) {
      return std::nullopt;
    }
    SwapSpec::LetterPair pair{w[blocks->front()], w[blocks->front() + 1]};
    for (auto pos : *blocks) {
      bool same = (w[pos] == pair[0] && w[pos + 1] == pair[1])
                  || (w[pos] == pair[1] && w[pos + 1] == pair[0]);
      if (!same) {
        return std::nullopt;
      }
    }
    auto spec  = SwapSpec::on(w, pair, *blocks);
    auto total = pq_sum(compute_pq_pairs(w, spec));
    if (total.p != 0 || total.q != 0) {
      return std::nullopt;
    }
    return spec;
  }

  struct Detect3tResult {
    SearchOutcome                   outcome;
    std::optional<TripleFactorSpec> spec;
  };

  inline constexpr std::size_t default_factor_cap = 16;

  /// Searches for a strong (3.t) transformation taking w to v: a matching
  /// of the transposed blocks of the difference into factor boundaries, all
  /// in one orientation, with balanced interior sums. Exact when the
  /// difference has at most `factor_cap` blocks; `capped` otherwise.
  inline Detect3tResult
  detect_strong_3t(Word const& w,
                   Word const& v,
                   std::size_t factor_cap = default_factor_cap) {
    detail::require_ternary(w);
    detail::require_same_shape(w, v);
    auto blocks = detail::transposed_blocks(w, v);
    if (!blocks || blocks->empty() || blocks->size() % 2 != 0) {
      return {SearchOutcome::exhausted, std::nullopt};
    }
    if (blocks->size() > factor_cap) {
      return {SearchOutcome::capped, std::nullopt};
    }

    auto class_of = [&](std::size_t pos, bool reversed)
        -> std::optional<FactorClass> {
      for (auto cls : {FactorClass::AB, FactorClass::BC, FactorClass::CA}) {
        auto [x, y] = class_letters(cls);
        if (reversed) {
          std::swap(x, y);
        }
        if (w[pos] == x && w[pos + 1] == y) {
          return cls;
        }
      }
      return std::nullopt;
    };

    auto const&               bs = *blocks;
    std::vector<bool>         used(bs.size(), false);
    std::vector<TripleFactor> chosen;
    std::optional<TripleFactorSpec> found;

    // The leftmost unmatched block always opens a factor.
    auto match = [&](auto& self, bool reversed) -> bool {
      std::size_t first = 0;
      while (first < bs.size() && used[first]) {
        ++first;
      }
      if (first == bs.size()) {
        TripleFactorSpec spec(chosen);
        auto             sums = triple_sums(w, spec);
        if (sums[0] == sums[1] && sums[1] == sums[2]) {
          found = std::move(spec);
          return true;
        }
        return false;
      }
      auto cls = class_of(bs[first], reversed);
      if (!cls) {
        return false;
      }
      used[first] = true;
      for (std::size_t j = first + 1; j < bs.size(); ++j) {
        if (used[j] || w[bs[j]] != w[bs[first] + 1]
            || w[bs[j] + 1] != w[bs[first]]) {
          continue;
        }
        used[j] = true;
        chosen.push_back({bs[first], bs[j] + 1, *cls, reversed});
        if (self(self, reversed)) {
          return true;
        }
        chosen.pop_back();
        used[j] = false;
      }
      used[first] = false;
      return false;
    };

    for (bool reversed : {false, true}) {
      if (match(match, reversed)) {
        return {SearchOutcome::found, std::move(found)};
      }
    }
    return {SearchOutcome::exhausted, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Class enumeration
  ////////////////////////////////////////////////////////////////////////

  /// Which equivalence enumerate_class uses: M-equivalence under one
  /// ordering, or strong M-equivalence when no ordering is given.
  struct ClassMode {
    std::optional<OrderedAlphabet> ordering;

    static ClassMode strong() {
      return {std::nullopt};
    }
    static ClassMode m(OrderedAlphabet ordering) {
      return {std::move(ordering)};
    }
  };

  inline constexpr std::size_t max_class_word_length = 14;

  /// Every anagram of w equivalent to w under `mode`, sorted; includes w.
  inline std::vector<Word> enumerate_class(Word const& w, ClassMode const& mode) {
    if (w.size() > max_class_word_length) {
      throw CapError("class enumeration is limited to words of length "
                     + std::to_string(max_class_word_length));
    }
    std::vector<OrderedAlphabet> orderings;
    if (mode.ordering) {
      if (mode.ordering->size() != w.alphabet_size()) {
        throw InputError("word and ordering have different alphabet sizes");
      }
      orderings.push_back(*mode.ordering);
    } else if (w.alphabet_size() == 3) {
      orderings = sufficient_orderings(3);
    } else {
      orderings = all_orderings(w.alphabet_size());
    }
    std::vector<ParikhMatrix> reference;
    for (auto const& o : orderings) {
      reference.push_back(parikh_matrix(w, o));
    }

    std::vector<Letter> letters(w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    std::vector<Word> result;
    do {
      Word candidate(w.alphabet_size(), letters);
      bool same = true;
      for (std::size_t i = 0; i < orderings.size() && same; ++i) {
        same = parikh_matrix(candidate, orderings[i]) == reference[i];
      }
      if (same) {
        result.push_back(std::move(candidate));
      }
    } while (std::next_permutation(letters.begin(), letters.end()));
    return result;
  }

}  // namespace parikh

#endif  // PARIKH_SEARCH_HPP_
