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

#ifndef PARIKH_WORDS_HPP_
#define PARIKH_WORDS_HPP_

#include <algorithm>    // for find, sort
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t, uint64_t
#include <limits>       // for numeric_limits
#include <optional>     // for optional
#include <span>         // for span
#include <string>       // for basic_string
#include <string_view>  // for basic_string_view
#include <type_traits>  // for is_same_v
#include <utility>      // for move
#include <vector>       // for vector

#include "errors.hpp"

namespace parikh {

  // A letter is stored as its index in the alphabet's registration order, so
  // for the alphabet "abc" the letters a, b, c are 0, 1, 2.
  using Letter = std::uint8_t;
  using Count  = std::uint64_t;

  inline constexpr std::size_t max_alphabet_size
      = std::numeric_limits<Letter>::max();

  namespace detail {
    inline Count checked_add(Count x, Count y) {
      if (x > std::numeric_limits<Count>::max() - y) {
        throw OverflowError();
      }
      return x + y;
    }

    inline Count checked_mul(Count x, Count y) {
      if (x != 0 && y > std::numeric_limits<Count>::max() / x) {
        throw OverflowError();
      }
      return x * y;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  /// A finite word over an alphabet of `alphabet_size()` letters. The empty
  /// word is valid. Words are immutable values; the rewriting helpers return
  /// new words.
  class Word {
   public:
    Word() = default;

    explicit Word(std::size_t alphabet_size) : _k(alphabet_size) {
      check_alphabet_size(alphabet_size);
    }

    Word(std::size_t alphabet_size, std::vector<Letter> letters)
        : _k(alphabet_size), _letters(std::move(letters)) {
      check_alphabet_size(alphabet_size);
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (_letters[i] >= _k) {
          throw MembershipError("#" + std::to_string(_letters[i]), i);
        }
      }
    }

    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return _k;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    [[nodiscard]] Letter at(std::size_t i) const {
      if (i >= _letters.size()) {
        throw RangeError("position " + std::to_string(i)
                         + " is out of range for a word of length "
                         + std::to_string(_letters.size()));
      }
      return _letters[i];
    }
    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] auto begin() const noexcept {
      return _letters.cbegin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _letters.cend();
    }

    /// The factor of length `len` starting at `pos`.
    [[nodiscard]] Word factor(std::size_t pos, std::size_t len) const {
      if (pos > size() || len > size() - pos) {
        throw RangeError("factor [" + std::to_string(pos) + ", "
                         + std::to_string(pos + len) + ") exceeds length "
                         + std::to_string(size()));
      }
      return Word(_k,
                  std::vector<Letter>(_letters.begin() + pos,
                                      _letters.begin() + pos + len));
    }

    /// Copy of this word with the letters at `pos` and `pos + 1` exchanged.
    [[nodiscard]] Word with_swapped(std::size_t pos) const {
      if (pos + 1 >= size()) {
        throw RangeError("no two-letter block at position "
                         + std::to_string(pos));
      }
      Word result = *this;
      std::swap(result._letters[pos], result._letters[pos + 1]);
      return result;
    }

    /// Copy of this word with every two-letter block starting at one of
    /// `positions` reversed. The blocks must be pairwise disjoint.
    [[nodiscard]] Word
    with_swapped_blocks(std::span<std::size_t const> positions) const {
      Word result = *this;
      for (auto pos : positions) {
        if (pos + 1 >= size()) {
          throw RangeError("no two-letter block at position "
                           + std::to_string(pos));
        }
        std::swap(result._letters[pos], result._letters[pos + 1]);
      }
      return result;
    }

    friend Word operator+(Word const& x, Word const& y) {
      if (x._k != y._k) {
        throw InputError("cannot concatenate words over alphabets of "
                         "different sizes");
      }
      Word result = x;
      result._letters.insert(
          result._letters.end(), y._letters.begin(), y._letters.end());
      return result;
    }

    friend bool operator==(Word const&, Word const&) = default;

    // Alphabet size first, then lexicographic in letter indices.
    friend std::strong_ordering operator<=>(Word const&, Word const&)
        = default;

    /// Hash functor for unordered containers.
    struct Hash {
      std::size_t operator()(Word const& w) const noexcept {
        // FNV-1a
        std::uint64_t h = 14695981039346656037ULL ^ w._k;
        for (auto x : w._letters) {
          h ^= x;
          h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
      }
    };

   private:
    static void check_alphabet_size(std::size_t k) {
      if (k == 0 || k > max_alphabet_size) {
        throw InputError("alphabet size must be in [1, "
                         + std::to_string(max_alphabet_size) + "], got "
                         + std::to_string(k));
      }
    }

    std::size_t         _k = 1;
    std::vector<Letter> _letters;
  };

  namespace detail {
    inline void require_same_alphabet(Word const& x, Word const& y) {
      if (x.alphabet_size() != y.alphabet_size()) {
        throw InputError("words are over alphabets of different sizes ("
                         + std::to_string(x.alphabet_size()) + " and "
                         + std::to_string(y.alphabet_size()) + ")");
      }
    }

    inline void require_ternary(Word const& w) {
      if (w.alphabet_size() != 3) {
        throw TernaryOnlyError(w.alphabet_size());
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // OrderedAlphabet
  ////////////////////////////////////////////////////////////////////////

  /// A total order a_1 < a_2 < ... < a_k on the letters of an alphabet,
  /// stored as the chain of letters in increasing order. Ranks are 1-based
  /// to match the usual a_1, ..., a_k indexing.
  class OrderedAlphabet {
   public:
    explicit OrderedAlphabet(std::vector<Letter> chain)
        : _chain(std::move(chain)), _rank(_chain.size(), 0) {
      if (_chain.empty() || _chain.size() > max_alphabet_size) {
        throw InputError("an ordering needs between 1 and "
                         + std::to_string(max_alphabet_size) + " letters");
      }
      for (std::size_t i = 0; i < _chain.size(); ++i) {
        Letter x = _chain[i];
        if (x >= _chain.size() || _rank[x] != 0) {
          throw InputError("ordering is not a permutation of the alphabet");
        }
        _rank[x] = i + 1;
      }
    }

    /// The ordering that follows registration order.
    static OrderedAlphabet natural(std::size_t k) {
      std::vector<Letter> chain(k);
      for (std::size_t i = 0; i < k; ++i) {
        chain[i] = static_cast<Letter>(i);
      }
      return OrderedAlphabet(std::move(chain));
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _chain.size();
    }

    [[nodiscard]] std::span<Letter const> chain() const noexcept {
      return _chain;
    }

    // 1-based
    [[nodiscard]] std::size_t rank(Letter x) const {
      if (x >= _rank.size()) {
        throw RangeError("letter #" + std::to_string(x)
                         + " is not in the ordering");
      }
      return _rank[x];
    }

    // 1-based
    [[nodiscard]] Letter letter_of_rank(std::size_t q) const {
      if (q == 0 || q > _chain.size()) {
        throw RangeError("rank " + std::to_string(q) + " out of range [1, "
                         + std::to_string(_chain.size()) + "]");
      }
      return _chain[q - 1];
    }

    /// The word a_i a_{i+1} ... a_j for 1 <= i <= j <= k.
    [[nodiscard]] Word run(std::size_t i, std::size_t j) const {
      if (i == 0 || i > j || j > _chain.size()) {
        throw RangeError("run bounds out of range");
      }
      return Word(_chain.size(),
                  std::vector<Letter>(_chain.begin() + (i - 1),
                                      _chain.begin() + j));
    }

    friend bool operator==(OrderedAlphabet const& x, OrderedAlphabet const& y) {
      return x._chain == y._chain;
    }

   private:
    std::vector<Letter>      _chain;
    std::vector<std::size_t> _rank;
  };

  /// All k! orderings of a k-letter alphabet, in lexicographic order of the
  /// chains.
  inline std::vector<OrderedAlphabet> all_orderings(std::size_t k) {
    std::vector<Letter> chain(k);
    for (std::size_t i = 0; i < k; ++i) {
      chain[i] = static_cast<Letter>(i);
    }
    std::vector<OrderedAlphabet> result;
    do {
      result.emplace_back(chain);
    } while (std::next_permutation(chain.begin(), chain.end()));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  /// An alphabet of distinct symbols of type `CharT`, in registration order.
  /// This is the only place where symbols are translated to and from letter
  /// indices.
  template <typename CharT>
  class basic_alphabet {
   public:
    using char_type   = CharT;
    using string_type = std::basic_string<CharT>;
    using view_type   = std::basic_string_view<CharT>;

    explicit basic_alphabet(view_type letters) : _letters(letters) {
      if (_letters.empty() || _letters.size() > max_alphabet_size) {
        throw InputError("an alphabet needs between 1 and "
                         + std::to_string(max_alphabet_size) + " letters");
      }
      for (std::size_t i = 0; i < _letters.size(); ++i) {
        if (_letters.find(_letters[i], i + 1) != string_type::npos) {
          throw InputError("duplicate letter '" + describe(_letters[i])
                           + "' in alphabet");
        }
      }
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }

    [[nodiscard]] view_type letters() const noexcept {
      return _letters;
    }

    [[nodiscard]] CharT symbol(Letter x) const {
      if (x >= _letters.size()) {
        throw RangeError("letter #" + std::to_string(x)
                         + " is not in the alphabet");
      }
      return _letters[x];
    }

    [[nodiscard]] std::optional<Letter> index_of(CharT c) const noexcept {
      auto pos = _letters.find(c);
      if (pos == string_type::npos) {
        return std::nullopt;
      }
      return static_cast<Letter>(pos);
    }

    [[nodiscard]] Word parse(view_type text) const {
      std::vector<Letter> letters;
      letters.reserve(text.size());
      for (std::size_t i = 0; i < text.size(); ++i) {
        auto x = index_of(text[i]);
        if (!x) {
          throw MembershipError(describe(text[i]), i);
        }
        letters.push_back(*x);
      }
      return Word(size(), std::move(letters));
    }

    [[nodiscard]] string_type render(Word const& w) const {
      if (w.alphabet_size() != size()) {
        throw InputError("word is over an alphabet of a different size");
      }
      string_type result;
      result.reserve(w.size());
      for (auto x : w) {
        result.push_back(_letters[x]);
      }
      return result;
    }

    /// Parses an ordering written as "b<a<c".
    [[nodiscard]] OrderedAlphabet parse_ordering(view_type text) const {
      std::vector<Letter> chain;
      std::size_t         start = 0;
      while (true) {
        auto stop  = text.find(CharT('<'), start);
        auto token = text.substr(start, stop == view_type::npos
                                            ? view_type::npos
                                            : stop - start);
        if (token.size() != 1) {
          throw InputError("malformed ordering: every '<'-separated item "
                           "must be a single letter");
        }
        auto x = index_of(token[0]);
        if (!x) {
          throw MembershipError(describe(token[0]), start);
        }
        chain.push_back(*x);
        if (stop == view_type::npos) {
          break;
        }
        start = stop + 1;
      }
      if (chain.size() != size()) {
        throw InputError("ordering lists " + std::to_string(chain.size())
                         + " letters but the alphabet has "
                         + std::to_string(size()));
      }
      return OrderedAlphabet(std::move(chain));
    }

    [[nodiscard]] string_type render(OrderedAlphabet const& order) const {
      string_type result;
      for (auto x : order.chain()) {
        if (!result.empty()) {
          result.push_back(CharT('<'));
        }
        result.push_back(symbol(x));
      }
      return result;
    }

    static std::string describe(CharT c) {
      if constexpr (std::is_same_v<CharT, char>) {
        return std::string(1, c);
      } else {
        return "U+" + std::to_string(static_cast<std::uint64_t>(c));
      }
    }

   private:
    string_type _letters;
  };

  using Alphabet = basic_alphabet<char>;

  template <typename CharT>
  Word parse_word(std::basic_string_view<CharT>  text,
                  basic_alphabet<CharT> const& alphabet) {
    return alphabet.parse(text);
  }

  inline Word parse_word(std::string_view text, Alphabet const& alphabet) {
    return alphabet.parse(text);
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting
  ////////////////////////////////////////////////////////////////////////

  /// |w|_v: the number of strictly increasing index tuples of w spelling v.
  /// |w|_lambda = 1. Runs in O(|w| |v|) time and O(|v|) space; throws
  /// OverflowError rather than wrapping.
  inline Count count_subword(Word const& w, Word const& v) {
    detail::require_same_alphabet(w, v);
    if (v.size() > w.size()) {
      return 0;
    }
    // ending[j] = occurrences of the prefix v[0, j) in the part of w read so
    // far.
    std::vector<Count> ending(v.size() + 1, 0);
    ending[0] = 1;
    for (auto x : w) {
      for (std::size_t j = v.size(); j > 0; --j) {
        if (v[j - 1] == x) {
          ending[j] = detail::checked_add(ending[j], ending[j - 1]);
        }
      }
    }
    return ending[v.size()];
  }

  /// Number of start positions p with w[p, p + |v|) = v.
  inline Count count_factor(Word const& w, Word const& v) {
    detail::require_same_alphabet(w, v);
    if (v.empty()) {
      throw DegenerateError("factor counting needs a nonempty pattern");
    }
    if (v.size() > w.size()) {
      return 0;
    }
    Count result = 0;
    auto  lw     = w.letters();
    auto  lv     = v.letters();
    for (std::size_t p = 0; p + lv.size() <= lw.size(); ++p) {
      if (std::equal(lv.begin(), lv.end(), lw.begin() + p)) {
        ++result;
      }
    }
    return result;
  }

  /// Letter counts indexed by rank (counts[i] = |w|_{a_{i+1}}).
  struct ParikhVector {
    std::vector<Count> counts;

    friend bool operator==(ParikhVector const&, ParikhVector const&)
        = default;
  };

  inline ParikhVector parikh_vector(Word const&            w,
                                    OrderedAlphabet const& ordering) {
    if (w.alphabet_size() != ordering.size()) {
      throw InputError("word and ordering have different alphabet sizes");
    }
    std::vector<Count> tally(ordering.size(), 0);
    for (auto x : w) {
      ++tally[x];
    }
    ParikhVector result{std::vector<Count>(ordering.size(), 0)};
    for (std::size_t i = 0; i < ordering.size(); ++i) {
      result.counts[i] = tally[ordering.chain()[i]];
    }
    return result;
  }

  // Tally by letter index, independent of any ordering.
  inline std::vector<Count> letter_counts(Word const& w) {
    std::vector<Count> tally(w.alphabet_size(), 0);
    for (auto x : w) {
      ++tally[x];
    }
    return tally;
  }

}  // namespace parikh

#endif  // PARIKH_WORDS_HPP_
