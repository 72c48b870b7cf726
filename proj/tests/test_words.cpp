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

#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "parikh/parikh.hpp"

namespace parikh {

  namespace {
    Alphabet const abc("abc");

    Word w_(std::string const& s) {
      return abc.parse(s);
    }
  }  // namespace

  TEST_CASE("Alphabet construction", "[words][quick]") {
    REQUIRE(abc.size() == 3);
    REQUIRE(abc.symbol(2) == 'c');
    REQUIRE(abc.index_of('b') == Letter{1});
    REQUIRE_FALSE(abc.index_of('d').has_value());
    REQUIRE_THROWS_AS(Alphabet("aba"), InputError);
    REQUIRE_THROWS_AS(Alphabet(""), InputError);
  }

  TEST_CASE("parse_word", "[words][quick]") {
    REQUIRE(parse_word("abccc", abc).size() == 5);
    REQUIRE(parse_word("", abc).empty());
    REQUIRE(abc.render(parse_word("cab", abc)) == "cab");
    try {
      (void) parse_word("abd", abc);
      FAIL("expected MembershipError");
    } catch (MembershipError const& e) {
      REQUIRE(e.position() == 2);
      REQUIRE(std::string(e.what()).find('d') != std::string::npos);
    }
  }

  TEST_CASE("Word rejects letters outside its alphabet", "[words][quick]") {
    REQUIRE_THROWS_AS(Word(3, {0, 3}), MembershipError);
    REQUIRE_THROWS_AS(Word(0), InputError);
    REQUIRE_THROWS_AS(w_("ab").at(2), RangeError);
  }

  TEST_CASE("count_subword examples", "[words][quick]") {
    REQUIRE(count_subword(w_("abccc"), w_("abc")) == 3);
    REQUIRE(count_subword(w_("abcba"), w_("ba")) == 2);
    for (auto const& s : {"", "a", "abcabc", "cccc"}) {
      REQUIRE(count_subword(w_(s), w_("")) == 1);
    }
    REQUIRE(count_subword(w_("ab"), w_("abc")) == 0);
    REQUIRE_THROWS_AS(count_subword(w_("ab"), Word(2, {0})), InputError);
  }

  TEST_CASE("count_subword overflow is reported", "[words][quick]") {
    // |a^128|_{a^64} = C(128, 64) > 2^64.
    Word a128(1, std::vector<Letter>(128, 0));
    Word a64(1, std::vector<Letter>(64, 0));
    REQUIRE_THROWS_AS(count_subword(a128, a64), OverflowError);
    Word a60(1, std::vector<Letter>(60, 0));
    Word a30(1, std::vector<Letter>(30, 0));
    REQUIRE(count_subword(a60, a30) == 118264581564861424ULL);
  }

  TEST_CASE("count_factor examples", "[words][quick]") {
    REQUIRE(count_factor(w_("ababa"), w_("aba")) == 2);
    REQUIRE(count_factor(w_("abc"), w_("abc")) == 1);
    REQUIRE(count_factor(w_("abc"), w_("cb")) == 0);
    REQUIRE_THROWS_AS(count_factor(w_("abc"), w_("")), DegenerateError);
  }

  TEST_CASE("parikh_vector examples", "[words][quick]") {
    auto natural = OrderedAlphabet::natural(3);
    REQUIRE(parikh_vector(w_("abccc"), natural).counts
            == std::vector<Count>{1, 1, 3});
    REQUIRE(parikh_vector(w_(""), natural).counts
            == std::vector<Count>{0, 0, 0});
    REQUIRE(parikh_vector(w_("abcba"), abc.parse_ordering("b<a<c")).counts
            == std::vector<Count>{2, 2, 1});
  }

  TEST_CASE("orderings parse and render", "[words][quick]") {
    auto o = abc.parse_ordering("b<a<c");
    REQUIRE(std::vector<Letter>(o.chain().begin(), o.chain().end())
            == std::vector<Letter>{1, 0, 2});
    REQUIRE(o.rank(0) == 2);
    REQUIRE(o.letter_of_rank(1) == 1);
    REQUIRE(abc.render(o) == "b<a<c");
    REQUIRE(abc.render(o.run(1, 3)) == "bac");
    REQUIRE_THROWS_AS(abc.parse_ordering("a<b"), InputError);
    REQUIRE_THROWS_AS(abc.parse_ordering("a<b<b"), InputError);
    REQUIRE_THROWS_AS(abc.parse_ordering("a<b<d"), MembershipError);
    REQUIRE(all_orderings(3).size() == 6);
    REQUIRE(all_orderings(4).size() == 24);
  }

  TEST_CASE("count_subword agrees with index-tuple enumeration",
            "[words][property]") {
    auto patterns = oracle::all_words_up_to("abc", 3);
    for (auto const& w : oracle::all_words_up_to("abc", 8)) {
      auto word = w_(w);
      for (auto const& v : patterns) {
        REQUIRE(count_subword(word, w_(v)) == oracle::count_subword(w, v));
      }
    }
  }

  TEST_CASE("count_factor agrees with a sliding window",
            "[words][property]") {
    auto patterns = oracle::all_words("abc", 2);
    auto more     = oracle::all_words("abc", 3);
    patterns.insert(patterns.end(), more.begin(), more.end());
    for (auto const& w : oracle::all_words_up_to("abc", 7)) {
      for (auto const& v : patterns) {
        REQUIRE(count_factor(w_(w), w_(v)) == oracle::count_factor(w, v));
      }
    }
  }

  TEST_CASE("single-letter counts are the Parikh vector",
            "[words][property]") {
    auto natural = OrderedAlphabet::natural(3);
    for (auto const& w : oracle::all_words_up_to("abc", 6)) {
      auto v = parikh_vector(w_(w), natural);
      for (Letter x = 0; x < 3; ++x) {
        REQUIRE(count_subword(w_(w), Word(3, {x})) == v.counts[x]);
      }
      REQUIRE(v.counts[0] + v.counts[1] + v.counts[2] == w.size());
    }
  }

  TEST_CASE("count_subword is invariant under renaming", "[words][property]") {
    Alphabet const renamed("xyz");
    auto           rename = [](std::string s) {
      for (char& c : s) {
        c = static_cast<char>(c - 'a' + 'x');
      }
      return s;
    };
    auto patterns = oracle::all_words_up_to("abc", 3);
    for (auto const& w : oracle::all_words_up_to("abc", 6)) {
      for (auto const& v : patterns) {
        REQUIRE(count_subword(renamed.parse(rename(w)), renamed.parse(rename(v)))
                == count_subword(w_(w), w_(v)));
      }
    }
    // A non-identity bijection of the same alphabet: a->c, b->a, c->b.
    Alphabet const permuted("bca");
    for (auto const& w : oracle::all_words_up_to("abc", 6)) {
      for (auto const& v : patterns) {
        REQUIRE(count_subword(permuted.parse(w), permuted.parse(v))
                == count_subword(w_(w), w_(v)));
      }
    }
  }

  TEST_CASE("longer patterns never occur", "[words][property]") {
    for (auto const& w : oracle::all_words_up_to("abc", 4)) {
      for (auto const& v : oracle::all_words("abc", w.size() + 1)) {
        REQUIRE(count_subword(w_(w), w_(v)) == 0);
      }
    }
  }

  TEST_CASE("wide character alphabets", "[words][quick]") {
    basic_alphabet<wchar_t> greek(L"αβγ");
    auto                    w = greek.parse(L"αβγγγ");
    auto                    v = greek.parse(L"αβγ");
    REQUIRE(count_subword(w, v) == 3);
    REQUIRE(greek.render(w) == L"αβγγγ");
  }

}  // namespace parikh
