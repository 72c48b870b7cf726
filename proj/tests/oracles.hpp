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

// Brute-force reference implementations used by the tests. They work on
// plain strings and explicit matrices and share no code with the library.
#ifndef PARIKH_TESTS_ORACLES_HPP_
#define PARIKH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parikh/parikh.hpp"

namespace oracle {

  using Matrix = std::vector<std::vector<std::uint64_t>>;

  // Number of strictly increasing index tuples of w spelling v.
  inline std::uint64_t count_subword(std::string const& w,
                                     std::string const& v) {
    std::function<std::uint64_t(std::size_t, std::size_t)> go
        = [&](std::size_t from, std::size_t matched) -> std::uint64_t {
      if (matched == v.size()) {
        return 1;
      }
      std::uint64_t total = 0;
      for (std::size_t i = from; i < w.size(); ++i) {
        if (w[i] == v[matched]) {
          total += go(i + 1, matched + 1);
        }
      }
      return total;
    };
    return go(0, 0);
  }

  inline std::uint64_t count_factor(std::string const& w,
                                    std::string const& v) {
    std::uint64_t n = 0;
    for (std::size_t p = 0; p + v.size() <= w.size(); ++p) {
      n += w.compare(p, v.size(), v) == 0;
    }
    return n;
  }

  inline Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

  inline Matrix multiply(Matrix const& x, Matrix const& y) {
    std::size_t n = x.size();
    Matrix      r(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 0; m < n; ++m) {
          r[i][j] += x[i][m] * y[m][j];
        }
      }
    }
    return r;
  }

  // Full product of explicit letter matrices; `order` lists the letters
  // from smallest to largest.
  inline Matrix parikh_matrix(std::string const& w, std::string const& order) {
    std::size_t k = order.size();
    Matrix      m = identity(k + 1);
    for (char c : w) {
      auto   q = order.find(c);
      Matrix letter = identity(k + 1);
      letter[q][q + 1] = 1;
      m = multiply(m, letter);
    }
    return m;
  }

  inline std::vector<std::string> orderings(std::string letters) {
    std::sort(letters.begin(), letters.end());
    std::vector<std::string> result;
    do {
      result.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return result;
  }

  inline bool strongly_equivalent(std::string const& w,
                                  std::string const& v,
                                  std::string const& letters = "abc") {
    for (auto const& o : orderings(letters)) {
      if (parikh_matrix(w, o) != parikh_matrix(v, o)) {
        return false;
      }
    }
    return true;
  }

  // Every word of length n over `letters`, in lexicographic order of
  // letter indices.
  inline std::vector<std::string> all_words(std::string const& letters,
                                            std::size_t        n) {
    std::vector<std::string> result{""};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> next;
      for (auto const& w : result) {
        for (char c : letters) {
          next.push_back(w + c);
        }
      }
      result = std::move(next);
    }
    return result;
  }

  inline std::vector<std::string> all_words_up_to(std::string const& letters,
                                                  std::size_t        n) {
    std::vector<std::string> result;
    for (std::size_t len = 0; len <= n; ++len) {
      auto words = all_words(letters, len);
      result.insert(result.end(), words.begin(), words.end());
    }
    return result;
  }

  struct Pair {
    std::int64_t p;
    std::int64_t q;
  };

  // (p, q) for a block at `pos` over letters x, y with third letter z:
  // p is the change in |w|_{xy}, q the change in |w|_{xyz}, both measured
  // directly by swapping the block alone.
  inline Pair block_effect(std::string const& w,
                           std::size_t        pos,
                           char               x,
                           char               y,
                           char               z) {
    std::string v = w;
    std::swap(v[pos], v[pos + 1]);
    std::string xy{x, y};
    std::string xyz{x, y, z};
    return {static_cast<std::int64_t>(count_subword(v, xy))
                - static_cast<std::int64_t>(count_subword(w, xy)),
            static_cast<std::int64_t>(count_subword(v, xyz))
                - static_cast<std::int64_t>(count_subword(w, xyz))};
  }

  // Lexicographically smallest proper nonempty index subset with zero sums,
  // by enumerating every subset.
  inline std::optional<std::vector<std::size_t>>
  smallest_zero_subset(std::vector<Pair> const& pairs) {
    std::size_t                                         n = pairs.size();
    std::optional<std::vector<std::size_t>>             best;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
      std::int64_t             p = 0, q = 0;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          p += pairs[i].p;
          q += pairs[i].q;
          idx.push_back(i);
        }
      }
      if (p == 0 && q == 0 && (!best || idx < *best)) {
        best = idx;
      }
    }
    return best;
  }

  // All sets of pairwise disjoint two-letter block positions of w with
  // between 1 and max_blocks elements, each block reading xy or yx.
  inline std::vector<std::vector<std::size_t>>
  block_sets(std::string const& w, char x, char y, std::size_t max_blocks) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if ((w[i] == x && w[i + 1] == y) || (w[i] == y && w[i + 1] == x)) {
        sites.push_back(i);
      }
    }
    std::vector<std::vector<std::size_t>> result;
    std::vector<std::size_t>              current;
    std::function<void(std::size_t)>      go = [&](std::size_t from) {
      if (!current.empty()) {
        result.push_back(current);
      }
      if (current.size() == max_blocks) {
        return;
      }
      for (std::size_t s = from; s < sites.size(); ++s) {
        if (!current.empty() && sites[s] < current.back() + 2) {
          continue;
        }
        current.push_back(sites[s]);
        go(s + 1);
        current.pop_back();
      }
    };
    go(0);
    return result;
  }

  inline std::string swap_blocks(std::string w,
                                 std::vector<std::size_t> const& positions) {
    for (auto p : positions) {
      std::swap(w[p], w[p + 1]);
    }
    return w;
  }

  struct Factor {
    std::size_t start;
    std::size_t end;  // inclusive
    int         cls;  // 0: ab..ba, 1: bc..cb, 2: ca..ac
    bool        reversed;
  };

  // Every factor of w (length >= 4) whose two end blocks read xy ... yx for
  // one of the three class pairs, in either orientation.
  inline std::vector<Factor> factor_sites(std::string const& w) {
    static char const pairs[3][2] = {{'a', 'b'}, {'b', 'c'}, {'c', 'a'}};
    std::vector<Factor> result;
    for (std::size_t i = 0; i + 3 < w.size(); ++i) {
      for (std::size_t j = i + 3; j < w.size(); ++j) {
        for (int cls = 0; cls < 3; ++cls) {
          for (bool rev : {false, true}) {
            char x = pairs[cls][rev ? 1 : 0];
            char y = pairs[cls][rev ? 0 : 1];
            if (w[i] == x && w[i + 1] == y && w[j - 1] == y && w[j] == x) {
              result.push_back({i, j, cls, rev});
            }
          }
        }
      }
    }
    return result;
  }

  // Interior sums (|x|_c over ab-factors, |x|_a over bc, |x|_b over ca).
  inline std::array<std::int64_t, 3>
  triple_sums(std::string const& w, std::vector<Factor> const& fs) {
    static char const counted[3] = {'c', 'a', 'b'};
    std::array<std::int64_t, 3> sums{0, 0, 0};
    for (auto const& f : fs) {
      for (std::size_t i = f.start + 2; i + 1 < f.end; ++i) {
        sums[f.cls] += w[i] == counted[f.cls];
      }
    }
    return sums;
  }

  // Converters between plain strings over "abc" and library words.
  inline parikh::Word word(std::string const& s) {
    static parikh::Alphabet const abc("abc");
    return abc.parse(s);
  }

  inline std::string str(parikh::Word const& w) {
    static parikh::Alphabet const abc("abc");
    return abc.render(w);
  }

  inline Matrix to_matrix(parikh::ParikhMatrix const& m) {
    return m.rows();
  }

}  // namespace oracle

#endif  // PARIKH_TESTS_ORACLES_HPP_
