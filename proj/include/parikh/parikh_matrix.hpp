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

#ifndef PARIKH_PARIKH_MATRIX_HPP_
#define PARIKH_PARIKH_MATRIX_HPP_

#include <cstddef>  // for size_t
#include <string>   // for to_string
#include <vector>   // for vector

#include "errors.hpp"
#include "words.hpp"

namespace parikh {

  /// A square upper unitriangular matrix with nonnegative integer entries,
  /// i.e. an element of the monoid M_n. Indices are 0-based.
  class ParikhMatrix {
   public:
    explicit ParikhMatrix(std::size_t dim) : _dim(dim), _entries(dim * dim) {
      if (dim == 0) {
        throw RangeError("matrix dimension must be positive");
      }
      for (std::size_t i = 0; i < dim; ++i) {
        _entries[i * dim + i] = 1;
      }
    }

    static ParikhMatrix identity(std::size_t dim) {
      return ParikhMatrix(dim);
    }

    [[nodiscard]] std::size_t dimension() const noexcept {
      return _dim;
    }

    [[nodiscard]] Count operator()(std::size_t i, std::size_t j) const {
      check(i, j);
      return _entries[i * _dim + j];
    }

    /// Sets an entry strictly above the diagonal.
    void set(std::size_t i, std::size_t j, Count value) {
      check(i, j);
      if (j <= i) {
        throw RangeError("only entries above the diagonal can be set");
      }
      _entries[i * _dim + j] = value;
    }

    [[nodiscard]] std::vector<std::vector<Count>> rows() const {
      std::vector<std::vector<Count>> result(_dim);
      for (std::size_t i = 0; i < _dim; ++i) {
        result[i].assign(_entries.begin() + i * _dim,
                         _entries.begin() + (i + 1) * _dim);
      }
      return result;
    }

    // Multiplies the upper triangles only; both factors are unitriangular.
    friend ParikhMatrix operator*(ParikhMatrix const& x, ParikhMatrix const& y) {
      if (x._dim != y._dim) {
        throw InputError("matrix dimensions differ");
      }
      std::size_t  n = x._dim;
      ParikhMatrix result(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          Count sum = 0;
          for (std::size_t m = i; m <= j; ++m) {
            sum = detail::checked_add(
                sum,
                detail::checked_mul(x._entries[i * n + m],
                                    y._entries[m * n + j]));
          }
          result._entries[i * n + j] = sum;
        }
      }
      return result;
    }

    // Right multiplication by the letter matrix of rank q adds column q - 1
    // to column q (1-based: column q to column q + 1).
    void multiply_by_letter(std::size_t q) {
      if (q == 0 || q >= _dim) {
        throw RangeError("letter rank " + std::to_string(q)
                         + " out of range [1, " + std::to_string(_dim - 1)
                         + "]");
      }
      for (std::size_t i = 0; i < q; ++i) {
        auto& target = _entries[i * _dim + q];
        target = detail::checked_add(target, _entries[i * _dim + q - 1]);
      }
    }

    friend bool operator==(ParikhMatrix const&, ParikhMatrix const&)
        = default;

   private:
    void check(std::size_t i, std::size_t j) const {
      if (i >= _dim || j >= _dim) {
        throw RangeError("matrix index (" + std::to_string(i) + ", "
                         + std::to_string(j) + ") out of range");
      }
    }

    std::size_t        _dim;
    std::vector<Count> _entries;
  };

  /// The image of the letter of rank q (1-based) under the Parikh matrix
  /// mapping of a k-letter ordered alphabet: the identity of dimension k + 1
  /// with one extra 1 in row q, column q + 1 (1-based).
  inline ParikhMatrix letter_matrix(std::size_t q, std::size_t k) {
    if (q == 0 || q > k) {
      throw RangeError("letter rank " + std::to_string(q)
                       + " out of range [1, " + std::to_string(k) + "]");
    }
    ParikhMatrix result(k + 1);
    result.set(q - 1, q, 1);
    return result;
  }

  /// The Parikh matrix of w: the left-to-right product of the letter
  /// matrices of its letters. O(|w| k) with overflow detection.
  inline ParikhMatrix parikh_matrix(Word const&            w,
                                    OrderedAlphabet const& ordering) {
    if (w.alphabet_size() != ordering.size()) {
      throw InputError("word and ordering have different alphabet sizes");
    }
    ParikhMatrix result(ordering.size() + 1);
    for (auto x : w) {
      result.multiply_by_letter(ordering.rank(x));
    }
    return result;
  }

  /// The matrix whose entry in row i, column j + 1 (1-based) is
  /// |w|_{a_i ... a_j}. Equal to parikh_matrix(w, ordering) for every w;
  /// kept as an independent route for cross-checking.
  inline ParikhMatrix parikh_matrix_from_counts(
      Word const&            w,
      OrderedAlphabet const& ordering) {
    if (w.alphabet_size() != ordering.size()) {
      throw InputError("word and ordering have different alphabet sizes");
    }
    std::size_t  k = ordering.size();
    ParikhMatrix result(k + 1);
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t j = i; j <= k; ++j) {
        result.set(i - 1, j, count_subword(w, ordering.run(i, j)));
      }
    }
    return result;
  }

  inline bool m_equivalent(Word const&            w,
                           Word const&            v,
                           OrderedAlphabet const& ordering) {
    detail::require_same_alphabet(w, v);
    if (w.size() != v.size()) {
      return false;
    }
    return parikh_matrix(w, ordering) == parikh_matrix(v, ordering);
  }

  /// For a ternary alphabet with letters a, b, c in registration order, the
  /// orderings a<b<c, b<a<c, a<c<b. Agreement of Parikh matrices under these
  /// three implies agreement under all six.
  inline std::vector<OrderedAlphabet> sufficient_orderings(std::size_t k) {
    if (k != 3) {
      throw TernaryOnlyError(k);
    }
    return {OrderedAlphabet({0, 1, 2}),
            OrderedAlphabet({1, 0, 2}),
            OrderedAlphabet({0, 2, 1})};
  }

  /// Equality of Parikh matrices under every one of the k! orderings.
  inline bool strongly_m_equivalent_exhaustive(Word const& w, Word const& v) {
    detail::require_same_alphabet(w, v);
    if (w.size() != v.size()) {
      return false;
    }
    for (auto const& ordering : all_orderings(w.alphabet_size())) {
      if (!m_equivalent(w, v, ordering)) {
        return false;
      }
    }
    return true;
  }

  /// Strong M-equivalence. Uses the three sufficient orderings when the
  /// alphabet is ternary and all k! orderings otherwise.
  inline bool strongly_m_equivalent(Word const& w, Word const& v) {
    detail::require_same_alphabet(w, v);
    if (w.alphabet_size() != 3) {
      return strongly_m_equivalent_exhaustive(w, v);
    }
    if (w.size() != v.size()) {
      return false;
    }
    for (auto const& ordering : sufficient_orderings(3)) {
      if (!m_equivalent(w, v, ordering)) {
        return false;
      }
    }
    return true;
  }

}  // namespace parikh

#endif  // PARIKH_PARIKH_MATRIX_HPP_
