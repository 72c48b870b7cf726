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

// Walks through the library on a few small words: Parikh matrices, a
// block-swap rewrite that keeps every matrix fixed, and the searches that
// look for such rewrites.
#include <cstdio>
#include <string>

#include "parikh/parikh.hpp"

using namespace parikh;

namespace {

  void print_matrix(ParikhMatrix const& m) {
    for (auto const& row : m.rows()) {
      std::string line;
      for (auto x : row) {
        line += ' ' + std::to_string(x);
      }
      std::printf("   %s\n", line.c_str());
    }
  }

}  // namespace

int main() {
  Alphabet const abc("abc");

  auto w = abc.parse("abcbabacab");
  std::printf("w = %s\n", abc.render(w).c_str());
  print_matrix(parikh_matrix(w, abc.parse_ordering("a<b<c")));

  // Reverse the four ab/ba blocks at 0, 3, 5 and 8.
  auto spec   = SwapSpec::on(w, {0, 1}, {0, 3, 5, 8});
  auto report = analyze(w, spec);
  std::printf("pq pairs:");
  for (auto const& x : report.pairs) {
    std::printf(" (%lld,%lld)", static_cast<long long>(x.p),
                static_cast<long long>(x.q));
  }
  std::printf("\nbalanced: %s, reducible: %s\n",
              report.valid ? "yes" : "no",
              report.reducible ? "yes" : "no");

  auto v = apply_strong_2t(w, spec);
  std::printf("v = %s, strongly M-equivalent: %s\n",
              abc.render(v).c_str(),
              strongly_m_equivalent(w, v) ? "yes" : "no");

  // Neither elementary swaps nor a 3-factor rewrite reach v from w.
  auto mse = mse_equivalent(w, v);
  std::printf("reachable by elementary swaps: %s\n",
              mse.outcome == SearchOutcome::found ? "yes" : "no");
  auto three = detect_strong_3t(w, v);
  std::printf("single 3-factor rewrite: %s\n", three.spec ? "yes" : "no");

  // The whole strong class of w, by brute force.
  auto members = enumerate_class(w, ClassMode::strong());
  std::printf("class size under all orderings: %zu\n", members.size());
  return 0;
}
