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

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "cli.hpp"
#include "json.hpp"

namespace parikh::cli {

  namespace {
    struct Result {
      int         code;
      std::string out;
      std::string err;
    };

    Result run_cli(std::vector<std::string> const& args) {
      std::ostringstream out, err;
      int                code = run(args, out, err);
      return {code, out.str(), err.str()};
    }

    // Parses a JSON result and checks that re-serialising it gives back the
    // same bytes.
    nlohmann::json json_of(Result const& r) {
      REQUIRE(!r.out.empty());
      REQUIRE(r.out.back() == '\n');
      auto body = r.out.substr(0, r.out.size() - 1);
      auto j    = nlohmann::json::parse(body);
      REQUIRE(j.dump() == body);
      return j;
    }
  }  // namespace

  TEST_CASE("matrix", "[cli]") {
    auto r = run_cli({"matrix", "abccc", "--order", "a<b<c", "--output", "json"});
    REQUIRE(r.code == exit_affirmative);
    REQUIRE(r.out == "[[1,1,1,3],[0,1,1,3],[0,0,1,3],[0,0,0,1]]\n");

    auto t = run_cli({"matrix", "abcba", "--order", "b<a<c"});
    REQUIRE(t.code == 0);
    REQUIRE(t.out == "1 2 2 0\n0 1 2 1\n0 0 1 1\n0 0 0 1\n");

    auto wide = run_cli({"matrix", "aaaaaaaaaaab"});
    REQUIRE(wide.out == " 1 11 11  0\n 0  1  1  0\n 0  0  1  0\n 0  0  0  1\n");
  }

  TEST_CASE("usage errors exit with 2", "[cli]") {
    auto r = run_cli({"matrix", "abccc", "--order", "a<b"});
    REQUIRE(r.code == exit_usage);
    REQUIRE(r.out.empty());
    REQUIRE(r.err.find("error: ") == 0);
    REQUIRE(r.err.find("\nusage: parikh matrix") != std::string::npos);

    auto letter = run_cli({"count", "abd", "a"});
    REQUIRE(letter.code == exit_usage);
    REQUIRE(letter.err.find("position 2") != std::string::npos);

    REQUIRE(run_cli({}).code == exit_usage);
    REQUIRE(run_cli({"frobnicate"}).code == exit_usage);
    REQUIRE(run_cli({"transform"}).code == exit_usage);
    REQUIRE(run_cli({"matrix"}).code == exit_usage);
    REQUIRE(run_cli({"--output", "xml", "matrix", "ab"}).code == exit_usage);
    REQUIRE(run_cli({"--alphabet", "aab", "matrix", "ab"}).code == exit_usage);
    REQUIRE(run_cli({"transform", "s2t", "abba", "--pair", "ad", "--blocks", "0,2"})
                .code
            == exit_usage);
    REQUIRE(run_cli({"transform", "s3t", "abba", "--factors", "0-3:XY"}).code
            == exit_usage);
    REQUIRE(run_cli({"transform", "s3t", "abba", "--factors", "0:AB"}).code
            == exit_usage);
    REQUIRE(run_cli({"count", "abc", ""}).out == "1\n");
    REQUIRE(run_cli({"--alphabet", "abcdefg", "strong-equiv", "ab", "ba"}).code
            == exit_usage);
    REQUIRE(run_cli({"family", "not2t", "0"}).code == exit_usage);
    REQUIRE(run_cli({"--alphabet", "ab", "family", "not2t", "1"}).code
            == exit_usage);
  }

  TEST_CASE("help exits with 0", "[cli]") {
    auto r = run_cli({"--help"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("matrix") != std::string::npos);
  }

  TEST_CASE("count and vector", "[cli]") {
    REQUIRE(run_cli({"count", "abccc", "abc"}).out == "3\n");
    REQUIRE(run_cli({"count", "ababa", "aba", "--factor"}).out == "2\n");
    auto j = json_of(run_cli({"--output", "json", "count", "abcba", "ba"}));
    REQUIRE(j["count"] == 2);
    REQUIRE(j["kind"] == "subword");
    REQUIRE(run_cli({"vector", "abcba", "--order", "b<a<c"}).out == "(2, 2, 1)\n");
  }

  TEST_CASE("equivalence commands", "[cli]") {
    auto r = run_cli({"strong-equiv", "babcbabcbabcbab", "bbacabbcabbcbba"});
    REQUIRE(r.code == exit_affirmative);
    REQUIRE(r.out == "strongly M-equivalent\n");

    auto n = run_cli({"strong-equiv", "ac", "ca"});
    REQUIRE(n.code == exit_negative);
    REQUIRE(n.out == "not strongly M-equivalent\n");

    auto j = json_of(
        run_cli({"--output", "json", "strong-equiv", "ac", "ca"}));
    REQUIRE(j["orderings"].size() == 6);
    REQUIRE(j["strongly_equivalent"] == false);

    REQUIRE(run_cli({"equiv", "ac", "ca"}).code == exit_affirmative);
    REQUIRE(run_cli({"equiv", "ac", "ca", "--order", "a<c<b"}).code
            == exit_negative);
    REQUIRE(run_cli({"--alphabet", "xyz", "equiv", "xz", "zx"}).code
            == exit_affirmative);
  }

  TEST_CASE("class", "[cli]") {
    auto r = run_cli({"class", "ac"});
    REQUIRE(r.out == "ac\nca\n");
    auto s = json_of(run_cli({"--output", "json", "class", "abc", "--strong"}));
    REQUIRE(s["members"] == nlohmann::json::array({"abc"}));
    REQUIRE(s["size"] == 1);
  }

  TEST_CASE("transform", "[cli]") {
    REQUIRE(run_cli({"transform", "e1", "ac", "--pos", "0"}).out == "ca\n");
    REQUIRE(run_cli({"transform", "e1", "acb", "--pos", "1"}).code
            == exit_negative);

    auto s2t = run_cli(
        {"transform", "s2t", "babcbabcbabcbab", "--pair", "ab", "--blocks", "1,4,8,13"});
    REQUIRE(s2t.code == 0);
    REQUIRE(s2t.out == "bbacabbcabbcbba\n");

    auto js = json_of(run_cli({"--output",
                               "json",
                               "transform",
                               "s2t",
                               "abcbabacab",
                               "--pair",
                               "ab",
                               "--blocks",
                               "0,3,5,8"}));
    REQUIRE(js["output"] == "bacababcba");
    REQUIRE(js["spec"]["blocks"][1]["kind"] == "ba");
    REQUIRE(js["pq"] == nlohmann::json::parse("[[-1,-2],[1,1],[1,1],[-1,0]]"));

    auto bad = run_cli({"transform", "s2t", "abcba", "--pair", "ab", "--blocks", "0"});
    REQUIRE(bad.code == exit_negative);
    REQUIRE(bad.err.find("rejected: ") == 0);

    auto s3t = run_cli({"transform",
                        "s3t",
                        "abcbabcacbcabac",
                        "--factors",
                        "0-4:AB,5-9:BC,10-14:CA"});
    REQUIRE(s3t.out == "bacabcbabcacbca\n");
    REQUIRE(run_cli({"transform", "s3t", "abcbabcacb", "--factors", "0-4:AB,5-9:BC"})
                .code
            == exit_negative);

    REQUIRE(run_cli({"transform", "classic2t", "abba", "--pair", "ab", "--blocks",
                     "0,2", "--groups", "0:1"})
                .out
            == "baab\n");
    REQUIRE(run_cli({"transform", "classic2t", "abcba", "--pair", "ab", "--blocks",
                     "0,3", "--groups", "0:1"})
                .code
            == exit_negative);

    auto ab = json_of(run_cli(
        {"--output", "json", "transform", "alphabeta", "abcba", "--at", "0,3"}));
    REQUIRE(ab["output"] == "bacab");
    REQUIRE(ab["counter"] == nlohmann::json::parse(R"({"abc":1,"acb":0,"bac":-1})"));
    REQUIRE(ab["predicted"].size() == 6);
    REQUIRE(run_cli({"transform", "alphabeta", "abab", "--at", "0,2"}).code
            == exit_negative);
  }

  TEST_CASE("irreducible and decompose", "[cli]") {
    auto r = run_cli({"--output", "json", "irreducible", "abbaabba", "--pair", "ab",
                      "--blocks", "0,2,4,6"});
    REQUIRE(r.code == exit_negative);
    auto j = json_of(r);
    REQUIRE(j["valid"] == true);
    REQUIRE(j["reducible"] == true);
    REQUIRE(j["witness"] == nlohmann::json::array({0, 1}));
    REQUIRE(j["decomposition"].size() == 2);

    auto i = run_cli(
        {"irreducible", "abcbabacab", "--pair", "ab", "--blocks", "0,3,5,8"});
    REQUIRE(i.code == exit_affirmative);
    REQUIRE(i.out.find("reducible: no") != std::string::npos);

    auto d = json_of(run_cli({"--output", "json", "decompose", "abbaabba", "--pair",
                              "ab", "--blocks", "0,2,4,6"}));
    REQUIRE(d["result"] == "baabbaab");
    REQUIRE(d["stages"].size() == 2);
  }

  TEST_CASE("detect", "[cli]") {
    REQUIRE(run_cli({"detect", "s2t", "abcbabacab", "bacababcba"}).code == 0);
    REQUIRE(run_cli({"detect", "s2t", "abcabcabcabcabcabc", "cabababcabccabccab"})
                .code
            == exit_negative);
    REQUIRE(run_cli({"detect", "s3t", "abcbabcacbcabac", "bacabcbabcacbca"}).code
            == 0);
    REQUIRE(run_cli({"detect", "s3t", "abcbabacab", "bacababcba"}).code
            == exit_negative);
    REQUIRE(run_cli({"detect", "s3t", "abcbabcacbcabac", "bacabcbabcacbca",
                     "--factor-cap", "2"})
                .code
            == exit_inconclusive);
    auto sites = json_of(run_cli({"--output", "json", "detect", "sites", "abba"}));
    REQUIRE(sites["sites"] == nlohmann::json::parse("[[0,2]]"));
  }

  TEST_CASE("search", "[cli]") {
    REQUIRE(run_cli({"search", "mse", "abba", "baab"}).code == exit_affirmative);
    auto s = run_cli({"search", "mse", "babcbabcbabcbab", "bbacabbcabbcbba"});
    REQUIRE(s.code == exit_negative);
    REQUIRE(s.out.find("closure exhausted") != std::string::npos);
    REQUIRE(run_cli({"search", "mse", "abbaabba", "baabbaab", "--node-cap", "2"})
                .code
            == exit_inconclusive);

    auto m = json_of(run_cli({"--output", "json", "search", "msae",
                              "babcbabcbabcbab", "bbacabbcabbcbba", "--max-steps",
                              "4"}));
    REQUIRE(m["outcome"] == "found");
    REQUIRE(m["derivation"]["steps"].size() == 2);
    REQUIRE(m["derivation"]["counter_sum"]
            == nlohmann::json::parse(R"({"abc":0,"acb":0,"bac":0})"));
    REQUIRE(run_cli({"search", "msae", "ab", "ba"}).code == exit_negative);

    auto t = run_cli({"search", "thm36", "babcbabcbabcbab", "--pair", "ab",
                      "--blocks", "1,4,8,13"});
    REQUIRE(t.code == exit_affirmative);
    REQUIRE(t.out.find("bbacabbcabbcbba") == 0);
  }

  TEST_CASE("PARIKH_NODE_CAP overrides the default cap", "[cli]") {
    ::setenv("PARIKH_NODE_CAP", "2", 1);
    auto r = run_cli({"search", "mse", "abbaabba", "baabbaab"});
    ::unsetenv("PARIKH_NODE_CAP");
    REQUIRE(r.code == exit_inconclusive);
    REQUIRE(run_cli({"search", "mse", "abbaabba", "baabbaab"}).code
            == exit_affirmative);
  }

  TEST_CASE("family", "[cli]") {
    REQUIRE(run_cli({"family", "irreducible", "2"}).out
            == "abcbabacab\nbacababcba\n");
    auto j = json_of(run_cli({"--output", "json", "family", "not2t", "1"}));
    REQUIRE(j["w"] == "abcbabcacbcabac");
    REQUIRE(j["spec"]["factors"].size() == 3);
    auto k = json_of(run_cli({"--output", "json", "family", "not3t", "2"}));
    REQUIRE(k["spec"]["blocks"].size() == 8);
  }

  TEST_CASE("every JSON result round-trips", "[cli]") {
    std::vector<std::vector<std::string>> const commands = {
        {"matrix", "abcabc"},
        {"vector", "abcabc"},
        {"count", "abcabc", "ab"},
        {"equiv", "ac", "ca"},
        {"strong-equiv", "abba", "baab"},
        {"class", "abcab"},
        {"transform", "e1", "ac", "--pos", "0"},
        {"transform", "classic2t", "abba", "--pair", "ab", "--blocks", "0,2",
         "--groups", "0:1"},
        {"irreducible", "abcba", "--pair", "ab", "--blocks", "0"},
        {"detect", "s2t", "abba", "baab"},
        {"detect", "s3t", "abba", "baab"},
        {"search", "mse", "abcba", "bacab"},
        {"search", "msae", "abba", "baab"},
        {"search", "thm36", "abcbabacab", "--pair", "ab", "--blocks", "0,3,5,8"},
        {"family", "irreducible", "4"},
    };
    for (auto args : commands) {
      args.insert(args.begin(), {"--output", "json"});
      auto r = run_cli(args);
      INFO(args[2]);
      REQUIRE(r.code != exit_usage);
      (void) json_of(r);
    }
  }

}  // namespace parikh::cli
