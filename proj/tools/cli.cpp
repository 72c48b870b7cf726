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

#include "cli.hpp"

#include <cstdlib>    // for getenv, strtoull
#include <map>        // for map
#include <ostream>    // for ostream
#include <sstream>    // for ostringstream
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

#include <CLI11.hpp>
#include <json.hpp>

#include "parikh/parikh.hpp"

namespace parikh::cli {

  namespace {

    using json = nlohmann::json;

    // Bad flag values that CLI11 cannot catch on its own.
    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    constexpr std::size_t max_cli_alphabet = 6;

    std::map<std::string, std::string> const synopses = {
        {"", "parikh [--alphabet abc] [--order a<b<c] [--output text|json] "
             "<command> ..."},
        {"matrix", "parikh matrix <word> [--order a<b<c]"},
        {"vector", "parikh vector <word> [--order a<b<c]"},
        {"count", "parikh count <word> <pattern> [--factor]"},
        {"equiv", "parikh equiv <word> <word> [--order a<b<c]"},
        {"strong-equiv", "parikh strong-equiv <word> <word>"},
        {"class", "parikh class <word> [--strong | --order a<b<c]"},
        {"transform", "parikh transform e1|s2t|s3t|classic2t|alphabeta ..."},
        {"transform e1", "parikh transform e1 <word> --pos N [--order a<b<c]"},
        {"transform s2t", "parikh transform s2t <word> --pair ab --blocks 0,3,..."},
        {"transform s3t",
         "parikh transform s3t <word> --factors 0-4:AB,5-9:BC,..."},
        {"transform classic2t",
         "parikh transform classic2t <word> --pair ab --blocks 0,3 "
         "--groups 0:1,... [--order a<b<c]"},
        {"transform alphabeta", "parikh transform alphabeta <word> --at I,J"},
        {"irreducible", "parikh irreducible <word> --pair ab --blocks 0,3,..."},
        {"decompose", "parikh decompose <word> --pair ab --blocks 0,3,..."},
        {"detect", "parikh detect s2t|s3t|sites ..."},
        {"detect s2t", "parikh detect s2t <word> <word>"},
        {"detect s3t", "parikh detect s3t <word> <word> [--factor-cap N]"},
        {"detect sites", "parikh detect sites <word>"},
        {"search", "parikh search mse|msae|thm36 ..."},
        {"search mse", "parikh search mse <word> <word> [--node-cap N]"},
        {"search msae",
         "parikh search msae <word> <word> [--max-steps N] [--node-cap N]"},
        {"search thm36",
         "parikh search thm36 <word> --pair ab --blocks 0,3,... [--node-cap N]"},
        {"family", "parikh family irreducible|not3t|not2t <n>"},
        {"family irreducible", "parikh family irreducible <t>"},
        {"family not3t", "parikh family not3t <t>"},
        {"family not2t", "parikh family not2t <m>"},
    };

    struct Options {
      std::string              alphabet = "abc";
      std::string              order;
      std::string              output = "text";
      std::size_t              node_cap   = default_node_cap;
      std::size_t              max_steps  = default_max_steps;
      std::size_t              factor_cap = default_factor_cap;
      std::string              word;
      std::string              other;
      bool                     factor = false;
      bool                     strong = false;
      std::string              pair;
      std::vector<std::size_t> blocks;
      std::string              factors;
      std::string              groups;
      std::size_t              pos = 0;
      std::vector<std::size_t> at;
      std::size_t              parameter = 0;
    };

    class Context {
     public:
      Context(Options const& opt, std::ostream& out)
          : _alphabet(opt.alphabet),
            _ordering(opt.order.empty() ? OrderedAlphabet::natural(
                          _alphabet.size())
                                        : _alphabet.parse_ordering(opt.order)),
            _json(opt.output == "json"),
            _out(out) {}

      [[nodiscard]] Alphabet const& alphabet() const noexcept {
        return _alphabet;
      }
      [[nodiscard]] OrderedAlphabet const& ordering() const noexcept {
        return _ordering;
      }
      [[nodiscard]] Word word(std::string const& text) const {
        return _alphabet.parse(text);
      }
      [[nodiscard]] std::string str(Word const& w) const {
        return _alphabet.render(w);
      }
      [[nodiscard]] std::string str(OrderedAlphabet const& o) const {
        return _alphabet.render(o);
      }

      int emit(json const& j, std::string const& text, int code) const {
        if (_json) {
          _out << j.dump() << '\n';
        } else {
          _out << text;
          if (text.empty() || text.back() != '\n') {
            _out << '\n';
          }
        }
        return code;
      }

     private:
      Alphabet        _alphabet;
      OrderedAlphabet _ordering;
      bool            _json;
      std::ostream&   _out;
    };

    ////////////////////////////////////////////////////////////////////////
    // Flag parsing
    ////////////////////////////////////////////////////////////////////////

    std::size_t parse_index(std::string const& text) {
      if (text.empty()
          || text.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("expected a nonnegative integer, got '" + text + "'");
      }
      return static_cast<std::size_t>(std::stoull(text));
    }

    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> parts;
      std::string              current;
      for (char c : text) {
        if (c == sep) {
          parts.push_back(current);
          current.clear();
        } else {
          current.push_back(c);
        }
      }
      parts.push_back(current);
      return parts;
    }

    SwapSpec::LetterPair parse_pair(Context const& ctx, std::string const& s) {
      if (s.size() != 2) {
        throw UsageError("--pair takes two letters, e.g. --pair ab");
      }
      auto x = ctx.alphabet().index_of(s[0]);
      auto y = ctx.alphabet().index_of(s[1]);
      if (!x || !y || *x == *y) {
        throw UsageError("--pair must name two distinct alphabet letters");
      }
      return {*x, *y};
    }

    std::vector<FactorPlacement> parse_factors(std::string const& s) {
      std::vector<FactorPlacement> result;
      for (auto const& item : split(s, ',')) {
        auto colon = item.find(':');
        auto dash  = item.find('-');
        if (colon == std::string::npos || dash == std::string::npos
            || dash > colon) {
          throw UsageError("malformed factor '" + item
                           + "', expected START-END:CLASS");
        }
        auto start = parse_index(item.substr(0, dash));
        auto end   = parse_index(item.substr(dash + 1, colon - dash - 1));
        auto name  = item.substr(colon + 1);
        FactorClass cls;
        if (name == "AB") {
          cls = FactorClass::AB;
        } else if (name == "BC") {
          cls = FactorClass::BC;
        } else if (name == "CA") {
          cls = FactorClass::CA;
        } else {
          throw UsageError("factor class must be AB, BC or CA, got '" + name
                           + "'");
        }
        result.push_back({start, end, cls});
      }
      return result;
    }

    BlockGrouping parse_groups(std::string const& s) {
      BlockGrouping result;
      for (auto const& item : split(s, ',')) {
        auto parts = split(item, ':');
        if (parts.size() != 2) {
          throw UsageError("malformed group '" + item + "', expected I:J");
        }
        result.emplace_back(parse_index(parts[0]), parse_index(parts[1]));
      }
      return result;
    }

    ////////////////////////////////////////////////////////////////////////
    // Rendering
    ////////////////////////////////////////////////////////////////////////

    std::string grid(ParikhMatrix const& m) {
      std::size_t width = 1;
      for (auto const& row : m.rows()) {
        for (auto x : row) {
          width = std::max(width, std::to_string(x).size());
        }
      }
      std::ostringstream os;
      for (auto const& row : m.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          auto cell = std::to_string(row[j]);
          os << (j == 0 ? "" : " ") << std::string(width - cell.size(), ' ')
             << cell;
        }
        os << '\n';
      }
      return os.str();
    }

    std::string pair_str(Context const& ctx, SwapSpec::LetterPair const& p) {
      return {ctx.alphabet().symbol(p[0]), ctx.alphabet().symbol(p[1])};
    }

    json to_json(Context const& ctx, SwapSpec const& spec) {
      json blocks = json::array();
      for (auto const& b : spec.blocks()) {
        blocks.push_back(
            {{"pos", b.pos}, {"kind", b.kind == BlockKind::ab ? "ab" : "ba"}});
      }
      return {{"pair", pair_str(ctx, spec.pair())}, {"blocks", blocks}};
    }

    char const* class_name(FactorClass cls) {
      switch (cls) {
        case FactorClass::AB:
          return "AB";
        case FactorClass::BC:
          return "BC";
        case FactorClass::CA:
        default:
          return "CA";
      }
    }

    json to_json(TripleFactorSpec const& spec) {
      json factors = json::array();
      for (auto const& f : spec.factors()) {
        factors.push_back({{"start", f.start},
                           {"end", f.end},
                           {"class", class_name(f.cls)},
                           {"orientation", f.reversed ? "reversed" : "forward"}});
      }
      return {{"factors", factors}};
    }

    json to_json(Counter const& c) {
      return {{"abc", c.d_abc}, {"acb", c.d_acb}, {"bac", c.d_bac}};
    }

    json to_json(std::vector<PQPair> const& pairs) {
      json result = json::array();
      for (auto const& x : pairs) {
        result.push_back({x.p, x.q});
      }
      return result;
    }

    char const* kind_name(StepKind k) {
      switch (k) {
        case StepKind::SE:
          return "SE";
        case StepKind::E1:
          return "E1";
        case StepKind::S2T:
          return "S2T";
        case StepKind::S3T:
          return "S3T";
        case StepKind::ALPHA_BETA:
        default:
          return "ALPHA_BETA";
      }
    }

    char const* outcome_name(SearchOutcome o) {
      switch (o) {
        case SearchOutcome::found:
          return "found";
        case SearchOutcome::exhausted:
          return "exhausted";
        case SearchOutcome::capped:
        default:
          return "capped";
      }
    }

    int outcome_code(SearchOutcome o) {
      switch (o) {
        case SearchOutcome::found:
          return exit_affirmative;
        case SearchOutcome::exhausted:
          return exit_negative;
        case SearchOutcome::capped:
        default:
          return exit_inconclusive;
      }
    }

    json to_json(Context const& ctx, Derivation const& d) {
      json steps = json::array();
      for (auto const& s : d.steps) {
        json step = {{"kind", kind_name(s.kind)},
                     {"positions", s.positions},
                     {"result", ctx.str(s.result)}};
        if (s.counter) {
          step["counter"] = to_json(*s.counter);
        }
        steps.push_back(step);
      }
      return {{"start", ctx.str(d.start)},
              {"steps", steps},
              {"counter_sum", to_json(d.counter_sum())}};
    }

    json to_json(Context const& ctx, SearchResult const& r) {
      json j = {{"outcome", outcome_name(r.outcome)},
                {"nodes", r.nodes},
                {"depth_limited", r.depth_limited}};
      j["derivation"]
          = r.derivation ? to_json(ctx, *r.derivation) : json(nullptr);
      return j;
    }

    std::string derivation_text(Context const& ctx, Derivation const& d) {
      std::ostringstream os;
      os << ctx.str(d.start) << '\n';
      for (auto const& s : d.steps) {
        os << "  -" << kind_name(s.kind) << " @";
        for (std::size_t i = 0; i < s.positions.size(); ++i) {
          os << (i == 0 ? "" : ",") << s.positions[i];
        }
        if (s.counter) {
          os << " (" << s.counter->d_abc << ", " << s.counter->d_acb << ", "
             << s.counter->d_bac << ")";
        }
        os << "-> " << ctx.str(s.result) << '\n';
      }
      return os.str();
    }

    std::string join(std::vector<std::size_t> const& xs) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i == 0 ? "" : ",") + std::to_string(xs[i]);
      }
      return s;
    }

    ////////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////////

    int cmd_matrix(Context const& ctx, Options const& opt) {
      auto m = parikh_matrix(ctx.word(opt.word), ctx.ordering());
      return ctx.emit(json(m.rows()), grid(m), exit_affirmative);
    }

    int cmd_vector(Context const& ctx, Options const& opt) {
      auto v = parikh_vector(ctx.word(opt.word), ctx.ordering());
      std::string text;
      for (std::size_t i = 0; i < v.counts.size(); ++i) {
        text += (i == 0 ? "(" : ", ") + std::to_string(v.counts[i]);
      }
      text += ")";
      return ctx.emit(json(v.counts), text, exit_affirmative);
    }

    int cmd_count(Context const& ctx, Options const& opt) {
      auto w = ctx.word(opt.word);
      auto v = ctx.word(opt.other);
      auto n = opt.factor ? count_factor(w, v) : count_subword(w, v);
      json j = {{"word", opt.word},
                {"pattern", opt.other},
                {"kind", opt.factor ? "factor" : "subword"},
                {"count", n}};
      return ctx.emit(j, std::to_string(n), exit_affirmative);
    }

    int cmd_equiv(Context const& ctx, Options const& opt) {
      bool eq = m_equivalent(ctx.word(opt.word), ctx.word(opt.other),
                             ctx.ordering());
      json j  = {{"equivalent", eq}, {"order", ctx.str(ctx.ordering())}};
      return ctx.emit(j,
                      eq ? "M-equivalent" : "not M-equivalent",
                      eq ? exit_affirmative : exit_negative);
    }

    int cmd_strong_equiv(Context const& ctx, Options const& opt) {
      auto w = ctx.word(opt.word);
      auto v = ctx.word(opt.other);
      if (w.alphabet_size() > max_cli_alphabet) {
        throw UsageError("strong-equiv supports alphabets of at most "
                         + std::to_string(max_cli_alphabet) + " letters");
      }
      json orderings = json::array();
      for (auto const& o : all_orderings(w.alphabet_size())) {
        orderings.push_back(
            {{"order", ctx.str(o)}, {"equal", m_equivalent(w, v, o)}});
      }
      bool eq = strongly_m_equivalent(w, v);
      json j  = {{"strongly_equivalent", eq}, {"orderings", orderings}};
      return ctx.emit(j,
                      eq ? "strongly M-equivalent"
                         : "not strongly M-equivalent",
                      eq ? exit_affirmative : exit_negative);
    }

    int cmd_class(Context const& ctx, Options const& opt) {
      auto w = ctx.word(opt.word);
      if (opt.strong && w.alphabet_size() > max_cli_alphabet) {
        throw UsageError("class --strong supports alphabets of at most "
                         + std::to_string(max_cli_alphabet) + " letters");
      }
      auto mode = opt.strong ? ClassMode::strong() : ClassMode::m(ctx.ordering());
      auto members = enumerate_class(w, mode);
      json list    = json::array();
      std::string text;
      for (auto const& m : members) {
        list.push_back(ctx.str(m));
        text += ctx.str(m) + '\n';
      }
      json j = {{"word", opt.word},
                {"mode", opt.strong ? "strong" : "M"},
                {"members", list},
                {"size", members.size()}};
      if (!opt.strong) {
        j["order"] = ctx.str(ctx.ordering());
      }
      return ctx.emit(j, text, exit_affirmative);
    }

    int cmd_e1(Context const& ctx, Options const& opt) {
      auto w = ctx.word(opt.word);
      auto r = apply_e1(w, opt.pos, ctx.ordering());
      json j = {{"input", opt.word},
                {"output", ctx.str(r)},
                {"pos", opt.pos},
                {"order", ctx.str(ctx.ordering())}};
      return ctx.emit(j, ctx.str(r), exit_affirmative);
    }

    int cmd_s2t(Context const& ctx, Options const& opt) {
      auto w    = ctx.word(opt.word);
      auto spec = SwapSpec::on(w, parse_pair(ctx, opt.pair), opt.blocks);
      auto r    = apply_strong_2t(w, spec);
      json j    = {{"input", opt.word},
                   {"output", ctx.str(r)},
                   {"spec", to_json(ctx, spec)},
                   {"pq", to_json(compute_pq_pairs(w, spec))}};
      return ctx.emit(j, ctx.str(r), exit_affirmative);
    }

    int cmd_s3t(Context const& ctx, Options const& opt) {
      auto w    = ctx.word(opt.word);
      auto spec = TripleFactorSpec::on(w, parse_factors(opt.factors));
      auto r    = apply_strong_3t(w, spec);
      json j    = {{"input", opt.word},
                   {"output", ctx.str(r)},
                   {"spec", to_json(spec)},
                   {"sums", triple_sums(w, spec)}};
      return ctx.emit(j, ctx.str(r), exit_affirmative);
    }

    int cmd_classic2t(Context const& ctx, Options const& opt) {
      auto w     = ctx.word(opt.word);
      auto spec  = SwapSpec::on(w, parse_pair(ctx, opt.pair), opt.blocks);
      auto group = parse_groups(opt.groups);
      bool ok    = validate_classic_2t(w, spec, group, ctx.ordering());
      json j     = {{"input", opt.word},
                    {"valid", ok},
                    {"spec", to_json(ctx, spec)},
                    {"order", ctx.str(ctx.ordering())}};
      std::string text = "rule E2.t does not apply";
      if (ok) {
        auto r      = w.with_swapped_blocks(spec.positions());
        j["output"] = ctx.str(r);
        text        = ctx.str(r);
      }
      return ctx.emit(j, text, ok ? exit_affirmative : exit_negative);
    }

    int cmd_alphabeta(Context const& ctx, Options const& opt) {
      if (opt.at.size() != 2) {
        throw UsageError("--at takes exactly two positions");
      }
      auto w    = ctx.word(opt.word);
      auto step = apply_alpha_beta(w, opt.at[0], opt.at[1]);
      json predicted = json::array();
      for (auto const& d : lemma38_deltas(w, opt.at[0], opt.at[1])) {
        predicted.push_back(
            {{"pattern", ctx.str(d.pattern)}, {"delta", d.delta}});
      }
      json j = {{"input", opt.word},
                {"output", ctx.str(step.result)},
                {"counter", to_json(step.counter)},
                {"predicted", predicted}};
      std::ostringstream text;
      text << ctx.str(step.result) << "\ncounter (abc, acb, bac) = ("
           << step.counter.d_abc << ", " << step.counter.d_acb << ", "
           << step.counter.d_bac << ")";
      return ctx.emit(j, text.str(), exit_affirmative);
    }

    json decomposition_json(Context const&                         ctx,
                            std::vector<DecompositionStage> const& stages) {
      json list = json::array();
      for (auto const& s : stages) {
        list.push_back({{"source", ctx.str(s.source)},
                        {"spec", to_json(ctx, s.spec)},
                        {"target", ctx.str(s.target)}});
      }
      return list;
    }

    std::string decomposition_text(Context const&                         ctx,
                                   std::vector<DecompositionStage> const& stages) {
      std::ostringstream os;
      for (auto const& s : stages) {
        os << "  " << ctx.str(s.source) << " -(" << s.spec.size() / 2
           << ")-> " << ctx.str(s.target) << "  @" << join(s.spec.positions())
           << '\n';
      }
      return os.str();
    }

    int cmd_irreducible(Context const& ctx, Options const& opt) {
      auto w      = ctx.word(opt.word);
      auto spec   = SwapSpec::on(w, parse_pair(ctx, opt.pair), opt.blocks);
      auto report = analyze(w, spec);
      json j      = {{"word", opt.word},
                     {"spec", to_json(ctx, spec)},
                     {"pq", to_json(report.pairs)},
                     {"sum", {report.total.p, report.total.q}},
                     {"valid", report.valid},
                     {"reducible", report.reducible}};
      j["witness"] = report.witness ? json(*report.witness) : json(nullptr);
      std::ostringstream text;
      text << "pq:";
      for (auto const& x : report.pairs) {
        text << " (" << x.p << "," << x.q << ")";
      }
      text << "\nvalid: " << (report.valid ? "yes" : "no");
      if (report.valid) {
        auto stages         = decompose(w, spec);
        j["decomposition"] = decomposition_json(ctx, stages);
        text << "\nreducible: " << (report.reducible ? "yes" : "no");
        if (report.witness) {
          text << "\nwitness: {" << join(*report.witness) << "}";
        }
        text << "\ndecomposition:\n" << decomposition_text(ctx, stages);
      }
      bool irreducible = report.valid && !report.reducible;
      return ctx.emit(
          j, text.str(), irreducible ? exit_affirmative : exit_negative);
    }

    int cmd_decompose(Context const& ctx, Options const& opt) {
      auto w      = ctx.word(opt.word);
      auto spec   = SwapSpec::on(w, parse_pair(ctx, opt.pair), opt.blocks);
      auto stages = decompose(w, spec);
      json j      = {{"word", opt.word},
                     {"stages", decomposition_json(ctx, stages)},
                     {"result", ctx.str(stages.back().target)}};
      return ctx.emit(j, decomposition_text(ctx, stages), exit_affirmative);
    }

    int cmd_detect_s2t(Context const& ctx, Options const& opt) {
      auto spec = detect_strong_2t(ctx.word(opt.word), ctx.word(opt.other));
      json j    = {{"found", spec.has_value()}};
      j["spec"] = spec ? to_json(ctx, *spec) : json(nullptr);
      std::string text = "no strong (2.t) transformation";
      if (spec) {
        text = "strong (2." + std::to_string(spec->size() / 2) + ") @"
               + join(spec->positions());
      }
      return ctx.emit(j, text, spec ? exit_affirmative : exit_negative);
    }

    int cmd_detect_s3t(Context const& ctx, Options const& opt) {
      auto r = detect_strong_3t(
          ctx.word(opt.word), ctx.word(opt.other), opt.factor_cap);
      json j    = {{"outcome", outcome_name(r.outcome)}};
      j["spec"] = r.spec ? to_json(*r.spec) : json(nullptr);
      std::string text = r.outcome == SearchOutcome::capped
                             ? "inconclusive: too many blocks"
                             : "no strong (3.t) transformation";
      if (r.spec) {
        text = "strong (3." + std::to_string(r.spec->size()) + ")";
        for (auto const& f : r.spec->factors()) {
          text += " " + std::to_string(f.start) + "-" + std::to_string(f.end)
                  + ":" + class_name(f.cls);
        }
      }
      return ctx.emit(j, text, outcome_code(r.outcome));
    }

    int cmd_detect_sites(Context const& ctx, Options const& opt) {
      auto sites = detect_alpha_beta_sites(ctx.word(opt.word));
      json list  = json::array();
      std::string text;
      for (auto [i, j] : sites) {
        list.push_back({i, j});
        text += std::to_string(i) + " " + std::to_string(j) + '\n';
      }
      return ctx.emit({{"word", opt.word}, {"sites", list}},
                      sites.empty() ? "no alpha-beta sites" : text,
                      exit_affirmative);
    }

    std::string search_text(Context const& ctx, SearchResult const& r) {
      std::ostringstream os;
      switch (r.outcome) {
        case SearchOutcome::found:
          os << "found after " << r.nodes << " nodes\n"
             << derivation_text(ctx, *r.derivation);
          break;
        case SearchOutcome::exhausted:
          os << (r.depth_limited ? "not found within the step bound"
                                 : "not reachable (closure exhausted)")
             << " after " << r.nodes << " nodes";
          break;
        case SearchOutcome::capped:
          os << "inconclusive: node cap reached after " << r.nodes
             << " nodes";
          break;
      }
      return os.str();
    }

    int cmd_search_mse(Context const& ctx, Options const& opt) {
      auto r = mse_equivalent(
          ctx.word(opt.word), ctx.word(opt.other), opt.node_cap);
      return ctx.emit(to_json(ctx, r), search_text(ctx, r),
                      outcome_code(r.outcome));
    }

    int cmd_search_msae(Context const& ctx, Options const& opt) {
      auto r = msae_search(ctx.word(opt.word),
                           ctx.word(opt.other),
                           opt.max_steps,
                           opt.node_cap);
      return ctx.emit(to_json(ctx, r), search_text(ctx, r),
                      outcome_code(r.outcome));
    }

    int cmd_search_thm36(Context const& ctx, Options const& opt) {
      auto w    = ctx.word(opt.word);
      auto spec = SwapSpec::on(w, parse_pair(ctx, opt.pair), opt.blocks);
      auto r    = gen_thm36_check(w, spec, opt.node_cap);
      json j    = {{"w", opt.word},
                   {"w_prime", ctx.str(r.w_prime)},
                   {"confirmed", r.confirmed},
                   {"mse", to_json(ctx, r.mse)}};
      std::string text
          = ctx.str(r.w_prime) + "\n"
            + (r.confirmed ? "strongly M-equivalent, not MSE-equivalent"
                           : "not confirmed: " + search_text(ctx, r.mse));
      int code = r.confirmed ? exit_affirmative
                 : r.mse.outcome == SearchOutcome::capped ? exit_inconclusive
                                                           : exit_negative;
      return ctx.emit(j, text, code);
    }

    int cmd_family(Context const&      ctx,
                   Options const&      opt,
                   std::string const& which) {
      if (ctx.alphabet().size() != 3) {
        throw UsageError("families are defined over a ternary alphabet");
      }
      json        j = {{"family", which}, {"parameter", opt.parameter}};
      std::string text;
      auto        put = [&](Word const& w, Word const& v) {
        j["w"]       = ctx.str(w);
        j["w_prime"] = ctx.str(v);
        text         = ctx.str(w) + "\n" + ctx.str(v);
      };
      if (which == "not2t") {
        auto f = gen_not2t_family(opt.parameter);
        put(f.w, f.w_prime);
        j["spec"] = to_json(f.spec);
      } else {
        auto f = which == "irreducible" ? gen_irreducible_family(opt.parameter)
                                        : gen_not3t_family(opt.parameter);
        put(f.w, f.w_prime);
        j["spec"] = to_json(ctx, f.spec);
      }
      return ctx.emit(j, text, exit_affirmative);
    }

    ////////////////////////////////////////////////////////////////////////
    // Wiring
    ////////////////////////////////////////////////////////////////////////

    std::size_t env_node_cap() {
      if (char const* s = std::getenv("PARIKH_NODE_CAP")) {
        try {
          return parse_index(s);
        } catch (UsageError const&) {
          // ignore malformed overrides
        }
      }
      return default_node_cap;
    }

    // The deepest subcommand that was (at least partly) parsed.
    std::string active_path(CLI::App const& app) {
      std::string path;
      auto const* current = &app;
      while (true) {
        auto subs = current->get_subcommands();
        if (subs.empty()) {
          break;
        }
        current = subs.front();
        path += (path.empty() ? "" : " ") + current->get_name();
      }
      return path;
    }

    int usage(std::ostream&      err,
              std::string const& message,
              std::string const& path) {
      auto it = synopses.find(path);
      if (it == synopses.end()) {
        it = synopses.find("");
      }
      err << "error: " << message << '\n' << "usage: " << it->second << '\n';
      return exit_usage;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    Options opt;
    opt.node_cap = env_node_cap();

    CLI::App app{"Parikh matrices, strong M-equivalence and rewriting rules "
                 "over ordered alphabets",
                 "parikh"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--alphabet", opt.alphabet, "alphabet letters, e.g. abc");
    app.add_option("--order", opt.order, "ordering, e.g. b<a<c");
    app.add_option("--output", opt.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto words = [&](CLI::App* sub, int n) {
      sub->add_option("word", opt.word, "word")->required();
      if (n == 2) {
        sub->add_option("other", opt.other, "second word")->required();
      }
    };
    auto swap_flags = [&](CLI::App* sub) {
      sub->add_option("--pair", opt.pair, "the two swapped letters")
          ->required();
      sub->add_option("--blocks", opt.blocks, "block start positions")
          ->required()
          ->delimiter(',');
    };
    auto add = [&](CLI::App* parent, std::string const& name,
                   std::string const& path) {
      auto* sub = parent->add_subcommand(name, synopses.at(path));
      sub->fallthrough();
      return sub;
    };

    auto* matrix = add(&app, "matrix", "matrix");
    words(matrix, 1);
    auto* vec = add(&app, "vector", "vector");
    words(vec, 1);
    auto* count = add(&app, "count", "count");
    count->add_option("word", opt.word)->required();
    count->add_option("pattern", opt.other)->required();
    count->add_flag("--factor", opt.factor, "count contiguous occurrences");
    auto* equiv = add(&app, "equiv", "equiv");
    words(equiv, 2);
    auto* strong = add(&app, "strong-equiv", "strong-equiv");
    words(strong, 2);
    auto* cls = add(&app, "class", "class");
    words(cls, 1);
    cls->add_flag("--strong", opt.strong, "strong M-equivalence class");

    auto* transform = add(&app, "transform", "transform");
    transform->require_subcommand(1);
    auto* e1 = add(transform, "e1", "transform e1");
    words(e1, 1);
    e1->add_option("--pos", opt.pos)->required();
    auto* s2t = add(transform, "s2t", "transform s2t");
    words(s2t, 1);
    swap_flags(s2t);
    auto* s3t = add(transform, "s3t", "transform s3t");
    words(s3t, 1);
    s3t->add_option("--factors", opt.factors)->required();
    auto* classic = add(transform, "classic2t", "transform classic2t");
    words(classic, 1);
    swap_flags(classic);
    classic->add_option("--groups", opt.groups)->required();
    auto* ab = add(transform, "alphabeta", "transform alphabeta");
    words(ab, 1);
    ab->add_option("--at", opt.at)->required()->delimiter(',');

    auto* irreducible = add(&app, "irreducible", "irreducible");
    words(irreducible, 1);
    swap_flags(irreducible);
    auto* decomp = add(&app, "decompose", "decompose");
    words(decomp, 1);
    swap_flags(decomp);

    auto* detect = add(&app, "detect", "detect");
    detect->require_subcommand(1);
    auto* d2 = add(detect, "s2t", "detect s2t");
    words(d2, 2);
    auto* d3 = add(detect, "s3t", "detect s3t");
    words(d3, 2);
    d3->add_option("--factor-cap", opt.factor_cap);
    auto* sites = add(detect, "sites", "detect sites");
    words(sites, 1);

    auto* search = add(&app, "search", "search");
    search->require_subcommand(1);
    auto* mse = add(search, "mse", "search mse");
    words(mse, 2);
    mse->add_option("--node-cap", opt.node_cap);
    auto* msae = add(search, "msae", "search msae");
    words(msae, 2);
    msae->add_option("--max-steps", opt.max_steps);
    msae->add_option("--node-cap", opt.node_cap);
    auto* thm36 = add(search, "thm36", "search thm36");
    words(thm36, 1);
    swap_flags(thm36);
    thm36->add_option("--node-cap", opt.node_cap);

    auto* family = add(&app, "family", "family");
    family->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> families;
    for (std::string name : {"irreducible", "not3t", "not2t"}) {
      auto* f = add(family, name, "family " + name);
      f->add_option("n", opt.parameter, "family parameter")->required();
      families.emplace_back(name, f);
    }

    std::vector<char const*> argv{"parikh"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_affirmative;
    } catch (CLI::ParseError const& e) {
      return usage(err, e.what(), active_path(app));
    }

    auto path = active_path(app);
    try {
      Context ctx(opt, out);
      // clang-format off
      if (matrix->parsed())      return cmd_matrix(ctx, opt);
      if (vec->parsed())         return cmd_vector(ctx, opt);
      if (count->parsed())       return cmd_count(ctx, opt);
      if (equiv->parsed())       return cmd_equiv(ctx, opt);
      if (strong->parsed())      return cmd_strong_equiv(ctx, opt);
      if (cls->parsed())         return cmd_class(ctx, opt);
      if (e1->parsed())          return cmd_e1(ctx, opt);
      if (s2t->parsed())         return cmd_s2t(ctx, opt);
      if (s3t->parsed())         return cmd_s3t(ctx, opt);
      if (classic->parsed())     return cmd_classic2t(ctx, opt);
      if (ab->parsed())          return cmd_alphabeta(ctx, opt);
      if (irreducible->parsed()) return cmd_irreducible(ctx, opt);
      if (decomp->parsed())      return cmd_decompose(ctx, opt);
      if (d2->parsed())          return cmd_detect_s2t(ctx, opt);
      if (d3->parsed())          return cmd_detect_s3t(ctx, opt);
      if (sites->parsed())       return cmd_detect_sites(ctx, opt);
      if (mse->parsed())         return cmd_search_mse(ctx, opt);
      if (msae->parsed())        return cmd_search_msae(ctx, opt);
      if (thm36->parsed())       return cmd_search_thm36(ctx, opt);
      // clang-format on
      for (auto const& [name, f] : families) {
        if (f->parsed()) {
          return cmd_family(ctx, opt, name);
        }
      }
    } catch (UsageError const& e) {
      return usage(err, e.what(), path);
    } catch (InputError const& e) {
      return usage(err, e.what(), path);
    } catch (OverflowError const& e) {
      return usage(err, e.what(), path);
    } catch (RuleError const& e) {
      err << "rejected: " << e.what() << '\n';
      return exit_negative;
    }
    return usage(err, "no command given", "");
  }

}  // namespace parikh::cli
