// Copyright 2026 The rigidmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rigidmat command-line front end. Exit codes: 0 true/equal, 1 false/unequal,
// 2 error, 3 budget exceeded.

#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rigidmat/cli/commands.hpp"

namespace {

using namespace rigidmat;
using cli::Json;

struct PatternArgs {
  std::string file;
  std::optional<int> a;
  std::optional<int> b;
  bool dual = false;
};

void add_pattern_args(CLI::App* sub, PatternArgs& args, bool with_dual) {
  sub->add_option("file", args.file, "Pattern file")->required()->check(CLI::ExistingFile);
  sub->add_option("--a", args.a, "Column parities a (overrides the header)");
  sub->add_option("--b", args.b, "Row parities b (overrides the header)");
  if (with_dual) sub->add_flag("--dual", args.dual, "Test the pattern in T_{m,n}(m-a, n-b, p) instead");
}

std::vector<std::uint64_t> parse_chars(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos,
            "--chars: expected a comma-separated list of integers, got '" + s + "'");
    out.push_back(std::stoull(tok));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity and tensor matroids: erasure-pattern correctability, ranks, circuits, certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::Options opts;
  bool json = false;
  bool records = false;
  app.add_option("--seed", opts.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--trials", opts.trials, "Independent substitutions per Monte Carlo oracle")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--char", opts.characteristic, "Field characteristic (0 or a prime)")->capture_default_str();
  app.add_option("--budget", opts.budget, "Node budget for certificate searches")->capture_default_str();
  app.add_option("--method", opts.method, "auto, combinatorial, oracle or bernstein")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "combinatorial", "oracle", "bernstein"}));
  app.add_flag("--json", json, "Machine-readable output");
  app.add_flag("--records", records, "Stream per-instance scan records");

  PatternArgs check_args, rank_args, circuit_args, laman_args, bern_args, dbern_args;
  auto* check = app.add_subcommand("check-pattern", "Is the erasure pattern correctable?");
  add_pattern_args(check, check_args, true);
  auto* rank = app.add_subcommand("rank", "Rank of the pattern");
  add_pattern_args(rank, rank_args, true);
  auto* circuit = app.add_subcommand("find-circuit", "A circuit inside the pattern");
  add_pattern_args(circuit, circuit_args, true);
  auto* laman = app.add_subcommand("laman", "Laman counting condition");
  add_pattern_args(laman, laman_args, false);

  auto* bern = app.add_subcommand("bernstein", "Verify or search a Bernstein orientation");
  add_pattern_args(bern, bern_args, false);
  bool bern_verify = false, bern_search = false;
  auto* fv = bern->add_flag("--verify", bern_verify, "Check the orientation given in the file");
  auto* fs = bern->add_flag("--search", bern_search, "Search for an orientation");
  fv->excludes(fs);

  auto* dbern = app.add_subcommand("dbernstein", "Search a d-Bernstein coloring with labels");
  add_pattern_args(dbern, dbern_args, false);
  int dbern_d = 2;
  dbern->add_option("--d", dbern_d, "Number of colors")->capture_default_str()->check(CLI::PositiveNumber);

  auto* dual = app.add_subcommand("verify-duality", "dual(rigidity matroid) against its generic counterpart");
  std::string family = "bipartite", mode = "exhaustive";
  int dm = 3, dn = 3, da = 1, db = 1, dd = 2;
  std::uint64_t samples = 2000;
  dual->add_option("--family", family, "bipartite, sym or hyper")
      ->capture_default_str()
      ->check(CLI::IsMember({"bipartite", "sym", "hyper"}));
  dual->add_option("--m", dm)->capture_default_str();
  dual->add_option("--n", dn)->capture_default_str();
  dual->add_option("--a", da)->capture_default_str();
  dual->add_option("--b", db)->capture_default_str();
  dual->add_option("--d", dd)->capture_default_str();
  dual->add_option("--mode", mode)->capture_default_str()->check(CLI::IsMember({"exhaustive", "sampled"}));
  dual->add_option("--samples", samples, "Random subsets in sampled mode")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "Scans over families of instances");
  scan->require_subcommand(1);
  cli::CharCompareParams cc;
  std::string cc_family = "tensor", cc_chars = "0,2,3,5";
  auto* charcmp = scan->add_subcommand("char-compare", "Matroid equality across characteristics");
  charcmp->add_option("--family", cc_family)->capture_default_str()->check(CLI::IsMember({"tensor", "sym"}));
  charcmp->add_option("--m", cc.m)->capture_default_str();
  charcmp->add_option("--n", cc.n)->capture_default_str();
  charcmp->add_option("--s", cc.s)->capture_default_str();
  charcmp->add_option("--r", cc.r)->capture_default_str();
  charcmp->add_option("--chars", cc_chars, "Characteristics, the first is the reference")->capture_default_str();

  cli::ConjectureParams cj;
  auto* conj = scan->add_subcommand("conjecture", "d-Bernstein certificates against independence in B(d,d)");
  conj->add_option("--m", cj.m)->capture_default_str();
  conj->add_option("--n", cj.n)->capture_default_str();
  conj->add_option("--max-edges", cj.max_edges)->capture_default_str();
  conj->add_option("--d", cj.d)->capture_default_str();
  conj->add_flag("--orientations", cj.orientations, "Search Bernstein orientations (d = 2)");

  int lm = 5, ln = 5, la = 2, lb = 2;
  auto* lscan = scan->add_subcommand("laman", "Are all circuits of B_{m,n}(a,b) Laman circuits?");
  lscan->add_option("--m", lm)->capture_default_str();
  lscan->add_option("--n", ln)->capture_default_str();
  lscan->add_option("--a", la)->capture_default_str();
  lscan->add_option("--b", lb)->capture_default_str();

  cli::WedgeSymParams ws;
  auto* wscan = scan->add_subcommand("wedge-sym", "Independent in W_n(r) implies independent in S_n(r-1)");
  wscan->add_option("--n", ws.n)->capture_default_str();
  wscan->add_option("--r", ws.r)->capture_default_str();
  wscan->add_option("--samples", ws.samples, "Random subsets when the graph is too large")->capture_default_str();

  auto* self = app.add_subcommand("selfcheck", "Deterministic tests against the Monte Carlo oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitError;
  }

  cli::RecordSink sink = nullptr;
  if (records) {
    sink = [json](const Json& r) {
      if (json) {
        std::cout << r.dump() << "\n";
      } else {
        std::cout << "record: " << r.dump() << "\n";
      }
    };
  }

  const auto start = std::chrono::steady_clock::now();
  cli::Outcome out;
  try {
    auto query = [](const PatternArgs& a) { return cli::PatternQuery{a.a, a.b, a.dual}; };
    if (*check) {
      out = cli::check_pattern(cli::load_pattern(check_args.file), query(check_args), opts);
    } else if (*rank) {
      out = cli::rank_pattern(cli::load_pattern(rank_args.file), query(rank_args), opts);
    } else if (*circuit) {
      out = cli::find_circuit_in_pattern(cli::load_pattern(circuit_args.file), query(circuit_args), opts);
    } else if (*laman) {
      out = cli::laman_pattern(cli::load_pattern(laman_args.file), laman_args.a, laman_args.b, opts);
    } else if (*bern) {
      require(bern_verify || bern_search, "bernstein: pass --verify or --search");
      const auto p = cli::load_pattern(bern_args.file);
      out = bern_verify ? cli::bernstein_verify(p, opts) : cli::bernstein_search(p, opts);
    } else if (*dbern) {
      out = cli::d_bernstein_search(cli::load_pattern(dbern_args.file), dbern_d, opts);
    } else if (*dual) {
      rigidity::Family f = rigidity::Bipartite{dm, dn, da, db};
      if (family == "sym") f = rigidity::SymCompletion{dn, dd};
      if (family == "hyper") f = rigidity::Hyper{dn, dd};
      const matroid::EqualityMode em =
          mode == "exhaustive" ? matroid::EqualityMode{matroid::Exhaustive{}} : matroid::Sampled{samples, opts.seed};
      out = cli::verify_duality_command(f, em, opts);
    } else if (*charcmp) {
      cc.family = cc_family == "sym" ? cli::PowerFamily::Sym : cli::PowerFamily::Tensor;
      cc.characteristics = parse_chars(cc_chars);
      out = cli::scan_char_compare(cc, opts, sink);
    } else if (*conj) {
      out = cli::scan_conjecture(cj, opts, sink);
    } else if (*lscan) {
      out = cli::scan_laman(lm, ln, la, lb, opts);
    } else if (*wscan) {
      out = cli::scan_wedge_sym(ws, opts, sink);
    } else if (*self) {
      out = cli::selfcheck(opts);
    }
  } catch (const BudgetExceeded& e) {
    out.envelope = Json{{"error", e.what()}, {"kind", "budget"}};
    out.exit_code = cli::kExitBudget;
  } catch (const std::exception& e) {
    out.envelope = Json{{"error", e.what()}, {"kind", "error"}};
    out.exit_code = cli::kExitError;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.envelope["timing_ms"] = std::round(ms * 1000) / 1000;

  if (json) {
    std::cout << out.envelope.dump(2) << "\n";
  } else if (out.envelope.contains("error")) {
    std::cerr << "error: " << out.envelope["error"].get<std::string>() << "\n";
  } else {
    std::cout << cli::render_text(out.envelope);
  }
  return out.exit_code;
}
