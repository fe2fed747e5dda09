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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   rigidmat_acceptance [path/to/rigidmat path/to/patterns]
//
// With the CLI path the determinism check also runs the executable twice.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../common/fixtures.hpp"
#include "rigidmat/certs/port_gadget.hpp"
#include "rigidmat/certs/scan.hpp"
#include "rigidmat/cli/commands.hpp"
#include "rigidmat/combi/bipartite.hpp"
#include "rigidmat/generic/builders.hpp"
#include "rigidmat/matroid/operations.hpp"
#include "rigidmat/matroid/properties.hpp"
#include "rigidmat/rigidity/rigidity.hpp"

using namespace rigidmat;
using matroid::Mask;
using matroid::MatroidOracle;

namespace {

// Pinned parameters.
constexpr int kTrials = 5;
constexpr std::uint64_t kSeed = 20260101;
constexpr int kConingInstances = 200;
constexpr int kAxiomProbes = 1000;
constexpr int kCycleGraphs = 2000;
constexpr double kLimit1 = 60, kLimit2 = 600, kLimit3 = 60, kLimit4 = 900, kLimit6 = 600;

struct Result {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string grid_name(char f, int m, int n, int s, int r) {
  return std::string(1, f) + "_{" + std::to_string(m) + "," + std::to_string(n) + "}(" + std::to_string(s) + "," +
         std::to_string(r) + ")";
}

MatroidOracle tensor(int m, int n, int s, int r, std::uint64_t p = 0, std::uint64_t seed = kSeed) {
  return generic::mc_oracle(generic::TensorConfig{m, n, s, r, p, std::nullopt, kTrials, seed});
}

MatroidOracle rigid(const rigidity::Family& f, std::uint64_t seed = kSeed) {
  return rigidity::rigidity_oracle({f, exactalg::RationalsSpec{}, kTrials, seed});
}

bool is_circuit(const MatroidOracle& m, Mask c) {
  if (m.rank(c) != matroid::popcount(c) - 1) return false;
  for (Mask x = c; x; x &= x - 1)
    if (!matroid::is_independent(m, c & ~(x & (~x + 1)))) return false;
  return true;
}

// ---------------------------------------------------------------------------

Result rank_formulas() {
  Result res;
  int families = 0, mismatches = 0;
  auto check = [&](const rigidity::Family& f, long expected) {
    ++families;
    const int got = rigid(f).total_rank();
    if (got != expected) {
      if (mismatches++ == 0) res.detail = rigidity::describe(f) + " has rank " + std::to_string(got) + ", expected " +
                                          std::to_string(expected) + "; ";
    }
  };
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int a = 0; a <= m; ++a)
        for (int b = 0; b <= n; ++b) check(rigidity::Bipartite{m, n, a, b}, long{a} * n + long{b} * m - long{a} * b);
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= n; ++d) {
      check(rigidity::SymCompletion{n, d}, long{n} * d - long{d} * (d - 1) / 2);
      check(rigidity::Hyper{n, d}, long{d} * n - long{d} * (d + 1) / 2);
    }
  // Planar graph rigidity against Laman counts on K_5.
  const auto g = rigidity::graph_rigidity(5, 2, kTrials, kSeed);
  const auto ground = g.ground();
  int laman_mismatches = 0;
  for (Mask x = 0; x <= g.full(); ++x) {
    bool laman = true;
    for (Mask y = x; y && laman; y = (y - 1) & x) {
      int verts = 0;
      for (int v = 0; v < 5; ++v) {
        bool touched = false;
        for (Mask z = y; z; z &= z - 1) {
          const auto& l = ground->label(static_cast<std::size_t>(std::countr_zero(z)));
          touched = touched || l.i == v || l.j == v;
        }
        verts += touched;
      }
      laman = matroid::popcount(y) <= 2 * verts - 3;
    }
    laman_mismatches += laman != matroid::is_independent(g, x);
  }
  res.pass = mismatches == 0 && laman_mismatches == 0;
  res.detail += std::to_string(families) + " families, " + std::to_string(mismatches) +
                " rank mismatches; planar rigidity on K_5 vs Laman counts: " + std::to_string(laman_mismatches) +
                " mismatches over 1024 edge sets";
  return res;
}

Result dualities() {
  Result res;
  std::vector<rigidity::Family> families{rigidity::Bipartite{3, 3, 1, 1}, rigidity::Bipartite{3, 3, 2, 2},
                                         rigidity::Bipartite{4, 3, 2, 1}, rigidity::Bipartite{4, 4, 2, 2}};
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= std::min(3, n); ++d) {
      families.push_back(rigidity::SymCompletion{n, d});
      families.push_back(rigidity::Hyper{n, d});
    }
  int witnesses = 0;
  std::uint64_t subsets = 0;
  for (const auto& f : families) {
    const auto rep = rigidity::verify_duality(f, kTrials, kSeed, matroid::Exhaustive{});
    subsets += rep.subsets_checked;
    if (!rep.equal) {
      if (witnesses++ == 0) res.detail = rigidity::describe(f) + " differs at " + rep.witness->to_string() + "; ";
    }
  }
  res.pass = witnesses == 0;
  res.detail += std::to_string(families.size()) + " families, " + std::to_string(subsets) + " subsets, " +
                std::to_string(witnesses) + " witnesses";
  return res;
}

Result fixtures_check() {
  Result res;
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };
  const Mask star = fixtures::star_5x5();
  expect(is_circuit(rigid(rigidity::Bipartite{5, 5, 2, 2}), star), "star circuit (rigidity oracle)");
  expect(is_circuit(combi::bipartite_det_oracle(5, 5, 2, 2), star), "star circuit (combinatorial)");
  expect(!combi::laman_violation(star, 5, 5, 2, 2).has_value(), "star has no Laman witness");

  const Mask diamond = fixtures::diamond_5x5();
  for (std::uint64_t p : {0u, 2u, 3u}) expect(is_circuit(tensor(5, 5, 3, 3, p), diamond), "diamond 5x5 p=" + std::to_string(p));
  expect(is_circuit(combi::tensor_det_oracle(5, 5, 3, 3), diamond), "diamond 5x5 combinatorial");

  const Mask d59 = fixtures::diamond_5x9();
  const auto v = combi::s3_violations(combi::RowFamily::from_grid_mask(d59, 5, 9), 4);
  expect(v.two_rows && !v.four_fold && !v.single_row && !v.two_pairs && !v.global, "diamond 5x9 violates one condition");
  for (std::uint64_t p : {0u, 2u, 3u})
    expect(!matroid::is_independent(tensor(5, 9, 3, 4, p), d59), "diamond 5x9 dependent p=" + std::to_string(p));

  const Mask blocks = fixtures::blocks_7x7();
  std::string ranks;
  for (std::uint64_t p : {0u, 2u, 3u, 5u}) {
    const int r = tensor(7, 7, 4, 4, p).rank(blocks);
    ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
    expect(r <= 15, "blocks 7x7 rank p=" + std::to_string(p));
  }
  res.pass = failed.empty();
  res.detail = "star, diamonds and 7x7 blocks (ranks " + ranks + " for p = 0,2,3,5)";
  for (const auto& f : failed) res.detail += "; failed: " + f;
  return res;
}

const std::vector<std::pair<int, int>> kSmallSR{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 2}};

Result small_s_characterizations() {
  Result res;
  std::uint64_t disagreements = 0, checked = 0;
  for (auto [s, r] : kSmallSR) {
    const auto mc = tensor(4, 4, s, r);
    const auto table = mc.table(0, mc.full());
    for (Mask x = 0; x < table.size(); ++x) {
      ++checked;
      if (combi::tensor_independent_det(x, 4, 4, s, r) != (table[x] == matroid::popcount(x))) {
        if (disagreements++ == 0) res.detail = grid_name('T', 4, 4, s, r) + " disagrees at " + mc.ground()->format(x) + "; ";
      }
    }
  }
  res.pass = disagreements == 0;
  res.detail += std::to_string(checked) + " subsets over 6 (s,r), " + std::to_string(disagreements) + " disagreements";
  return res;
}

Result characteristic_independence() {
  Result res;
  int witnesses = 0, comparisons = 0;
  for (auto [s, r] : kSmallSR) {
    const auto ref = tensor(4, 4, s, r, 0);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      ++comparisons;
      const auto rep = matroid::matroids_equal(tensor(4, 4, s, r, p), ref, matroid::Exhaustive{});
      if (!rep.equal && witnesses++ == 0) res.detail = grid_name('T', 4, 4, s, r) + " p=" + std::to_string(p) + " differs; ";
    }
  }
  const auto s2 = generic::mc_oracle(generic::GenericKind::SymPower, generic::PowerConfig{4, 2, 2, std::nullopt, kTrials, kSeed});
  const auto s0 = generic::mc_oracle(generic::GenericKind::SymPower, generic::PowerConfig{4, 2, 0, std::nullopt, kTrials, kSeed});
  const auto rep = matroid::matroids_equal(s2, s0, matroid::Exhaustive{});
  const bool sym_differs = !rep.equal && rep.rank_a < rep.rank_b;
  res.pass = witnesses == 0 && sym_differs;
  res.detail += std::to_string(comparisons) + " tensor comparisons against p=0, " + std::to_string(witnesses) +
                " witnesses; S_4(2,2) vs S_4(2,0): " +
                (sym_differs ? "witness " + s2.ground()->format(*rep.witness) + " with ranks " + std::to_string(rep.rank_a) +
                                   " < " + std::to_string(rep.rank_b)
                             : std::string("no witness"));
  return res;
}

struct CorpusScan {
  certs::ScanSummary three, four;
};

CorpusScan scan_corpus(int d) {
  auto indep = [](int m, int n) {
    return [m, n](Mask x) { return combi::rank_bipartite_fast(x, m, n, 2, 2) == matroid::popcount(x); };
  };
  return {certs::scan_certificates(3, 3, certs::grid_subgraphs(3, 3, 9), d, indep(3, 3)),
          certs::scan_certificates(4, 4, certs::grid_subgraphs(4, 4, 12), d, indep(4, 4))};
}

Result exact_iff(const CorpusScan& c, const std::string& what) {
  Result res;
  std::size_t instances = 0, independent = 0, found = 0, gaps = 0, unsound = 0, budget = 0;
  for (const auto* s : {&c.three, &c.four}) {
    instances += s->instances;
    independent += s->independent;
    found += s->found;
    gaps += s->completeness_gaps;
    unsound += s->soundness_failures;
    budget += s->budget;
  }
  res.pass = gaps == 0 && unsound == 0 && budget == 0 && found == independent;
  res.detail = what + ": " + std::to_string(instances) + " subgraphs, " + std::to_string(independent) + " independent, " +
               std::to_string(found) + " certified, " + std::to_string(unsound) + " unsound, " + std::to_string(gaps) +
               " missing, " + std::to_string(budget) + " over budget";
  return res;
}

Result laman_small_corank() {
  Result res;
  std::uint64_t mismatches = 0, checked = 0;
  int configs = 0;
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int a = std::max(0, m - 2); a <= m; ++a)
        for (int b = 0; b <= n; ++b) {
          ++configs;
          const auto o = rigid(rigidity::Bipartite{m, n, a, b});
          const auto table = o.table(0, o.full());
          for (Mask x = 0; x < table.size(); ++x) {
            ++checked;
            const bool dependent = table[x] < matroid::popcount(x);
            if (dependent != combi::laman_violation(x, m, n, a, b).has_value() && mismatches++ == 0)
              res.detail = grid_name('B', m, n, a, b) + " at " + o.ground()->format(x) + "; ";
          }
        }
  const Mask star = fixtures::star_5x5();
  const bool star_ok = !matroid::is_independent(rigid(rigidity::Bipartite{5, 5, 2, 2}), star) &&
                       !combi::laman_violation(star, 5, 5, 2, 2).has_value();
  res.pass = mismatches == 0 && star_ok;
  res.detail += std::to_string(configs) + " parameter sets, " + std::to_string(checked) + " subsets, " +
                std::to_string(mismatches) + " mismatches; 5x5 star dependent without a Laman witness: " +
                (star_ok ? "yes" : "no");
  return res;
}

Result coning() {
  Result res;
  Rng rng(kSeed ^ 0xc0);
  std::map<std::string, MatroidOracle> cache;
  auto cached = [&](const std::string& key, const std::function<MatroidOracle()>& make) -> const MatroidOracle& {
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make()).first;
    return it->second;
  };
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(hi - lo + 1))); };
  int failures = 0;
  for (int t = 0; t < kConingInstances; ++t) {
    // Contraction and deletion of the first row.
    const int m = pick(2, 4), n = pick(1, 4), s = pick(1, m - 1), r = pick(0, n);
    const auto& big = cached(grid_name('T', m, n, s, r), [&] { return tensor(m, n, s, r); });
    const auto& con = cached(grid_name('T', m - 1, n, s - 1, r), [&] { return tensor(m - 1, n, s - 1, r); });
    const auto& del = cached(grid_name('T', m - 1, n, s, r), [&] { return tensor(m - 1, n, s, r); });
    const Mask row = matroid::low_bits(static_cast<std::size_t>(n));
    const Mask y = matroid::random_subset(rng, static_cast<std::size_t>((m - 1) * n));
    const Mask x = y << n;
    const bool minors_ok = big.rank(x | row) - big.rank(row) == con.rank(y) && big.rank(x) == del.rank(y);

    // Cone lemma.
    const int bm = pick(1, 4), bn = pick(1, 4), a = pick(0, bm), b = pick(0, bn);
    const auto& base = cached(grid_name('B', bm, bn, a, b), [&] { return rigid(rigidity::Bipartite{bm, bn, a, b}); });
    const auto& left = cached(grid_name('B', bm + 1, bn, a + 1, b), [&] { return rigid(rigidity::Bipartite{bm + 1, bn, a + 1, b}); });
    const auto& right = cached(grid_name('B', bm, bn + 1, a, b + 1), [&] { return rigid(rigidity::Bipartite{bm, bn + 1, a, b + 1}); });
    const Mask g = matroid::random_subset(rng, static_cast<std::size_t>(bm * bn));
    const bool ind = matroid::is_independent(base, g);
    const bool cone_ok = ind == matroid::is_independent(left, combi::cone_left(g, bm, bn)) &&
                         ind == matroid::is_independent(right, combi::cone_right(g, bm, bn));
    if (!(minors_ok && cone_ok) && failures++ == 0)
      res.detail = "first failure at instance " + std::to_string(t) + " (" + grid_name('T', m, n, s, r) + ", " +
                   grid_name('B', bm, bn, a, b) + "); ";
  }
  res.pass = failures == 0;
  res.detail += std::to_string(kConingInstances) + " instances, " + std::to_string(failures) + " failures";
  return res;
}

Result d_bernstein(const CorpusScan& two) {
  Result res = exact_iff(two, "d=2");
  auto indep = [](Mask x) { return combi::rank_bipartite_fast(x, 4, 4, 3, 3) == matroid::popcount(x); };
  const auto three = certs::scan_certificates(4, 4, certs::grid_subgraphs(4, 4, 9), 3, indep);
  res.pass = res.pass && three.soundness_failures == 0;
  res.detail += "; d=3 on 4x4 up to 9 edges: " + std::to_string(three.instances) + " subgraphs, " +
                std::to_string(three.independent) + " independent, " + std::to_string(three.found) + " certified, " +
                std::to_string(three.soundness_failures) + " unsound, " + std::to_string(three.completeness_gaps) +
                " independent without a certificate, " + std::to_string(three.budget) + " over budget";
  return res;
}

std::string run_process(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  for (std::size_t k; (k = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, k);
  pclose(pipe);
  // The executable appends wall-clock timing; drop it.
  std::istringstream in(out);
  std::string kept;
  for (std::string line; std::getline(in, line);)
    if (line.find("\"timing_ms\"") == std::string::npos) kept += line + "\n";
  return kept;
}

Result infrastructure(const std::string& cli, const std::string& patterns) {
  Result res;
  Rng rng(kSeed ^ 0xa1);
  const auto grid44 = matroid::GroundSet::grid(4, 4);
  std::vector<MatroidOracle> oracles{
      tensor(4, 5, 2, 3),
      tensor(4, 4, 3, 3, 2),
      generic::mc_oracle(generic::GenericKind::SymPower, generic::PowerConfig{5, 3, 0, std::nullopt, kTrials, kSeed}),
      generic::mc_oracle(generic::GenericKind::WedgePower, generic::PowerConfig{6, 3, 0, std::nullopt, kTrials, kSeed}),
      rigid(rigidity::Bipartite{5, 5, 2, 2}),
      rigid(rigidity::Hyper{6, 2}),
      rigid(rigidity::SymCompletion{5, 2}),
      rigidity::graph_rigidity(6, 2, kTrials, kSeed),
      combi::tensor_det_oracle(5, 5, 3, 2),
      combi::bipartite_det_oracle(5, 5, 2, 2),
      matroid::dual(tensor(4, 5, 2, 3)),
      matroid::minor(tensor(4, 4, 2, 2), matroid::EdgeSet(grid44, 0b11), matroid::EdgeSet(grid44, 0b1100)),
      matroid::uniform_matroid(grid44, 5),
  };
  int axiom_failures = 0;
  for (const auto& o : oracles) {
    const auto rep = matroid::check_rank_axioms(o, kAxiomProbes, rng);
    if (!rep.ok() && axiom_failures++ == 0) res.detail = o.name() + ": " + rep.first_failure + "; ";
  }

  int cycle_mismatches = 0, with_cycle = 0;
  for (int t = 0; t < kCycleGraphs; ++t) {
    const int m = 1 + static_cast<int>(rng.uniform_below(5)), n = 1 + static_cast<int>(rng.uniform_below(5));
    const int ne = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(std::min(16, m * n) + 1)));
    Mask x = 0;
    while (matroid::popcount(x) < ne) x |= Mask{1} << rng.uniform_below(static_cast<std::uint64_t>(m * n));
    const auto o = certs::Orientation::from_bits(certs::BipartiteGraph(m, n, x), rng.uniform_below(std::uint64_t{1} << ne));
    const bool main = certs::has_alternating_cycle(o).has_value();
    with_cycle += main;
    cycle_mismatches += main != certs::has_alternating_cycle_oracle(o).has_value();
  }

  // Envelopes built twice in process, and the executable run twice.
  cli::Options opts;
  opts.seed = 7;
  const auto star = cli::parse_pattern(
      "5 5 2 2\n..###\n..###\n##.##\n###..\n###..\n");
  bool same = cli::check_pattern(star, {}, opts).envelope.dump() == cli::check_pattern(star, {}, opts).envelope.dump() &&
              cli::scan_char_compare({}, opts).envelope.dump() == cli::scan_char_compare({}, opts).envelope.dump() &&
              tensor(4, 4, 2, 2, 0, 9).table(0, 0xffff) == tensor(4, 4, 2, 2, 0, 9).table(0, 0xffff);
  std::string process_note = "executable not given";
  if (!cli.empty()) {
    int runs = 0;
    for (const std::string& args : std::vector<std::string>{"--json --seed 7 check-pattern " + patterns + "/star_5x5.txt",
                                   "--json --seed 7 rank --dual " + patterns + "/blocks_7x7.txt",
                                   "--json --seed 7 scan char-compare"}) {
      const std::string cmd = "'" + cli + "' " + args + " 2>&1";
      const auto first = run_process(cmd), second = run_process(cmd);
      same = same && !first.empty() && first == second;
      ++runs;
    }
    process_note = std::to_string(runs) + " commands run twice by the executable";
  }

  res.pass = axiom_failures == 0 && cycle_mismatches == 0 && same;
  res.detail += std::to_string(oracles.size()) + " oracles x " + std::to_string(kAxiomProbes) + " probes, " +
                std::to_string(axiom_failures) + " axiom failures; alternating cycles on " + std::to_string(kCycleGraphs) +
                " graphs (" + std::to_string(with_cycle) + " with a cycle), " + std::to_string(cycle_mismatches) +
                " mismatches; byte-identical envelopes: " + (same ? "yes" : "no") + " (" + process_note + ")";
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::string patterns = argc > 2 ? argv[2] : "patterns";
  int failed = 0;
  auto report = [&](int id, const std::string& name, double limit, const std::function<Result()>& run) {
    const auto start = Clock::now();
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(start);
    if (limit > 0 && secs > limit) {
      r.pass = false;
      r.detail += "; over the time limit of " + std::to_string(static_cast<int>(limit)) + " s";
    }
    failed += !r.pass;
    char t[32];
    std::snprintf(t, sizeof t, "%.1f s", secs);
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << id << " " << name << ": " << r.detail << " [" << t << "]"
              << std::endl;
  };

  report(1, "rank formulas", kLimit1, rank_formulas);
  report(2, "dualities", kLimit2, dualities);
  report(3, "fixtures", kLimit3, fixtures_check);
  report(4, "s <= 3 characterizations", kLimit4, small_s_characterizations);
  report(5, "characteristic independence", 0, characteristic_independence);
  CorpusScan orientations, colorings;
  report(6, "Bernstein orientations (a = b = 2)", kLimit6, [&] {
    orientations = scan_corpus(0);
    return exact_iff(orientations, "orientations");
  });
  report(7, "Laman condition for m - a <= 2", 0, laman_small_corank);
  report(8, "coning", 0, coning);
  report(9, "d-Bernstein certificates", 0, [&] {
    colorings = scan_corpus(2);
    return d_bernstein(colorings);
  });
  report(10, "infrastructure", 0, [&] { return infrastructure(cli, patterns); });
  return failed == 0 ? 0 : 1;
}
