// amekit: verification, proof transcripts, and exhaustive graph-state
// searches for absolutely maximally entangled qubit states.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ame/ame_check.hpp"
#include "ame/dense_reference.hpp"
#include "ame/exclusion.hpp"
#include "ame/graph.hpp"
#include "ame/search.hpp"
#include "ame/stabilizer.hpp"
#include "ame/state.hpp"

using namespace ame;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  bool as_json = false;
  std::string out_file;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_flag("--json", out.as_json, "print the JSON report to stdout");
  cmd->add_option("--out", out.out_file, "write the JSON report to a file");
}

// Human table to stdout unless --json; JSON goes to --out and/or stdout.
void emit(const OutputOptions& out, const json& doc,
          const std::function<void()>& print_table) {
  if (!out.out_file.empty()) {
    std::ofstream file(out.out_file);
    if (!file) {
      throw std::invalid_argument("cannot write report file: " + out.out_file);
    }
    file << doc.dump(2) << "\n";
  }
  if (out.as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    print_table();
  }
}

json subset_to_json(uint32_t mask) {
  json arr = json::array();
  for (int i : subset_indices(mask)) arr.push_back(i);
  return arr;
}

std::string subset_to_text(uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_indices(mask)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

int default_jobs() {
  if (const char* env = std::getenv("AMEKIT_JOBS")) {
    return std::atoi(env);
  }
  return 0;
}

int parse_prefilter(const std::string& name) {
  if (name == "none") return 0;
  if (name == "one-body") return 1;
  if (name == "two-body") return 2;
  if (name == "three-body") return 3;
  try {
    size_t used = 0;
    int v = std::stoi(name, &used);
    if (used == name.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("prefilter must be none, one-body, two-body, "
                              "three-body, or a size");
}

std::pair<int, int> parse_range(const std::string& text) {
  size_t dots = text.find("..");
  if (dots == std::string::npos) {
    throw std::invalid_argument("range must look like A..B");
  }
  int a = std::stoi(text.substr(0, dots));
  int b = std::stoi(text.substr(dots + 2));
  if (b < a) throw std::invalid_argument("empty range");
  return {a, b};
}

// ---------------------------------------------------------------- verify --

int cmd_verify(const std::string& file, std::optional<int> k_opt, double tol,
               bool expect_ame, const OutputOptions& out) {
  StateVector state = read_state_file(file);
  int h = state.n / 2;

  json doc;
  doc["file"] = file;
  doc["n"] = state.n;
  doc["tol"] = tol;

  std::optional<SectorLengths> sectors;
  if (state.n <= 10) {
    sectors = sector_lengths(state);
    json arr = json::array();
    for (double v : sectors->values) arr.push_back(v);
    doc["sector_lengths"] = arr;
  }

  std::vector<int> sizes;
  if (k_opt) {
    if (*k_opt < 1 || *k_opt > state.n) {
      throw std::invalid_argument("marginal size must be in 1..n");
    }
    sizes.push_back(*k_opt);
  } else {
    for (int k = 1; k <= h; ++k) sizes.push_back(k);
  }

  json marg = json::object();
  std::vector<MixedMarginalCount> counts;
  for (int k : sizes) {
    MixedMarginalCount c = count_mixed_marginals(state, k, tol);
    json entry;
    entry["mixed"] = c.mixed;
    entry["total"] = c.total;
    json failing = json::array();
    for (uint32_t mask : c.failing) failing.push_back(subset_to_json(mask));
    entry["failing"] = failing;
    marg[std::to_string(k)] = entry;
    counts.push_back(std::move(c));
  }
  doc["marginals"] = marg;

  bool ame_verdict = state.n >= 2 && is_ame(state, tol);
  doc["is_ame"] = ame_verdict;

  emit(out, doc, [&]() {
    std::printf("state %s: n=%d\n", file.c_str(), state.n);
    if (sectors) {
      std::printf("sector lengths:");
      for (double v : sectors->values) std::printf(" %.6g", v);
      std::printf("\n");
    }
    for (size_t i = 0; i < sizes.size(); ++i) {
      std::printf("%d-body marginals maximally mixed: %d / %d\n", sizes[i],
                  counts[i].mixed, counts[i].total);
      for (uint32_t mask : counts[i].failing) {
        std::printf("  not mixed: %s\n", subset_to_text(mask).c_str());
      }
    }
    std::printf("is_ame: %s\n", ame_verdict ? "true" : "false");
  });

  if (expect_ame && !ame_verdict) return kExitCheckFailed;
  return kExitOk;
}

// --------------------------------------------------------------- exclude --

int cmd_exclude(std::optional<int> n_opt, const std::string& range,
                const OutputOptions& out) {
  int lo, hi;
  if (n_opt) {
    lo = hi = *n_opt;
  } else {
    std::tie(lo, hi) = parse_range(range);
  }
  if (lo < 2) {
    throw std::invalid_argument("party count must be at least 2");
  }

  std::vector<ExclusionVerdict> verdicts;
  for (int n = lo; n <= hi; ++n) verdicts.push_back(parity_exclusion(n));

  json doc;
  doc["range"] = {lo, hi};
  json list = json::array();
  json open = json::array();
  for (const auto& v : verdicts) {
    list.push_back(json::parse(v.json()));
    if (!v.excluded) open.push_back(v.n);
  }
  doc["verdicts"] = list;
  doc["not_excluded"] = open;

  emit(out, doc, [&]() {
    std::printf("%4s  %-22s %-12s %10s %10s\n", "n", "case", "verdict", "lhs",
                "rhs");
    for (const auto& v : verdicts) {
      std::printf("%4d  %-22s %-12s %10s %10s\n", v.n, v.case_label.c_str(),
                  v.excluded ? "excluded" : "consistent", v.lhs.str().c_str(),
                  v.rhs.str().c_str());
    }
  });
  return kExitOk;
}

// ---------------------------------------------------------------- search --

int cmd_search(int n, int k, const std::string& prefilter_name, int jobs,
               const std::string& resume_file, std::optional<int> expect_best,
               const OutputOptions& out) {
  int prefilter = parse_prefilter(prefilter_name);
  uint64_t start = 0;
  if (!resume_file.empty()) {
    std::ifstream in(resume_file);
    if (in) {
      if (!(in >> start)) {
        throw std::invalid_argument("cannot parse checkpoint file: " +
                                    resume_file);
      }
    }
  }

  SearchProgress progress;
  if (!resume_file.empty()) {
    progress = [&resume_file](uint64_t next) {
      std::ofstream cp(resume_file, std::ios::trunc);
      cp << next << "\n";
    };
  }

  SearchReport report = search_best(n, k, prefilter, jobs, start, progress);

  json doc = json::parse(report.json());
  if (expect_best) doc["expected_best"] = *expect_best;

  emit(out, doc, [&]() {
    std::printf("scanned %llu graphs on %d vertices (range %llu..%llu)\n",
                (unsigned long long)report.graphs_scanned, n,
                (unsigned long long)report.range_start,
                (unsigned long long)report.range_end);
    std::printf("prefilter: %s (passed: %llu)\n",
                report.prefilter_description().c_str(),
                (unsigned long long)report.prefilter_passed);
    std::printf("best %d-body mixed count: %d (%llu graphs attain it)\n", k,
                report.best_count, (unsigned long long)report.witness_total);
    size_t show = std::min<size_t>(report.witnesses.size(), 8);
    for (size_t i = 0; i < show; ++i) {
      Graph g = graph_from_edge_bits(n, EdgeBits(report.witnesses[i]));
      std::printf("  witness %s\n", graph_to_hex(g).c_str());
    }
    if (report.witnesses.size() > show) {
      std::printf("  ... %zu more stored\n", report.witnesses.size() - show);
    }
  });

  if (expect_best && report.best_count != *expect_best) {
    std::fprintf(stderr, "expected best %d, found %d\n", *expect_best,
                 report.best_count);
    return kExitCheckFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bounds --

int cmd_bounds(std::optional<int> dim, const std::string& dim_range,
               const OutputOptions& out) {
  int lo, hi;
  if (dim) {
    lo = hi = *dim;
  } else {
    std::tie(lo, hi) = parse_range(dim_range);
  }

  json doc;
  json list = json::array();
  std::vector<std::pair<int64_t, int64_t>> rows;
  for (int d = lo; d <= hi; ++d) {
    auto [even, odd] = scott_rains_bound(d);
    rows.emplace_back(even, odd);
    list.push_back({{"dim", d}, {"max_even_n", even}, {"max_odd_n", odd}});
  }
  doc["bounds"] = list;

  emit(out, doc, [&]() {
    std::printf("%5s %12s %12s\n", "D", "max even n", "max odd n");
    for (int d = lo; d <= hi; ++d) {
      std::printf("%5d %12lld %12lld\n", d,
                  (long long)rows[d - lo].first, (long long)rows[d - lo].second);
    }
  });
  return kExitOk;
}

// -------------------------------------------------------------- selftest --

int cmd_selftest(long trials, unsigned seed, const OutputOptions& out) {
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }
  std::mt19937 rng(seed);

  long parity_checked = 0, parity_violations = 0;
  for (long t = 0; t < trials; ++t) {
    int n = 1 + int(rng() % 8);
    std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
    Pauli p{n, mask(rng), mask(rng), uint8_t(2 * (rng() % 2))};
    Pauli q{n, mask(rng), mask(rng), uint8_t(2 * (rng() % 2))};
    auto aw = anticommutator_weight(p, q);
    if (!aw) continue;
    ++parity_checked;
    if ((*aw & 1) != ((p.weight() + q.weight()) & 1)) ++parity_violations;
  }

  long dense_trials = std::min<long>(trials, 2000);
  long dense_violations = 0;
  for (long t = 0; t < dense_trials; ++t) {
    int n = 1 + int(rng() % 3);
    int dim = 1 << n;
    std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
    Pauli p{n, mask(rng), mask(rng), uint8_t(2 * (rng() % 2))};
    Pauli q{n, mask(rng), mask(rng), uint8_t(2 * (rng() % 2))};
    auto mp = dense::pauli_matrix(p);
    auto mq = dense::pauli_matrix(q);
    if (!dense::approx_equal(dense::pauli_matrix(p * q),
                             dense::matmul(mp, mq, dim), 1e-10)) {
      ++dense_violations;
      continue;
    }
    auto anti = dense::anticommutator(mp, mq, dim);
    auto aw = anticommutator_weight(p, q);
    if (!aw) {
      if (!dense::is_zero(anti, 1e-10)) ++dense_violations;
    } else if (*aw != dense::weight_of_pauli_multiple(anti, n)) {
      ++dense_violations;
    }
  }

  long marginal_graphs = std::min<long>(std::max<long>(trials / 1000, 4), 60);
  long marginal_violations = 0;
  for (long t = 0; t < marginal_graphs; ++t) {
    int n = 2 + int(rng() % 4);
    int edges = n * (n - 1) / 2;
    Graph g = graph_from_edge_bits(n, rng() & ((uint64_t{1} << edges) - 1));
    StateVector state = graph_state_vector(g);
    for (int k = 1; k <= n; ++k) {
      for (const auto& [subset, mixed] : stabilizer_marginal_report(g, k).subsets) {
        if (mixed != is_maximally_mixed(state, subset, 1e-9)) {
          ++marginal_violations;
        }
      }
    }
  }

  bool passed =
      parity_violations == 0 && dense_violations == 0 && marginal_violations == 0;

  json doc;
  doc["trials"] = trials;
  doc["seed"] = seed;
  doc["checks"] = {
      {"anticommutator_parity",
       {{"pairs", trials}, {"nonvanishing", parity_checked},
        {"violations", parity_violations}}},
      {"dense_reference_agreement",
       {{"pairs", dense_trials}, {"violations", dense_violations}}},
      {"marginal_criterion_equivalence",
       {{"graphs", marginal_graphs}, {"violations", marginal_violations}}}};
  doc["passed"] = passed;

  emit(out, doc, [&]() {
    std::printf("anticommutator parity:          %ld pairs, %ld nonvanishing, "
                "%ld violations\n",
                trials, parity_checked, parity_violations);
    std::printf("dense reference agreement:      %ld pairs, %ld violations\n",
                dense_trials, dense_violations);
    std::printf("marginal criterion equivalence: %ld graphs, %ld violations\n",
                marginal_graphs, marginal_violations);
    std::printf("%s\n", passed ? "all checks passed" : "violations found");
  });
  return passed ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------------- graph --

int cmd_graph(const std::string& name, const std::string& in_file,
              const std::vector<int>& lc_sequence, const std::string& out_file,
              bool print_hex, const std::string& state_out,
              std::optional<int> report_k, const OutputOptions& out) {
  if (name.empty() == in_file.empty()) {
    throw std::invalid_argument("give exactly one of --name or --in");
  }
  Graph g = name.empty() ? read_graph_file(in_file) : named_graph(name);
  for (int v : lc_sequence) g = local_complement(g, v);

  json doc;
  doc["n"] = g.n;
  doc["hex"] = graph_to_hex(g);
  json edges = json::array();
  for (int v = 1; v < g.n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  doc["edges"] = edges;
  json degrees = json::array();
  for (int v = 0; v < g.n; ++v) degrees.push_back(g.degree(v));
  doc["degrees"] = degrees;

  std::optional<MarginalReport> report;
  if (report_k) {
    report = stabilizer_marginal_report(g, *report_k);
    json entry;
    entry["k"] = report->k;
    entry["mixed"] = report->mixed_count;
    entry["total"] = int(report->subsets.size());
    json failing = json::array();
    for (const auto& [mask, mixed] : report->subsets) {
      if (!mixed) failing.push_back(subset_to_json(mask));
    }
    entry["failing"] = failing;
    doc["marginals"] = entry;
  }

  if (!out_file.empty()) write_graph_file(g, out_file);
  if (!state_out.empty()) write_state_file(graph_state_vector(g), state_out);

  emit(out, doc, [&]() {
    if (print_hex) {
      std::printf("%s\n", graph_to_hex(g).c_str());
      return;
    }
    std::printf("graph on %d vertices, %d edges (%s)\n", g.n, g.edge_count(),
                graph_to_hex(g).c_str());
    for (const auto& e : edges) {
      std::printf("  %d %d\n", int(e[0]), int(e[1]));
    }
    if (report) {
      std::printf("%d-body marginals maximally mixed: %d / %zu\n", report->k,
                  report->mixed_count, report->subsets.size());
    }
  });
  return kExitOk;
}

// -------------------------------------------------------------- fixtures --

Graph derive_fano7() {
  // Smallest edge-bitmask orbit member whose degree profile differs from the
  // wheel's; the rule that froze the shipped fixture.
  LcOrbit orbit = lc_orbit(named_graph("wheel7"), size_t{1} << 22);
  if (!orbit.complete) {
    throw std::runtime_error("wheel7 orbit exceeded its cap");
  }
  auto profile = [](const Graph& g) {
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::sort(deg.begin(), deg.end());
    return deg;
  };
  std::vector<int> wheel_profile = profile(named_graph("wheel7"));
  std::optional<EdgeBits> best;
  for (const Graph& m : orbit.members) {
    if (profile(m) == wheel_profile) continue;
    EdgeBits bits = edge_bits(m);
    if (!best || bits < *best) best = bits;
  }
  if (!best) throw std::runtime_error("no distinct orbit member found");
  return graph_from_edge_bits(7, *best);
}

int cmd_fixtures(const std::string& dir, bool write, const OutputOptions& out) {
  struct Entry {
    std::string name;
    Graph derived;
  };
  std::vector<Entry> entries = {
      {"bell", named_graph("bell")},
      {"triangle", named_graph("triangle")},
      {"ring5", named_graph("ring5")},
      {"wheel7", named_graph("wheel7")},
      {"ame6", *find_ame_graph(6)},
      {"fano7", derive_fano7()},
  };

  // Behavioral contracts the shipped graphs must keep.
  bool contracts_ok = true;
  for (const char* ame_name : {"bell", "triangle", "ring5", "ame6"}) {
    contracts_ok &= is_ame(graph_state_vector(named_graph(ame_name)), 1e-9);
  }
  for (const char* seven : {"wheel7", "fano7"}) {
    Graph g = named_graph(seven);
    contracts_ok &= stabilizer_marginal_report(g, 2).mixed_count == 21;
    contracts_ok &= stabilizer_marginal_report(g, 3).mixed_count == 32;
  }

  json doc;
  doc["dir"] = dir;
  json list = json::array();
  bool all_ok = contracts_ok;
  for (const Entry& e : entries) {
    std::string path = dir + "/" + e.name + ".graph";
    std::string status;
    if (e.derived != named_graph(e.name)) {
      status = "derivation-mismatch";  // frozen constant vs fresh discovery
    } else if (write) {
      write_graph_file(e.derived, path);
      status = "written";
    } else if (!std::filesystem::exists(path)) {
      status = "missing";
    } else if (read_graph_file(path) == e.derived) {
      status = "match";
    } else {
      status = "mismatch";
    }
    if (status != "match" && status != "written") all_ok = false;
    list.push_back({{"name", e.name},
                    {"hex", graph_to_hex(e.derived)},
                    {"status", status}});
  }
  doc["fixtures"] = list;
  doc["contracts_ok"] = contracts_ok;
  doc["ok"] = all_ok;

  emit(out, doc, [&]() {
    for (const auto& row : list) {
      std::printf("%-9s %-10s %s\n", row["name"].get<std::string>().c_str(),
                  row["hex"].get<std::string>().c_str(),
                  row["status"].get<std::string>().c_str());
    }
    std::printf("behavioral contracts: %s\n", contracts_ok ? "ok" : "VIOLATED");
  });
  return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AME state verification and search toolkit"};
  app.require_subcommand(1);

  // verify
  std::string verify_file;
  std::optional<int> verify_k;
  double verify_tol = 1e-9;
  bool verify_expect_ame = false;
  OutputOptions verify_out;
  auto* verify = app.add_subcommand("verify", "analyze a state file");
  verify->add_option("state", verify_file, "state JSON file")->required();
  verify->add_option("--k", verify_k, "check only marginals of this size");
  verify->add_option("--tol", verify_tol, "comparison tolerance");
  verify->add_flag("--expect-ame", verify_expect_ame,
                   "exit 1 unless the state is AME");
  add_output_flags(verify, verify_out);

  // exclude
  std::optional<int> exclude_n;
  std::string exclude_range;
  OutputOptions exclude_out;
  auto* exclude = app.add_subcommand(
      "exclude", "run the flat-marginal exclusion arithmetic");
  exclude->add_option("--n", exclude_n, "single party count");
  exclude->add_option("--range", exclude_range, "range A..B of party counts");
  add_output_flags(exclude, exclude_out);

  // search
  int search_n = 0, search_k = 0;
  std::string search_prefilter = "none";
  int search_jobs = default_jobs();
  std::string search_resume;
  std::optional<int> search_expect;
  OutputOptions search_out;
  auto* search = app.add_subcommand(
      "search", "scan all labeled graphs for mixed-marginal records");
  search->add_option("--n", search_n, "vertex count (<= 8)")->required();
  search->add_option("--k", search_k, "marginal size to maximize")->required();
  search->add_option("--prefilter", search_prefilter,
                     "none | one-body | two-body | three-body");
  search->add_option("--jobs", search_jobs,
                     "worker count (default: AMEKIT_JOBS or OpenMP)");
  search->add_option("--resume", search_resume, "checkpoint file");
  search->add_option("--expect-best", search_expect,
                     "exit 1 unless best equals this");
  add_output_flags(search, search_out);

  // bounds
  std::optional<int> bounds_dim;
  std::string bounds_range;
  OutputOptions bounds_out;
  auto* bounds =
      app.add_subcommand("bounds", "party-count limits by local dimension");
  bounds->add_option("--dim", bounds_dim, "single local dimension");
  bounds->add_option("--dim-range", bounds_range, "range A..B of dimensions");
  add_output_flags(bounds, bounds_out);

  // selftest
  long selftest_trials = 100000;
  unsigned selftest_seed = 20240901;
  OutputOptions selftest_out;
  auto* selftest =
      app.add_subcommand("selftest", "randomized consistency suites");
  selftest->add_option("--trials", selftest_trials, "number of random pairs");
  selftest->add_option("--seed", selftest_seed, "RNG seed");
  add_output_flags(selftest, selftest_out);

  // graph
  std::string graph_name, graph_in, graph_out_file, graph_state_out;
  std::vector<int> graph_lc;
  bool graph_hex = false;
  std::optional<int> graph_report_k;
  OutputOptions graph_out;
  auto* graph =
      app.add_subcommand("graph", "build, convert, and transform graphs");
  graph->add_option("--name", graph_name,
                    "bell | triangle | ring5 | ame6 | wheel7 | fano7");
  graph->add_option("--in", graph_in, "read a graph file");
  graph->add_option("--lc", graph_lc,
                    "apply local complementation at these vertices, in order");
  graph->add_option("--write", graph_out_file, "write the graph file");
  graph->add_flag("--hex", graph_hex, "print only the compact n:HEX form");
  graph->add_option("--state-out", graph_state_out,
                    "write the dense graph state as a state JSON file");
  graph->add_option("--report", graph_report_k,
                    "include the k-body marginal report");
  add_output_flags(graph, graph_out);

  // fixtures
  std::string fixtures_dir = "fixtures";
  bool fixtures_write = false;
  OutputOptions fixtures_out;
  auto* fixtures = app.add_subcommand(
      "fixtures", "re-derive the named graphs and diff against the files");
  fixtures->add_option("--dir", fixtures_dir, "fixture directory");
  fixtures->add_flag("--write", fixtures_write, "rewrite the fixture files");
  add_output_flags(fixtures, fixtures_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      return cmd_verify(verify_file, verify_k, verify_tol, verify_expect_ame,
                        verify_out);
    }
    if (exclude->parsed()) {
      if (exclude_n.has_value() == !exclude_range.empty()) {
        throw std::invalid_argument("give exactly one of --n or --range");
      }
      return cmd_exclude(exclude_n, exclude_range, exclude_out);
    }
    if (search->parsed()) {
      return cmd_search(search_n, search_k, search_prefilter, search_jobs,
                        search_resume, search_expect, search_out);
    }
    if (bounds->parsed()) {
      if (bounds_dim.has_value() == !bounds_range.empty()) {
        throw std::invalid_argument("give exactly one of --dim or --dim-range");
      }
      return cmd_bounds(bounds_dim, bounds_range, bounds_out);
    }
    if (selftest->parsed()) {
      return cmd_selftest(selftest_trials, selftest_seed, selftest_out);
    }
    if (graph->parsed()) {
      return cmd_graph(graph_name, graph_in, graph_lc, graph_out_file,
                       graph_hex, graph_state_out, graph_report_k, graph_out);
    }
    if (fixtures->parsed()) {
      return cmd_fixtures(fixtures_dir, fixtures_write, fixtures_out);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  }
  return kExitUsage;
}
