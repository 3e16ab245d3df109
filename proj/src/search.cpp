#include "ame/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "ame/stabilizer.hpp"

namespace ame {

namespace {

constexpr uint64_t kChunkGraphs = uint64_t{1} << 14;

struct ChunkResult {
  int best = -1;
  uint64_t passed = 0;
  uint64_t at_best = 0;
  std::vector<uint64_t> witnesses;  // ascending, capped
};

void check_search_size(int n, int max_n) {
  if (n < 2 || n > max_n) {
    throw std::invalid_argument("search size must be in 2.." +
                                std::to_string(max_n));
  }
}

// Scan masks in [begin, end); graphs live on the stack, the scanner scratch
// is owned by the caller.
ChunkResult scan_range(int n, int k, int prefilter, uint64_t begin,
                       uint64_t end, MarginalScanner& scanner) {
  ChunkResult result;
  for (uint64_t mask = begin; mask < end; ++mask) {
    Graph g = graph_from_edge_bits(n, mask);
    auto count = scanner.count_mixed(g, k, prefilter);
    if (!count) continue;
    ++result.passed;
    if (*count > result.best) {
      result.best = *count;
      result.at_best = 0;
      result.witnesses.clear();
    }
    if (*count == result.best) {
      ++result.at_best;
      if (result.witnesses.size() < SearchReport::witness_cap) {
        result.witnesses.push_back(mask);
      }
    }
  }
  return result;
}

void merge_chunk(SearchReport& report, const ChunkResult& chunk) {
  report.prefilter_passed += chunk.passed;
  if (chunk.best < 0) return;
  if (chunk.best > report.best_count) {
    report.best_count = chunk.best;
    report.witness_total = 0;
    report.witnesses.clear();
  }
  if (chunk.best == report.best_count) {
    report.witness_total += chunk.at_best;
    for (uint64_t w : chunk.witnesses) {
      if (report.witnesses.size() < SearchReport::witness_cap) {
        report.witnesses.push_back(w);
      }
    }
  }
}

SearchReport make_report(int n, int k, int prefilter, uint64_t start) {
  uint64_t total = labeled_graph_count(n);
  if (start > total) {
    throw std::invalid_argument("scan start past the end of the range");
  }
  SearchReport report;
  report.n = n;
  report.k = k;
  report.prefilter = prefilter;
  report.range_start = start;
  report.range_end = total;
  report.graphs_scanned = total - start;
  return report;
}

}  // namespace

std::string SearchReport::prefilter_description() const {
  if (prefilter <= 0) return "none";
  return "all " + std::to_string(prefilter) + "-body and smaller marginals mixed";
}

std::string SearchReport::json() const {
  nlohmann::json doc;
  doc["n"] = n;
  doc["k"] = k;
  doc["prefilter"] = prefilter_description();
  doc["range"] = {{"start", range_start}, {"end", range_end}};
  doc["graphs_scanned"] = graphs_scanned;
  doc["prefilter_passed"] = prefilter_passed;
  doc["best_count"] = best_count;
  doc["witness_total"] = witness_total;
  auto& list = doc["witnesses"] = nlohmann::json::array();
  for (uint64_t w : witnesses) {
    list.push_back(graph_to_hex(graph_from_edge_bits(n, EdgeBits(w))));
  }
  doc["witness_overflow"] = witness_total - witnesses.size();
  return doc.dump();
}

uint64_t labeled_graph_count(int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("graph enumeration supports n in 1..10");
  }
  return uint64_t{1} << (n * (n - 1) / 2);
}

void enumerate_graphs(int n, const std::function<bool(const Graph&)>& visit) {
  uint64_t total = labeled_graph_count(n);
  for (uint64_t mask = 0; mask < total; ++mask) {
    if (!visit(graph_from_edge_bits(n, mask))) return;
  }
}

SearchReport search_best_serial(int n, int k, int prefilter, uint64_t start) {
  check_search_size(n, 8);
  SearchReport report = make_report(n, k, prefilter, start);
  MarginalScanner scanner(n);
  ChunkResult all = scan_range(n, k, prefilter, start, report.range_end, scanner);
  merge_chunk(report, all);
  return report;
}

SearchReport search_best(int n, int k, int prefilter, int jobs, uint64_t start,
                         const SearchProgress& progress) {
  check_search_size(n, 8);
  SearchReport report = make_report(n, k, prefilter, start);
  uint64_t total = report.range_end;

  int workers = jobs;
#ifdef _OPENMP
  if (workers <= 0) workers = omp_get_max_threads();
#else
  workers = 1;
#endif

  uint64_t nchunks = (total - start + kChunkGraphs - 1) / kChunkGraphs;
  // Stripes bound the memory for pending chunk results and give the caller
  // an ordered commit point for checkpointing.
  uint64_t stripe = std::max<uint64_t>(workers * 4, 1);

  for (uint64_t base = 0; base < nchunks; base += stripe) {
    uint64_t batch = std::min(stripe, nchunks - base);
    std::vector<ChunkResult> results(batch);

#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
    {
      MarginalScanner scanner(n);
#pragma omp for schedule(dynamic)
      for (long long i = 0; i < (long long)batch; ++i) {
        uint64_t begin = start + (base + i) * kChunkGraphs;
        uint64_t end = std::min(total, begin + kChunkGraphs);
        results[i] = scan_range(n, k, prefilter, begin, end, scanner);
      }
    }
#else
    {
      MarginalScanner scanner(n);
      for (uint64_t i = 0; i < batch; ++i) {
        uint64_t begin = start + (base + i) * kChunkGraphs;
        uint64_t end = std::min(total, begin + kChunkGraphs);
        results[i] = scan_range(n, k, prefilter, begin, end, scanner);
      }
    }
#endif

    for (const ChunkResult& chunk : results) {
      merge_chunk(report, chunk);
    }
    if (progress) {
      progress(std::min(total, start + (base + batch) * kChunkGraphs));
    }
  }
  return report;
}

std::optional<Graph> find_ame_graph(int n) {
  check_search_size(n, 8);
  int h = n / 2;
  uint64_t total = labeled_graph_count(n);
  MarginalScanner scanner(n);
  for (uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_edge_bits(n, mask);
    // AME iff no nontrivial stabilizer element has weight <= floor(n/2);
    // the prefilter bails out at the first light element.
    if (scanner.count_mixed(g, h, h).has_value()) return g;
  }
  return std::nullopt;
}

LcOrbit lc_orbit(const Graph& g, size_t max_size) {
  LcOrbit orbit;
  auto key = [](const Graph& graph) {
    EdgeBits bits = edge_bits(graph);
    return std::pair<uint64_t, uint64_t>(uint64_t(bits >> 64), uint64_t(bits));
  };
  struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
      return std::hash<uint64_t>{}(p.first * 0x9e3779b97f4a7c15ull ^ p.second);
    }
  };
  std::unordered_set<std::pair<uint64_t, uint64_t>, PairHash> seen;
  std::vector<Graph> frontier{g};
  seen.insert(key(g));
  orbit.members.push_back(g);

  while (!frontier.empty()) {
    std::vector<Graph> next;
    for (const Graph& cur : frontier) {
      for (int v = 0; v < cur.n; ++v) {
        Graph image = local_complement(cur, v);
        if (seen.insert(key(image)).second) {
          if (orbit.members.size() >= max_size) {
            orbit.complete = false;
            return orbit;
          }
          orbit.members.push_back(image);
          next.push_back(image);
        }
      }
    }
    frontier = std::move(next);
  }
  return orbit;
}

}  // namespace ame
