#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ame/graph.hpp"

namespace ame {

// Result of scanning labeled n-vertex graphs by edge bitmask.  best_count is
// the maximum number of maximally mixed k-body marginals over graphs passing
// the prefilter, -1 if none passed.  Witnesses are the attaining edge
// bitmasks in ascending order, capped; witness_total keeps the exact count.
struct SearchReport {
  int n = 0;
  int k = 0;
  int prefilter = 0;  // require all marginals of size <= prefilter mixed
  uint64_t range_start = 0;
  uint64_t range_end = 0;
  uint64_t graphs_scanned = 0;
  uint64_t prefilter_passed = 0;
  int best_count = -1;
  std::vector<uint64_t> witnesses;
  uint64_t witness_total = 0;

  static constexpr size_t witness_cap = 1024;

  std::string prefilter_description() const;
  std::string json() const;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

using SearchProgress = std::function<void(uint64_t next_start)>;

// Number of labeled graphs on n vertices, 2^C(n,2); n <= 10.
uint64_t labeled_graph_count(int n);

// All labeled graphs in edge-bitmask order, streamed through a callback
// (return false to stop early).
void enumerate_graphs(int n, const std::function<bool(const Graph&)>& visit);

// OpenMP scan over [start, 2^C(n,2)); jobs <= 0 uses the OpenMP default.
// The chunk grid is fixed, so the merged report does not depend on the
// worker count.  `progress` (optional) receives the committed frontier
// after each stripe of chunks, suitable for checkpointing.
SearchReport search_best(int n, int k, int prefilter, int jobs = 0,
                         uint64_t start = 0,
                         const SearchProgress& progress = nullptr);

// Single-loop reference implementation with identical semantics.
SearchReport search_best_serial(int n, int k, int prefilter,
                                uint64_t start = 0);

// First graph (in edge-bitmask order) whose state has all floor(n/2)-body
// marginals maximally mixed, by the stabilizer criterion.
std::optional<Graph> find_ame_graph(int n);

// Closure of g under local complementation at every vertex, breadth-first.
// complete == false means the cap stopped the search.
struct LcOrbit {
  std::vector<Graph> members;  // in discovery order, g first
  bool complete = true;
};

LcOrbit lc_orbit(const Graph& g, size_t max_size);

}  // namespace ame
