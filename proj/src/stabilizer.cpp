#include "ame/stabilizer.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

namespace ame {

namespace {

// Colex successor of a k-subset mask (Gosper).
inline uint32_t next_subset(uint32_t s) {
  uint32_t c = s & -s;
  uint32_t r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

}  // namespace

StabilizerGroup stabilizer_generators(const Graph& g) {
  StabilizerGroup group{g.n, {}};
  group.generators.reserve(g.n);
  for (int j = 0; j < g.n; ++j) {
    group.generators.push_back(Pauli{g.n, 1u << j, g.adj[j], 0});
  }
  return group;
}

std::vector<Pauli> enumerate_stabilizer_elements(const StabilizerGroup& group) {
  size_t count = size_t{1} << group.generators.size();
  for (size_t a = 0; a < group.generators.size(); ++a) {
    if (!group.generators[a].is_hermitian()) {
      throw std::invalid_argument("stabilizer generators must be Hermitian");
    }
    for (size_t b = a + 1; b < group.generators.size(); ++b) {
      if (!commutes(group.generators[a], group.generators[b])) {
        throw std::invalid_argument("stabilizer generators must commute");
      }
    }
  }
  std::vector<Pauli> elements(count);
  elements[0] = Pauli::identity(group.n);
  for (uint32_t m = 1; m < count; ++m) {
    int low = std::countr_zero(m);
    elements[m] = elements[m & (m - 1)] * group.generators[low];
    if (elements[m].is_identity() && elements[m].phase_exp != 0) {
      throw std::invalid_argument("group contains -identity");
    }
  }
  return elements;
}

std::vector<long> stabilizer_weight_distribution(const StabilizerGroup& group) {
  std::vector<long> hist(group.n + 1, 0);
  for (const Pauli& p : enumerate_stabilizer_elements(group)) {
    ++hist[p.weight()];
  }
  return hist;
}

MarginalReport stabilizer_marginal_report(const Graph& g, int k) {
  if (k < 1 || k > g.n) {
    throw std::invalid_argument("marginal size must be in 1..n");
  }
  const uint32_t total = 1u << g.n;
  std::vector<uint32_t> counts(total, 0);

  // Census over the Gray-code walk: counts[m] = elements with support m.
  uint32_t x = 0, z = 0;
  counts[0] = 1;
  for (uint32_t i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    x ^= 1u << b;
    z ^= g.adj[b];
    ++counts[x | z];
  }
  // Subset-sum (zeta) transform: counts[m] becomes the number of elements
  // supported inside m.
  for (int b = 0; b < g.n; ++b) {
    uint32_t bit = 1u << b;
    for (uint32_t m = 0; m < total; ++m) {
      if (m & bit) counts[m] += counts[m ^ bit];
    }
  }

  MarginalReport report{g.n, k, 0, {}};
  for (uint32_t s = (1u << k) - 1; s < total; s = next_subset(s)) {
    bool mixed = counts[s] == 1;  // only the identity fits inside s
    report.subsets.emplace_back(s, mixed);
    if (mixed) ++report.mixed_count;
  }
  return report;
}

MarginalScanner::MarginalScanner(int n) : n_(n) {
  if (n < 1 || n > Graph::max_vertices) {
    throw std::invalid_argument("scanner size out of range");
  }
  support_count_.assign(size_t{1} << n, 0);
}

std::optional<int> MarginalScanner::count_mixed(const Graph& g, int k,
                                                int prefilter) {
  if (g.n != n_) {
    throw std::invalid_argument("scanner built for a different size");
  }
  if (k < 1 || k > n_) {
    throw std::invalid_argument("marginal size must be in 1..n");
  }
  const uint32_t total = 1u << n_;
  uint32_t* counts = support_count_.data();
  std::memset(counts, 0, total * sizeof(uint32_t));

  // Gray-code walk over all 2^n elements; supports need no phase tracking.
  // Generators are independent, so only i == 0 yields the identity.
  uint32_t x = 0, z = 0;
  counts[0] = 1;
  for (uint32_t i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    x ^= 1u << b;
    z ^= g.adj[b];
    uint32_t supp = x | z;
    if (std::popcount(supp) <= prefilter) {
      return std::nullopt;
    }
    ++counts[supp];
  }

  for (int b = 0; b < n_; ++b) {
    uint32_t bit = 1u << b;
    for (uint32_t m = 0; m < total; ++m) {
      if (m & bit) counts[m] += counts[m ^ bit];
    }
  }

  int mixed = 0;
  for (uint32_t s = (1u << k) - 1; s < total; s = next_subset(s)) {
    if (counts[s] == 1) ++mixed;
  }
  return mixed;
}

int MarginalScanner::min_nonzero_weight(const Graph& g) {
  if (g.n != n_) {
    throw std::invalid_argument("scanner built for a different size");
  }
  const uint32_t total = 1u << n_;
  uint32_t x = 0, z = 0;
  int best = n_ + 1;
  for (uint32_t i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    x ^= 1u << b;
    z ^= g.adj[b];
    int w = std::popcount(x | z);
    if (w < best) best = w;
  }
  return best;
}

}  // namespace ame
