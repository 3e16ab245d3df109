#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ame/graph.hpp"
#include "ame/pauli.hpp"

namespace ame {

// Abelian Pauli group given by independent commuting Hermitian generators.
struct StabilizerGroup {
  int n = 1;
  std::vector<Pauli> generators;
};

// K_j = X_j prod_{k in N(j)} Z_k, one generator per vertex.
StabilizerGroup stabilizer_generators(const Graph& g);

// All 2^g products of generator subsets with exact signs, indexed by the
// generator subset mask (element 0 is the identity).  Verifies that the
// generators commute and that -identity is not produced.
std::vector<Pauli> enumerate_stabilizer_elements(const StabilizerGroup& group);

// Histogram of element weights, size n+1.  For a graph state this equals
// its sector-length profile.
std::vector<long> stabilizer_weight_distribution(const StabilizerGroup& group);

// Per-subset marginal verdicts for all C(n,k) subsets of size k, in colex
// mask order.  A subset is maximally mixed iff no nontrivial group element
// is supported inside it.
struct MarginalReport {
  int n = 0;
  int k = 0;
  int mixed_count = 0;
  std::vector<std::pair<uint32_t, bool>> subsets;  // (mask, mixed)
};

MarginalReport stabilizer_marginal_report(const Graph& g, int k);

// Reusable scratch for scanning many graphs of the same size.  Not shared
// between threads; each worker owns one.
class MarginalScanner {
 public:
  explicit MarginalScanner(int n);

  // Counts size-k subsets with maximally mixed marginals, or nullopt when
  // some marginal of size <= prefilter is unmixed (equivalently: a
  // nontrivial stabilizer element of weight <= prefilter exists).
  // prefilter 0 accepts every graph.
  std::optional<int> count_mixed(const Graph& g, int k, int prefilter);

  // Smallest nonzero element weight; n+1 when only the identity exists.
  int min_nonzero_weight(const Graph& g);

 private:
  int n_;
  std::vector<uint32_t> support_count_;
};

}  // namespace ame
