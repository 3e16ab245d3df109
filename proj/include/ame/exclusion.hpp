#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ame/rational.hpp"

namespace ame {

// Outcome of the weight-parity exclusion argument for n-qubit states with
// all floor(n/2)-body marginals maximally mixed.  lhs/rhs are the two sides
// of the decisive identity after inserting the eigenvalues; excluded means
// they disagree.
struct ExclusionVerdict {
  int n = 0;
  bool excluded = false;
  std::string case_label;            // too-small, case1-even-even, ...
  Rational lhs;
  Rational rhs;
  std::map<int, Rational> eigenvalues_used;  // j -> lambda_j

  std::string json() const;
};

// Upper limits on the party count admitting flat half-size marginals for
// local dimension D: 2(D^2-1) for even n, 2D(D+1)-1 for odd n.
std::pair<int64_t, int64_t> scott_rains_bound(int64_t dim);

// Eigenvalues lambda_j of the weight-j Bloch components acting on the state,
// solved iteratively from sum_{j=h+1}^{k} C(k,j) lambda_j = 2^(2k-n) - 1
// for k = h+1 .. k_max, where h = floor(n/2).
std::map<int, Rational> p_eigenvalues(int n, int k_max);

// Case split on the parities of n and h; consistent exactly for
// n in {2, 3, 5, 6}.
ExclusionVerdict parity_exclusion(int n);

// Counting argument on seven parties: which 5-subsets remain usable for the
// contradiction once some 3-subsets have unmixed marginals.
struct CountingReport {
  std::vector<uint32_t> bad_threes;    // 3-subset masks over bits 0..6
  std::vector<uint32_t> usable_fives;  // 5-subset masks over bits 0..6
  int usable_count = 0;
};

CountingReport usable_five_subsets(const std::vector<uint32_t>& bad_threes);

// Maximum number of maximally mixed 3-body marginals for seven qubits with
// all 2-body marginals mixed: 35 minus the smallest number of spoiled
// 3-subsets that kills every usable 5-subset.
int observation3_bound();

}  // namespace ame
