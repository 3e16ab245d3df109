#pragma once

#include <cstdint>
#include <vector>

#include "ame/state.hpp"

namespace ame {

// True iff every floor(n/2)-body marginal is maximally mixed within tol;
// all smaller marginals are re-checked as well.
bool is_ame(const StateVector& state, double tol);

struct MixedMarginalCount {
  int mixed = 0;
  int total = 0;
  std::vector<uint32_t> failing;  // subset masks with unmixed marginals
};

// Dense scan over all C(n,k) marginals of size k.
MixedMarginalCount count_mixed_marginals(const StateVector& state, int k,
                                         double tol);

}  // namespace ame
