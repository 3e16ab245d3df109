#include "ame/ame_check.hpp"

#include <stdexcept>

namespace ame {

namespace {

inline uint32_t next_subset(uint32_t s) {
  uint32_t c = s & -s;
  uint32_t r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

}  // namespace

bool is_ame(const StateVector& state, double tol) {
  int h = state.n / 2;
  if (h == 0) return true;  // single qubit: no nontrivial marginal to test
  for (int k = h; k >= 1; --k) {
    for (uint32_t s = (1u << k) - 1; s < (1u << state.n); s = next_subset(s)) {
      if (!is_maximally_mixed(state, s, tol)) return false;
    }
  }
  return true;
}

MixedMarginalCount count_mixed_marginals(const StateVector& state, int k,
                                         double tol) {
  if (k < 1 || k > state.n) {
    throw std::invalid_argument("marginal size must be in 1..n");
  }
  std::vector<uint32_t> subsets;
  for (uint32_t s = (1u << k) - 1; s < (1u << state.n); s = next_subset(s)) {
    subsets.push_back(s);
  }
  std::vector<char> mixed(subsets.size(), 0);

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < long(subsets.size()); ++i) {
    mixed[i] = is_maximally_mixed(state, subsets[i], tol) ? 1 : 0;
  }

  MixedMarginalCount out;
  out.total = int(subsets.size());
  for (size_t i = 0; i < subsets.size(); ++i) {
    if (mixed[i]) {
      ++out.mixed;
    } else {
      out.failing.push_back(subsets[i]);
    }
  }
  return out;
}

}  // namespace ame
