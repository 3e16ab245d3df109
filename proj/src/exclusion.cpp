#include "ame/exclusion.hpp"

#include <bit>
#include <stdexcept>

#include <json.hpp>

namespace ame {

namespace {

inline uint32_t next_subset(uint32_t s) {
  uint32_t c = s & -s;
  uint32_t r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

std::vector<uint32_t> subsets_of_size(int n, int k) {
  std::vector<uint32_t> out;
  for (uint32_t s = (1u << k) - 1; s < (1u << n); s = next_subset(s)) {
    out.push_back(s);
  }
  return out;
}

}  // namespace

std::string ExclusionVerdict::json() const {
  nlohmann::json doc;
  doc["n"] = n;
  doc["excluded"] = excluded;
  doc["case"] = case_label;
  doc["lhs"] = lhs.str();
  doc["rhs"] = rhs.str();
  nlohmann::json ev = nlohmann::json::object();
  for (const auto& [j, lambda] : eigenvalues_used) {
    ev[std::to_string(j)] = lambda.str();
  }
  doc["eigenvalues"] = ev;
  return doc.dump();
}

std::pair<int64_t, int64_t> scott_rains_bound(int64_t dim) {
  if (dim < 2) {
    throw std::invalid_argument("local dimension must be at least 2");
  }
  return {2 * (dim * dim - 1), 2 * dim * (dim + 1) - 1};
}

std::map<int, Rational> p_eigenvalues(int n, int k_max) {
  int h = n / 2;
  if (n < 2 || k_max <= h || k_max > n) {
    throw std::invalid_argument("need floor(n/2) < k_max <= n");
  }
  std::map<int, Rational> lambda;
  for (int k = h + 1; k <= k_max; ++k) {
    // C(k,k) lambda_k = 2^(2k-n) - 1 - sum_{j=h+1}^{k-1} C(k,j) lambda_j
    Rational rest = pow2_rational(2 * k - n) - Rational(1);
    for (int j = h + 1; j < k; ++j) {
      rest = rest - Rational(binomial(k, j)) * lambda.at(j);
    }
    lambda[k] = rest;
  }
  return lambda;
}

ExclusionVerdict parity_exclusion(int n) {
  if (n < 2) {
    throw std::invalid_argument("party count must be at least 2");
  }
  ExclusionVerdict verdict;
  verdict.n = n;

  int h = n / 2;
  // The argument squares the marginal on h+2 parties; with n = 2 that
  // marginal does not exist, so nothing can be concluded.
  if (h + 2 > n) {
    verdict.excluded = false;
    verdict.case_label = "too-small";
    return verdict;
  }

  auto lambda = p_eigenvalues(n, h + 2);
  Rational l1 = lambda.at(h + 1);
  Rational l2 = lambda.at(h + 2);
  verdict.eigenvalues_used = lambda;

  bool n_even = (n % 2) == 0;
  bool h_even = (h % 2) == 0;
  // c = 2^(2(h+2)-n) from the squared-marginal identity; collecting the
  // odd-weight class leaves {S,P} = (c-2)*T where T is the odd-weight group
  // (the weight h+1 sum when h+1 is odd, the weight h+2 term otherwise).
  Rational c = pow2_rational(2 * (h + 2) - n);
  Rational applied_anticomm =
      Rational(2) * Rational(h + 2) * l1 * l2;  // {S,P} on the state

  if (h_even) {
    // h+1 odd: the odd-weight side is (c-2) * S.
    verdict.case_label = n_even ? "case1-even-even" : "case3-odd-even";
    verdict.lhs = applied_anticomm;
    verdict.rhs = (c - Rational(2)) * Rational(h + 2) * l1;
    verdict.excluded = verdict.lhs != verdict.rhs;
    return verdict;
  }

  // h odd: the odd-weight side is (c-2) * P.
  verdict.case_label = n_even ? "case2-even-odd" : "case4-odd-odd";
  verdict.lhs = applied_anticomm;
  verdict.rhs = (c - Rational(2)) * l2;
  verdict.excluded = verdict.lhs != verdict.rhs;

  if (!verdict.excluded && !n_even && l2 == Rational(0)) {
    // lambda_{h+2} = 0 (n = 11): the identity above is vacuous, so redo the
    // collection on the marginal of h+4 parties, where the weight h+2 terms
    // drop out and the surviving odd-weight balance reads
    //   C(h+4,h+1) l_{h+1} + C(h+4,h+3) l_{h+3} = 2^(2(h+4)-n-1) - 1.
    int k4 = h + 4;
    auto ext = p_eigenvalues(n, k4);
    verdict.case_label = "case4-n11-extension";
    verdict.eigenvalues_used = ext;
    Rational mu_low = Rational(binomial(k4, h + 1)) * ext.at(h + 1);
    Rational mu_high = Rational(binomial(k4, h + 3)) * ext.at(h + 3);
    Rational c4 = pow2_rational(2 * k4 - n);
    verdict.lhs = mu_low + mu_high;
    verdict.rhs = c4 / Rational(2) - Rational(1);
    verdict.excluded = verdict.lhs != verdict.rhs;
  }
  return verdict;
}

CountingReport usable_five_subsets(const std::vector<uint32_t>& bad_threes) {
  CountingReport report;
  const uint32_t full = (1u << 7) - 1;
  for (uint32_t b : bad_threes) {
    if ((b & ~full) != 0 || std::popcount(b) != 3) {
      throw std::invalid_argument("bad sets must be 3-subsets of 7 parties");
    }
    report.bad_threes.push_back(b);
  }
  for (uint32_t v : subsets_of_size(7, 5)) {
    bool usable = true;
    for (uint32_t b : report.bad_threes) {
      // Spoiled if the bad triple sits inside v (its own 3-body marginals
      // fail) or if v contains the complement of b (one of v's 4-body
      // subsets fails the eigenvector relation).
      if ((b & ~v) == 0 || ((full & ~b) & ~v) == 0) {
        usable = false;
        break;
      }
    }
    if (usable) {
      report.usable_fives.push_back(v);
    }
  }
  report.usable_count = int(report.usable_fives.size());
  return report;
}

int observation3_bound() {
  auto threes = subsets_of_size(7, 3);  // 35 masks

  // Sizes 0..2 always leave a usable 5-subset, so any state with at most two
  // unmixed triples is ruled out; hence at least three must fail.
  for (size_t a = 0; a < threes.size(); ++a) {
    if (usable_five_subsets({threes[a]}).usable_count == 0) {
      throw std::logic_error("single spoiled triple should not empty the count");
    }
    for (size_t b = a + 1; b < threes.size(); ++b) {
      if (usable_five_subsets({threes[a], threes[b]}).usable_count == 0) {
        throw std::logic_error("two spoiled triples should not empty the count");
      }
    }
  }
  if (usable_five_subsets({}).usable_count == 0) {
    throw std::logic_error("empty bad set should leave all 21 subsets");
  }

  // Some triple of spoiled 3-subsets does empty it, so three failures are
  // enough to evade the argument.
  bool triple_found = false;
  for (size_t a = 0; a < threes.size() && !triple_found; ++a) {
    for (size_t b = a + 1; b < threes.size() && !triple_found; ++b) {
      for (size_t c = b + 1; c < threes.size() && !triple_found; ++c) {
        if (usable_five_subsets({threes[a], threes[b], threes[c]})
                .usable_count == 0) {
          triple_found = true;
        }
      }
    }
  }
  if (!triple_found) {
    throw std::logic_error("no emptying triple found");
  }
  return 35 - 3;
}

}  // namespace ame
