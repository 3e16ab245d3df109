#include <doctest.h>

#include <set>

#include <json.hpp>

#include "ame/exclusion.hpp"
#include "ame/graph.hpp"
#include "ame/state.hpp"

using namespace ame;

TEST_SUITE("exclusion") {

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3) * Rational(2, 3)) == Rational(2));
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(-7, 2).str() == "-7/2");
  CHECK(pow2_rational(-3) == Rational(1, 8));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK(binomial(9, 6) == 84);
  CHECK(binomial(7, 5) == 21);
}

TEST_CASE("party-count bounds by local dimension") {
  CHECK(scott_rains_bound(2) == std::pair<int64_t, int64_t>{6, 11});
  CHECK(scott_rains_bound(3) == std::pair<int64_t, int64_t>{16, 23});
  CHECK(scott_rains_bound(4) == std::pair<int64_t, int64_t>{30, 39});
  CHECK_THROWS_AS(scott_rains_bound(1), std::invalid_argument);

  for (int64_t d = 2; d < 40; ++d) {
    auto [even, odd] = scott_rains_bound(d);
    auto [even2, odd2] = scott_rains_bound(d + 1);
    CHECK(even2 > even);
    CHECK(odd2 > odd);

    // Largest n of each parity satisfying the coefficient-positivity form
    // (D^4-1) - (h+2)(D^2-1) >= 0 resp. (D^3-1) - (h+2)(D-1) >= 0.
    int64_t even_max = 0, odd_max = 1;
    for (int64_t n = 2; n <= 4000; n += 2) {
      if ((d * d * d * d - 1) - (n / 2 + 2) * (d * d - 1) >= 0) even_max = n;
    }
    for (int64_t n = 3; n <= 4000; n += 2) {
      if ((d * d * d - 1) - (n / 2 + 2) * (d - 1) >= 0) odd_max = n;
    }
    CHECK(even == even_max);
    CHECK(odd == odd_max);
  }
}

TEST_CASE("eigenvalue recurrence reproduces the known values") {
  auto seven = p_eigenvalues(7, 5);
  CHECK(seven.at(4) == Rational(1));
  CHECK(seven.at(5) == Rational(2));

  auto eleven = p_eigenvalues(11, 9);
  CHECK(eleven.at(6) == Rational(1));
  CHECK(eleven.at(7) == Rational(0));
  CHECK(eleven.at(8) == Rational(3));
  CHECK(eleven.at(9) == Rational(16));

  for (int n = 4; n <= 24; ++n) {
    int h = n / 2;
    auto lambda = p_eigenvalues(n, h + 2);
    if (n % 2 == 0) {
      CHECK(lambda.at(h + 1) == Rational(3));
      CHECK(lambda.at(h + 2) == Rational(9 - 3 * h));
    } else {
      CHECK(lambda.at(h + 1) == Rational(1));
      CHECK(lambda.at(h + 2) == Rational(5 - h));
    }
  }

  CHECK_THROWS_AS(p_eigenvalues(7, 3), std::invalid_argument);
  CHECK_THROWS_AS(p_eigenvalues(7, 8), std::invalid_argument);
}

TEST_CASE("weight-(h+1) component of a flat-marginal state acts as lambda") {
  // Apply sum_{supp(a)=V} <a> sigma_a to the state for one (h+1)-subset V
  // and compare with the recurrence output.
  for (const char* name : {"bell", "triangle", "ring5", "ame6"}) {
    Graph g = named_graph(name);
    StateVector s = graph_state_vector(g);
    int h = g.n / 2;
    int k = h + 1;
    uint32_t subset = (1u << k) - 1;
    Rational lambda = p_eigenvalues(g.n, k).at(k);

    std::vector<Complex> image(s.dim(), Complex{0});
    auto positions = subset_indices(subset);
    uint64_t strings = uint64_t{1} << (2 * k);
    for (uint64_t code = 1; code < strings; ++code) {
      Pauli p = Pauli::identity(g.n);
      for (int j = 0; j < k; ++j) {
        uint32_t letter = (code >> (2 * j)) & 3u;
        if (letter & 1u) p.x_mask |= 1u << positions[j];
        if (letter & 2u) p.z_mask |= 1u << positions[j];
      }
      if (p.weight() != k) continue;  // weight-k terms on V only
      double r = expectation(s, p);
      if (r == 0.0) continue;
      // accumulate r * (P |s>)
      Complex global = (std::popcount(p.x_mask & p.z_mask) % 4 == 0) ? Complex{1, 0}
                       : (std::popcount(p.x_mask & p.z_mask) % 4 == 1) ? Complex{0, 1}
                       : (std::popcount(p.x_mask & p.z_mask) % 4 == 2) ? Complex{-1, 0}
                                                                       : Complex{0, -1};
      for (uint32_t i = 0; i < s.dim(); ++i) {
        double sign = (std::popcount(p.z_mask & i) & 1) ? -1.0 : 1.0;
        image[i ^ p.x_mask] += r * global * sign * s.amplitudes[i];
      }
    }
    double want = double(lambda.num) / double(lambda.den);
    for (uint32_t i = 0; i < s.dim(); ++i) {
      CHECK(std::abs(image[i] - want * s.amplitudes[i]) < 1e-8);
    }
  }
}

TEST_CASE("exclusion verdicts across the full range") {
  std::set<int> consistent;
  for (int n = 2; n <= 32; ++n) {
    ExclusionVerdict v = parity_exclusion(n);
    CHECK(v.n == n);
    CHECK(v.excluded == (v.lhs != v.rhs));
    if (!v.excluded) consistent.insert(n);
  }
  CHECK(consistent == std::set<int>{2, 3, 5, 6});
  CHECK_THROWS_AS(parity_exclusion(1), std::invalid_argument);
}

TEST_CASE("individual verdict traces") {
  ExclusionVerdict seven = parity_exclusion(7);
  CHECK(seven.excluded);
  CHECK(seven.case_label == "case4-odd-odd");
  CHECK(seven.lhs == Rational(20));
  CHECK(seven.rhs == Rational(12));
  CHECK(seven.eigenvalues_used.at(4) == Rational(1));
  CHECK(seven.eigenvalues_used.at(5) == Rational(2));

  ExclusionVerdict four = parity_exclusion(4);
  CHECK(four.excluded);
  CHECK(four.case_label == "case1-even-even");

  ExclusionVerdict five = parity_exclusion(5);
  CHECK(!five.excluded);
  CHECK(five.case_label == "case3-odd-even");
  CHECK(five.lhs == five.rhs);

  ExclusionVerdict six = parity_exclusion(6);
  CHECK(!six.excluded);
  CHECK(six.case_label == "case2-even-odd");

  ExclusionVerdict three = parity_exclusion(3);
  CHECK(!three.excluded);
  CHECK(three.case_label == "case4-odd-odd");

  ExclusionVerdict two = parity_exclusion(2);
  CHECK(!two.excluded);
  CHECK(two.case_label == "too-small");

  ExclusionVerdict eleven = parity_exclusion(11);
  CHECK(eleven.excluded);
  CHECK(eleven.case_label == "case4-n11-extension");
  CHECK(eleven.lhs == Rational(111));
  CHECK(eleven.rhs == Rational(63));

  ExclusionVerdict eight = parity_exclusion(8);
  CHECK(eight.excluded);
  CHECK(eight.case_label == "case1-even-even");
  ExclusionVerdict ten = parity_exclusion(10);
  CHECK(ten.excluded);
  CHECK(ten.case_label == "case2-even-odd");
  ExclusionVerdict nine = parity_exclusion(9);
  CHECK(nine.excluded);
  CHECK(nine.case_label == "case3-odd-even");
}

TEST_CASE("verdict json carries the full trace") {
  auto doc = nlohmann::json::parse(parity_exclusion(7).json());
  CHECK(doc["n"] == 7);
  CHECK(doc["excluded"] == true);
  CHECK(doc["case"] == "case4-odd-odd");
  CHECK(doc["lhs"] == "20");
  CHECK(doc["rhs"] == "12");
  CHECK(doc["eigenvalues"]["4"] == "1");
  CHECK(doc["eigenvalues"]["5"] == "2");
}

TEST_CASE("usable five-subset counting") {
  CHECK(usable_five_subsets({}).usable_count == 21);

  auto one = usable_five_subsets({0b0000111});
  CHECK(one.usable_count == 12);

  // every single bad triple spoils exactly nine
  for (uint32_t a = 0; a < 7; ++a) {
    for (uint32_t b = a + 1; b < 7; ++b) {
      for (uint32_t c = b + 1; c < 7; ++c) {
        uint32_t bad = (1u << a) | (1u << b) | (1u << c);
        CHECK(usable_five_subsets({bad}).usable_count == 12);
      }
    }
  }

  auto two = usable_five_subsets({0b0000111, 0b0111000});
  CHECK(two.usable_count == 9);

  CHECK_THROWS_AS(usable_five_subsets({0b0000011}), std::invalid_argument);
  CHECK_THROWS_AS(usable_five_subsets({0b10000111}), std::invalid_argument);
}

TEST_CASE("three-body saturation bound") {
  CHECK(observation3_bound() == 32);

  // two spoiled triples always leave at least three usable five-subsets
  int min_usable = 21;
  std::vector<uint32_t> threes;
  for (uint32_t m = 0; m < (1u << 7); ++m) {
    if (std::popcount(m) == 3) threes.push_back(m);
  }
  for (size_t i = 0; i < threes.size(); ++i) {
    for (size_t j = i + 1; j < threes.size(); ++j) {
      min_usable = std::min(
          min_usable, usable_five_subsets({threes[i], threes[j]}).usable_count);
    }
  }
  // 21 - 2*9 = 3 is the counting lower bound; the spoiled sets always
  // overlap, so the exhaustive minimum is higher.
  CHECK(min_usable >= 3);
  CHECK(min_usable == 6);
}

}  // TEST_SUITE
