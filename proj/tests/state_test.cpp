#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ame/dense_reference.hpp"
#include "ame/graph.hpp"
#include "ame/state.hpp"
#include "test_util.hpp"

using namespace ame;
using ame::testing::ghz_state;
using ame::testing::random_hermitian_pauli;
using ame::testing::random_state;

namespace {

// Independent sector-length route: dense matrices for every string.
std::vector<double> brute_sector_lengths(const StateVector& s) {
  std::vector<double> acc(s.n + 1, 0.0);
  uint32_t dim = 1u << s.n;
  for (uint32_t x = 0; x < dim; ++x) {
    for (uint32_t z = 0; z < dim; ++z) {
      Pauli p{s.n, x, z, 0};
      double e = dense::expectation(s.amplitudes, dense::pauli_matrix(p)).real();
      acc[p.weight()] += e * e;
    }
  }
  return acc;
}

bool spectra_match(std::vector<double> a, std::vector<double> b, double tol) {
  // compare after trimming zeros
  auto trim = [&](std::vector<double>& v) {
    std::erase_if(v, [&](double x) { return std::abs(x) <= tol; });
  };
  trim(a);
  trim(b);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("state") {

TEST_CASE("expectations on the three-qubit GHZ state") {
  StateVector ghz = ghz_state(3);
  CHECK(expectation(ghz, Pauli::parse("ZZI")) == doctest::Approx(1.0));
  CHECK(expectation(ghz, Pauli::parse("ZII")) == doctest::Approx(0.0));
  CHECK(expectation(ghz, Pauli::parse("III")) == doctest::Approx(1.0));
  CHECK(expectation(ghz, Pauli::parse("XXX")) == doctest::Approx(1.0));
  CHECK(expectation(ghz, Pauli::parse("-XXX")) == doctest::Approx(-1.0));
}

TEST_CASE("expectation matches the dense reference") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + int(rng() % 3);
    StateVector s = random_state(rng, n);
    Pauli p = random_hermitian_pauli(rng, n);
    double direct = expectation(s, p);
    double via_matrix =
        dense::expectation(s.amplitudes, dense::pauli_matrix(p)).real();
    CHECK(direct == doctest::Approx(via_matrix).epsilon(1e-10));
    CHECK(std::abs(direct) <= 1.0 + 1e-9);
  }
}

TEST_CASE("expectation validates its input") {
  StateVector ghz = ghz_state(3);
  CHECK_THROWS_AS(expectation(ghz, Pauli::parse("ZZ")), std::invalid_argument);
  CHECK_THROWS_AS(expectation(ghz, Pauli::parse("+iZZI")), std::invalid_argument);
}

TEST_CASE("sector lengths of reference states") {
  auto check = [](const StateVector& s, const std::vector<double>& want) {
    SectorLengths got = sector_lengths(s);
    auto brute = brute_sector_lengths(s);
    REQUIRE(got.values.size() == want.size());
    for (size_t j = 0; j < want.size(); ++j) {
      CHECK(got.values[j] == doctest::Approx(want[j]).epsilon(1e-9));
      CHECK(brute[j] == doctest::Approx(want[j]).epsilon(1e-9));
    }
  };
  check(ghz_state(3), {1, 0, 3, 4});
  check(ghz_state(2), {1, 0, 3});              // Bell pair
  check(StateVector::basis_state(2, 0), {1, 2, 1});  // |00>
}

TEST_CASE("sector lengths sum to 2^n") {
  std::mt19937 rng(22);
  for (int n = 1; n <= 5; ++n) {
    StateVector s = random_state(rng, n);
    CHECK(sector_lengths(s).total() ==
          doctest::Approx(std::pow(2.0, n)).epsilon(1e-6));
  }
}

TEST_CASE("chunked sector lengths match the serial loop") {
  std::mt19937 rng(23);
  for (int n : {2, 4, 6}) {
    StateVector s = random_state(rng, n);
    auto par = sector_lengths(s);
    auto ser = sector_lengths_serial(s);
    REQUIRE(par.values.size() == ser.values.size());
    for (size_t j = 0; j < par.values.size(); ++j) {
      CHECK(par.values[j] == doctest::Approx(ser.values[j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("reduced density matrices of small states") {
  StateVector ghz = ghz_state(3);
  DensityMatrix rho = reduced_density(ghz, 0b001);
  CHECK(rho.k == 1);
  CHECK(std::abs(rho.at(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(rho.at(1, 1) - 0.5) < 1e-12);
  CHECK(std::abs(rho.at(0, 1)) < 1e-12);

  StateVector zz = StateVector::basis_state(2, 0);
  DensityMatrix proj = reduced_density(zz, 0b01);
  CHECK(std::abs(proj.at(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(proj.at(1, 1)) < 1e-12);

  StateVector bell = ghz_state(2);
  DensityMatrix half = reduced_density(bell, 0b10);
  CHECK(std::abs(half.at(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(half.at(0, 1)) < 1e-12);

  // Tracing out nothing returns the projector onto the state.
  DensityMatrix full = reduced_density(bell, 0b11);
  CHECK(full.k == 2);
  CHECK(std::abs(full.at(0, 0) - 0.5) < 1e-12);
  CHECK(std::abs(full.at(0, 3) - 0.5) < 1e-12);
  CHECK(full.trace_real() == doctest::Approx(1.0));

  CHECK_THROWS_AS(reduced_density(ghz, 0), std::invalid_argument);
  CHECK_THROWS_AS(reduced_density(ghz, 0b1000), std::invalid_argument);
}

TEST_CASE("density invariants hold on random states") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + int(rng() % 4);
    StateVector s = random_state(rng, n);
    uint32_t subset = 1 + (rng() % ((1u << n) - 1));
    DensityMatrix rho = reduced_density(s, subset);
    CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-10));
    for (size_t a = 0; a < rho.dim(); ++a) {
      for (size_t b = a; b < rho.dim(); ++b) {
        CHECK(std::abs(rho.at(a, b) - std::conj(rho.at(b, a))) < 1e-12);
      }
    }
    uint32_t proper = (std::popcount(subset) == n) ? 1u : subset;
    for (double ev : schmidt_spectrum(s, proper)) CHECK(ev > -1e-10);
  }
}

TEST_CASE("the two maximal-mixedness routes agree") {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + int(rng() % 5);  // every subset, n <= 6
    StateVector s = (trial % 2 == 0)
                        ? random_state(rng, n)
                        : graph_state_vector(ame::testing::random_graph(rng, n));
    for (uint32_t subset = 1; subset < (1u << n); ++subset) {
      CHECK(is_maximally_mixed(s, subset, 1e-9) ==
            supported_expectations_vanish(s, subset, 1e-9));
    }
  }
  for (int trial = 0; trial < 4; ++trial) {  // sampled subsets at n = 7
    StateVector s = (trial % 2 == 0)
                        ? random_state(rng, 7)
                        : graph_state_vector(ame::testing::random_graph(rng, 7));
    for (int draw = 0; draw < 12; ++draw) {
      uint32_t subset = 1 + (rng() % ((1u << 7) - 1));
      CHECK(is_maximally_mixed(s, subset, 1e-9) ==
            supported_expectations_vanish(s, subset, 1e-9));
    }
  }
}

TEST_CASE("maximally mixed marginals of known states") {
  StateVector ghz = ghz_state(3);
  CHECK(is_maximally_mixed(ghz, 0b010, 1e-9));
  CHECK(!is_maximally_mixed(ghz, 0b011, 1e-9));
  StateVector ring = graph_state_vector(named_graph("ring5"));
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      CHECK(is_maximally_mixed(ring, (1u << a) | (1u << b), 1e-9));
    }
  }
}

TEST_CASE("schmidt spectra of small states") {
  StateVector bell = ghz_state(2);
  auto s1 = schmidt_spectrum(bell, 0b01);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == doctest::Approx(0.5));
  CHECK(s1[1] == doctest::Approx(0.5));

  auto s2 = schmidt_spectrum(StateVector::basis_state(2, 0), 0b01);
  CHECK(s2[0] == doctest::Approx(1.0));
  CHECK(s2[1] == doctest::Approx(0.0));

  auto s3 = schmidt_spectrum(ghz_state(3), 0b011);
  REQUIRE(s3.size() == 4);
  CHECK(s3[0] == doctest::Approx(0.5));
  CHECK(s3[1] == doctest::Approx(0.5));
  CHECK(s3[2] == doctest::Approx(0.0));
  CHECK(s3[3] == doctest::Approx(0.0));

  CHECK_THROWS_AS(schmidt_spectrum(bell, 0b11), std::invalid_argument);
}

TEST_CASE("complementary subsets share a spectrum") {
  std::mt19937 rng(26);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + int(rng() % 5);
    StateVector s = random_state(rng, n);
    uint32_t full = (1u << n) - 1;
    uint32_t subset = 1 + (rng() % (full - 1));
    CHECK(spectra_match(schmidt_spectrum(s, subset),
                        schmidt_spectrum(s, full & ~subset), 1e-9));
  }
}

TEST_CASE("projector identity on marginals") {
  StateVector ring = graph_state_vector(named_graph("ring5"));
  CHECK(projector_check(ring, 0b00111, 1e-9));
  CHECK(projector_check(ring, 0b10101, 1e-9));
  CHECK(projector_check(ghz_state(3), 0b011, 1e-9));
  CHECK(!projector_check(StateVector::basis_state(2, 0), 0b01, 1e-9));
  CHECK_THROWS_AS(projector_check(ring, 0b00011, 1e-9), std::invalid_argument);
}

TEST_CASE("projector marginals have the two-point spectrum") {
  StateVector ring = graph_state_vector(named_graph("ring5"));
  double level = 0.25;  // 2^-(5-3)
  for (uint32_t subset = 1; subset < (1u << 5); ++subset) {
    if (std::popcount(subset) != 3) continue;
    REQUIRE(projector_check(ring, subset, 1e-9));
    for (double ev : schmidt_spectrum(ring, subset)) {
      bool two_point = std::abs(ev) < 1e-9 || std::abs(ev - level) < 1e-9;
      CHECK(two_point);
    }
  }
}

TEST_CASE("eigenvector identity on marginals") {
  StateVector ring = graph_state_vector(named_graph("ring5"));
  for (uint32_t subset = 1; subset < (1u << 5); ++subset) {
    if (std::popcount(subset) != 3) continue;
    CHECK(eigenvector_check(ring, subset, 1e-9));
  }
  // single-qubit state: the subset is everything, eigenvalue 2^0
  StateVector one{1, {Complex{0.6, 0}, Complex{0.8, 0}}};
  CHECK(eigenvector_check(one, 0b1, 1e-9));
  CHECK(eigenvector_check(ghz_state(3), 0b111, 1e-9));
  CHECK_THROWS_AS(eigenvector_check(ring, 0b00011, 1e-9), std::invalid_argument);
}

TEST_CASE("support sums on the five-qubit ring") {
  StateVector ring = graph_state_vector(named_graph("ring5"));
  for (uint32_t subset = 1; subset < (1u << 5); ++subset) {
    int k = std::popcount(subset);
    double sum = support_sum_check(ring, subset);
    if (k == 2) CHECK(sum == doctest::Approx(0.0).epsilon(1e-8));
    if (k == 3) CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
    if (k == 4) CHECK(sum == doctest::Approx(7.0).epsilon(1e-8));
  }
}

TEST_CASE("state json io") {
  StateVector ghz = ghz_state(3);
  std::stringstream buf;
  write_state_json(ghz, buf);
  StateVector back = read_state_json(buf);
  REQUIRE(back.n == 3);
  for (size_t i = 0; i < ghz.dim(); ++i) {
    CHECK(std::abs(back.amplitudes[i] - ghz.amplitudes[i]) < 1e-12);
  }

  // near-unit norm is renormalized
  std::stringstream close("{\"n\":1,\"amplitudes\":[[1.0000004,0],[0,0]]}");
  StateVector fixed = read_state_json(close);
  CHECK(fixed.norm() == doctest::Approx(1.0).epsilon(1e-12));

  std::stringstream far("{\"n\":1,\"amplitudes\":[[0.7,0],[0,0]]}");
  CHECK_THROWS_AS(read_state_json(far), std::invalid_argument);
  std::stringstream wrong_count("{\"n\":2,\"amplitudes\":[[1,0],[0,0]]}");
  CHECK_THROWS_AS(read_state_json(wrong_count), std::invalid_argument);
  std::stringstream garbage("{]");
  CHECK_THROWS_AS(read_state_json(garbage), std::invalid_argument);
  std::stringstream no_pairs("{\"n\":1,\"amplitudes\":[1,0]}");
  CHECK_THROWS_AS(read_state_json(no_pairs), std::invalid_argument);
}

}  // TEST_SUITE
