#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ame/pauli.hpp"

namespace ame {

using Complex = std::complex<double>;

// Dense pure state of n qubits.  Basis index i encodes the computational
// ket with bit j of i giving the value of qubit j.
struct StateVector {
  int n = 1;
  std::vector<Complex> amplitudes;  // size 2^n

  static constexpr int max_qubits = 12;

  static StateVector basis_state(int n, uint32_t index);
  static StateVector uniform_plus(int n);

  size_t dim() const { return amplitudes.size(); }
  double norm() const;
  void normalize();
};

struct DensityMatrix {
  int k = 0;
  std::vector<Complex> entries;  // row-major, 2^k x 2^k

  size_t dim() const { return size_t{1} << k; }
  Complex at(size_t r, size_t c) const { return entries[r * dim() + c]; }
  double trace_real() const;
};

// A_0..A_n: squared Pauli expectations summed by string weight.
struct SectorLengths {
  std::vector<double> values;

  double total() const;
};

// Bloch coefficient <psi| P |psi> for a Hermitian string.
double expectation(const StateVector& state, const Pauli& p);

// Full weight profile over all 4^n strings.  sector_lengths runs the sum
// in fixed chunks that parallelize over threads without changing the
// summation order; sector_lengths_serial is the plain reference loop.
SectorLengths sector_lengths(const StateVector& state);
SectorLengths sector_lengths_serial(const StateVector& state);

// Partial trace over the complement of `subset` (bit j set = keep qubit j).
// subset == full set returns |psi><psi|.
DensityMatrix reduced_density(const StateVector& state, uint32_t subset);

// Marginal equals identity / 2^k entrywise within tol.
bool is_maximally_mixed(const StateVector& state, uint32_t subset, double tol);

// Alternative route to the same predicate: every nontrivial string supported
// inside `subset` has vanishing expectation.
bool supported_expectations_vanish(const StateVector& state, uint32_t subset,
                                   double tol);

// Eigenvalues of the reduced state, descending; they sum to one.
std::vector<double> schmidt_spectrum(const StateVector& state, uint32_t subset);

// max-norm test of rho^2 == 2^-(n-k) rho on the subset marginal (k >= n-k).
bool projector_check(const StateVector& state, uint32_t subset, double tol);

// ||(rho_subset (x) 1)|psi> - 2^-(n-k)|psi>|| <= tol.
bool eigenvector_check(const StateVector& state, uint32_t subset, double tol);

// Sum of squared expectations of nontrivial strings supported in `subset`.
double support_sum_check(const StateVector& state, uint32_t subset);

// State file form: { "n": int, "amplitudes": [[re, im], ...] }.  The reader
// renormalizes inputs within 1e-6 of unit norm and rejects anything else.
StateVector read_state_json(std::istream& in);
StateVector read_state_file(const std::string& path);
void write_state_json(const StateVector& state, std::ostream& out);
void write_state_file(const StateVector& state, const std::string& path);

uint32_t subset_from_indices(const std::vector<int>& indices);
std::vector<int> subset_indices(uint32_t subset);

}  // namespace ame
