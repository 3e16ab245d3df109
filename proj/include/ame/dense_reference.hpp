#pragma once

// Dense-matrix reference path for the symplectic Pauli algebra.  Everything
// here materializes explicit 2^n x 2^n matrices from the four 2x2 constants
// and works entrywise, so it shares no code with the mask-based routines it
// cross-checks.  Intended for selftest and the test suites; keep n small.

#include <complex>
#include <vector>

#include "ame/pauli.hpp"

namespace ame::dense {

using Complex = std::complex<double>;
using Matrix = std::vector<Complex>;  // row-major, square

// i^phase_exp times the Kronecker product of the single-qubit letters.
Matrix pauli_matrix(const Pauli& p);

Matrix matmul(const Matrix& a, const Matrix& b, int dim);
Matrix anticommutator(const Matrix& a, const Matrix& b, int dim);

bool approx_equal(const Matrix& a, const Matrix& b, double tol);
bool is_zero(const Matrix& a, double tol);

// For a matrix that is a scalar multiple of a single Pauli string, recover
// that string's weight by projecting onto the full operator basis.  Throws
// if zero or more than one basis coefficient is nonzero.
int weight_of_pauli_multiple(const Matrix& m, int n, double tol = 1e-9);

// <psi| M |psi> for a dense operator.
Complex expectation(const std::vector<Complex>& amps, const Matrix& m);

}  // namespace ame::dense
