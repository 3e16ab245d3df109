#include "ame/dense_reference.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ame::dense {

namespace {

const Complex kI(0.0, 1.0);

// letter code: 0=I, 1=X, 2=Z, 3=Y
std::array<Complex, 4> letter_matrix(int code) {
  switch (code) {
    case 0: return {1, 0, 0, 1};
    case 1: return {0, 1, 1, 0};
    case 2: return {1, 0, 0, -1};
    default: return {0, -kI, kI, 0};
  }
}

int letter_code(const Pauli& p, int qubit) {
  int x = (p.x_mask >> qubit) & 1u;
  int z = (p.z_mask >> qubit) & 1u;
  return x + 2 * z;  // I=0, X=1, Z=2, Y=3
}

}  // namespace

Matrix pauli_matrix(const Pauli& p) {
  size_t dim = size_t{1} << p.n;
  Matrix m(dim * dim, Complex{0});
  Complex global = 1;
  for (int k = 0; k < (p.phase_exp & 3); ++k) global *= kI;
  for (size_t row = 0; row < dim; ++row) {
    for (size_t col = 0; col < dim; ++col) {
      Complex v = global;
      for (int q = 0; q < p.n && v != Complex{0}; ++q) {
        auto site = letter_matrix(letter_code(p, q));
        int rb = (row >> q) & 1u;
        int cb = (col >> q) & 1u;
        v *= site[2 * rb + cb];
      }
      m[row * dim + col] = v;
    }
  }
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b, int dim) {
  Matrix out(size_t(dim) * dim, Complex{0});
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      Complex aik = a[size_t(i) * dim + k];
      if (aik == Complex{0}) continue;
      for (int j = 0; j < dim; ++j) {
        out[size_t(i) * dim + j] += aik * b[size_t(k) * dim + j];
      }
    }
  }
  return out;
}

Matrix anticommutator(const Matrix& a, const Matrix& b, int dim) {
  Matrix ab = matmul(a, b, dim);
  Matrix ba = matmul(b, a, dim);
  for (size_t i = 0; i < ab.size(); ++i) ab[i] += ba[i];
  return ab;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

bool is_zero(const Matrix& a, double tol) {
  for (const auto& v : a) {
    if (std::abs(v) > tol) return false;
  }
  return true;
}

int weight_of_pauli_multiple(const Matrix& m, int n, double tol) {
  size_t dim = size_t{1} << n;
  int found_weight = -1;
  // Trace against every basis string; exactly one projection may survive.
  for (uint32_t x = 0; x < dim; ++x) {
    for (uint32_t z = 0; z < dim; ++z) {
      Pauli basis{n, x, z, 0};
      Matrix bm = pauli_matrix(basis);
      Complex tr = 0;
      for (size_t i = 0; i < dim; ++i) {
        for (size_t k = 0; k < dim; ++k) {
          tr += std::conj(bm[k * dim + i]) * m[k * dim + i];
        }
      }
      if (std::abs(tr) > tol * double(dim)) {
        if (found_weight >= 0) {
          throw std::runtime_error("matrix is not a single Pauli multiple");
        }
        found_weight = basis.weight();
      }
    }
  }
  if (found_weight < 0) {
    throw std::runtime_error("matrix is zero");
  }
  return found_weight;
}

Complex expectation(const std::vector<Complex>& amps, const Matrix& m) {
  size_t dim = amps.size();
  Complex acc = 0;
  for (size_t i = 0; i < dim; ++i) {
    Complex row = 0;
    for (size_t j = 0; j < dim; ++j) {
      row += m[i * dim + j] * amps[j];
    }
    acc += std::conj(amps[i]) * row;
  }
  return acc;
}

}  // namespace ame::dense
