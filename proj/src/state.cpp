#include "ame/state.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace ame {

namespace {

constexpr Complex kI(0.0, 1.0);

void check_state_size(int n) {
  if (n < 1 || n > StateVector::max_qubits) {
    throw std::invalid_argument("state qubit count must be in 1.." +
                                std::to_string(StateVector::max_qubits));
  }
}

void check_subset(const StateVector& state, uint32_t subset) {
  if (subset == 0) {
    throw std::invalid_argument("subset must be nonempty");
  }
  if (subset >> state.n) {
    throw std::invalid_argument("subset contains qubits outside the state");
  }
}

Complex quarter_phase(int e) {
  switch (e & 3) {
    case 0: return {1, 0};
    case 1: return kI;
    case 2: return {-1, 0};
    default: return -kI;
  }
}

// Scatter the low popcount(mask) bits of `value` into the set positions of
// `mask`, ascending.
std::vector<uint32_t> deposit_table(uint32_t mask) {
  int bits = std::popcount(mask);
  std::vector<uint32_t> table(size_t{1} << bits, 0);
  std::vector<int> positions;
  for (int j = 0; j < 32; ++j) {
    if ((mask >> j) & 1u) positions.push_back(j);
  }
  for (uint32_t v = 0; v < table.size(); ++v) {
    uint32_t out = 0;
    for (int b = 0; b < bits; ++b) {
      if ((v >> b) & 1u) out |= 1u << positions[b];
    }
    table[v] = out;
  }
  return table;
}

uint32_t extract_bits(uint32_t value, uint32_t mask) {
  uint32_t out = 0;
  int b = 0;
  while (mask) {
    uint32_t low = mask & -mask;
    if (value & low) out |= 1u << b;
    ++b;
    mask ^= low;
  }
  return out;
}

// Cyclic Jacobi sweeps on a real symmetric matrix; returns the diagonal.
std::vector<double> jacobi_eigenvalues(std::vector<double> m, int dim) {
  for (int sweep = 0; sweep < 128; ++sweep) {
    double off = 0;
    for (int i = 0; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        off += m[size_t(i) * dim + j] * m[size_t(i) * dim + j];
      }
    }
    if (off < 1e-28) break;
    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        double apq = m[size_t(p) * dim + q];
        if (std::abs(apq) < 1e-300) continue;
        double app = m[size_t(p) * dim + p];
        double aqq = m[size_t(q) * dim + q];
        double theta = (aqq - app) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1.0 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int k = 0; k < dim; ++k) {
          double akp = m[size_t(k) * dim + p];
          double akq = m[size_t(k) * dim + q];
          m[size_t(k) * dim + p] = c * akp - s * akq;
          m[size_t(k) * dim + q] = s * akp + c * akq;
        }
        for (int k = 0; k < dim; ++k) {
          double apk = m[size_t(p) * dim + k];
          double aqk = m[size_t(q) * dim + k];
          m[size_t(p) * dim + k] = c * apk - s * aqk;
          m[size_t(q) * dim + k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(dim);
  for (int i = 0; i < dim; ++i) ev[i] = m[size_t(i) * dim + i];
  return ev;
}

double sector_partial(const StateVector& state, uint64_t begin, uint64_t end,
                      std::vector<double>& acc) {
  // Flat string index s = x * 2^n + z; acc[w] collects squared expectations.
  uint32_t dim = uint32_t{1} << state.n;
  double sum = 0;
  for (uint64_t s = begin; s < end; ++s) {
    uint32_t x = uint32_t(s >> state.n);
    uint32_t z = uint32_t(s) & (dim - 1);
    double e = expectation(state, Pauli{state.n, x, z, 0});
    acc[std::popcount(x | z)] += e * e;
    sum += e * e;
  }
  return sum;
}

}  // namespace

StateVector StateVector::basis_state(int n, uint32_t index) {
  check_state_size(n);
  StateVector s{n, std::vector<Complex>(size_t{1} << n, Complex{0})};
  s.amplitudes.at(index) = 1.0;
  return s;
}

StateVector StateVector::uniform_plus(int n) {
  check_state_size(n);
  double a = std::pow(2.0, -0.5 * n);
  return StateVector{n, std::vector<Complex>(size_t{1} << n, Complex{a, 0})};
}

double StateVector::norm() const {
  double s = 0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  double nrm = norm();
  if (nrm == 0) {
    throw std::invalid_argument("cannot normalize the zero vector");
  }
  for (auto& a : amplitudes) a /= nrm;
}

double DensityMatrix::trace_real() const {
  double t = 0;
  for (size_t i = 0; i < dim(); ++i) t += at(i, i).real();
  return t;
}

double SectorLengths::total() const {
  double t = 0;
  for (double v : values) t += v;
  return t;
}

double expectation(const StateVector& state, const Pauli& p) {
  if (p.n != state.n) {
    throw std::invalid_argument("operator and state qubit counts differ");
  }
  if (!p.is_hermitian()) {
    throw std::invalid_argument("expectation requires a Hermitian string");
  }
  // P|i> = global * (-1)^popcount(z&i) |i^x> with global = i^(phase+#Y).
  Complex global =
      quarter_phase(p.phase_exp + std::popcount(p.x_mask & p.z_mask));
  Complex acc = 0;
  uint32_t x = p.x_mask;
  uint32_t z = p.z_mask;
  for (uint32_t i = 0; i < state.dim(); ++i) {
    double sign = (std::popcount(z & i) & 1) ? -1.0 : 1.0;
    acc += std::conj(state.amplitudes[i ^ x]) * sign * state.amplitudes[i];
  }
  return (global * acc).real();
}

SectorLengths sector_lengths_serial(const StateVector& state) {
  std::vector<double> acc(state.n + 1, 0.0);
  uint64_t total = uint64_t{1} << (2 * state.n);
  sector_partial(state, 0, total, acc);
  return SectorLengths{std::move(acc)};
}

SectorLengths sector_lengths(const StateVector& state) {
  uint64_t total = uint64_t{1} << (2 * state.n);
  // Fixed chunk grid, independent of the thread count, so each A_j is a sum
  // of per-chunk sums taken in a fixed order.
  const uint64_t chunk = 1u << 12;
  const int nchunks = int((total + chunk - 1) / chunk);
  std::vector<std::vector<double>> partial(nchunks);

#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < nchunks; ++c) {
    std::vector<double> acc(state.n + 1, 0.0);
    uint64_t begin = uint64_t(c) * chunk;
    uint64_t end = std::min(total, begin + chunk);
    sector_partial(state, begin, end, acc);
    partial[c] = std::move(acc);
  }

  std::vector<double> acc(state.n + 1, 0.0);
  for (int c = 0; c < nchunks; ++c) {
    for (int w = 0; w <= state.n; ++w) acc[w] += partial[c][w];
  }
  return SectorLengths{std::move(acc)};
}

DensityMatrix reduced_density(const StateVector& state, uint32_t subset) {
  check_subset(state, subset);
  uint32_t full = uint32_t((uint64_t{1} << state.n) - 1);
  uint32_t comp = full & ~subset;
  int k = std::popcount(subset);
  auto sub_pos = deposit_table(subset);
  auto env_pos = deposit_table(comp);
  size_t sdim = size_t{1} << k;

  DensityMatrix rho{k, std::vector<Complex>(sdim * sdim, Complex{0})};
  for (uint32_t env : env_pos) {
    for (size_t a = 0; a < sdim; ++a) {
      Complex va = state.amplitudes[env | sub_pos[a]];
      if (va == Complex{0}) continue;
      for (size_t b = 0; b < sdim; ++b) {
        rho.entries[a * sdim + b] +=
            va * std::conj(state.amplitudes[env | sub_pos[b]]);
      }
    }
  }
  return rho;
}

bool is_maximally_mixed(const StateVector& state, uint32_t subset, double tol) {
  DensityMatrix rho = reduced_density(state, subset);
  size_t sdim = rho.dim();
  double target = 1.0 / double(sdim);
  for (size_t a = 0; a < sdim; ++a) {
    for (size_t b = 0; b < sdim; ++b) {
      Complex want = (a == b) ? Complex{target, 0} : Complex{0, 0};
      if (std::abs(rho.at(a, b) - want) > tol) return false;
    }
  }
  return true;
}

bool supported_expectations_vanish(const StateVector& state, uint32_t subset,
                                   double tol) {
  check_subset(state, subset);
  auto positions = subset_indices(subset);
  int k = int(positions.size());
  uint64_t strings = uint64_t{1} << (2 * k);
  for (uint64_t code = 1; code < strings; ++code) {
    Pauli p = Pauli::identity(state.n);
    for (int j = 0; j < k; ++j) {
      uint32_t letter = (code >> (2 * j)) & 3u;
      if (letter & 1u) p.x_mask |= 1u << positions[j];
      if (letter & 2u) p.z_mask |= 1u << positions[j];
    }
    if (std::abs(expectation(state, p)) > tol) return false;
  }
  return true;
}

std::vector<double> schmidt_spectrum(const StateVector& state, uint32_t subset) {
  check_subset(state, subset);
  if (std::popcount(subset) == state.n) {
    throw std::invalid_argument("schmidt_spectrum needs a proper subset");
  }
  DensityMatrix rho = reduced_density(state, subset);
  int m = int(rho.dim());
  // Real symmetric embedding [[A, -B], [B, A]] of the Hermitian A + iB;
  // every eigenvalue shows up twice.
  int dim = 2 * m;
  std::vector<double> embed(size_t(dim) * dim, 0.0);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      double re = rho.at(r, c).real();
      double im = rho.at(r, c).imag();
      embed[size_t(r) * dim + c] = re;
      embed[size_t(r + m) * dim + (c + m)] = re;
      embed[size_t(r) * dim + (c + m)] = -im;
      embed[size_t(r + m) * dim + c] = im;
    }
  }
  std::vector<double> ev = jacobi_eigenvalues(std::move(embed), dim);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  std::vector<double> out(m);
  for (int i = 0; i < m; ++i) out[i] = ev[2 * i];
  return out;
}

bool projector_check(const StateVector& state, uint32_t subset, double tol) {
  check_subset(state, subset);
  int k = std::popcount(subset);
  if (2 * k < state.n) {
    throw std::invalid_argument("projector_check needs the larger side");
  }
  DensityMatrix rho = reduced_density(state, subset);
  size_t sdim = rho.dim();
  double scale = std::pow(2.0, -(state.n - k));
  for (size_t a = 0; a < sdim; ++a) {
    for (size_t b = 0; b < sdim; ++b) {
      Complex sq = 0;
      for (size_t c = 0; c < sdim; ++c) sq += rho.at(a, c) * rho.at(c, b);
      if (std::abs(sq - scale * rho.at(a, b)) > tol) return false;
    }
  }
  return true;
}

bool eigenvector_check(const StateVector& state, uint32_t subset, double tol) {
  check_subset(state, subset);
  int k = std::popcount(subset);
  if (2 * k < state.n) {
    throw std::invalid_argument("eigenvector_check needs the larger side");
  }
  DensityMatrix rho = reduced_density(state, subset);
  size_t sdim = rho.dim();
  auto sub_pos = deposit_table(subset);
  double scale = std::pow(2.0, -(state.n - k));

  double err2 = 0;
  for (uint32_t i = 0; i < state.dim(); ++i) {
    uint32_t a = extract_bits(i, subset);
    uint32_t rest = i & ~subset;
    Complex v = 0;
    for (size_t b = 0; b < sdim; ++b) {
      v += rho.at(a, b) * state.amplitudes[rest | sub_pos[b]];
    }
    err2 += std::norm(v - scale * state.amplitudes[i]);
  }
  return std::sqrt(err2) <= tol;
}

double support_sum_check(const StateVector& state, uint32_t subset) {
  check_subset(state, subset);
  auto positions = subset_indices(subset);
  int k = int(positions.size());
  uint64_t strings = uint64_t{1} << (2 * k);
  double sum = 0;
  for (uint64_t code = 1; code < strings; ++code) {
    Pauli p = Pauli::identity(state.n);
    for (int j = 0; j < k; ++j) {
      uint32_t letter = (code >> (2 * j)) & 3u;
      if (letter & 1u) p.x_mask |= 1u << positions[j];
      if (letter & 2u) p.z_mask |= 1u << positions[j];
    }
    double e = expectation(state, p);
    sum += e * e;
  }
  return sum;
}

StateVector read_state_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invalid state JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("amplitudes")) {
    throw std::invalid_argument("state JSON needs fields \"n\" and \"amplitudes\"");
  }
  int n = doc["n"].get<int>();
  check_state_size(n);
  const auto& amps = doc["amplitudes"];
  if (!amps.is_array() || amps.size() != (size_t{1} << n)) {
    throw std::invalid_argument("amplitude list must have 2^n entries");
  }
  StateVector state{n, {}};
  state.amplitudes.reserve(amps.size());
  for (const auto& pair : amps) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("each amplitude must be a [re, im] pair");
    }
    state.amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  double nrm = state.norm();
  if (std::abs(nrm - 1.0) > 1e-6) {
    throw std::invalid_argument("state norm deviates from 1 by more than 1e-6");
  }
  state.normalize();
  return state;
}

StateVector read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open state file: " + path);
  }
  return read_state_json(in);
}

void write_state_json(const StateVector& state, std::ostream& out) {
  nlohmann::json doc;
  doc["n"] = state.n;
  auto& amps = doc["amplitudes"] = nlohmann::json::array();
  for (const auto& a : state.amplitudes) {
    amps.push_back({a.real(), a.imag()});
  }
  out << doc.dump(2) << "\n";
}

void write_state_file(const StateVector& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write state file: " + path);
  }
  write_state_json(state, out);
}

uint32_t subset_from_indices(const std::vector<int>& indices) {
  uint32_t mask = 0;
  for (int i : indices) {
    if (i < 0 || i >= 32) throw std::invalid_argument("qubit index out of range");
    mask |= 1u << i;
  }
  return mask;
}

std::vector<int> subset_indices(uint32_t subset) {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j) {
    if ((subset >> j) & 1u) out.push_back(j);
  }
  return out;
}

}  // namespace ame
