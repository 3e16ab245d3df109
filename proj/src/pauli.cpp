#include "ame/pauli.hpp"

#include <stdexcept>

namespace ame {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > Pauli::max_qubits) {
    throw std::invalid_argument("qubit count must be in 1.." +
                                std::to_string(Pauli::max_qubits));
  }
}

void check_same_size(const Pauli& p, const Pauli& q) {
  if (p.n != q.n) {
    throw std::invalid_argument("Pauli operands act on different qubit counts");
  }
}

}  // namespace

Pauli Pauli::identity(int n) {
  check_qubit_count(n);
  return Pauli{n, 0, 0, 0};
}

Pauli Pauli::single(int n, int qubit, char letter) {
  check_qubit_count(n);
  if (qubit < 0 || qubit >= n) {
    throw std::invalid_argument("qubit index out of range");
  }
  Pauli p = identity(n);
  uint32_t bit = 1u << qubit;
  switch (letter) {
    case 'X': p.x_mask = bit; break;
    case 'Z': p.z_mask = bit; break;
    case 'Y': p.x_mask = bit; p.z_mask = bit; break;
    case 'I': break;
    default: throw std::invalid_argument("Pauli letter must be one of I,X,Y,Z");
  }
  return p;
}

Pauli Pauli::parse(std::string_view text) {
  uint8_t phase = 0;
  if (text.starts_with("+i")) {
    phase = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("-i")) {
    phase = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    phase = 2;
    text.remove_prefix(1);
  }
  check_qubit_count(static_cast<int>(text.size()));
  Pauli p = identity(static_cast<int>(text.size()));
  p.phase_exp = phase;
  for (size_t j = 0; j < text.size(); ++j) {
    uint32_t bit = 1u << j;
    switch (text[j]) {
      case 'I': break;
      case 'X': p.x_mask |= bit; break;
      case 'Z': p.z_mask |= bit; break;
      case 'Y': p.x_mask |= bit; p.z_mask |= bit; break;
      default: throw std::invalid_argument("Pauli letter must be one of I,X,Y,Z");
    }
  }
  return p;
}

std::string Pauli::str() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string out = prefix[phase_exp & 3u];
  for (int j = 0; j < n; ++j) {
    bool x = (x_mask >> j) & 1u;
    bool z = (z_mask >> j) & 1u;
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

Pauli product(const Pauli& p, const Pauli& q) {
  check_same_size(p, q);
  // Per-site phase of sigma_a * sigma_b: +i on the cyclic pairs
  // (X,Y),(Y,Z),(Z,X), -i on the reversed ones, 1 otherwise.
  uint32_t plus_i = (p.x_mask & ~p.z_mask & q.x_mask & q.z_mask) |
                    (p.x_mask & p.z_mask & ~q.x_mask & q.z_mask) |
                    (~p.x_mask & p.z_mask & q.x_mask & ~q.z_mask);
  uint32_t minus_i = (p.x_mask & ~p.z_mask & ~q.x_mask & q.z_mask) |
                     (~p.x_mask & p.z_mask & q.x_mask & q.z_mask) |
                     (p.x_mask & p.z_mask & q.x_mask & ~q.z_mask);
  int phase = p.phase_exp + q.phase_exp + std::popcount(plus_i) +
              3 * std::popcount(minus_i);
  return Pauli{p.n, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask,
               static_cast<uint8_t>(phase & 3)};
}

bool commutes(const Pauli& p, const Pauli& q) {
  check_same_size(p, q);
  int form = std::popcount(p.x_mask & q.z_mask) +
             std::popcount(p.z_mask & q.x_mask);
  return (form & 1) == 0;
}

std::optional<int> anticommutator_weight(const Pauli& p, const Pauli& q) {
  check_same_size(p, q);
  if (!p.is_hermitian() || !q.is_hermitian()) {
    throw std::invalid_argument("anticommutator_weight requires Hermitian inputs");
  }
  if (!commutes(p, q)) {
    return std::nullopt;  // {P,Q} = 0
  }
  return std::popcount((p.x_mask ^ q.x_mask) | (p.z_mask ^ q.z_mask));
}

}  // namespace ame
