#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ame {

// An n-qubit Pauli string in binary symplectic form.  Bit j of x_mask /
// z_mask carries the X / Z component on qubit j; both bits set means Y.
// The full operator is i^phase_exp times the tensor product of the
// single-qubit letters, with phase_exp taken mod 4.
struct Pauli {
  int n = 1;
  uint32_t x_mask = 0;
  uint32_t z_mask = 0;
  uint8_t phase_exp = 0;

  static constexpr int max_qubits = 16;

  static Pauli identity(int n);
  static Pauli single(int n, int qubit, char letter);

  // Text form: optional sign token ("+", "-", "+i", "-i") followed by one
  // of I,X,Y,Z per qubit; character 0 acts on qubit 0.
  static Pauli parse(std::string_view text);
  std::string str() const;

  uint32_t support() const { return x_mask | z_mask; }
  int weight() const { return std::popcount(support()); }
  bool is_identity() const { return support() == 0; }

  // Hermitian strings carry a real global factor, phase_exp in {0, 2}.
  bool is_hermitian() const { return (phase_exp & 1u) == 0; }
  int sign() const { return phase_exp == 0 ? +1 : -1; }

  friend bool operator==(const Pauli&, const Pauli&) = default;
};

// Exact operator product PQ; masks XOR, phase tracked mod 4.
Pauli product(const Pauli& p, const Pauli& q);
inline Pauli operator*(const Pauli& p, const Pauli& q) { return product(p, q); }

// Symplectic commutation test: PQ == QP iff x_P.z_Q + z_P.x_Q is even.
bool commutes(const Pauli& p, const Pauli& q);

// Weight of the anticommutator {P,Q} of two Hermitian strings, or nullopt
// when it vanishes.  When non-vanishing, {P,Q} = 2 PQ and the weight has the
// parity of weight(P) + weight(Q).
std::optional<int> anticommutator_weight(const Pauli& p, const Pauli& q);

}  // namespace ame
