// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scgvb/common.hpp"

namespace scgvb {

// Symplectic mask pair identifying a phase-free n-qubit Pauli string.
// Bit q-1 of each mask belongs to qubit q; the letter on a qubit is
//   (x,z) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y.
struct PauliKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend bool operator==(const PauliKey&, const PauliKey&) = default;
  friend auto operator<=>(const PauliKey&, const PauliKey&) = default;

  std::uint64_t support() const { return x | z; }
};

struct PauliKeyHash {
  std::size_t operator()(const PauliKey& k) const {
    std::uint64_t h = k.x + 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h ^= k.z + 0x94d049bb133111ebULL;
    h = (h ^ (h >> 27)) * 0xbf58476d1ce4e5b9ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

// Power of i (mod 4) accumulated when multiplying canonical strings a*b.
int pauli_mul_phase(const PauliKey& a, const PauliKey& b);

// Whether two strings agree qubit-wise: on every qubit the letters are
// equal or at least one of them is the identity.
bool qwc_compatible(const PauliKey& a, const PauliKey& b);

/// A single n-qubit Pauli string with an exact quartic phase:
/// term = i^phase * canonical(x_mask, z_mask).
class PauliTerm {
 public:
  explicit PauliTerm(int n_qubits);
  PauliTerm(int n_qubits, PauliKey key, int phase_power = 0);

  // Parses "XIZY..." with qubit 1 first.
  static PauliTerm from_string(int n_qubits, std::string_view letters,
                               int phase_power = 0);

  int n_qubits() const { return n_; }
  const PauliKey& key() const { return key_; }
  std::uint64_t x_mask() const { return key_.x; }
  std::uint64_t z_mask() const { return key_.z; }
  int phase_power() const { return phase_; }
  cxd phase() const;

  char letter(int qubit) const;            // 1-based
  void set_letter(int qubit, char l);      // 'I','X','Y','Z'

  /// Exact product, including the accumulated +/-1, +/-i phase.
  PauliTerm operator*(const PauliTerm& rhs) const;

  bool qwc_compatible(const PauliTerm& rhs) const;

  /// <0^n| term |0^n>: the phase if every letter is I or Z, else 0.
  cxd vacuum_amplitude() const;

  std::string letters() const;
  std::string to_string() const;  // phase prefix + letters

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  int n_;
  PauliKey key_;
  int phase_;  // power of i, 0..3
};

/// Sparse complex-weighted combination of Pauli strings on a fixed register.
/// Quartic phases are folded into the coefficients, so the map key is the
/// canonical mask pair.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits);

  static PauliSum identity(int n_qubits, cxd coeff = 1.0);
  static PauliSum from_term(const PauliTerm& t, cxd coeff = 1.0);

  int n_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PauliKey& key, cxd coeff);
  void add(const PauliTerm& t, cxd coeff = 1.0);

  cxd coefficient(const PauliKey& key) const;

  PauliSum& operator+=(const PauliSum& rhs);
  PauliSum& operator*=(cxd s);

  void prune(double tol);

  /// Terms in ascending (x_mask, z_mask) order; the deterministic iteration
  /// order used by every reduction in the toolkit.
  std::vector<std::pair<PauliKey, cxd>> sorted_terms() const;

  /// Sum of coefficients of {I,Z}-only strings = <0^n| sum |0^n>.
  cxd vacuum_expectation() const;

  /// max |Im(coeff)| over stored terms.  Canonical strings are Hermitian,
  /// so this is the operator's deviation from Hermiticity.
  double max_imag_coefficient() const;

  /// One line per term: "+(re,im) LETTERS", qubit 1 first, sorted keys.
  std::string to_text() const;

  const std::unordered_map<PauliKey, cxd, PauliKeyHash>& raw() const {
    return terms_;
  }

 private:
  int n_;
  std::unordered_map<PauliKey, cxd, PauliKeyHash> terms_;
};

inline constexpr double kDefaultPruneTol = 1e-12;

/// Exact product of a single term pair.
PauliTerm pauli_mul(const PauliTerm& lhs, const PauliTerm& rhs);

/// Distributes pauli_mul over all term pairs, combines like masks and drops
/// coefficients below prune_tol.
PauliSum sum_mul(const PauliSum& lhs, const PauliSum& rhs,
                 double prune_tol = kDefaultPruneTol);

PauliSum operator+(PauliSum lhs, const PauliSum& rhs);
PauliSum operator*(cxd s, PauliSum p);

}  // namespace scgvb
