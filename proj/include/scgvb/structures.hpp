// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scgvb/common.hpp"

namespace scgvb {

/// Number of linearly independent N-electron spin eigenfunctions with total
/// spin S = twice_s / 2:  f_S^N = (2S+1) N! / ((N/2+S+1)! (N/2-S)!).
std::uint64_t spin_count(int n_electrons, int twice_total_spin);

/// One alpha/beta product function with a +-1 coefficient; the overall
/// (1/sqrt(2))^{N/2} scale of the pair expansion is not included.
struct SpinPrimitive {
  std::uint32_t beta_pattern = 0;  // bit e-1 set => electron e carries beta
  int coefficient = 1;             // +1 or -1
};

/// Perfect matching of electrons 1..N into singlet-coupled pairs.
struct PairingPattern {
  std::vector<std::pair<int, int>> pairs;  // i < j, 1-based, disjoint
};

/// Expands prod_pairs (alpha beta - beta alpha) into 2^{N/2} signed
/// primitives.
std::vector<SpinPrimitive> expand_pairing(const PairingPattern& pattern);

/// All non-crossing perfect pairings of 1..N (counting validation for
/// spin_count(N, 0)).
std::vector<PairingPattern> noncrossing_pairings(int n_electrons);

enum class FermionKind { create, annihilate_adjoint, annihilate_biorth };

struct FermionOpSpec {
  FermionKind kind;
  int index;  // 1-based spin orbital
};

/// A determinant over 2M spin orbitals with its operator strings.
/// `sign` relates the ascending-ordered creation string to the determinant
/// whose electron slots follow the orbital order of the spin primitive:
/// |det> = sign * f_string |vac>.
struct Determinant {
  std::uint64_t occ = 0;             // bit q-1 = spin orbital q occupied
  std::vector<int> occ_list;         // ascending, 1-based
  std::vector<FermionOpSpec> f_string;  // creations, ascending index
  std::vector<FermionOpSpec> w_string;  // adjoint annihilations, descending
  int sign = 1;
  int label = 0;  // 1-based position in the basis

  int n_electrons() const { return static_cast<int>(occ_list.size()); }
  std::string occ_string(int n_so) const;  // "10100101", qubit 1 first
};

struct StructureBasis {
  int n_orb = 0;  // M spatial orbitals; register size is 2M
  std::vector<Determinant> determinants;
  Eigen::MatrixXi structure_coeffs;  // K x N_d, entries in {-1, 0, +1}

  int n_so() const { return 2 * n_orb; }
};

/// Builds the deduplicated determinant basis for the frozen-orbital setting
/// (one electron per orbital, N = M).
StructureBasis build_determinant_basis(int n_orbitals,
                                       std::span<const PairingPattern> patterns);

/// B * det_matrix * B^T with B the signed structure matrix.
Eigen::MatrixXd contract_to_structures(const Eigen::MatrixXd& det_matrix,
                                       const StructureBasis& basis);

/// JSON dump of bitstrings, signs and the structure matrix.
std::string structure_basis_json(const StructureBasis& basis);

}  // namespace scgvb
