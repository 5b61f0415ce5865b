// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <span>

#include "scgvb/integrals.hpp"
#include "scgvb/pauli.hpp"
#include "scgvb/structures.hpp"

namespace scgvb {

/// Standard Jordan-Wigner creation image:
/// Z_1 ... Z_{p-1} (X_p - i Y_p)/2.  Nonorthogonal creation operators keep
/// this form unchanged.
PauliSum map_creation(int p, int n);

/// Canonical Jordan-Wigner annihilation image (adjoint of map_creation);
/// also the image of the biorthogonal annihilation operators.
PauliSum map_annihilation_jw(int p, int n);

/// Nonorthogonal annihilation image: the overlap-weighted sum
/// sum_q S_pq Z_1 ... Z_{q-1} (X_q + i Y_q)/2.
PauliSum map_annihilation_no(int p, const Eigen::MatrixXd& S_so,
                             double prune_tol = kDefaultPruneTol);

/// Left-to-right product of the individual operator images.
PauliSum map_operator_string(std::span<const FermionOpSpec> ops,
                             const Eigen::MatrixXd& S_so,
                             double prune_tol = kDefaultPruneTol);

enum class HamiltonianScheme { raw_nonorthogonal, biorthogonal };

/// The scheme that reproduces the classical references; pinned by the
/// encoding-arbitration test against the Fock-space oracle.
inline constexpr HamiltonianScheme kDefaultScheme =
    HamiltonianScheme::biorthogonal;

struct HamiltonianEncoding {
  HamiltonianScheme scheme = kDefaultScheme;
  PauliSum qubit_op;
  PauliSum one_body;
  PauliSum two_body;
  std::size_t term_count = 0;          // distinct strings after combination
  std::size_t raw_product_count = 0;   // Pauli products before combination
  double coefficient_imag_max = 0.0;

  HamiltonianEncoding() : qubit_op(1), one_body(1), two_body(1) {}
};

/// Maps the electronic Hamiltonian to a qubit operator.  The two-electron
/// part is (1/2) sum g~_pqrs a+_p a+_q b_s b_r over the antisymmetrized
/// spin-orbital tensor <pq||rs> (the toolkit-wide two-electron convention).
///
/// raw_nonorthogonal keeps the plain integrals and uses the overlap-weighted
/// annihilation images; biorthogonal contracts the bra indices with S^{-1}
/// and uses canonical JW annihilation strings.
HamiltonianEncoding map_hamiltonian(const SpinOrbitalIntegrals& so,
                                    HamiltonianScheme scheme,
                                    double prune_tol = kDefaultPruneTol);

}  // namespace scgvb
