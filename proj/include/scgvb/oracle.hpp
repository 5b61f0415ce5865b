// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "scgvb/integrals.hpp"
#include "scgvb/structures.hpp"

namespace scgvb {

/// Overlaps between the occupied spin orbitals of bra (rows) and ket
/// (columns).
Eigen::MatrixXd occupied_overlap(const Determinant& bra, const Determinant& ket,
                                 const Eigen::MatrixXd& S_so);

/// sign(bra) * sign(ket) * det(O), the nonorthogonal determinant overlap.
double lowdin_overlap(const Determinant& bra, const Determinant& ket,
                      const Eigen::MatrixXd& S_so);

/// Electronic matrix element via first/second cofactors of the occupied
/// overlap matrix (no nuclear repulsion):
///   one-body:  sum_kl h(b_k, k_l) C1(k|l)
///   two-body:  (1/2) sum over ordered pairs of <b_k b_k'||k_l k_l'> C2,
/// the antisymmetrized-tensor two-electron convention used repo-wide.
/// Cofactors are evaluated as exact minors, so singular O is handled.
double lowdin_matrix_element(const Determinant& bra, const Determinant& ket,
                             const SpinOrbitalIntegrals& so);

enum class FockOperator { overlap, hamiltonian };

/// Dense Fock-space brute force on 2^{n_so} amplitudes, n_so <= 14.
/// Determinant states are built by applying S^{1/2}-mixed creation strings
/// to the vacuum; the Hamiltonian acts through Lowdin-orthonormalized
/// integrals.  Fully independent of the Pauli/NOJW path.
class FockSpace {
 public:
  explicit FockSpace(const SpinOrbitalIntegrals& so);

  int n_so() const { return n_; }
  const Eigen::MatrixXd& s_half() const { return s_half_; }
  const Eigen::MatrixXd& s_inv_half() const { return s_inv_half_; }

  /// sign * (ascending creation string) applied to the vacuum.
  Eigen::VectorXd state(const Determinant& d) const;

  Eigen::VectorXd apply_hamiltonian(const Eigen::VectorXd& v) const;

  double matrix_element(const Determinant& bra, const Determinant& ket,
                        FockOperator op) const;

 private:
  int n_;
  Eigen::MatrixXd s_half_, s_inv_half_;
  Eigen::MatrixXd h_orth_;          // one-body in the orthonormal basis
  std::vector<double> ga_orth_;     // antisymmetrized <pq||rs>, orthonormal
  double ga_at(int p, int q, int r, int s) const;
};

double fock_matrix_element(const Determinant& bra, const Determinant& ket,
                           const SpinOrbitalIntegrals& so, FockOperator op);

}  // namespace scgvb
