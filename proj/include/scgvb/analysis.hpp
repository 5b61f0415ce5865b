// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "scgvb/common.hpp"

namespace scgvb {

inline constexpr double kLindepTol = 1e-8;

/// Cyclic Jacobi diagonalization of a symmetric matrix; eigenvalues ascending,
/// columns of V are the matching orthonormal eigenvectors.  Sweeps until the
/// off-diagonal Frobenius norm falls below 1e-14 * ||A||_F.
void jacobi_eigh(const Eigen::MatrixXd& A, Eigen::VectorXd& eigenvalues,
                 Eigen::MatrixXd& V);

/// Symmetric Lowdin transformation X = S^{-1/2}; eigenvalues of S below
/// lindep_tol are rejected as near-linear dependencies.
Eigen::MatrixXd inverse_sqrt(const Eigen::MatrixXd& S,
                             double lindep_tol = kLindepTol);

struct SpectralSolution {
  Eigen::VectorXd eigenvalues;  // ascending, Hartree (electronic)
  Eigen::MatrixXd C;            // coefficients in the nonorthogonal basis
  Eigen::MatrixXd C_prime;      // orthogonal-basis coefficients
  Eigen::MatrixXd X;            // S^{-1/2}
  double smallest_overlap_eigenvalue = 0.0;
};

/// Solves H C = S C diag(E) via Lowdin orthogonalization.  Columns are
/// normalized C^T S C = 1 with the largest-magnitude entry made positive.
SpectralSolution solve_generalized(const Eigen::MatrixXd& H,
                                   const Eigen::MatrixXd& S,
                                   double lindep_tol = kLindepTol);

struct WeightReport {
  Eigen::VectorXd cc;       // Chirgwin-Coulson W_i = sum_j C_i C_j S_ij
  Eigen::VectorXd lowdin;   // (S^{1/2} C)_i^2
  Eigen::VectorXd inverse;  // C_i^2 / (S^-1)_ii, normalized
  double cc_sum = 0.0;
  bool cc_out_of_range = false;  // some W_i outside [0, 1]
  bool renormalized = false;     // input C was not S-normalized
};

/// CC weights for one state column; renormalizes (and flags) if C^T S C != 1.
WeightReport chirgwin_coulson(const Eigen::VectorXd& C,
                              const Eigen::MatrixXd& S);

/// Fills the Lowdin and inverse weights of an existing report.
void alternative_weights(const Eigen::VectorXd& C, const Eigen::MatrixXd& S,
                         WeightReport& report);

}  // namespace scgvb
