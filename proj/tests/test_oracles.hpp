// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only independent oracles: dense matrix realizations of Pauli
// operators, quadrature baselines for the integral engine and random test
// systems.  Nothing here may call into the implementation paths it is used
// to check.

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "scgvb/integrals.hpp"
#include "scgvb/pauli.hpp"
#include "scgvb/rng.hpp"

namespace scgvb::testing {

/// Dense 2^n x 2^n matrix of a Pauli term (qubit 1 = fastest-varying bit).
Eigen::MatrixXcd dense_matrix(const PauliTerm& term);
Eigen::MatrixXcd dense_matrix(const PauliSum& sum);

/// Dense canonical Jordan-Wigner creation operator on mode p (1-based).
Eigen::MatrixXcd dense_jw_creation(int p, int n);

/// F0 by composite Gauss-Legendre quadrature of the defining integral.
double boys_f0_quadrature(double t);

/// Overlap of two normalized STO-3G H 1s functions at distance r_bohr,
/// by 3D midpoint-grid quadrature of the orbital product.
double h_overlap_grid(double r_bohr, double spacing = 0.15);

/// Random Pauli term / sparse sum on n qubits.
PauliTerm random_term(int n, RngStream& rng);
PauliSum random_sum(int n, std::size_t max_terms, RngStream& rng);

/// Random symmetric positive-definite matrix with unit diagonal.
Eigen::MatrixXd random_spd_unit_diag(int n, RngStream& rng);

/// Random M-orbital nonorthogonal test system with the symmetries of real
/// orbital integrals (S SPD unit-diagonal, h symmetric, g 8-fold chemist).
MolecularIntegrals random_test_system(int n_orbitals, RngStream& rng);

}  // namespace scgvb::testing
