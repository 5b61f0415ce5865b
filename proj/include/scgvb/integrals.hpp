// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "scgvb/common.hpp"

namespace scgvb {

inline constexpr double kBohrPerAngstrom = 1.0 / 0.52917721092;

struct Atom {
  std::string element;
  Eigen::Vector3d position;  // in the Geometry's units
};

struct Geometry {
  std::vector<Atom> atoms;
  int charge = 0;
  bool in_bohr = false;  // default unit is Angstrom

  std::size_t size() const { return atoms.size(); }
  Eigen::Vector3d position_bohr(std::size_t i) const;
};

/// Parses "H x y z" lines; blank lines, comment lines (#) and the optional
/// XYZ count/title header are skipped.
Geometry parse_xyz(const std::string& text, bool in_bohr = false);
Geometry load_xyz(const std::filesystem::path& path, bool in_bohr = false);

/// AO-basis integrals over normalized contracted s-Gaussians.
/// g is stored dense in chemist convention (pq|rs), 0-based indices.
struct MolecularIntegrals {
  int n_orb = 0;
  Eigen::MatrixXd S;
  Eigen::MatrixXd h;       // kinetic + nuclear attraction, Hartree
  std::vector<double> g;   // chemist (pq|rs), size n_orb^4
  double e_nuc = 0.0;

  double& g_at(int p, int q, int r, int s);
  double g_at(int p, int q, int r, int s) const;
};

/// F0(t) = int_0^1 exp(-t x^2) dx.
double boys_f0(double t);

/// The six STO-3G hydrogen 1s constants used by the engine (exponents,
/// contraction coefficients); cross-checked against data/sto-3g.json.
std::pair<std::array<double, 3>, std::array<double, 3>>
sto3g_hydrogen_parameters();

/// Builds S, h, g, e_nuc for an H-only geometry in the STO-3G basis.
MolecularIntegrals build_integrals(const Geometry& geometry,
                                   const std::string& basis_name);

/// Text and JSON integral files; see save_integrals for the layout.
MolecularIntegrals load_integrals(const std::filesystem::path& path);
void save_integrals(const MolecularIntegrals& mi,
                    const std::filesystem::path& path);
void save_integrals_json(const MolecularIntegrals& mi,
                         const std::filesystem::path& path);

/// Spin-orbital blocks: alpha spin occupies orbitals 1..M, beta M+1..2M.
/// g stays in chemist convention, now with spin-conservation zeros.
struct SpinOrbitalIntegrals {
  int n_so = 0;
  Eigen::MatrixXd S;
  Eigen::MatrixXd h;
  std::vector<double> g;  // chemist (pq|rs) over spin orbitals, 0-based

  double g_at(int p, int q, int r, int s) const;
  /// Antisymmetrized physicist-ordered element <pq||rs>.
  double g_phys_antisym(int p, int q, int r, int s) const;
};

SpinOrbitalIntegrals to_spin_orbitals(const MolecularIntegrals& mi);

}  // namespace scgvb
