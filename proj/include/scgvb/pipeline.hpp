// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scgvb/analysis.hpp"
#include "scgvb/estimators.hpp"
#include "scgvb/integrals.hpp"
#include "scgvb/nojw.hpp"
#include "scgvb/oracle.hpp"
#include "scgvb/structures.hpp"

namespace scgvb {

/// Rectangular H4 cluster: atoms 1..4 at (0,0), (d1,0), (d1,d2), (0,d2),
/// distances in Angstrom.  d1 is the stretched direction of the
/// two-fragment dissociation scan; the bonded pairs (1,4) and (2,3) sit at
/// distance d2.
Geometry make_h4_rectangle(double d1, double d2);

/// The two singlet perfect-pairing patterns of four electrons.
std::vector<PairingPattern> h4_pairing_patterns();

enum class ReferenceKind { lowdin, fock, file };

struct RunConfig {
  std::vector<std::pair<double, double>> rectangles;  // (d1, d2), Angstrom
  std::optional<std::filesystem::path> geometry_file;
  bool geometry_in_bohr = false;
  std::string basis = "sto-3g";
  EstimatorConfig::Mode mode = EstimatorConfig::Mode::exact;
  std::uint64_t shots = 524288;
  std::uint64_t seed = 0;
  HamiltonianScheme scheme = kDefaultScheme;
  ReferenceKind reference = ReferenceKind::lowdin;
  std::filesystem::path reference_prefix;  // for ReferenceKind::file
  std::filesystem::path out_dir = "out";
  bool tables_as_json = false;  // CSV by default
  double prune_tol = kDefaultPruneTol;
  int threads = 1;
};

struct DeviationStats {
  double mean = 0.0;
  double rms = 0.0;
  double max = 0.0;
  int argmax_i = 0, argmax_j = 0;  // 1-based
};

struct DeviationSummary {
  Eigen::MatrixXd absdev;
  DeviationStats unique;  // over the i <= j elements
  DeviationStats full;    // over the whole symmetric matrix
};

/// Elementwise |computed - reference| with statistics in both the
/// unique-element and full-matrix conventions.
DeviationSummary compare_tables(const Eigen::MatrixXd& computed,
                                const Eigen::MatrixXd& reference);

struct WeightSet {
  double c1 = 0.0, c2 = 0.0;
  WeightReport report;
  double w1_pair = 0.0, w2_pair = 0.0;  // two-structure unit-diagonal form
  double energy_electronic = 0.0;
  double energy_total = 0.0;
};

struct GeometryResult {
  std::string label;
  double d1 = 0.0, d2 = 0.0;
  double e_nuc = 0.0;
  StructureBasis basis;
  Eigen::MatrixXd s_quantum, h_quantum, s_reference, h_reference;
  DeviationSummary dev_overlap, dev_hamiltonian;
  WeightSet weights_quantum, weights_reference;
  ResourceReport resources;
  std::size_t hamiltonian_terms = 0;
  std::size_t hamiltonian_raw_products = 0;
};

/// Full single-geometry workflow: integrals -> determinant basis -> 6x6
/// estimator and reference matrices -> 2x2 structure problem -> weights.
GeometryResult run_geometry(const RunConfig& config, const Geometry& geometry,
                            const std::string& label);

/// Scan driver: processes every configured geometry (optionally in
/// parallel), writes per-geometry tables, a weight-vs-geometry table and a
/// JSON summary under config.out_dir.
std::vector<GeometryResult> run_h4_scan(const RunConfig& config);

/// Reads the named value column of a table written by this toolkit.
Eigen::MatrixXd load_table_column(const std::filesystem::path& path,
                                  const std::string& column);

std::string deviation_summary_json(const DeviationSummary& dev);

/// Accounting of the PGHE measurement workload at one geometry, split into
/// one- and two-body contributions.
struct ResourceBreakdown {
  ResourceReport one_body;
  ResourceReport two_body;
  ResourceReport total;
  std::uint64_t shots = 0;
  int n_qubits = 0;
  std::size_t hamiltonian_terms = 0;
};

ResourceBreakdown resource_breakdown(const RunConfig& config,
                                     const Geometry& geometry);

std::string resource_breakdown_text(const ResourceBreakdown& rb);
std::string resource_breakdown_json(const ResourceBreakdown& rb);

}  // namespace scgvb
