// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scgvb/nojw.hpp"
#include "scgvb/pauli.hpp"
#include "scgvb/rng.hpp"

namespace scgvb {

enum class GateTag {
  identity,
  pauli_x,
  pauli_y,
  pauli_z,
  rot_x_basis,  // H
  rot_y_basis   // S-dagger then H
};

struct GateCounts {
  std::uint64_t pauli = 0;
  std::uint64_t hadamard = 0;
  std::uint64_t s_dagger = 0;
  std::uint64_t measure_ops = 0;  // one per measured qubit per circuit

  GateCounts& operator+=(const GateCounts& o);
  std::uint64_t single_qubit_total() const {
    return pauli + hadamard + s_dagger;
  }
};

/// A measurement circuit: at most two layers of single-qubit gates on the
/// vacuum register, then all qubits measured.  No multi-qubit gates exist by
/// construction.
struct ShallowCircuit {
  int n_qubits = 0;
  std::vector<GateTag> qubit_gate;  // net per-qubit operation
  int depth = 0;                    // single-qubit gate layers, always <= 2
  GateCounts gates;

  /// Fig.-2 style circuit: apply Pauli string q_layer, then p_layer.
  static ShallowCircuit pauli_pair(int n_qubits, const PauliKey& q_layer,
                                   const PauliKey& p_layer);

  /// Fig.-3 style circuit: one shared basis rotation.  `letters` holds the
  /// group's per-qubit letter on the qubits in `assigned`.
  static ShallowCircuit basis_rotation(int n_qubits, const PauliKey& letters,
                                       std::uint64_t assigned);

  /// Probability of reading 1 on this qubit (1-based) in the vacuum run.
  double p_one(int qubit) const;
  /// Qubits with p_one == 1/2.
  std::uint64_t random_mask() const;
};

/// Exact outcome distribution of a product-state circuit; outcomes are
/// full-register bitstrings (bit q-1 = qubit q).
std::vector<std::pair<std::uint64_t, double>> outcome_distribution(
    const ShallowCircuit& circuit);

/// Multinomial shot counts over the exact distribution, on the stream
/// (seed, circuit_id).
std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_bitstrings(
    const ShallowCircuit& circuit, std::uint64_t shots, std::uint64_t seed,
    std::uint64_t circuit_id);

/// (-1)^(popcount of outcome restricted to the term's support).
int eigenvalue_from_bitstring(const PauliTerm& term, std::uint64_t outcome);
int eigenvalue_from_bitstring(const PauliTerm& term,
                              const std::string& outcome);  // "0110...",
                                                            // qubit 1 first

struct EstimatorConfig {
  enum class Mode { exact, sampled };
  Mode mode = Mode::exact;
  std::uint64_t shots = 524288;
  std::uint64_t seed = 0;
  double prune_tol = kDefaultPruneTol;
  /// Disambiguates RNG streams between matrix elements of one run; callers
  /// set it to stream_id(i, j).
  std::uint64_t stream_tag = 0;
};

struct EstimatorResult {
  double value = 0.0;
  cxd raw{0.0, 0.0};
  std::uint64_t n_circuits = 0;
  std::uint64_t n_measurements = 0;  // circuits * shots * qubits
  std::uint64_t shots_used = 1;
  int n_qubits = 0;
  GateCounts gates;
  int max_depth = 0;
  std::uint64_t depth_sum = 0;
  std::uint64_t n_terms = 0;   // Pauli terms in the measured operator
  std::uint64_t n_groups = 0;  // QWC groups (PGHE only)
  double elapsed_seconds = 0.0;
};

/// Determinant-overlap estimator: one Pauli-pair circuit per term pair of
/// (f, w); the all-zero-outcome probability carries the magnitude and the
/// pair phase is tracked classically.  Sampled and exact mode agree bit for
/// bit because each circuit's distribution is a point mass.
EstimatorResult doe_overlap(const PauliSum& f, const PauliSum& w,
                            const EstimatorConfig& config);

struct MeasurementGroup {
  std::vector<std::size_t> members;  // indices into QwcGrouping::terms
  PauliKey letters;                  // shared letter masks on assigned qubits
  std::uint64_t assigned = 0;
};

struct QwcGrouping {
  std::vector<std::pair<PauliKey, cxd>> terms;  // descending |coefficient|
  std::vector<MeasurementGroup> groups;
};

/// Greedy first-fit partition into qubit-wise commuting groups, terms
/// visited in descending |coefficient|.
QwcGrouping group_qwc(const PauliSum& op);

/// Pauli-grouped Hamiltonian estimator for <0| w H f |0>.
EstimatorResult pghe_matrix_element(const PauliSum& w,
                                    const HamiltonianEncoding& hamiltonian,
                                    const PauliSum& f,
                                    const EstimatorConfig& config);

/// Same estimator for an arbitrary qubit operator between w and f.
EstimatorResult pghe_operator(const PauliSum& w, const PauliSum& op,
                              const PauliSum& f, const EstimatorConfig& config);

struct ResourceReport {
  std::uint64_t n_circuits = 0;
  std::uint64_t n_measurements = 0;
  GateCounts gates;
  std::uint64_t n_entangling_gates = 0;  // structurally zero
  int max_depth = 0;
  double average_depth = 0.0;
  double average_gates_per_circuit = 0.0;
  double wall_time_seconds = 0.0;
};

ResourceReport resource_report(std::span<const EstimatorResult> results);

}  // namespace scgvb
