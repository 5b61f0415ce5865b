// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "scgvb/estimators.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

namespace scgvb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

cxd quarter_turn(int e) {
  static constexpr cxd tab[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return tab[((e % 4) + 4) % 4];
}

}  // namespace

GateCounts& GateCounts::operator+=(const GateCounts& o) {
  pauli += o.pauli;
  hadamard += o.hadamard;
  s_dagger += o.s_dagger;
  measure_ops += o.measure_ops;
  return *this;
}

ShallowCircuit ShallowCircuit::pauli_pair(int n_qubits, const PauliKey& q_layer,
                                          const PauliKey& p_layer) {
  ShallowCircuit c;
  c.n_qubits = n_qubits;
  c.qubit_gate.assign(n_qubits, GateTag::identity);
  const PauliKey net{q_layer.x ^ p_layer.x, q_layer.z ^ p_layer.z};
  for (int q = 0; q < n_qubits; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    const bool x = net.x & bit, z = net.z & bit;
    c.qubit_gate[q] = x ? (z ? GateTag::pauli_y : GateTag::pauli_x)
                        : (z ? GateTag::pauli_z : GateTag::identity);
  }
  c.gates.pauli = static_cast<std::uint64_t>(std::popcount(q_layer.support()) +
                                             std::popcount(p_layer.support()));
  c.gates.measure_ops = n_qubits;
  c.depth = (q_layer.support() ? 1 : 0) + (p_layer.support() ? 1 : 0);
  require(c.depth <= 2, "circuit depth invariant violated");
  return c;
}

ShallowCircuit ShallowCircuit::basis_rotation(int n_qubits,
                                              const PauliKey& letters,
                                              std::uint64_t assigned) {
  ShallowCircuit c;
  c.n_qubits = n_qubits;
  c.qubit_gate.assign(n_qubits, GateTag::identity);
  bool any_x = false, any_y = false;
  for (int q = 0; q < n_qubits; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (!(assigned & bit)) continue;
    const bool x = letters.x & bit, z = letters.z & bit;
    if (x && z) {
      c.qubit_gate[q] = GateTag::rot_y_basis;
      c.gates.hadamard += 1;
      c.gates.s_dagger += 1;
      any_y = true;
    } else if (x) {
      c.qubit_gate[q] = GateTag::rot_x_basis;
      c.gates.hadamard += 1;
      any_x = true;
    }
  }
  c.gates.measure_ops = n_qubits;
  c.depth = any_y ? 2 : (any_x ? 1 : 0);
  require(c.depth <= 2, "circuit depth invariant violated");
  return c;
}

double ShallowCircuit::p_one(int qubit) const {
  switch (qubit_gate[qubit - 1]) {
    case GateTag::pauli_x:
    case GateTag::pauli_y: return 1.0;
    case GateTag::rot_x_basis:
    case GateTag::rot_y_basis: return 0.5;
    default: return 0.0;
  }
}

std::uint64_t ShallowCircuit::random_mask() const {
  std::uint64_t m = 0;
  for (int q = 1; q <= n_qubits; ++q)
    if (p_one(q) == 0.5) m |= std::uint64_t{1} << (q - 1);
  return m;
}

std::vector<std::pair<std::uint64_t, double>> outcome_distribution(
    const ShallowCircuit& circuit) {
  std::uint64_t fixed = 0;
  for (int q = 1; q <= circuit.n_qubits; ++q)
    if (circuit.p_one(q) == 1.0) fixed |= std::uint64_t{1} << (q - 1);
  const std::uint64_t rnd = circuit.random_mask();
  const int r = std::popcount(rnd);
  require(r <= 24, "outcome enumeration capped at 24 random qubits");

  std::vector<int> positions;
  for (int q = 0; q < circuit.n_qubits; ++q)
    if (rnd & (std::uint64_t{1} << q)) positions.push_back(q);

  const double p = 1.0 / static_cast<double>(std::uint64_t{1} << r);
  std::vector<std::pair<std::uint64_t, double>> dist;
  dist.reserve(std::size_t{1} << r);
  for (std::uint64_t o = 0; o < (std::uint64_t{1} << r); ++o) {
    std::uint64_t bits = fixed;
    for (int b = 0; b < r; ++b)
      if (o & (std::uint64_t{1} << b)) bits |= std::uint64_t{1} << positions[b];
    dist.push_back({bits, p});
  }
  return dist;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sample_bitstrings(
    const ShallowCircuit& circuit, std::uint64_t shots, std::uint64_t seed,
    std::uint64_t circuit_id) {
  const auto dist = outcome_distribution(circuit);
  std::vector<double> probs;
  probs.reserve(dist.size());
  for (const auto& [o, p] : dist) probs.push_back(p);
  RngStream rng(seed, circuit_id);
  const auto counts = multinomial_sample(shots, probs, rng);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i)
    out.push_back({dist[i].first, counts[i]});
  return out;
}

int eigenvalue_from_bitstring(const PauliTerm& term, std::uint64_t outcome) {
  return std::popcount(outcome & term.key().support()) % 2 == 0 ? 1 : -1;
}

int eigenvalue_from_bitstring(const PauliTerm& term,
                              const std::string& outcome) {
  require(static_cast<int>(outcome.size()) == term.n_qubits(),
          "outcome length must equal register size");
  std::uint64_t bits = 0;
  for (int q = 1; q <= term.n_qubits(); ++q) {
    const char c = outcome[q - 1];
    require(c == '0' || c == '1', "outcome must be a 0/1 string");
    if (c == '1') bits |= std::uint64_t{1} << (q - 1);
  }
  return eigenvalue_from_bitstring(term, bits);
}

EstimatorResult doe_overlap(const PauliSum& f, const PauliSum& w,
                            const EstimatorConfig& config) {
  require(f.n_qubits() == w.n_qubits(), "mismatched register sizes");
  const auto t0 = Clock::now();
  const int n = f.n_qubits();
  const bool sampled = config.mode == EstimatorConfig::Mode::sampled;
  require(!sampled || config.shots >= 1, "sampled mode needs shots >= 1");

  EstimatorResult res;
  res.n_qubits = n;
  res.shots_used = sampled ? config.shots : 1;

  const auto f_terms = f.sorted_terms();
  const auto w_terms = w.sorted_terms();
  res.n_terms = f_terms.size() + w_terms.size();

  cxd acc{0, 0};
  std::uint64_t pair_index = 0;
  for (const auto& [kq, cf] : f_terms) {    // Q_{i,a} from f
    for (const auto& [kp, cw] : w_terms) {  // P_{j,b} from w
      const auto circuit = ShallowCircuit::pauli_pair(n, kq, kp);
      double p_all_zero;
      if (sampled) {
        const auto counts =
            sample_bitstrings(circuit, config.shots, config.seed,
                              stream_id(config.stream_tag, pair_index));
        std::uint64_t zeros = 0;
        for (const auto& [o, cnt] : counts)
          if (o == 0) zeros = cnt;
        p_all_zero = static_cast<double>(zeros) /
                     static_cast<double>(config.shots);
      } else {
        p_all_zero = (kq.x ^ kp.x) == 0 ? 1.0 : 0.0;
      }
      // classically tracked phase of the product P * Q
      const cxd phase = quarter_turn(pauli_mul_phase(kp, kq));
      acc += cf * cw * phase * p_all_zero;
      res.n_circuits += 1;
      res.gates += circuit.gates;
      res.max_depth = std::max(res.max_depth, circuit.depth);
      res.depth_sum += static_cast<std::uint64_t>(circuit.depth);
      ++pair_index;
    }
  }
  res.raw = acc;
  res.value = acc.real();
  res.n_measurements = res.n_circuits * res.shots_used *
                       static_cast<std::uint64_t>(n);
  res.elapsed_seconds = seconds_since(t0);
  return res;
}

QwcGrouping group_qwc(const PauliSum& op) {
  QwcGrouping g;
  g.terms = op.sorted_terms();
  std::sort(g.terms.begin(), g.terms.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a.second), mb = std::abs(b.second);
    if (ma != mb) return ma > mb;
    return a.first < b.first;
  });
  for (std::size_t i = 0; i < g.terms.size(); ++i) {
    const PauliKey& k = g.terms[i].first;
    const std::uint64_t sup = k.support();
    bool placed = false;
    for (auto& grp : g.groups) {
      const std::uint64_t both = sup & grp.assigned;
      if ((((k.x ^ grp.letters.x) | (k.z ^ grp.letters.z)) & both) != 0)
        continue;
      grp.letters.x |= k.x;
      grp.letters.z |= k.z;
      grp.assigned |= sup;
      grp.members.push_back(i);
      placed = true;
      break;
    }
    if (!placed) g.groups.push_back({{i}, k, sup});
  }
  return g;
}

EstimatorResult pghe_operator(const PauliSum& w, const PauliSum& op,
                              const PauliSum& f,
                              const EstimatorConfig& config) {
  require(w.n_qubits() == op.n_qubits() && op.n_qubits() == f.n_qubits(),
          "mismatched register sizes");
  const auto t0 = Clock::now();
  const int n = f.n_qubits();
  const bool sampled = config.mode == EstimatorConfig::Mode::sampled;
  require(!sampled || config.shots >= 1, "sampled mode needs shots >= 1");

  const PauliSum o_ij = sum_mul(w, sum_mul(op, f, config.prune_tol),
                                config.prune_tol);
  const QwcGrouping grouping = group_qwc(o_ij);

  EstimatorResult res;
  res.n_qubits = n;
  res.shots_used = sampled ? config.shots : 1;
  res.n_terms = o_ij.size();
  res.n_groups = grouping.groups.size();

  cxd acc{0, 0};
  for (std::size_t gi = 0; gi < grouping.groups.size(); ++gi) {
    const auto& grp = grouping.groups[gi];
    const auto circuit =
        ShallowCircuit::basis_rotation(n, grp.letters, grp.assigned);
    res.n_circuits += 1;
    res.gates += circuit.gates;
    res.max_depth = std::max(res.max_depth, circuit.depth);
    res.depth_sum += static_cast<std::uint64_t>(circuit.depth);

    if (sampled) {
      const auto counts =
          sample_bitstrings(circuit, config.shots, config.seed,
                            stream_id(config.stream_tag, gi));
      const double inv_shots = 1.0 / static_cast<double>(config.shots);
      for (std::size_t mi : grp.members) {
        const auto& [key, d] = grouping.terms[mi];
        const std::uint64_t sup = key.support();
        std::int64_t lam_sum = 0;
        for (const auto& [o, cnt] : counts) {
          const bool odd = std::popcount(o & sup) & 1;
          lam_sum += odd ? -static_cast<std::int64_t>(cnt)
                         : static_cast<std::int64_t>(cnt);
        }
        acc += d * (static_cast<double>(lam_sum) * inv_shots);
      }
    } else {
      for (std::size_t mi : grp.members) {
        const auto& [key, d] = grouping.terms[mi];
        if (key.x == 0) acc += d;  // <P>_0 = 1 on {I,Z} strings, else 0
      }
    }
  }

  res.raw = acc;
  res.value = acc.real();
  if (!sampled)
    require(std::abs(acc.imag()) < 1e-9,
            "imaginary residue above 1e-9 in exact-mode matrix element");
  res.n_measurements = res.n_circuits * res.shots_used *
                       static_cast<std::uint64_t>(n);
  res.elapsed_seconds = seconds_since(t0);
  return res;
}

EstimatorResult pghe_matrix_element(const PauliSum& w,
                                    const HamiltonianEncoding& hamiltonian,
                                    const PauliSum& f,
                                    const EstimatorConfig& config) {
  return pghe_operator(w, hamiltonian.qubit_op, f, config);
}

ResourceReport resource_report(std::span<const EstimatorResult> results) {
  ResourceReport rep;
  std::uint64_t depth_sum = 0;
  for (const auto& r : results) {
    rep.n_circuits += r.n_circuits;
    rep.n_measurements += r.n_measurements;
    rep.gates += r.gates;
    rep.max_depth = std::max(rep.max_depth, r.max_depth);
    depth_sum += r.depth_sum;
    rep.wall_time_seconds += r.elapsed_seconds;
  }
  if (rep.n_circuits > 0) {
    rep.average_depth = static_cast<double>(depth_sum) /
                        static_cast<double>(rep.n_circuits);
    rep.average_gates_per_circuit =
        static_cast<double>(rep.gates.single_qubit_total() +
                            rep.gates.measure_ops) /
        static_cast<double>(rep.n_circuits);
  }
  return rep;
}

}  // namespace scgvb
