// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "scgvb/pipeline.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace scgvb {

namespace {

using json = nlohmann::json;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

constexpr std::uint64_t kDoeStream = 1;
constexpr std::uint64_t kPgheStream = 2;

struct DeterminantOperators {
  std::vector<PauliSum> f, w;
};

DeterminantOperators determinant_operators(const StructureBasis& basis,
                                           const Eigen::MatrixXd& s_so,
                                           double prune_tol) {
  DeterminantOperators ops;
  for (const auto& d : basis.determinants) {
    PauliSum fs = map_operator_string(d.f_string, s_so, prune_tol);
    PauliSum ws = map_operator_string(d.w_string, s_so, prune_tol);
    fs *= static_cast<double>(d.sign);
    ws *= static_cast<double>(d.sign);
    ops.f.push_back(std::move(fs));
    ops.w.push_back(std::move(ws));
  }
  return ops;
}

DeviationStats stats_over(const Eigen::MatrixXd& absdev, bool unique_only) {
  DeviationStats st;
  double sum = 0, sum2 = 0;
  int count = 0;
  const int n = static_cast<int>(absdev.rows());
  for (int i = 0; i < n; ++i)
    for (int j = unique_only ? i : 0; j < n; ++j) {
      const double v = absdev(i, j);
      sum += v;
      sum2 += v * v;
      ++count;
      if (v > st.max) {
        st.max = v;
        st.argmax_i = i + 1;
        st.argmax_j = j + 1;
      }
    }
  st.mean = sum / count;
  st.rms = std::sqrt(sum2 / count);
  return st;
}

WeightSet make_weight_set(const Eigen::MatrixXd& s2, const Eigen::MatrixXd& h2,
                          double e_nuc) {
  WeightSet set;
  const SpectralSolution sol = solve_generalized(h2, s2);
  const Eigen::VectorXd c = sol.C.col(0);
  set.c1 = c(0);
  set.c2 = c.size() > 1 ? c(1) : 0.0;
  set.report = chirgwin_coulson(c, s2);
  alternative_weights(c, s2, set.report);
  set.energy_electronic = sol.eigenvalues(0);
  set.energy_total = sol.eigenvalues(0) + e_nuc;
  if (c.size() == 2) {
    // two-structure form with unit diagonals and the raw off-diagonal
    // overlap, normalized to unit sum
    const double cross = set.c1 * set.c2 * s2(0, 1);
    const double n1 = set.c1 * set.c1 + cross;
    const double n2 = set.c2 * set.c2 + cross;
    set.w1_pair = n1 / (n1 + n2);
    set.w2_pair = n2 / (n1 + n2);
  }
  return set;
}

json weight_set_json(const WeightSet& w) {
  json j;
  j["c1"] = w.c1;
  j["c2"] = w.c2;
  j["w_cc"] = std::vector<double>(w.report.cc.begin(), w.report.cc.end());
  j["w_lowdin"] =
      std::vector<double>(w.report.lowdin.begin(), w.report.lowdin.end());
  j["w_inverse"] =
      std::vector<double>(w.report.inverse.begin(), w.report.inverse.end());
  j["w_pair"] = {w.w1_pair, w.w2_pair};
  j["cc_sum"] = w.report.cc_sum;
  j["cc_out_of_range"] = w.report.cc_out_of_range;
  j["energy_electronic"] = w.energy_electronic;
  j["energy_total"] = w.energy_total;
  return j;
}

json resource_json(const ResourceReport& r) {
  json j;
  j["circuits"] = r.n_circuits;
  j["measurements"] = r.n_measurements;
  j["pauli_gates"] = r.gates.pauli;
  j["hadamard_gates"] = r.gates.hadamard;
  j["s_dagger_gates"] = r.gates.s_dagger;
  j["measure_ops"] = r.gates.measure_ops;
  j["entangling_gates"] = r.n_entangling_gates;
  j["max_depth"] = r.max_depth;
  j["average_depth"] = r.average_depth;
  j["average_gates_per_circuit"] = r.average_gates_per_circuit;
  // wall time stays out of serialized reports so that fixed-seed runs are
  // byte-identical
  return j;
}

void write_table(const std::filesystem::path& path, const Eigen::MatrixXd& q,
                 const Eigen::MatrixXd& ref, bool as_json) {
  const int n = static_cast<int>(q.rows());
  std::ofstream out(path);
  require(out.good(), "cannot write " + path.string());
  if (as_json) {
    json rows = json::array();
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        rows.push_back({{"i", i + 1},
                        {"j", j + 1},
                        {"quantum", q(i, j)},
                        {"reference", ref(i, j)},
                        {"abs_dev", std::abs(q(i, j) - ref(i, j))}});
    out << rows.dump(1) << "\n";
    return;
  }
  out << "i,j,quantum,reference,abs_dev\n";
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      out << i + 1 << "," << j + 1 << "," << fmt("%.12f", q(i, j)) << ","
          << fmt("%.12f", ref(i, j)) << ","
          << fmt("%.6e", std::abs(q(i, j) - ref(i, j))) << "\n";
}

}  // namespace

Geometry make_h4_rectangle(double d1, double d2) {
  require(d1 > 0 && d2 > 0, "rectangle sides must be positive");
  Geometry g;
  g.atoms = {{"H", {0, 0, 0}},
             {"H", {d1, 0, 0}},
             {"H", {d1, d2, 0}},
             {"H", {0, d2, 0}}};
  return g;
}

std::vector<PairingPattern> h4_pairing_patterns() {
  return noncrossing_pairings(4);
}

DeviationSummary compare_tables(const Eigen::MatrixXd& computed,
                                const Eigen::MatrixXd& reference) {
  require(computed.rows() == reference.rows() &&
              computed.cols() == reference.cols(),
          "table shape mismatch");
  DeviationSummary dev;
  dev.absdev = (computed - reference).cwiseAbs();
  dev.unique = stats_over(dev.absdev, true);
  dev.full = stats_over(dev.absdev, false);
  return dev;
}

GeometryResult run_geometry(const RunConfig& config, const Geometry& geometry,
                            const std::string& label) {
  GeometryResult res;
  res.label = label;

  const MolecularIntegrals mi = build_integrals(geometry, config.basis);
  res.e_nuc = mi.e_nuc;
  require(mi.n_orb % 2 == 0, "need an even orbital count for singlet pairing");
  const SpinOrbitalIntegrals so = to_spin_orbitals(mi);

  const auto patterns = noncrossing_pairings(mi.n_orb);
  res.basis = build_determinant_basis(mi.n_orb, patterns);
  const int nd = static_cast<int>(res.basis.determinants.size());

  const auto ops = determinant_operators(res.basis, so.S, config.prune_tol);
  const HamiltonianEncoding enc =
      map_hamiltonian(so, config.scheme, config.prune_tol);
  res.hamiltonian_terms = enc.term_count;
  res.hamiltonian_raw_products = enc.raw_product_count;

  res.s_quantum.setZero(nd, nd);
  res.h_quantum.setZero(nd, nd);
  std::vector<EstimatorResult> all;
  for (int i = 0; i < nd; ++i)
    for (int j = i; j < nd; ++j) {
      EstimatorConfig cfg;
      cfg.mode = config.mode;
      cfg.shots = config.shots;
      cfg.seed = config.seed;
      cfg.prune_tol = config.prune_tol;
      cfg.stream_tag = stream_id(i + 1, j + 1, kDoeStream);
      const EstimatorResult sres = doe_overlap(ops.f[j], ops.w[i], cfg);
      cfg.stream_tag = stream_id(i + 1, j + 1, kPgheStream);
      const EstimatorResult hres =
          pghe_matrix_element(ops.w[i], enc, ops.f[j], cfg);
      res.s_quantum(i, j) = res.s_quantum(j, i) = sres.value;
      res.h_quantum(i, j) = res.h_quantum(j, i) = hres.value;
      all.push_back(sres);
      all.push_back(hres);
    }
  res.resources = resource_report(all);

  res.s_reference.setZero(nd, nd);
  res.h_reference.setZero(nd, nd);
  if (config.reference == ReferenceKind::file) {
    res.s_reference = load_table_column(
        config.reference_prefix.string() + "_overlap.csv", "quantum");
    res.h_reference = load_table_column(
        config.reference_prefix.string() + "_hamiltonian.csv", "quantum");
    require(res.s_reference.rows() == nd, "reference table size mismatch");
  } else if (config.reference == ReferenceKind::fock) {
    const FockSpace fock(so);
    std::vector<Eigen::VectorXd> states, h_states;
    for (const auto& d : res.basis.determinants) {
      states.push_back(fock.state(d));
      h_states.push_back(fock.apply_hamiltonian(states.back()));
    }
    for (int i = 0; i < nd; ++i)
      for (int j = i; j < nd; ++j) {
        res.s_reference(i, j) = res.s_reference(j, i) =
            states[i].dot(states[j]);
        res.h_reference(i, j) = res.h_reference(j, i) =
            states[i].dot(h_states[j]);
      }
  } else {
    for (int i = 0; i < nd; ++i)
      for (int j = i; j < nd; ++j) {
        res.s_reference(i, j) = res.s_reference(j, i) = lowdin_overlap(
            res.basis.determinants[i], res.basis.determinants[j], so.S);
        res.h_reference(i, j) = res.h_reference(j, i) = lowdin_matrix_element(
            res.basis.determinants[i], res.basis.determinants[j], so);
      }
  }

  res.dev_overlap = compare_tables(res.s_quantum, res.s_reference);
  res.dev_hamiltonian = compare_tables(res.h_quantum, res.h_reference);

  const Eigen::MatrixXd s2q = contract_to_structures(res.s_quantum, res.basis);
  const Eigen::MatrixXd h2q = contract_to_structures(res.h_quantum, res.basis);
  const Eigen::MatrixXd s2r =
      contract_to_structures(res.s_reference, res.basis);
  const Eigen::MatrixXd h2r =
      contract_to_structures(res.h_reference, res.basis);
  res.weights_quantum = make_weight_set(s2q, h2q, mi.e_nuc);
  res.weights_reference = make_weight_set(s2r, h2r, mi.e_nuc);
  return res;
}

std::vector<GeometryResult> run_h4_scan(const RunConfig& config) {
  struct Job {
    Geometry geometry;
    std::string label;
    double d1 = 0, d2 = 0;
  };
  std::vector<Job> jobs;
  if (config.geometry_file) {
    Job j;
    j.geometry = load_xyz(*config.geometry_file, config.geometry_in_bohr);
    j.label = config.geometry_file->stem().string();
    jobs.push_back(std::move(j));
  }
  for (const auto& [d1, d2] : config.rectangles) {
    Job j;
    j.geometry = make_h4_rectangle(d1, d2);
    j.label = fmt("%g", d1) + "x" + fmt("%g", d2);
    j.d1 = d1;
    j.d2 = d2;
    jobs.push_back(std::move(j));
  }
  require(!jobs.empty(), "no geometries configured");

  std::vector<GeometryResult> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  const int threads =
      std::max(1, std::min<int>(config.threads,
                                static_cast<int>(jobs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      try {
        results[k] = run_geometry(config, jobs[k].geometry, jobs[k].label);
        results[k].d1 = jobs[k].d1;
        results[k].d2 = jobs[k].d2;
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (std::size_t k = 0; k < jobs.size(); ++k)
    require(errors[k].empty(),
            "geometry " + jobs[k].label + ": " + errors[k]);

  std::filesystem::create_directories(config.out_dir);
  {
    std::ofstream out(config.out_dir / "structure_basis.json");
    out << structure_basis_json(results.front().basis) << "\n";
  }
  const char* ext = config.tables_as_json ? ".json" : ".csv";
  for (const auto& r : results) {
    write_table(config.out_dir / ("h4_" + r.label + "_overlap" + ext),
                r.s_quantum, r.s_reference, config.tables_as_json);
    write_table(config.out_dir / ("h4_" + r.label + "_hamiltonian" + ext),
                r.h_quantum, r.h_reference, config.tables_as_json);
  }

  {
    std::ofstream out(config.out_dir / "weights.csv");
    out << "d1_angstrom,d2_angstrom,source,c1,c2,w1_cc,w2_cc,w1_lowdin,"
           "w2_lowdin,w1_inverse,w2_inverse,w1_pair,w2_pair,"
           "energy_electronic,energy_total\n";
    auto row = [&](const GeometryResult& r, const char* src,
                   const WeightSet& w) {
      out << fmt("%.6f", r.d1) << "," << fmt("%.6f", r.d2) << "," << src << ","
          << fmt("%.10f", w.c1) << "," << fmt("%.10f", w.c2) << ","
          << fmt("%.10f", w.report.cc(0)) << ","
          << fmt("%.10f", w.report.cc(1)) << ","
          << fmt("%.10f", w.report.lowdin(0)) << ","
          << fmt("%.10f", w.report.lowdin(1)) << ","
          << fmt("%.10f", w.report.inverse(0)) << ","
          << fmt("%.10f", w.report.inverse(1)) << ","
          << fmt("%.10f", w.w1_pair) << "," << fmt("%.10f", w.w2_pair) << ","
          << fmt("%.10f", w.energy_electronic) << ","
          << fmt("%.10f", w.energy_total) << "\n";
    };
    for (const auto& r : results) {
      row(r, "quantum", r.weights_quantum);
      row(r, "reference", r.weights_reference);
    }
  }

  json summary;
  summary["mode"] =
      config.mode == EstimatorConfig::Mode::exact ? "exact" : "sampled";
  summary["shots"] = config.shots;
  summary["seed"] = config.seed;
  summary["basis"] = config.basis;
  summary["hamiltonian_scheme"] =
      config.scheme == HamiltonianScheme::biorthogonal ? "biorthogonal"
                                                       : "raw_nonorthogonal";
  summary["reference"] = config.reference == ReferenceKind::lowdin ? "lowdin"
                         : config.reference == ReferenceKind::fock ? "fock"
                                                                   : "file";
  summary["geometries"] = json::array();
  for (const auto& r : results) {
    json g;
    g["label"] = r.label;
    g["d1_angstrom"] = r.d1;
    g["d2_angstrom"] = r.d2;
    g["e_nuc"] = r.e_nuc;
    g["n_determinants"] = r.basis.determinants.size();
    g["hamiltonian_terms"] = r.hamiltonian_terms;
    g["deviation_overlap"] =
        json::parse(deviation_summary_json(r.dev_overlap));
    g["deviation_hamiltonian"] =
        json::parse(deviation_summary_json(r.dev_hamiltonian));
    g["weights_quantum"] = weight_set_json(r.weights_quantum);
    g["weights_reference"] = weight_set_json(r.weights_reference);
    g["resources"] = resource_json(r.resources);
    summary["geometries"].push_back(g);
  }
  std::ofstream out(config.out_dir / "summary.json");
  out << summary.dump(1) << "\n";
  return results;
}

Eigen::MatrixXd load_table_column(const std::filesystem::path& path,
                                  const std::string& column) {
  std::ifstream in(path);
  require(in.good(), "cannot open table " + path.string());
  std::string header;
  require(static_cast<bool>(std::getline(in, header)), "empty table file");
  std::vector<std::string> cols;
  {
    std::istringstream hs(header);
    std::string tok;
    while (std::getline(hs, tok, ',')) cols.push_back(tok);
  }
  int target = -1;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (cols[c] == column) target = static_cast<int>(c);
  require(target >= 2, "table has no column named " + column);

  struct Entry {
    int i, j;
    double v;
  };
  std::vector<Entry> entries;
  int n = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> fields;
    while (std::getline(ls, tok, ',')) fields.push_back(tok);
    require(fields.size() == cols.size(), "ragged table row: " + line);
    Entry e{std::stoi(fields[0]), std::stoi(fields[1]),
            std::stod(fields[target])};
    n = std::max({n, e.i, e.j});
    entries.push_back(e);
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : entries) {
    m(e.i - 1, e.j - 1) = e.v;
    m(e.j - 1, e.i - 1) = e.v;
  }
  return m;
}

std::string deviation_summary_json(const DeviationSummary& dev) {
  json j;
  auto stats = [](const DeviationStats& s) {
    return json{{"mean", s.mean},
                {"rms", s.rms},
                {"max", s.max},
                {"argmax", {s.argmax_i, s.argmax_j}}};
  };
  j["unique_elements"] = stats(dev.unique);
  j["full_matrix"] = stats(dev.full);
  return j.dump();
}

ResourceBreakdown resource_breakdown(const RunConfig& config,
                                     const Geometry& geometry) {
  const MolecularIntegrals mi = build_integrals(geometry, config.basis);
  const SpinOrbitalIntegrals so = to_spin_orbitals(mi);
  const StructureBasis basis =
      build_determinant_basis(mi.n_orb, noncrossing_pairings(mi.n_orb));
  const auto ops = determinant_operators(basis, so.S, config.prune_tol);
  const HamiltonianEncoding enc =
      map_hamiltonian(so, config.scheme, config.prune_tol);

  ResourceBreakdown rb;
  rb.shots = config.shots;
  rb.n_qubits = so.n_so;
  rb.hamiltonian_terms = enc.term_count;
  const int nd = static_cast<int>(basis.determinants.size());
  std::vector<EstimatorResult> one, two, tot;
  EstimatorConfig cfg;
  cfg.mode = EstimatorConfig::Mode::exact;
  cfg.prune_tol = config.prune_tol;
  for (int i = 0; i < nd; ++i)
    for (int j = i; j < nd; ++j) {
      one.push_back(pghe_operator(ops.w[i], enc.one_body, ops.f[j], cfg));
      two.push_back(pghe_operator(ops.w[i], enc.two_body, ops.f[j], cfg));
      tot.push_back(pghe_operator(ops.w[i], enc.qubit_op, ops.f[j], cfg));
    }
  rb.one_body = resource_report(one);
  rb.two_body = resource_report(two);
  rb.total = resource_report(tot);
  return rb;
}

std::string resource_breakdown_text(const ResourceBreakdown& rb) {
  std::ostringstream out;
  auto line = [&](const char* k, const std::string& v) {
    out << "  " << k;
    for (std::size_t i = std::char_traits<char>::length(k); i < 34; ++i)
      out << ' ';
    out << v << "\n";
  };
  out << "PGHE measurement workload (unique matrix elements)\n";
  line("spin orbitals / qubits", std::to_string(rb.n_qubits));
  line("Hamiltonian Pauli terms", std::to_string(rb.hamiltonian_terms));
  line("circuits (one-body)", std::to_string(rb.one_body.n_circuits));
  line("circuits (two-body)", std::to_string(rb.two_body.n_circuits));
  line("circuits (all contributions)", std::to_string(rb.total.n_circuits));
  line("max circuit depth", std::to_string(rb.total.max_depth));
  line("average circuit depth", fmt("%.3f", rb.total.average_depth));
  line("average gates per circuit",
       fmt("%.2f", rb.total.average_gates_per_circuit));
  line("H gates (all contributions)", std::to_string(rb.total.gates.hadamard));
  line("Sdg gates (all contributions)",
       std::to_string(rb.total.gates.s_dagger));
  line("entangling gates", "0");
  line("measurement ops", std::to_string(rb.total.gates.measure_ops));
  line("shots per circuit", std::to_string(rb.shots));
  line("measurement events",
       std::to_string(rb.total.n_circuits * rb.shots *
                      static_cast<std::uint64_t>(rb.n_qubits)));
  return out.str();
}

std::string resource_breakdown_json(const ResourceBreakdown& rb) {
  json j;
  j["n_qubits"] = rb.n_qubits;
  j["hamiltonian_terms"] = rb.hamiltonian_terms;
  j["shots"] = rb.shots;
  j["one_body"] = resource_json(rb.one_body);
  j["two_body"] = resource_json(rb.two_body);
  j["total"] = resource_json(rb.total);
  j["measurement_events"] = rb.total.n_circuits * rb.shots *
                            static_cast<std::uint64_t>(rb.n_qubits);
  return j.dump(1);
}

}  // namespace scgvb
