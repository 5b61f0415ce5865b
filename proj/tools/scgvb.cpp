// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "scgvb/pipeline.hpp"

namespace {

using namespace scgvb;

std::vector<std::pair<double, double>> parse_rectangles(
    const std::string& spec) {
  std::vector<std::pair<double, double>> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto xpos = item.find('x');
    require(xpos != std::string::npos,
            "geometry item must look like '<d1>x<d2>': " + item);
    out.push_back({std::stod(item.substr(0, xpos)),
                   std::stod(item.substr(xpos + 1))});
  }
  return out;
}

int default_threads() {
  if (const char* env = std::getenv("SCGVB_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

struct CommonFlags {
  std::string geometries;
  std::string geometry_file;
  bool bohr = false;
  std::string basis = "sto-3g";
  std::string mode = "exact";
  std::uint64_t shots = 524288;
  std::uint64_t seed = 0;
  std::string scheme = "biorthogonal";
  std::string reference = "lowdin";
  std::string reference_prefix;
  std::string out_dir = "out";
  std::string format = "csv";
  double prune_tol = kDefaultPruneTol;
  int threads = default_threads();
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_estimator_flags) {
  cmd->add_option("--geometry-file", f.geometry_file,
                  "XYZ-like geometry file ('H x y z' lines)");
  cmd->add_flag("--bohr", f.bohr, "geometry file coordinates are in bohr");
  cmd->add_option("--basis", f.basis, "AO basis name (sto-3g)");
  if (with_estimator_flags) {
    cmd->add_option("--mode", f.mode, "estimator mode: exact or sampled");
    cmd->add_option("--shots", f.shots, "shots per circuit in sampled mode");
    cmd->add_option("--seed", f.seed, "base RNG seed");
    cmd->add_option("--scheme", f.scheme,
                    "hamiltonian encoding: biorthogonal or raw");
    cmd->add_option("--reference", f.reference,
                    "classical reference: lowdin, fock or file");
    cmd->add_option("--reference-prefix", f.reference_prefix,
                    "table path prefix when --reference=file");
    cmd->add_option("--prune-tol", f.prune_tol, "pauli coefficient prune tol");
    cmd->add_option("--threads", f.threads,
                    "worker threads over geometries (or SCGVB_THREADS)");
  }
  cmd->add_option("--out", f.out_dir, "output directory");
  cmd->add_option("--format", f.format, "matrix table format: csv or json");
}

RunConfig to_config(const CommonFlags& f) {
  RunConfig c;
  if (!f.geometries.empty()) c.rectangles = parse_rectangles(f.geometries);
  if (!f.geometry_file.empty()) c.geometry_file = f.geometry_file;
  c.geometry_in_bohr = f.bohr;
  c.basis = f.basis;
  require(f.mode == "exact" || f.mode == "sampled",
          "--mode must be exact or sampled");
  c.mode = f.mode == "exact" ? EstimatorConfig::Mode::exact
                             : EstimatorConfig::Mode::sampled;
  c.shots = f.shots;
  c.seed = f.seed;
  require(f.scheme == "biorthogonal" || f.scheme == "raw",
          "--scheme must be biorthogonal or raw");
  c.scheme = f.scheme == "biorthogonal" ? HamiltonianScheme::biorthogonal
                                        : HamiltonianScheme::raw_nonorthogonal;
  if (f.reference == "lowdin") c.reference = ReferenceKind::lowdin;
  else if (f.reference == "fock") c.reference = ReferenceKind::fock;
  else if (f.reference == "file") c.reference = ReferenceKind::file;
  else throw Error("--reference must be lowdin, fock or file");
  c.reference_prefix = f.reference_prefix;
  c.out_dir = f.out_dir;
  require(f.format == "csv" || f.format == "json",
          "--format must be csv or json");
  c.tables_as_json = f.format == "json";
  c.prune_tol = f.prune_tol;
  c.threads = f.threads;
  return c;
}

void print_scan_summary(const std::vector<GeometryResult>& results) {
  for (const auto& r : results) {
    std::printf(
        "%-18s  mean|dH|=%.6f  max|dH|=%.6f at (%d,%d)  "
        "w=(%.4f,%.4f)  E=%.8f Ha\n",
        r.label.c_str(), r.dev_hamiltonian.full.mean,
        r.dev_hamiltonian.full.max, r.dev_hamiltonian.full.argmax_i,
        r.dev_hamiltonian.full.argmax_j, r.weights_quantum.report.cc(0),
        r.weights_quantum.report.cc(1), r.weights_quantum.energy_total);
  }
}

Geometry single_geometry(const CommonFlags& f, double d1, double d2) {
  if (!f.geometry_file.empty()) return load_xyz(f.geometry_file, f.bohr);
  return make_h4_rectangle(d1, d2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement-only estimators for nonorthogonal valence-bond "
               "matrix elements on H clusters"};
  app.require_subcommand(1);

  CommonFlags run_flags, tables_flags, res_flags, dump_flags;
  double tables_d1 = 0.7414, tables_d2 = 0.7414;
  double res_d1 = 0.7414, res_d2 = 0.7414;
  double dump_d1 = 0.7414, dump_d2 = 0.7414;
  std::string cmp_a, cmp_b, cmp_column = "quantum", cmp_json;
  std::string dump_out = "integrals.txt", dump_format = "text";
  std::string load_path, load_reexport;
  std::string res_json;

  auto* run = app.add_subcommand(
      "run", "scan a list of rectangular H4 geometries end to end");
  run->add_option("--geometries", run_flags.geometries,
                  "comma-separated '<d1>x<d2>' pairs in Angstrom");
  add_common(run, run_flags, true);

  auto* tables = app.add_subcommand(
      "tables", "emit overlap/Hamiltonian tables for a single geometry");
  tables->add_option("--d1", tables_d1, "first H-H distance (Angstrom)");
  tables->add_option("--d2", tables_d2, "second H-H distance (Angstrom)");
  add_common(tables, tables_flags, true);

  auto* cmp = app.add_subcommand("compare", "deviation summary of two tables");
  cmp->add_option("table_a", cmp_a)->required();
  cmp->add_option("table_b", cmp_b)->required();
  cmp->add_option("--column", cmp_column, "value column to compare");
  cmp->add_option("--json", cmp_json, "also write the summary as JSON");

  auto* ints = app.add_subcommand("integrals", "dump or load integral files");
  ints->require_subcommand(1);
  auto* dump = ints->add_subcommand("dump", "compute and write integrals");
  dump->add_option("--d1", dump_d1, "first H-H distance (Angstrom)");
  dump->add_option("--d2", dump_d2, "second H-H distance (Angstrom)");
  add_common(dump, dump_flags, false);
  dump->add_option("-o,--output", dump_out, "output path");
  dump->add_option("--integral-format", dump_format, "text or json");
  auto* load = ints->add_subcommand("load", "validate an integral file");
  load->add_option("file", load_path)->required();
  load->add_option("--reexport", load_reexport,
                   "write the loaded integrals back out (text)");

  auto* res = app.add_subcommand(
      "resources", "measurement-workload report for one geometry");
  res->add_option("--d1", res_d1, "first H-H distance (Angstrom)");
  res->add_option("--d2", res_d2, "second H-H distance (Angstrom)");
  add_common(res, res_flags, true);
  res->add_option("--json", res_json, "also write the report as JSON");
  std::string res_dump;
  res->add_option("--dump-operator", res_dump,
                  "debug dump of the qubit Hamiltonian, one term per line");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      RunConfig c = to_config(run_flags);
      if (c.rectangles.empty() && !c.geometry_file)
        c.rectangles = {{0.7414, 0.7414},
                        {0.88, 0.7414},
                        {0.92675, 0.7414},
                        {1.2, 0.7414},
                        {1.26, 0.7414}};
      print_scan_summary(run_h4_scan(c));
    } else if (tables->parsed()) {
      RunConfig c = to_config(tables_flags);
      if (!c.geometry_file) c.rectangles = {{tables_d1, tables_d2}};
      print_scan_summary(run_h4_scan(c));
    } else if (cmp->parsed()) {
      const Eigen::MatrixXd a = load_table_column(cmp_a, cmp_column);
      const Eigen::MatrixXd b = load_table_column(cmp_b, cmp_column);
      const DeviationSummary dev = compare_tables(a, b);
      std::printf("unique elements: mean=%.6e rms=%.6e max=%.6e at (%d,%d)\n",
                  dev.unique.mean, dev.unique.rms, dev.unique.max,
                  dev.unique.argmax_i, dev.unique.argmax_j);
      std::printf("full matrix:     mean=%.6e rms=%.6e max=%.6e at (%d,%d)\n",
                  dev.full.mean, dev.full.rms, dev.full.max, dev.full.argmax_i,
                  dev.full.argmax_j);
      if (!cmp_json.empty()) {
        std::ofstream out(cmp_json);
        out << deviation_summary_json(dev) << "\n";
      }
    } else if (dump->parsed()) {
      Geometry g = single_geometry(dump_flags, dump_d1, dump_d2);
      const MolecularIntegrals mi = build_integrals(g, dump_flags.basis);
      require(dump_format == "text" || dump_format == "json",
              "--integral-format must be text or json");
      if (dump_format == "json")
        save_integrals_json(mi, dump_out);
      else
        save_integrals(mi, dump_out);
      std::printf("wrote %s (n_orb=%d, e_nuc=%.10f)\n", dump_out.c_str(),
                  mi.n_orb, mi.e_nuc);
    } else if (load->parsed()) {
      const MolecularIntegrals mi = load_integrals(load_path);
      std::printf("loaded %s: n_orb=%d e_nuc=%.10f |S|min_eig>0 ok\n",
                  load_path.c_str(), mi.n_orb, mi.e_nuc);
      if (!load_reexport.empty()) save_integrals(mi, load_reexport);
    } else if (res->parsed()) {
      RunConfig c = to_config(res_flags);
      Geometry g = single_geometry(res_flags, res_d1, res_d2);
      const ResourceBreakdown rb = resource_breakdown(c, g);
      std::fputs(resource_breakdown_text(rb).c_str(), stdout);
      if (!res_json.empty()) {
        std::ofstream out(res_json);
        out << resource_breakdown_json(rb) << "\n";
      }
      if (!res_dump.empty()) {
        const auto mi = build_integrals(g, c.basis);
        const auto enc = map_hamiltonian(to_spin_orbitals(mi), c.scheme,
                                         c.prune_tol);
        std::ofstream out(res_dump);
        out << enc.qubit_op.to_text();
        std::printf("wrote %s (%zu terms)\n", res_dump.c_str(),
                    enc.term_count);
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
