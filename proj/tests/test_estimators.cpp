// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "h4_fixture.hpp"
#include "scgvb/estimators.hpp"
#include "scgvb/oracle.hpp"
#include "test_oracles.hpp"

using namespace scgvb;
using scgvb::testing::H4Fixture;

TEST_CASE("shallow circuits stay within the structural resource claims") {
  const auto a = ShallowCircuit::pauli_pair(4, {0b0011, 0b0100}, {0b0001, 0});
  CHECK(a.depth == 2);
  CHECK(a.gates.pauli == 4);
  const auto b = ShallowCircuit::basis_rotation(4, {0b0011, 0b0010}, 0b0111);
  CHECK(b.depth == 2);  // contains a Y rotation
  CHECK(b.gates.hadamard == 2);
  CHECK(b.gates.s_dagger == 1);
  const auto c = ShallowCircuit::basis_rotation(4, {0, 0b0011}, 0b0011);
  CHECK(c.depth == 0);  // Z-only group needs no rotation
}

TEST_CASE("sample_bitstrings on deterministic circuits") {
  SUBCASE("all-identity circuit always reads the vacuum") {
    const auto c = ShallowCircuit::pauli_pair(3, {0, 0}, {0, 0});
    const auto counts = sample_bitstrings(c, 1000, 7, 1);
    REQUIRE(counts.size() == 1);
    CHECK(counts[0].first == 0);
    CHECK(counts[0].second == 1000);
  }
  SUBCASE("pauli-x on qubit 1 flips exactly that bit") {
    const auto c = ShallowCircuit::pauli_pair(3, {0b001, 0}, {0, 0});
    const auto counts = sample_bitstrings(c, 1000, 7, 2);
    REQUIRE(counts.size() == 1);
    CHECK(counts[0].first == 0b001);
    CHECK(counts[0].second == 1000);
  }
}

TEST_CASE("sample_bitstrings on a rotated qubit matches binomial statistics") {
  const auto c = ShallowCircuit::basis_rotation(1, {1, 0}, 1);
  const std::uint64_t shots = 524288;
  const auto counts = sample_bitstrings(c, shots, 0, 3);
  REQUIRE(counts.size() == 2);
  const double freq =
      static_cast<double>(counts[1].second) / static_cast<double>(shots);
  CHECK(std::abs(freq - 0.5) <= 3.0 * 0.5 / std::sqrt(double(shots)));

  SUBCASE("identical stream reproduces identical counts") {
    const auto again = sample_bitstrings(c, shots, 0, 3);
    CHECK(again[0].second == counts[0].second);
  }
  SUBCASE("different stream gives different counts") {
    const auto other = sample_bitstrings(c, shots, 0, 4);
    CHECK(other[0].second != counts[0].second);
  }
}

TEST_CASE("binomial sampler edge cases") {
  RngStream rng(1, 1);
  CHECK(binomial_sample(1000, 0.0, rng) == 0);
  CHECK(binomial_sample(1000, 1.0, rng) == 1000);
  std::uint64_t small = binomial_sample(40, 0.25, rng);
  CHECK(small <= 40);
  const auto counts =
      multinomial_sample(100000, std::vector<double>{0.5, 0.25, 0.25}, rng);
  CHECK(counts[0] + counts[1] + counts[2] == 100000);
}

TEST_CASE("eigenvalue reconstruction from outcomes") {
  CHECK(eigenvalue_from_bitstring(PauliTerm::from_string(2, "ZZ"), "00") == 1);
  CHECK(eigenvalue_from_bitstring(PauliTerm::from_string(2, "ZI"), "10") == -1);
  CHECK(eigenvalue_from_bitstring(PauliTerm::from_string(2, "XX"), "11") == 1);
  CHECK_THROWS_AS((void)eigenvalue_from_bitstring(
                      PauliTerm::from_string(2, "ZZ"), "0"),
                  Error);
}

TEST_CASE("qwc grouping") {
  SUBCASE("an all-Z sector shares one group") {
    PauliSum s(2);
    s.add(PauliTerm::from_string(2, "ZZ"));
    s.add(PauliTerm::from_string(2, "ZI"), 0.5);
    s.add(PauliTerm::from_string(2, "IZ"), 0.25);
    CHECK(group_qwc(s).groups.size() == 1);
  }
  SUBCASE("clashing letters split") {
    PauliSum s(2);
    s.add(PauliTerm::from_string(2, "XI"));
    s.add(PauliTerm::from_string(2, "ZI"), 0.5);
    CHECK(group_qwc(s).groups.size() == 2);
  }
  SUBCASE("output is a partition of pairwise-compatible groups") {
    RngStream rng(81, 0);
    for (int trial = 0; trial < 10; ++trial) {
      const PauliSum s = scgvb::testing::random_sum(4, 60, rng);
      const auto grouping = group_qwc(s);
      std::vector<bool> seen(grouping.terms.size(), false);
      for (const auto& grp : grouping.groups)
        for (std::size_t m : grp.members) {
          CHECK_FALSE(seen[m]);
          seen[m] = true;
          for (std::size_t m2 : grp.members)
            CHECK(qwc_compatible(grouping.terms[m].first,
                                 grouping.terms[m2].first));
        }
      for (bool b : seen) CHECK(b);
      for (std::size_t i = 1; i < grouping.terms.size(); ++i)
        CHECK(std::abs(grouping.terms[i].second) <=
              std::abs(grouping.terms[i - 1].second) + 1e-15);
    }
  }
}

TEST_CASE("doe on the trivial identity pair") {
  EstimatorConfig cfg;
  const PauliSum id = PauliSum::identity(3);
  const auto res = doe_overlap(id, id, cfg);
  CHECK(res.value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(res.n_circuits == 1);
  CHECK(res.n_measurements == 3);
  CHECK_THROWS_AS((void)doe_overlap(PauliSum::identity(2), id, cfg), Error);
}

TEST_CASE("doe equals the classical overlaps, sampled equals exact") {
  const auto& f = H4Fixture::square();
  std::vector<PauliSum> fs, ws;
  for (const auto& d : f.basis.determinants) {
    PauliSum a = map_operator_string(d.f_string, f.so.S);
    PauliSum b = map_operator_string(d.w_string, f.so.S);
    a *= static_cast<double>(d.sign);
    b *= static_cast<double>(d.sign);
    fs.push_back(a);
    ws.push_back(b);
  }
  EstimatorConfig exact;
  EstimatorConfig sampled;
  sampled.mode = EstimatorConfig::Mode::sampled;
  sampled.shots = 64;  // any shot count: per-circuit outcomes are point masses
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      sampled.stream_tag = exact.stream_tag = stream_id(i, j);
      const double want = lowdin_overlap(f.basis.determinants[i],
                                         f.basis.determinants[j], f.so.S);
      const auto ex = doe_overlap(fs[j], ws[i], exact);
      const auto sa = doe_overlap(fs[j], ws[i], sampled);
      CHECK(std::abs(ex.value - want) <= 1e-10);
      CHECK(ex.value == sa.value);  // bit-for-bit
      CHECK(ex.max_depth <= 2);
    }
}

TEST_CASE("pghe with the identity operator reduces to the overlap") {
  const auto& f = H4Fixture::square();
  const auto& d1 = f.basis.determinants[0];
  const auto& d2 = f.basis.determinants[1];
  PauliSum fsum = map_operator_string(d2.f_string, f.so.S);
  PauliSum wsum = map_operator_string(d1.w_string, f.so.S);
  fsum *= static_cast<double>(d2.sign);
  wsum *= static_cast<double>(d1.sign);
  EstimatorConfig cfg;
  const auto doe = doe_overlap(fsum, wsum, cfg);
  const auto pghe =
      pghe_operator(wsum, PauliSum::identity(8), fsum, cfg);
  CHECK(pghe.value == doctest::Approx(doe.value).epsilon(1e-13));
}

TEST_CASE("single-mode pghe reproduces the number operator") {
  MolecularIntegrals mi;
  mi.n_orb = 1;
  mi.S = Eigen::MatrixXd::Identity(1, 1);
  mi.h = Eigen::MatrixXd::Constant(1, 1, -1.0);
  mi.g.assign(1, 0.0);
  const auto so = to_spin_orbitals(mi);
  const auto enc = map_hamiltonian(so, HamiltonianScheme::biorthogonal);
  // occupied first spin orbital: <1| H |1> = -1
  PauliSum f = map_creation(1, 2);
  PauliSum w = map_annihilation_jw(1, 2);
  EstimatorConfig cfg;
  const auto res = pghe_matrix_element(w, enc, f, cfg);
  CHECK(res.value == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("sampled pghe is unbiased and reuses group statistics") {
  // small synthetic operator with X/Y terms: true vacuum value is the
  // Z-only part
  PauliSum op(3);
  op.add(PauliTerm::from_string(3, "ZII"), 0.7);
  op.add(PauliTerm::from_string(3, "XXI"), 0.4);
  op.add(PauliTerm::from_string(3, "YYI"), -0.3);
  op.add(PauliTerm::from_string(3, "IZZ"), 0.1);
  const PauliSum id = PauliSum::identity(3);

  EstimatorConfig exact;
  const double truth = pghe_operator(id, op, id, exact).value;
  CHECK(truth == doctest::Approx(0.8).epsilon(1e-13));

  EstimatorConfig cfg;
  cfg.mode = EstimatorConfig::Mode::sampled;
  cfg.shots = 8192;
  double mean = 0;
  const int n_seeds = 64;
  for (int s = 0; s < n_seeds; ++s) {
    cfg.seed = static_cast<std::uint64_t>(s);
    mean += pghe_operator(id, op, id, cfg).value;
  }
  mean /= n_seeds;
  // sigma per run <= (|0.4|+|0.3|)/sqrt(shots) ~ 0.008; mean of 64 ~ 0.001
  CHECK(std::abs(mean - truth) <= 0.004);

  SUBCASE("determinism: identical config produces identical values") {
    cfg.seed = 5;
    const double a = pghe_operator(id, op, id, cfg).value;
    const double b = pghe_operator(id, op, id, cfg).value;
    CHECK(a == b);
  }
  SUBCASE("stream tag decorrelates repeated elements") {
    cfg.seed = 5;
    cfg.stream_tag = 1;
    const double a = pghe_operator(id, op, id, cfg).value;
    cfg.stream_tag = 2;
    const double b = pghe_operator(id, op, id, cfg).value;
    CHECK(a != b);
  }
}

TEST_CASE("resource report aggregates and the empty case is all zero") {
  const ResourceReport empty = resource_report({});
  CHECK(empty.n_circuits == 0);
  CHECK(empty.n_measurements == 0);
  CHECK(empty.max_depth == 0);

  EstimatorConfig cfg;
  cfg.mode = EstimatorConfig::Mode::sampled;
  cfg.shots = 16;
  PauliSum op(2);
  op.add(PauliTerm::from_string(2, "XZ"), 1.0);
  op.add(PauliTerm::from_string(2, "ZZ"), 0.5);
  const PauliSum id = PauliSum::identity(2);
  const auto res = pghe_operator(id, op, id, cfg);
  const auto rep =
      resource_report(std::vector<EstimatorResult>{res, res});
  CHECK(rep.n_circuits == 2 * res.n_circuits);
  CHECK(res.n_measurements == res.n_circuits * 16 * 2);
  CHECK(rep.n_entangling_gates == 0);
  CHECK(rep.max_depth <= 2);
}
