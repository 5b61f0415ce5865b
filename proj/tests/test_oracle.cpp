// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "golden_h4.hpp"
#include "h4_fixture.hpp"
#include "scgvb/oracle.hpp"
#include "test_oracles.hpp"

using namespace scgvb;
using scgvb::testing::H4Fixture;
using scgvb::testing::unique_index;

namespace {

Determinant make_det(std::vector<int> occ, int sign = 1) {
  Determinant d;
  d.occ_list = std::move(occ);
  d.sign = sign;
  for (int so : d.occ_list) {
    d.occ |= std::uint64_t{1} << (so - 1);
    d.f_string.push_back({FermionKind::create, so});
  }
  for (auto it = d.occ_list.rbegin(); it != d.occ_list.rend(); ++it)
    d.w_string.push_back({FermionKind::annihilate_adjoint, *it});
  return d;
}

}  // namespace

TEST_CASE("identical determinants with orthonormal orbitals overlap to 1") {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(6, 6);
  const Determinant d = make_det({1, 4, 5});
  CHECK(lowdin_overlap(d, d, id) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("occupied overlap draws bra rows and ket columns") {
  Eigen::MatrixXd S = Eigen::MatrixXd::Identity(4, 4);
  S(0, 2) = S(2, 0) = 0.5;
  const Determinant bra = make_det({1, 2});
  const Determinant ket = make_det({2, 3});
  const Eigen::MatrixXd O = occupied_overlap(bra, ket, S);
  CHECK(O(0, 0) == 0.0);  // <1|2>
  CHECK(O(0, 1) == 0.5);  // <1|3>
  CHECK(O(1, 0) == 1.0);  // <2|2>
  CHECK(O(1, 1) == 0.0);  // <2|3>
  CHECK_THROWS_AS((void)lowdin_overlap(bra, make_det({1}), S), Error);
}

TEST_CASE("square-H4 overlaps reproduce the golden table") {
  const auto& f = H4Fixture::square();
  for (int i = 1; i <= 6; ++i)
    for (int j = i; j <= 6; ++j) {
      const double v = lowdin_overlap(f.basis.determinants[i - 1],
                                      f.basis.determinants[j - 1], f.so.S);
      CHECK(v == doctest::Approx(
                     scgvb::testing::kSquareOverlap[unique_index(i, j)])
                     .epsilon(2e-6));
      CHECK(v == doctest::Approx(lowdin_overlap(f.basis.determinants[j - 1],
                                                f.basis.determinants[i - 1],
                                                f.so.S))
                     .epsilon(1e-14));
    }
  // disjoint spin sectors
  CHECK(std::abs(lowdin_overlap(f.basis.determinants[0],
                                f.basis.determinants[3], f.so.S)) <= 1e-12);
}

TEST_CASE("square-H4 matrix elements reproduce the golden table") {
  const auto& f = H4Fixture::square();
  for (int i = 1; i <= 6; ++i)
    for (int j = i; j <= 6; ++j) {
      const double v = lowdin_matrix_element(
          f.basis.determinants[i - 1], f.basis.determinants[j - 1], f.so);
      const double want =
          scgvb::testing::kSquareHamiltonian[unique_index(i, j)];
      CHECK(std::abs(v - want) <= 1e-6);
    }
}

TEST_CASE("rectangular 0.88 tables agree as well") {
  const auto& f = H4Fixture::rect088();
  for (int i = 1; i <= 6; ++i)
    for (int j = i; j <= 6; ++j) {
      CHECK(std::abs(lowdin_overlap(f.basis.determinants[i - 1],
                                    f.basis.determinants[j - 1], f.so.S) -
                     scgvb::testing::kRect088Overlap[unique_index(i, j)]) <=
            1e-6);
      CHECK(std::abs(lowdin_matrix_element(f.basis.determinants[i - 1],
                                           f.basis.determinants[j - 1],
                                           f.so) -
                     scgvb::testing::kRect088Hamiltonian[unique_index(i, j)]) <=
            1e-6);
    }
}

TEST_CASE("zero integrals give zero matrix elements") {
  const auto& f = H4Fixture::square();
  SpinOrbitalIntegrals so = f.so;
  so.h.setZero();
  std::fill(so.g.begin(), so.g.end(), 0.0);
  for (int i = 0; i < 6; ++i)
    CHECK(lowdin_matrix_element(f.basis.determinants[0],
                                f.basis.determinants[i], so) == 0.0);
}

TEST_CASE("both oracles agree on every square-H4 pair") {
  const auto& f = H4Fixture::square();
  const FockSpace fock(f.so);
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      const auto& bi = f.basis.determinants[i];
      const auto& bj = f.basis.determinants[j];
      CHECK(std::abs(lowdin_overlap(bi, bj, f.so.S) -
                     fock.matrix_element(bi, bj, FockOperator::overlap)) <=
            1e-12);
      CHECK(std::abs(lowdin_matrix_element(bi, bj, f.so) -
                     fock.matrix_element(bi, bj, FockOperator::hamiltonian)) <=
            1e-10);
    }
}

TEST_CASE("orthonormal orbitals reduce the Fock oracle to ladder rules") {
  // hand-evaluated two-orbital expectation values under the toolkit's
  // two-electron convention (antisymmetrized tensor with a 1/2 prefactor)
  RngStream rng(61, 0);
  for (int trial = 0; trial < 20; ++trial) {
    auto mi = scgvb::testing::random_test_system(2, rng);
    mi.S = Eigen::MatrixXd::Identity(2, 2);
    const auto so = to_spin_orbitals(mi);

    // diagonal on |1 3>
    const Determinant d13 = make_det({1, 3});
    double want = so.h(0, 0) + so.h(2, 2) + 2.0 * so.g_phys_antisym(0, 2, 0, 2);
    CHECK(fock_matrix_element(d13, d13, so, FockOperator::hamiltonian) ==
          doctest::Approx(want).epsilon(1e-11));

    // single excitation |1 3> -> |2 3>
    const Determinant d23 = make_det({2, 3});
    want = so.h(1, 0) + 2.0 * so.g_phys_antisym(1, 2, 0, 2);
    CHECK(fock_matrix_element(d23, d13, so, FockOperator::hamiltonian) ==
          doctest::Approx(want).epsilon(1e-11));

    // double excitation |1 3> -> |2 4>
    const Determinant d24 = make_det({2, 4});
    want = 2.0 * so.g_phys_antisym(1, 3, 0, 2);
    CHECK(fock_matrix_element(d24, d13, so, FockOperator::hamiltonian) ==
          doctest::Approx(want).epsilon(1e-11));
  }
}

TEST_CASE("scaling one occupied orbital scales the norm quadratically") {
  const auto& f = H4Fixture::square();
  for (double lambda : {0.5, 2.0}) {
    Eigen::MatrixXd S = f.so.S;
    const int orb = 2;  // spin orbital 3 occupies det 1
    S.row(orb) *= lambda;
    S.col(orb) *= lambda;
    const auto& d = f.basis.determinants[0];
    CHECK(lowdin_overlap(d, d, S) ==
          doctest::Approx(lambda * lambda *
                          lowdin_overlap(d, d, f.so.S))
              .epsilon(1e-12));
  }
}

TEST_CASE("oracle equivalence on random nonorthogonal systems") {
  RngStream rng(62, 1);
  for (int trial = 0; trial < 25; ++trial) {
    const int M = 2 + static_cast<int>(rng.next_u64() % 3);
    const auto mi = scgvb::testing::random_test_system(M, rng);
    const auto so = to_spin_orbitals(mi);
    const int nel = 1 + static_cast<int>(rng.next_u64() % (2 * M));
    auto pick = [&]() {
      std::vector<int> occ;
      while (static_cast<int>(occ.size()) < nel) {
        const int c = 1 + static_cast<int>(rng.next_u64() % (2 * M));
        if (std::find(occ.begin(), occ.end(), c) == occ.end())
          occ.push_back(c);
      }
      std::sort(occ.begin(), occ.end());
      return occ;
    };
    const Determinant bra = make_det(pick());
    const Determinant ket = make_det(pick());
    const FockSpace fock(so);
    CHECK(std::abs(lowdin_overlap(bra, ket, so.S) -
                   fock.matrix_element(bra, ket, FockOperator::overlap)) <=
          1e-10);
    CHECK(std::abs(lowdin_matrix_element(bra, ket, so) -
                   fock.matrix_element(bra, ket, FockOperator::hamiltonian)) <=
          1e-10);
  }
}

TEST_CASE("Fock oracle dimension cap") {
  SpinOrbitalIntegrals so;
  so.n_so = 16;
  so.S = Eigen::MatrixXd::Identity(16, 16);
  so.h = Eigen::MatrixXd::Zero(16, 16);
  so.g.assign(std::size_t{16} * 16 * 16 * 16, 0.0);
  CHECK_THROWS_AS((void)FockSpace(so), Error);
}
