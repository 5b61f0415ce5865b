// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "scgvb/structures.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace scgvb {

std::uint64_t spin_count(int n, int twice_s) {
  require(n >= 1, "need at least one electron");
  require(twice_s >= 0 && twice_s <= n, "total spin must lie in [0, N/2]");
  require((n - twice_s) % 2 == 0, "spin parity must match electron count");
  // f_S^N = C(N, N/2-S) - C(N, N/2-S-1)
  auto binom = [](int nn, int kk) -> std::uint64_t {
    if (kk < 0 || kk > nn) return 0;
    kk = std::min(kk, nn - kk);
    std::uint64_t acc = 1;
    for (int i = 1; i <= kk; ++i) {
      require(acc <= UINT64_MAX / static_cast<std::uint64_t>(nn - kk + i),
              "spin_count overflow");
      acc = acc * (nn - kk + i) / i;
    }
    return acc;
  };
  const int k = (n - twice_s) / 2;
  return binom(n, k) - binom(n, k - 1);
}

std::vector<SpinPrimitive> expand_pairing(const PairingPattern& pattern) {
  const int n_pairs = static_cast<int>(pattern.pairs.size());
  require(n_pairs >= 1, "empty pairing pattern");
  std::uint32_t covered = 0;
  for (const auto& [i, j] : pattern.pairs) {
    require(i >= 1 && j >= 1 && i < j, "pair indices must satisfy 1 <= i < j");
    const std::uint32_t bits = (1u << (i - 1)) | (1u << (j - 1));
    require((covered & bits) == 0, "overlapping pairs");
    covered |= bits;
  }
  require(covered == (n_pairs >= 16 ? ~0u : (1u << (2 * n_pairs)) - 1),
          "pairs must cover electrons 1..N");

  std::vector<SpinPrimitive> out;
  out.reserve(std::size_t{1} << n_pairs);
  for (std::uint32_t choice = 0; choice < (1u << n_pairs); ++choice) {
    SpinPrimitive prim;
    for (int k = 0; k < n_pairs; ++k) {
      const auto& [i, j] = pattern.pairs[k];
      // the last pair varies fastest, fixing the conventional primitive order
      if (choice & (1u << (n_pairs - 1 - k))) {
        // beta alpha branch, sign -1
        prim.beta_pattern |= 1u << (i - 1);
        prim.coefficient = -prim.coefficient;
      } else {
        prim.beta_pattern |= 1u << (j - 1);
      }
    }
    out.push_back(prim);
  }
  return out;
}

std::vector<PairingPattern> noncrossing_pairings(int n) {
  require(n >= 2 && n % 2 == 0, "need an even electron count");
  std::vector<PairingPattern> out;
  PairingPattern current;
  std::vector<bool> used(n + 1, false);
  auto crossing = [&](int i, int j) {
    for (const auto& [a, b] : current.pairs)
      if ((a < i && i < b && b < j) || (i < a && a < j && j < b)) return true;
    return false;
  };
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    for (int e = 1; e <= n; ++e)
      if (!used[e]) {
        first = e;
        break;
      }
    if (first == 0) {
      out.push_back(current);
      return;
    }
    for (int j = first + 1; j <= n; ++j) {
      if (used[j] || crossing(first, j)) continue;
      used[first] = used[j] = true;
      current.pairs.push_back({first, j});
      self(self);
      current.pairs.pop_back();
      used[first] = used[j] = false;
    }
  };
  rec(rec);
  return out;
}

std::string Determinant::occ_string(int n_so) const {
  std::string s(n_so, '0');
  for (int q = 1; q <= n_so; ++q)
    if (occ & (std::uint64_t{1} << (q - 1))) s[q - 1] = '1';
  return s;
}

StructureBasis build_determinant_basis(
    int n_orbitals, std::span<const PairingPattern> patterns) {
  const int M = n_orbitals;
  const int N = M;  // one electron per orbital
  require(M >= 1 && 2 * M <= 64, "orbital count out of range");
  require(!patterns.empty(), "need at least one pairing pattern");

  StructureBasis basis;
  basis.n_orb = M;
  std::map<std::uint64_t, int> index_of;
  std::vector<std::map<int, int>> rows(patterns.size());

  for (std::size_t k = 0; k < patterns.size(); ++k) {
    for (const auto& [i, j] : patterns[k].pairs)
      require(j <= N, "pairing pattern exceeds electron count");
    require(2 * static_cast<int>(patterns[k].pairs.size()) == N,
            "unsupported N != M configuration");
    for (const SpinPrimitive& prim : expand_pairing(patterns[k])) {
      // electron e occupies orbital e with the primitive's spin
      std::vector<int> slots(N);
      for (int e = 1; e <= N; ++e)
        slots[e - 1] = (prim.beta_pattern & (1u << (e - 1))) ? e + M : e;
      int inversions = 0;
      for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
          if (slots[a] > slots[b]) ++inversions;
      std::uint64_t occ = 0;
      for (int so : slots) occ |= std::uint64_t{1} << (so - 1);

      auto [it, fresh] =
          index_of.try_emplace(occ, static_cast<int>(basis.determinants.size()));
      if (fresh) {
        Determinant d;
        d.occ = occ;
        d.occ_list = slots;
        std::sort(d.occ_list.begin(), d.occ_list.end());
        for (int so : d.occ_list)
          d.f_string.push_back({FermionKind::create, so});
        for (auto rit = d.occ_list.rbegin(); rit != d.occ_list.rend(); ++rit)
          d.w_string.push_back({FermionKind::annihilate_adjoint, *rit});
        d.sign = (inversions % 2 == 0) ? 1 : -1;
        d.label = static_cast<int>(basis.determinants.size()) + 1;
        basis.determinants.push_back(std::move(d));
      }
      rows[k][it->second] += prim.coefficient;
    }
  }

  const int nd = static_cast<int>(basis.determinants.size());
  basis.structure_coeffs.setZero(static_cast<int>(patterns.size()), nd);
  for (std::size_t k = 0; k < patterns.size(); ++k)
    for (const auto& [idx, c] : rows[k])
      basis.structure_coeffs(static_cast<int>(k), idx) = c;
  return basis;
}

Eigen::MatrixXd contract_to_structures(const Eigen::MatrixXd& det_matrix,
                                       const StructureBasis& basis) {
  const int nd = static_cast<int>(basis.determinants.size());
  require(det_matrix.rows() == nd && det_matrix.cols() == nd,
          "determinant matrix shape mismatch");
  const Eigen::MatrixXd B = basis.structure_coeffs.cast<double>();
  const int k = static_cast<int>(B.rows());
  // each unordered pair is evaluated once so a symmetric input yields a
  // bit-exact symmetric output
  Eigen::MatrixXd out(k, k);
  const bool symmetric_in =
      (det_matrix - det_matrix.transpose()).cwiseAbs().maxCoeff() == 0.0;
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b) {
      out(a, b) = B.row(a) * det_matrix * B.row(b).transpose();
      out(b, a) = symmetric_in
                      ? out(a, b)
                      : double(B.row(b) * det_matrix * B.row(a).transpose());
    }
  return out;
}

std::string structure_basis_json(const StructureBasis& basis) {
  nlohmann::json j;
  j["n_orbitals"] = basis.n_orb;
  j["n_spin_orbitals"] = basis.n_so();
  j["determinants"] = nlohmann::json::array();
  for (const auto& d : basis.determinants)
    j["determinants"].push_back({{"label", d.label},
                                 {"occupation", d.occ_string(basis.n_so())},
                                 {"sign", d.sign}});
  j["structure_coeffs"] = nlohmann::json::array();
  for (int k = 0; k < basis.structure_coeffs.rows(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < basis.structure_coeffs.cols(); ++i)
      row.push_back(basis.structure_coeffs(k, i));
    j["structure_coeffs"].push_back(row);
  }
  return j.dump(1);
}

}  // namespace scgvb
