// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "scgvb/nojw.hpp"

#include <vector>

namespace scgvb {

namespace {

PauliSum ladder(int p, int n, double y_sign) {
  require(p >= 1 && p <= n, "spin-orbital index out of range");
  const std::uint64_t zstring = (std::uint64_t{1} << (p - 1)) - 1;
  const std::uint64_t site = std::uint64_t{1} << (p - 1);
  PauliSum out(n);
  out.add(PauliKey{site, zstring}, cxd{0.5, 0.0});            // X component
  out.add(PauliKey{site, zstring | site}, cxd{0.0, 0.5 * y_sign});  // Y
  return out;
}

}  // namespace

PauliSum map_creation(int p, int n) { return ladder(p, n, -1.0); }

PauliSum map_annihilation_jw(int p, int n) { return ladder(p, n, +1.0); }

PauliSum map_annihilation_no(int p, const Eigen::MatrixXd& S_so,
                             double prune_tol) {
  const int n = static_cast<int>(S_so.rows());
  require(S_so.cols() == n, "overlap matrix must be square");
  require(p >= 1 && p <= n, "spin-orbital index out of range");
  PauliSum out(n);
  for (int q = 1; q <= n; ++q) {
    const double w = S_so(p - 1, q - 1);
    if (w == 0.0) continue;
    PauliSum jw = map_annihilation_jw(q, n);
    jw *= w;
    out += jw;
  }
  out.prune(prune_tol);
  return out;
}

PauliSum map_operator_string(std::span<const FermionOpSpec> ops,
                             const Eigen::MatrixXd& S_so, double prune_tol) {
  require(!ops.empty(), "empty operator list");
  const int n = static_cast<int>(S_so.rows());
  auto image = [&](const FermionOpSpec& op) {
    switch (op.kind) {
      case FermionKind::create: return map_creation(op.index, n);
      case FermionKind::annihilate_adjoint:
        return map_annihilation_no(op.index, S_so, prune_tol);
      case FermionKind::annihilate_biorth:
        return map_annihilation_jw(op.index, n);
    }
    throw Error("unknown fermion operator kind");
  };
  PauliSum acc = image(ops[0]);
  for (std::size_t i = 1; i < ops.size(); ++i)
    acc = sum_mul(acc, image(ops[i]), prune_tol);
  return acc;
}

HamiltonianEncoding map_hamiltonian(const SpinOrbitalIntegrals& so,
                                    HamiltonianScheme scheme,
                                    double prune_tol) {
  const int n = so.n_so;
  require(n >= 1 && n <= 64, "register size out of range");

  HamiltonianEncoding enc;
  enc.scheme = scheme;
  enc.one_body = PauliSum(n);
  enc.two_body = PauliSum(n);

  const bool biorth = scheme == HamiltonianScheme::biorthogonal;
  Eigen::MatrixXd s_inv;
  if (biorth) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(so.S);
    require(lu.isInvertible(), "singular overlap in biorthogonal scheme");
    s_inv = lu.inverse();
  }

  // effective one-body matrix and annihilation images per scheme
  Eigen::MatrixXd h_eff = biorth ? Eigen::MatrixXd(s_inv * so.h) : so.h;
  std::vector<PauliSum> annih;
  annih.reserve(n);
  for (int q = 1; q <= n; ++q)
    annih.push_back(biorth ? map_annihilation_jw(q, n)
                           : map_annihilation_no(q, so.S, prune_tol));
  std::vector<PauliSum> create;
  create.reserve(n);
  for (int p = 1; p <= n; ++p) create.push_back(map_creation(p, n));

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (h_eff(p, q) == 0.0) continue;
      PauliSum term = sum_mul(create[p], annih[q], 0.0);
      enc.raw_product_count += create[p].size() * annih[q].size();
      term *= h_eff(p, q);
      enc.one_body += term;
    }
  enc.one_body.prune(prune_tol);

  // antisymmetrized two-electron tensor, bra indices contracted with S^{-1}
  // in the biorthogonal scheme
  const auto ga = [&](int p, int q, int r, int s) {
    return so.g_phys_antisym(p, q, r, s);
  };
  std::vector<double> g_eff;
  if (biorth) {
    g_eff.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) {
        Eigen::MatrixXd block(n, n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) block(a, b) = ga(a, b, r, s);
        const Eigen::MatrixXd t = s_inv * block * s_inv.transpose();
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q)
            g_eff[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s] =
                t(p, q);
      }
  }
  auto g_two = [&](int p, int q, int r, int s) {
    return biorth
               ? g_eff[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s]
               : ga(p, q, r, s);
  };

  std::vector<PauliSum> cc;  // create[p] * create[q], row-major cache
  cc.reserve(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      cc.push_back(sum_mul(create[p], create[q], 0.0));
  std::vector<PauliSum> aa;  // annih[s] * annih[r]
  aa.reserve(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r)
      aa.push_back(sum_mul(annih[s], annih[r], prune_tol));

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (r == s) continue;
          const double w = 0.5 * g_two(p, q, r, s);
          if (w == 0.0) continue;
          const PauliSum& left = cc[static_cast<std::size_t>(p) * n + q];
          const PauliSum& right = aa[static_cast<std::size_t>(s) * n + r];
          PauliSum term = sum_mul(left, right, 0.0);
          enc.raw_product_count += left.size() * right.size();
          term *= w;
          enc.two_body += term;
        }
    }
  enc.two_body.prune(prune_tol);

  enc.qubit_op = enc.one_body;
  enc.qubit_op += enc.two_body;
  enc.qubit_op.prune(prune_tol);
  enc.term_count = enc.qubit_op.size();
  enc.coefficient_imag_max = enc.qubit_op.max_imag_coefficient();
  return enc;
}

}  // namespace scgvb
