// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "scgvb/oracle.hpp"

#include <bit>
#include <cmath>

namespace scgvb {

namespace {

double det_of(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 1.0;
  if (m.rows() == 1) return m(0, 0);
  if (m.rows() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return Eigen::FullPivLU<Eigen::MatrixXd>(m).determinant();
}

Eigen::MatrixXd drop_rows_cols(const Eigen::MatrixXd& m,
                               std::initializer_list<int> rows,
                               std::initializer_list<int> cols) {
  const int n = static_cast<int>(m.rows());
  const int nr = n - static_cast<int>(rows.size());
  Eigen::MatrixXd out(nr, nr);
  int ri = 0;
  for (int r = 0; r < n; ++r) {
    if (std::find(rows.begin(), rows.end(), r) != rows.end()) continue;
    int ci = 0;
    for (int c = 0; c < n; ++c) {
      if (std::find(cols.begin(), cols.end(), c) != cols.end()) continue;
      out(ri, ci++) = m(r, c);
    }
    ++ri;
  }
  return out;
}

int jw_parity(std::uint64_t occ, int site) {
  return std::popcount(occ & ((std::uint64_t{1} << site) - 1)) % 2 == 0 ? 1
                                                                        : -1;
}

}  // namespace

Eigen::MatrixXd occupied_overlap(const Determinant& bra, const Determinant& ket,
                                 const Eigen::MatrixXd& S_so) {
  require(bra.n_electrons() == ket.n_electrons(), "electron-count mismatch");
  const int N = bra.n_electrons();
  Eigen::MatrixXd O(N, N);
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l)
      O(k, l) = S_so(bra.occ_list[k] - 1, ket.occ_list[l] - 1);
  return O;
}

double lowdin_overlap(const Determinant& bra, const Determinant& ket,
                      const Eigen::MatrixXd& S_so) {
  return bra.sign * ket.sign * det_of(occupied_overlap(bra, ket, S_so));
}

double lowdin_matrix_element(const Determinant& bra, const Determinant& ket,
                             const SpinOrbitalIntegrals& so) {
  require(bra.n_electrons() == ket.n_electrons(), "electron-count mismatch");
  const int N = bra.n_electrons();
  const Eigen::MatrixXd O = occupied_overlap(bra, ket, so.S);

  double one = 0.0;
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l) {
      const double h = so.h(bra.occ_list[k] - 1, ket.occ_list[l] - 1);
      if (h == 0.0) continue;
      const double c1 = ((k + l) % 2 ? -1.0 : 1.0) *
                        det_of(drop_rows_cols(O, {k}, {l}));
      one += h * c1;
    }

  double two = 0.0;
  for (int k = 0; k < N; ++k)
    for (int kp = k + 1; kp < N; ++kp)
      for (int l = 0; l < N; ++l)
        for (int lp = l + 1; lp < N; ++lp) {
          const double g = so.g_phys_antisym(
              bra.occ_list[k] - 1, bra.occ_list[kp] - 1, ket.occ_list[l] - 1,
              ket.occ_list[lp] - 1);
          if (g == 0.0) continue;
          const double c2 = ((k + kp + l + lp) % 2 ? -1.0 : 1.0) *
                            det_of(drop_rows_cols(O, {k, kp}, {l, lp}));
          two += g * c2;
        }

  // 2 * sum over unordered pairs == (1/2) * sum over ordered pairs of the
  // antisymmetrized tensor
  return bra.sign * ket.sign * (one + 2.0 * two);
}

FockSpace::FockSpace(const SpinOrbitalIntegrals& so) : n_(so.n_so) {
  require(n_ >= 1 && n_ <= 14, "Fock-space oracle capped at 14 spin orbitals");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(so.S);
  require(es.eigenvalues().minCoeff() > 0.0, "overlap not positive definite");
  const Eigen::VectorXd lam = es.eigenvalues();
  const Eigen::MatrixXd& V = es.eigenvectors();
  s_half_ = V * lam.cwiseSqrt().asDiagonal() * V.transpose();
  s_inv_half_ = V * lam.cwiseSqrt().cwiseInverse().asDiagonal() * V.transpose();

  h_orth_ = s_inv_half_ * so.h * s_inv_half_;

  // four-index transform of the antisymmetrized tensor, one slot at a time
  const std::size_t n4 = static_cast<std::size_t>(n_) * n_ * n_ * n_;
  std::vector<double> t(n4), u(n4);
  auto at = [this](std::vector<double>& v, int p, int q, int r,
                   int s) -> double& {
    return v[((static_cast<std::size_t>(p) * n_ + q) * n_ + r) * n_ + s];
  };
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q < n_; ++q)
      for (int r = 0; r < n_; ++r)
        for (int s = 0; s < n_; ++s)
          at(t, p, q, r, s) = so.g_phys_antisym(p, q, r, s);
  auto contract_slot = [&](std::vector<double>& src, std::vector<double>& dst,
                           int slot) {
    std::fill(dst.begin(), dst.end(), 0.0);
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q)
        for (int r = 0; r < n_; ++r)
          for (int s = 0; s < n_; ++s) {
            const double v = at(src, p, q, r, s);
            if (v == 0.0) continue;
            const int idx[4] = {p, q, r, s};
            for (int a = 0; a < n_; ++a) {
              int j[4] = {p, q, r, s};
              j[slot] = a;
              at(dst, j[0], j[1], j[2], j[3]) +=
                  v * s_inv_half_(idx[slot], a);
            }
          }
  };
  contract_slot(t, u, 0);
  contract_slot(u, t, 1);
  contract_slot(t, u, 2);
  contract_slot(u, t, 3);
  ga_orth_ = std::move(t);
}

double FockSpace::ga_at(int p, int q, int r, int s) const {
  return ga_orth_[((static_cast<std::size_t>(p) * n_ + q) * n_ + r) * n_ + s];
}

Eigen::VectorXd FockSpace::state(const Determinant& d) const {
  const std::size_t dim = std::size_t{1} << n_;
  Eigen::VectorXd vec = Eigen::VectorXd::Zero(dim);
  vec(0) = d.sign;
  for (auto it = d.occ_list.rbegin(); it != d.occ_list.rend(); ++it) {
    const int p = *it - 1;
    Eigen::VectorXd next = Eigen::VectorXd::Zero(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
      const double amp = vec(idx);
      if (amp == 0.0) continue;
      for (int q = 0; q < n_; ++q) {
        const double w = s_half_(q, p);
        if (w == 0.0) continue;
        if (idx & (std::uint64_t{1} << q)) continue;
        next(idx | (std::uint64_t{1} << q)) +=
            w * jw_parity(idx, q) * amp;
      }
    }
    vec.swap(next);
  }
  return vec;
}

Eigen::VectorXd FockSpace::apply_hamiltonian(const Eigen::VectorXd& v) const {
  const std::size_t dim = std::size_t{1} << n_;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const double amp = v(idx);
    if (amp == 0.0) continue;
    // one-body
    for (int q = 0; q < n_; ++q) {
      if (!(idx & (std::uint64_t{1} << q))) continue;
      const std::uint64_t idx1 = idx & ~(std::uint64_t{1} << q);
      const int s1 = jw_parity(idx, q);
      for (int p = 0; p < n_; ++p) {
        if (idx1 & (std::uint64_t{1} << p)) continue;
        const double h = h_orth_(p, q);
        if (h == 0.0) continue;
        out(idx1 | (std::uint64_t{1} << p)) +=
            h * s1 * jw_parity(idx1, p) * amp;
      }
    }
    // two-body: (1/2) sum ga_pqrs c+_p c+_q c_s c_r
    for (int r = 0; r < n_; ++r) {
      if (!(idx & (std::uint64_t{1} << r))) continue;
      const std::uint64_t ir = idx & ~(std::uint64_t{1} << r);
      const int sr = jw_parity(idx, r);
      for (int s = 0; s < n_; ++s) {
        if (!(ir & (std::uint64_t{1} << s))) continue;
        const std::uint64_t is = ir & ~(std::uint64_t{1} << s);
        const int ss = jw_parity(ir, s);
        for (int q = 0; q < n_; ++q) {
          if (is & (std::uint64_t{1} << q)) continue;
          const std::uint64_t iq = is | (std::uint64_t{1} << q);
          const int sq = jw_parity(is, q);
          for (int p = 0; p < n_; ++p) {
            if (iq & (std::uint64_t{1} << p)) continue;
            const double g = ga_at(p, q, r, s);
            if (g == 0.0) continue;
            out(iq | (std::uint64_t{1} << p)) +=
                0.5 * g * sr * ss * sq * jw_parity(iq, p) * amp;
          }
        }
      }
    }
  }
  return out;
}

double FockSpace::matrix_element(const Determinant& bra, const Determinant& ket,
                                 FockOperator op) const {
  const Eigen::VectorXd vb = state(bra);
  const Eigen::VectorXd vk = state(ket);
  if (op == FockOperator::overlap) return vb.dot(vk);
  return vb.dot(apply_hamiltonian(vk));
}

double fock_matrix_element(const Determinant& bra, const Determinant& ket,
                           const SpinOrbitalIntegrals& so, FockOperator op) {
  require(bra.n_electrons() == ket.n_electrons(), "electron-count mismatch");
  return FockSpace(so).matrix_element(bra, ket, op);
}

}  // namespace scgvb
