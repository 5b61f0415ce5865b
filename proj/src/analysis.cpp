// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "scgvb/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scgvb {

void jacobi_eigh(const Eigen::MatrixXd& A, Eigen::VectorXd& eigenvalues,
                 Eigen::MatrixXd& V) {
  const int n = static_cast<int>(A.rows());
  require(A.cols() == n, "matrix must be square");
  require((A - A.transpose()).cwiseAbs().maxCoeff() <=
              1e-10 * std::max(1.0, A.cwiseAbs().maxCoeff()),
          "matrix must be symmetric");
  Eigen::MatrixXd M = 0.5 * (A + A.transpose());
  V = Eigen::MatrixXd::Identity(n, n);
  const double norm = std::max(M.norm(), 1e-300);

  auto off_norm = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2 * M(i, j) * M(i, j);
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-14 * norm; ++sweep) {
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (M(p, q) == 0.0) continue;
        const double theta = (M(q, q) - M(p, p)) / (2.0 * M(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double mkp = M(k, p), mkq = M(k, q);
          M(k, p) = c * mkp - s * mkq;
          M(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = M(p, k), mqk = M(q, k);
          M(p, k) = c * mpk - s * mqk;
          M(q, k) = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
  }

  eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) eigenvalues(i) = M(i, i);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return eigenvalues(a) < eigenvalues(b);
  });
  Eigen::VectorXd ev(n);
  Eigen::MatrixXd W(n, n);
  for (int i = 0; i < n; ++i) {
    ev(i) = eigenvalues(order[i]);
    W.col(i) = V.col(order[i]);
  }
  eigenvalues = ev;
  V = W;
}

Eigen::MatrixXd inverse_sqrt(const Eigen::MatrixXd& S, double lindep_tol) {
  Eigen::VectorXd lam;
  Eigen::MatrixXd V;
  jacobi_eigh(S, lam, V);
  require(lam.minCoeff() >= lindep_tol,
          "near-linear dependencies in the VB basis (overlap eigenvalue " +
              std::to_string(lam.minCoeff()) + " below tolerance)");
  return V * lam.cwiseInverse().cwiseSqrt().asDiagonal() * V.transpose();
}

SpectralSolution solve_generalized(const Eigen::MatrixXd& H,
                                   const Eigen::MatrixXd& S,
                                   double lindep_tol) {
  SpectralSolution sol;
  sol.X = inverse_sqrt(S, lindep_tol);
  {
    Eigen::VectorXd lam;
    Eigen::MatrixXd V;
    jacobi_eigh(S, lam, V);
    sol.smallest_overlap_eigenvalue = lam.minCoeff();
  }
  const Eigen::MatrixXd Hp = sol.X.transpose() * H * sol.X;
  Eigen::MatrixXd Vp;
  jacobi_eigh(Hp, sol.eigenvalues, Vp);
  sol.C_prime = Vp;
  sol.C = sol.X * Vp;
  // per-column sign: largest-|C| entry positive
  for (int j = 0; j < sol.C.cols(); ++j) {
    int arg = 0;
    for (int i = 1; i < sol.C.rows(); ++i)
      if (std::abs(sol.C(i, j)) > std::abs(sol.C(arg, j))) arg = i;
    if (sol.C(arg, j) < 0) {
      sol.C.col(j) *= -1.0;
      sol.C_prime.col(j) *= -1.0;
    }
  }
  return sol;
}

WeightReport chirgwin_coulson(const Eigen::VectorXd& C,
                              const Eigen::MatrixXd& S) {
  WeightReport rep;
  Eigen::VectorXd c = C;
  const double norm2 = c.dot(S * c);
  require(norm2 > 0, "state has nonpositive norm");
  if (std::abs(norm2 - 1.0) > 1e-10) {
    c /= std::sqrt(norm2);
    rep.renormalized = true;
  }
  const Eigen::VectorXd Sc = S * c;
  rep.cc = c.cwiseProduct(Sc);
  rep.cc_sum = rep.cc.sum();
  for (int i = 0; i < rep.cc.size(); ++i)
    if (rep.cc(i) < 0.0 || rep.cc(i) > 1.0) rep.cc_out_of_range = true;
  return rep;
}

void alternative_weights(const Eigen::VectorXd& C, const Eigen::MatrixXd& S,
                         WeightReport& report) {
  Eigen::VectorXd c = C;
  const double norm2 = c.dot(S * c);
  require(norm2 > 0, "state has nonpositive norm");
  if (std::abs(norm2 - 1.0) > 1e-10) c /= std::sqrt(norm2);

  Eigen::VectorXd lam;
  Eigen::MatrixXd V;
  jacobi_eigh(S, lam, V);
  require(lam.minCoeff() > 0, "singular overlap for alternative weights");
  const Eigen::MatrixXd s_half =
      V * lam.cwiseSqrt().asDiagonal() * V.transpose();
  const Eigen::VectorXd t = s_half * c;
  report.lowdin = t.cwiseProduct(t);

  const Eigen::MatrixXd s_inv =
      V * lam.cwiseInverse().asDiagonal() * V.transpose();
  Eigen::VectorXd w(c.size());
  for (int i = 0; i < c.size(); ++i) w(i) = c(i) * c(i) / s_inv(i, i);
  report.inverse = w / w.sum();
}

}  // namespace scgvb
