// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "scgvb/integrals.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace scgvb {

namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;

// STO-3G hydrogen 1s: three primitives on a zeta = 1.24 scaled Slater fit.
// The same six constants live in data/sto-3g.json for cross-checking.
constexpr std::array<double, 3> kH1sExp = {3.42525091, 0.62391373, 0.16885540};
constexpr std::array<double, 3> kH1sCoef = {0.15432897, 0.53532814,
                                            0.44463454};

struct Shell {
  Eigen::Vector3d center;  // bohr
  std::array<double, 3> exp;
  std::array<double, 3> coef;  // includes primitive norms and AO normalization
};

double primitive_norm(double a) { return std::pow(2.0 * a / kPi, 0.75); }

std::vector<Shell> make_basis(const Geometry& geom) {
  // contraction coefficients scaled so the contracted AO self-overlap is 1
  double raw = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      raw += kH1sCoef[i] * primitive_norm(kH1sExp[i]) * kH1sCoef[j] *
             primitive_norm(kH1sExp[j]) *
             std::pow(kPi / (kH1sExp[i] + kH1sExp[j]), 1.5);
  const double scale = 1.0 / std::sqrt(raw);

  std::vector<Shell> shells;
  shells.reserve(geom.size());
  for (std::size_t a = 0; a < geom.size(); ++a) {
    Shell s;
    s.center = geom.position_bohr(a);
    s.exp = kH1sExp;
    for (int i = 0; i < 3; ++i)
      s.coef[i] = kH1sCoef[i] * primitive_norm(kH1sExp[i]) * scale;
    shells.push_back(s);
  }
  return shells;
}

}  // namespace

Eigen::Vector3d Geometry::position_bohr(std::size_t i) const {
  return in_bohr ? atoms[i].position
                 : atoms[i].position * kBohrPerAngstrom;
}

Geometry parse_xyz(const std::string& text, bool in_bohr) {
  Geometry g;
  g.in_bohr = in_bohr;
  std::istringstream in(text);
  std::string line;
  bool saw_count_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;
    if (!std::isalpha(static_cast<unsigned char>(tok[0]))) {
      // classic XYZ: a bare atom count followed by a free-form title line
      if (line_no == 1) {
        saw_count_header = true;
        std::getline(in, line);
        ++line_no;
      }
      continue;
    }
    double x, y, z;
    require(static_cast<bool>(ls >> x >> y >> z),
            "geometry line needs an element and three coordinates: " + line);
    g.atoms.push_back({tok, Eigen::Vector3d(x, y, z)});
  }
  (void)saw_count_header;
  require(!g.atoms.empty(), "geometry contains no atoms");
  return g;
}

Geometry load_xyz(const std::filesystem::path& path, bool in_bohr) {
  std::ifstream in(path);
  require(in.good(), "cannot open geometry file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_xyz(ss.str(), in_bohr);
}

double& MolecularIntegrals::g_at(int p, int q, int r, int s) {
  return g[((static_cast<std::size_t>(p) * n_orb + q) * n_orb + r) * n_orb + s];
}

double MolecularIntegrals::g_at(int p, int q, int r, int s) const {
  return g[((static_cast<std::size_t>(p) * n_orb + q) * n_orb + r) * n_orb + s];
}

std::pair<std::array<double, 3>, std::array<double, 3>>
sto3g_hydrogen_parameters() {
  return {kH1sExp, kH1sCoef};
}

double boys_f0(double t) {
  require(t >= 0.0 && std::isfinite(t), "boys_f0 requires finite t >= 0");
  if (t < 1e-6) return 1.0 - t / 3.0 + t * t / 10.0 - t * t * t / 42.0;
  const double st = std::sqrt(t);
  return 0.5 * std::sqrt(kPi / t) * std::erf(st);
}

MolecularIntegrals build_integrals(const Geometry& geometry,
                                   const std::string& basis_name) {
  std::string basis = basis_name;
  std::transform(basis.begin(), basis.end(), basis.begin(), ::tolower);
  require(basis == "sto-3g", "unsupported basis: " + basis_name);
  for (const auto& a : geometry.atoms)
    require(a.element == "H" || a.element == "h",
            "built-in integral engine supports H only, got " + a.element);
  for (std::size_t a = 0; a < geometry.size(); ++a)
    for (std::size_t b = a + 1; b < geometry.size(); ++b)
      require((geometry.position_bohr(a) - geometry.position_bohr(b)).norm() >
                  1e-8,
              "coincident nuclei");

  const auto shells = make_basis(geometry);
  const int M = static_cast<int>(shells.size());
  MolecularIntegrals mi;
  mi.n_orb = M;
  mi.S.setZero(M, M);
  mi.h.setZero(M, M);
  mi.g.assign(static_cast<std::size_t>(M) * M * M * M, 0.0);

  for (int p = 0; p < M; ++p) {
    for (int q = 0; q < M; ++q) {
      const Eigen::Vector3d AB = shells[p].center - shells[q].center;
      const double r2 = AB.squaredNorm();
      double s = 0, t = 0, v = 0;
      for (int i = 0; i < 3; ++i) {
        const double a = shells[p].exp[i];
        for (int j = 0; j < 3; ++j) {
          const double b = shells[q].exp[j];
          const double zeta = a + b;
          const double xi = a * b / zeta;
          const double cc = shells[p].coef[i] * shells[q].coef[j];
          const double sp = cc * std::pow(kPi / zeta, 1.5) * std::exp(-xi * r2);
          s += sp;
          t += sp * xi * (3.0 - 2.0 * xi * r2);
          const Eigen::Vector3d P =
              (a * shells[p].center + b * shells[q].center) / zeta;
          for (std::size_t c = 0; c < geometry.size(); ++c) {
            const double pc2 = (P - geometry.position_bohr(c)).squaredNorm();
            v -= cc * 2.0 * kPi / zeta * std::exp(-xi * r2) *
                 boys_f0(zeta * pc2);
          }
        }
      }
      mi.S(p, q) = s;
      mi.h(p, q) = t + v;
    }
  }

  for (int p = 0; p < M; ++p)
    for (int q = 0; q < M; ++q) {
      const Eigen::Vector3d AB = shells[p].center - shells[q].center;
      const double rab2 = AB.squaredNorm();
      for (int r = 0; r < M; ++r)
        for (int s = 0; s < M; ++s) {
          const Eigen::Vector3d CD = shells[r].center - shells[s].center;
          const double rcd2 = CD.squaredNorm();
          double val = 0.0;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
              const double a = shells[p].exp[i], b = shells[q].exp[j];
              const double zab = a + b;
              const Eigen::Vector3d P =
                  (a * shells[p].center + b * shells[q].center) / zab;
              const double eab = std::exp(-a * b / zab * rab2);
              const double cab = shells[p].coef[i] * shells[q].coef[j];
              for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                  const double c = shells[r].exp[k], d = shells[s].exp[l];
                  const double zcd = c + d;
                  const Eigen::Vector3d Q =
                      (c * shells[r].center + d * shells[s].center) / zcd;
                  const double ecd = std::exp(-c * d / zcd * rcd2);
                  const double rho = zab * zcd / (zab + zcd);
                  val += cab * shells[r].coef[k] * shells[s].coef[l] *
                         2.0 * std::pow(kPi, 2.5) /
                         (zab * zcd * std::sqrt(zab + zcd)) * eab * ecd *
                         boys_f0(rho * (P - Q).squaredNorm());
                }
            }
          mi.g_at(p, q, r, s) = val;
        }
    }

  for (std::size_t a = 0; a < geometry.size(); ++a)
    for (std::size_t b = a + 1; b < geometry.size(); ++b)
      mi.e_nuc +=
          1.0 / (geometry.position_bohr(a) - geometry.position_bohr(b)).norm();
  return mi;
}

namespace {

void validate_loaded(MolecularIntegrals& mi, double max_pair_conflict) {
  require(max_pair_conflict <= 1e-8,
          "asymmetry beyond 1e-8 in integral file (max " +
              std::to_string(max_pair_conflict) + ")");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mi.S);
  require(es.eigenvalues().minCoeff() > 0.0, "overlap not positive definite");
}

// canonical representative of the 8-fold chemist symmetry orbit
std::array<int, 4> canon_quad(int p, int q, int r, int s) {
  if (p < q) std::swap(p, q);
  if (r < s) std::swap(r, s);
  if (p < r || (p == r && q < s)) {
    std::swap(p, r);
    std::swap(q, s);
  }
  return {p, q, r, s};
}

}  // namespace

void save_integrals(const MolecularIntegrals& mi,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  require(out.good(), "cannot write " + path.string());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", mi.e_nuc);
  out << "NORB " << mi.n_orb << " ENUC " << buf << "\n";
  out << "==S==\n";
  for (int p = 0; p < mi.n_orb; ++p)
    for (int q = 0; q <= p; ++q) {
      std::snprintf(buf, sizeof buf, "%.17g", mi.S(p, q));
      out << buf << " " << p + 1 << " " << q + 1 << "\n";
    }
  out << "==H==\n";
  for (int p = 0; p < mi.n_orb; ++p)
    for (int q = 0; q <= p; ++q) {
      std::snprintf(buf, sizeof buf, "%.17g", mi.h(p, q));
      out << buf << " " << p + 1 << " " << q + 1 << "\n";
    }
  out << "==G==\n";
  for (int p = 0; p < mi.n_orb; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p == r && s > q) continue;
          std::snprintf(buf, sizeof buf, "%.17g", mi.g_at(p, q, r, s));
          out << buf << " " << p + 1 << " " << q + 1 << " " << r + 1 << " "
              << s + 1 << "\n";
        }
}

void save_integrals_json(const MolecularIntegrals& mi,
                         const std::filesystem::path& path) {
  json j;
  j["n_orb"] = mi.n_orb;
  j["e_nuc"] = mi.e_nuc;
  j["S"] = json::array();
  j["h"] = json::array();
  for (int p = 0; p < mi.n_orb; ++p) {
    json rs = json::array(), rh = json::array();
    for (int q = 0; q < mi.n_orb; ++q) {
      rs.push_back(mi.S(p, q));
      rh.push_back(mi.h(p, q));
    }
    j["S"].push_back(rs);
    j["h"].push_back(rh);
  }
  json gs = json::array();
  for (int p = 0; p < mi.n_orb; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p == r && s > q) continue;
          gs.push_back({p + 1, q + 1, r + 1, s + 1, mi.g_at(p, q, r, s)});
        }
  j["g_sparse"] = gs;
  std::ofstream out(path);
  require(out.good(), "cannot write " + path.string());
  out << j.dump(1) << "\n";
}

namespace {

MolecularIntegrals load_integrals_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  json j;
  in >> j;
  MolecularIntegrals mi;
  mi.n_orb = j.at("n_orb").get<int>();
  require(mi.n_orb >= 1, "n_orb must be positive");
  mi.e_nuc = j.at("e_nuc").get<double>();
  mi.S.setZero(mi.n_orb, mi.n_orb);
  mi.h.setZero(mi.n_orb, mi.n_orb);
  mi.g.assign(static_cast<std::size_t>(mi.n_orb) * mi.n_orb * mi.n_orb *
                  mi.n_orb,
              0.0);
  for (int p = 0; p < mi.n_orb; ++p)
    for (int q = 0; q < mi.n_orb; ++q) {
      mi.S(p, q) = j.at("S").at(p).at(q).get<double>();
      mi.h(p, q) = j.at("h").at(p).at(q).get<double>();
    }
  double conflict = std::max((mi.S - mi.S.transpose()).cwiseAbs().maxCoeff(),
                             (mi.h - mi.h.transpose()).cwiseAbs().maxCoeff());
  mi.S = 0.5 * (mi.S + mi.S.transpose()).eval();
  mi.h = 0.5 * (mi.h + mi.h.transpose()).eval();
  for (const auto& e : j.at("g_sparse")) {
    const int p = e.at(0).get<int>() - 1, q = e.at(1).get<int>() - 1;
    const int r = e.at(2).get<int>() - 1, s = e.at(3).get<int>() - 1;
    const double v = e.at(4).get<double>();
    for (auto [a, b] : {std::pair{p, q}, {q, p}})
      for (auto [c, d] : {std::pair{r, s}, {s, r}}) {
        mi.g_at(a, b, c, d) = v;
        mi.g_at(c, d, a, b) = v;
      }
  }
  validate_loaded(mi, conflict);
  return mi;
}

}  // namespace

MolecularIntegrals load_integrals(const std::filesystem::path& path) {
  std::ifstream probe(path);
  require(probe.good(), "cannot open integral file " + path.string());
  char first = 0;
  probe >> first;
  probe.close();
  if (first == '{') return load_integrals_json(path);

  std::ifstream in(path);
  std::string tag;
  int norb = 0;
  double enuc = 0;
  std::string henuc;
  require(static_cast<bool>(in >> tag >> norb >> henuc >> enuc) &&
              tag == "NORB" && henuc == "ENUC" && norb >= 1,
          "integral file must start with 'NORB <M> ENUC <value>'");
  MolecularIntegrals mi;
  mi.n_orb = norb;
  mi.e_nuc = enuc;
  mi.S.setZero(norb, norb);
  mi.h.setZero(norb, norb);
  mi.g.assign(static_cast<std::size_t>(norb) * norb * norb * norb, 0.0);

  enum Section { kNone, kS, kH, kG } section = kNone;
  std::map<std::array<int, 4>, double> gseen;
  std::map<std::pair<int, int>, double> seenS, seenH;
  double conflict = 0.0;
  std::string line;
  std::getline(in, line);  // rest of header line
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "==S==") { section = kS; continue; }
    if (tok == "==H==") { section = kH; continue; }
    if (tok == "==G==") { section = kG; continue; }
    require(section != kNone, "integral data before any section sentinel");
    const double v = std::stod(tok);
    int p, q, r = 0, s = 0;
    require(static_cast<bool>(ls >> p >> q), "bad integral line: " + line);
    if (section == kG) {
      require(static_cast<bool>(ls >> r >> s), "G line needs four indices");
      require(p >= 1 && q >= 1 && r >= 1 && s >= 1 && p <= norb && q <= norb &&
                  r <= norb && s <= norb,
              "index out of range: " + line);
      auto key = canon_quad(p - 1, q - 1, r - 1, s - 1);
      auto [it, fresh] = gseen.try_emplace(key, v);
      if (!fresh) conflict = std::max(conflict, std::abs(it->second - v));
    } else {
      ls >> r >> s;  // tolerate FCIDUMP-style trailing zeros
      require(p >= 1 && q >= 1 && p <= norb && q <= norb,
              "index out of range: " + line);
      const int lo = std::min(p, q) - 1, hi = std::max(p, q) - 1;
      auto& seen = section == kS ? seenS : seenH;
      auto [it, fresh] = seen.try_emplace(std::pair{lo, hi}, v);
      if (!fresh) conflict = std::max(conflict, std::abs(it->second - v));
    }
  }
  for (const auto& [pq, v] : seenS) {
    mi.S(pq.first, pq.second) = v;
    mi.S(pq.second, pq.first) = v;
  }
  for (const auto& [pq, v] : seenH) {
    mi.h(pq.first, pq.second) = v;
    mi.h(pq.second, pq.first) = v;
  }
  for (const auto& [key, v] : gseen) {
    const auto [p, q, r, s] = key;
    for (auto [a, b] : {std::pair{p, q}, {q, p}})
      for (auto [c, d] : {std::pair{r, s}, {s, r}}) {
        mi.g_at(a, b, c, d) = v;
        mi.g_at(c, d, a, b) = v;
      }
  }
  validate_loaded(mi, conflict);
  return mi;
}

double SpinOrbitalIntegrals::g_at(int p, int q, int r, int s) const {
  return g[((static_cast<std::size_t>(p) * n_so + q) * n_so + r) * n_so + s];
}

double SpinOrbitalIntegrals::g_phys_antisym(int p, int q, int r, int s) const {
  // <pq|rs> = (pr|qs) in chemist order
  return g_at(p, r, q, s) - g_at(p, s, q, r);
}

SpinOrbitalIntegrals to_spin_orbitals(const MolecularIntegrals& mi) {
  const int M = mi.n_orb;
  const int n = 2 * M;
  SpinOrbitalIntegrals so;
  so.n_so = n;
  so.S.setZero(n, n);
  so.h.setZero(n, n);
  so.S.topLeftCorner(M, M) = mi.S;
  so.S.bottomRightCorner(M, M) = mi.S;
  so.h.topLeftCorner(M, M) = mi.h;
  so.h.bottomRightCorner(M, M) = mi.h;
  so.g.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  auto spin = [M](int p) { return p < M ? 0 : 1; };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (spin(p) != spin(q)) continue;  // chemist (pq|..): same-spin bra pair
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (spin(r) != spin(s)) continue;
          so.g[((static_cast<std::size_t>(p) * n + q) * n + r) * n + s] =
              mi.g_at(p % M, q % M, r % M, s % M);
        }
    }
  return so;
}

}  // namespace scgvb
