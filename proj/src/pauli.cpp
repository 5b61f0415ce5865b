// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "scgvb/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace scgvb {

namespace {

constexpr cxd kQuarterTurn[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_register(int n) {
  require(n >= 1 && n <= 64, "register size must be in [1, 64]");
}

void check_same_register(int a, int b) {
  require(a == b, "mismatched register sizes");
}

int popcount(std::uint64_t v) { return std::popcount(v); }

}  // namespace

int pauli_mul_phase(const PauliKey& a, const PauliKey& b) {
  // canonical(x,z) = i^{|x&z|} X^x Z^z; commuting Z^{za} past X^{xb} costs
  // (-1)^{|za & xb|}.
  int e = popcount(a.x & a.z) + popcount(b.x & b.z) + 2 * popcount(a.z & b.x) -
          popcount((a.x ^ b.x) & (a.z ^ b.z));
  return ((e % 4) + 4) % 4;
}

bool qwc_compatible(const PauliKey& a, const PauliKey& b) {
  const std::uint64_t both = a.support() & b.support();
  return (((a.x ^ b.x) | (a.z ^ b.z)) & both) == 0;
}

PauliTerm::PauliTerm(int n_qubits) : n_(n_qubits), key_{}, phase_(0) {
  check_register(n_);
}

PauliTerm::PauliTerm(int n_qubits, PauliKey key, int phase_power)
    : n_(n_qubits), key_(key), phase_(((phase_power % 4) + 4) % 4) {
  check_register(n_);
  if (n_ < 64) {
    const std::uint64_t valid = (std::uint64_t{1} << n_) - 1;
    require((key_.support() & ~valid) == 0, "mask exceeds register");
  }
}

PauliTerm PauliTerm::from_string(int n_qubits, std::string_view letters,
                                 int phase_power) {
  require(static_cast<int>(letters.size()) == n_qubits,
          "letter string length must equal register size");
  PauliTerm t(n_qubits, PauliKey{}, phase_power);
  for (int q = 1; q <= n_qubits; ++q) t.set_letter(q, letters[q - 1]);
  return t;
}

cxd PauliTerm::phase() const { return kQuarterTurn[phase_]; }

char PauliTerm::letter(int qubit) const {
  require(qubit >= 1 && qubit <= n_, "qubit index out of range");
  const int x = (key_.x >> (qubit - 1)) & 1;
  const int z = (key_.z >> (qubit - 1)) & 1;
  static constexpr char tab[2][2] = {{'I', 'Z'}, {'X', 'Y'}};
  return tab[x][z];
}

void PauliTerm::set_letter(int qubit, char l) {
  require(qubit >= 1 && qubit <= n_, "qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (qubit - 1);
  key_.x &= ~bit;
  key_.z &= ~bit;
  switch (l) {
    case 'I': break;
    case 'X': key_.x |= bit; break;
    case 'Y': key_.x |= bit; key_.z |= bit; break;
    case 'Z': key_.z |= bit; break;
    default: throw Error("invalid Pauli letter");
  }
}

PauliTerm PauliTerm::operator*(const PauliTerm& rhs) const {
  check_same_register(n_, rhs.n_);
  const int e = phase_ + rhs.phase_ + pauli_mul_phase(key_, rhs.key_);
  return PauliTerm(n_, PauliKey{key_.x ^ rhs.key_.x, key_.z ^ rhs.key_.z}, e);
}

bool PauliTerm::qwc_compatible(const PauliTerm& rhs) const {
  check_same_register(n_, rhs.n_);
  return scgvb::qwc_compatible(key_, rhs.key_);
}

cxd PauliTerm::vacuum_amplitude() const {
  return key_.x == 0 ? phase() : cxd{0, 0};
}

std::string PauliTerm::letters() const {
  std::string s;
  s.reserve(n_);
  for (int q = 1; q <= n_; ++q) s.push_back(letter(q));
  return s;
}

std::string PauliTerm::to_string() const {
  static constexpr const char* prefix[4] = {"+", "+i", "-", "-i"};
  return std::string(prefix[phase_]) + letters();
}

PauliTerm pauli_mul(const PauliTerm& lhs, const PauliTerm& rhs) {
  return lhs * rhs;
}

PauliSum::PauliSum(int n_qubits) : n_(n_qubits) { check_register(n_); }

PauliSum PauliSum::identity(int n_qubits, cxd coeff) {
  PauliSum p(n_qubits);
  p.add(PauliKey{}, coeff);
  return p;
}

PauliSum PauliSum::from_term(const PauliTerm& t, cxd coeff) {
  PauliSum p(t.n_qubits());
  p.add(t, coeff);
  return p;
}

void PauliSum::add(const PauliKey& key, cxd coeff) {
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) it->second += coeff;
}

void PauliSum::add(const PauliTerm& t, cxd coeff) {
  check_same_register(n_, t.n_qubits());
  add(t.key(), coeff * t.phase());
}

cxd PauliSum::coefficient(const PauliKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? cxd{0, 0} : it->second;
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
  check_same_register(n_, rhs.n_);
  for (const auto& [k, c] : rhs.terms_) add(k, c);
  return *this;
}

PauliSum& PauliSum::operator*=(cxd s) {
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

void PauliSum::prune(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < tol)
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::vector<std::pair<PauliKey, cxd>> PauliSum::sorted_terms() const {
  std::vector<std::pair<PauliKey, cxd>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

cxd PauliSum::vacuum_expectation() const {
  cxd acc{0, 0};
  for (const auto& [k, c] : terms_)
    if (k.x == 0) acc += c;
  return acc;
}

double PauliSum::max_imag_coefficient() const {
  double m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

std::string PauliSum::to_text() const {
  std::string out;
  char buf[96];
  for (const auto& [k, c] : sorted_terms()) {
    std::snprintf(buf, sizeof buf, "%+.12e,%+.12e) ", c.real(), c.imag());
    out += "(";
    out += buf;
    out += PauliTerm(n_, k).letters();
    out += "\n";
  }
  return out;
}

PauliSum sum_mul(const PauliSum& lhs, const PauliSum& rhs, double prune_tol) {
  require(lhs.n_qubits() == rhs.n_qubits(), "mismatched register sizes");
  require(prune_tol >= 0, "prune tolerance must be nonnegative");
  PauliSum out(lhs.n_qubits());
  for (const auto& [ka, ca] : lhs.raw()) {
    for (const auto& [kb, cb] : rhs.raw()) {
      const int e = pauli_mul_phase(ka, kb);
      out.add(PauliKey{ka.x ^ kb.x, ka.z ^ kb.z},
              ca * cb * cxd{e == 0 ? 1.0 : (e == 2 ? -1.0 : 0.0),
                            e == 1 ? 1.0 : (e == 3 ? -1.0 : 0.0)});
    }
  }
  out.prune(prune_tol);
  return out;
}

PauliSum operator+(PauliSum lhs, const PauliSum& rhs) {
  lhs += rhs;
  return lhs;
}

PauliSum operator*(cxd s, PauliSum p) {
  p *= s;
  return p;
}

}  // namespace scgvb
