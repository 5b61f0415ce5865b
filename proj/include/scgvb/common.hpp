// Copyright 2026 The scgvb-kit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace scgvb {

using cxd = std::complex<double>;

/// Error thrown on violated preconditions or invariants anywhere in the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

}  // namespace scgvb
