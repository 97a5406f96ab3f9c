// Copyright 2026 the cvflow developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cvflow {

/// Reals with an explicit zero tolerance. Every comparison against zero in
/// the linear algebra goes through `is_zero`, so eps is the single knob that
/// decides solvability questions over R.
struct RealField {
  using Elem = double;

  double eps = 1e-9;

  RealField() = default;
  explicit RealField(double eps_) : eps(eps_) {
    if (!(eps > 0.0)) throw std::invalid_argument("RealField: eps must be > 0");
  }

  static Elem zero() { return 0.0; }
  static Elem one() { return 1.0; }
  static Elem add(Elem a, Elem b) { return a + b; }
  static Elem sub(Elem a, Elem b) { return a - b; }
  static Elem mul(Elem a, Elem b) { return a * b; }
  static Elem neg(Elem a) { return -a; }
  Elem inv(Elem a) const {
    if (is_zero(a)) throw std::domain_error("RealField: inverse of (near-)zero");
    return 1.0 / a;
  }
  bool is_zero(Elem a) const { return std::abs(a) <= eps; }
  bool eq(Elem a, Elem b) const { return is_zero(a - b); }
  static double magnitude(Elem a) { return std::abs(a); }
  static Elem from_int(long long v) { return static_cast<double>(v); }
  static std::string to_string(Elem a) { return std::to_string(a); }
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Z_d for prime d. Elements are canonical residues in [0, d).
struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t d = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t modulus) : d(modulus) {
    if (!is_prime(d)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(d) + " is not prime");
  }

  static Elem zero() { return 0; }
  static Elem one() { return 1; }
  Elem add(Elem a, Elem b) const { return (a + b) % d; }
  Elem sub(Elem a, Elem b) const { return (a + d - b % d) % d; }
  Elem mul(Elem a, Elem b) const { return (a * b) % d; }
  Elem neg(Elem a) const { return a == 0 ? 0 : d - a; }
  Elem inv(Elem a) const {
    a %= d;
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Fermat; d is prime and desk-scale.
    Elem r = 1, base = a, e = d - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(Elem a) const { return a % d == 0; }
  bool eq(Elem a, Elem b) const { return a % d == b % d; }
  static double magnitude(Elem a) { return a == 0 ? 0.0 : 1.0; }
  Elem from_int(long long v) const {
    long long m = static_cast<long long>(d);
    long long r = v % m;
    if (r < 0) r += m;
    return static_cast<Elem>(r);
  }
  static std::string to_string(Elem a) { return std::to_string(a); }
};

}  // namespace cvflow
