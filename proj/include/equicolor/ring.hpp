// Copyright 2026 The equicolor Authors
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

#include <cstdint>
#include <ostream>

#include <boost/multiprecision/cpp_int.hpp>

namespace equicolor {

/// Exact counts.
using Count = boost::multiprecision::cpp_int;

/// Residue modulo a runtime prime below 2^62.
///
/// A default-constructed value is zero with no modulus attached; it adopts
/// the modulus of whatever it is combined with, so zero-filled tables work
/// without threading the modulus through every constructor.
class ModNum {
 public:
  ModNum() = default;
  ModNum(int value) : value_(value < 0 ? 0 : static_cast<std::uint64_t>(value)) {}  // NOLINT
  ModNum(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  ModNum& operator+=(const ModNum& o) {
    adopt(o);
    value_ += o.value_;
    if (modulus_ && value_ >= modulus_) value_ -= modulus_;
    return *this;
  }
  ModNum& operator-=(const ModNum& o) {
    adopt(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
    return *this;
  }
  ModNum& operator*=(const ModNum& o) {
    adopt(o);
    value_ = modulus_ ? static_cast<std::uint64_t>(static_cast<unsigned __int128>(value_) * o.value_ % modulus_)
                      : value_ * o.value_;
    return *this;
  }
  friend ModNum operator+(ModNum a, const ModNum& b) { return a += b; }
  friend ModNum operator-(ModNum a, const ModNum& b) { return a -= b; }
  friend ModNum operator*(ModNum a, const ModNum& b) { return a *= b; }
  friend bool operator==(const ModNum& a, const ModNum& b) { return a.value_ == b.value_; }
  friend bool operator!=(const ModNum& a, const ModNum& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const ModNum& x) { return os << x.value_; }

 private:
  void adopt(const ModNum& o) {
    if (!modulus_) {
      modulus_ = o.modulus_;
      if (modulus_) value_ %= modulus_;
    }
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Uniformly drawn prime in [2^61, 2^62) from a seeded generator.
std::uint64_t random_prime_62(std::uint64_t seed);

/// Value congruent to r1 mod p1 and r2 mod p2, in [0, p1*p2).
Count crt_combine(std::uint64_t r1, std::uint64_t p1, std::uint64_t r2, std::uint64_t p2);

}  // namespace equicolor
