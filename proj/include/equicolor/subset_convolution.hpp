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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace equicolor {

/// Subset of a ground set {0..m-1} as a bitmask.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 26;

/// Function from the subsets of an m-element ground set to a ring T,
/// indexed by bitmask.
template <class T>
class SetFunction {
 public:
  SetFunction() : SetFunction(0) {}

  explicit SetFunction(int m) : m_(check(m)), values_(std::size_t{1} << m) {}

  SetFunction(int m, std::vector<T> values) : m_(check(m)), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << m)) throw std::invalid_argument("SetFunction needs 2^m values");
  }

  int ground_size() const noexcept { return m_; }
  std::size_t size() const noexcept { return values_.size(); }

  T& operator[](Mask s) { return values_[s]; }
  const T& operator[](Mask s) const { return values_[s]; }

  std::span<T> values() noexcept { return values_; }
  std::span<const T> values() const noexcept { return values_; }

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.m_ == b.m_ && a.values_ == b.values_;
  }

 private:
  static int check(int m) {
    if (m < 0 || m > kMaxGroundSize) throw std::invalid_argument("ground set size out of range");
    return m;
  }

  int m_;
  std::vector<T> values_;
};

/// In place: v[S] <- sum over T subset of S of v[T]. m * 2^(m-1) additions.
template <class T>
void zeta_in_place(std::span<T> v, int m) {
  const std::size_t full = std::size_t{1} << m;
  for (int bit = 0; bit < m; ++bit) {
    const Mask b = Mask{1} << bit;
    for (std::size_t s = 0; s < full; ++s) {
      if (s & b) v[s] += v[s ^ b];
    }
  }
}

/// Inverse of zeta_in_place.
template <class T>
void mobius_in_place(std::span<T> v, int m) {
  const std::size_t full = std::size_t{1} << m;
  for (int bit = 0; bit < m; ++bit) {
    const Mask b = Mask{1} << bit;
    for (std::size_t s = 0; s < full; ++s) {
      if (s & b) v[s] -= v[s ^ b];
    }
  }
}

template <class T>
SetFunction<T> zeta(SetFunction<T> f) {
  zeta_in_place(f.values(), f.ground_size());
  return f;
}

template <class T>
SetFunction<T> mobius(SetFunction<T> f) {
  mobius_in_place(f.values(), f.ground_size());
  return f;
}

/// Zeta transforms of the rank slices of f: rank(j)[X] is the sum of f(A)
/// over A subset of X with |A| = j. Ranks on which f vanishes are skipped.
template <class T>
class RankedTransform {
 public:
  explicit RankedTransform(const SetFunction<T>& f) : m_(f.ground_size()), ranks_(m_ + 1) {
    const std::size_t full = f.size();
    for (std::size_t s = 0; s < full; ++s) {
      if (f[static_cast<Mask>(s)] == T(0)) continue;
      auto& slice = ranks_[std::popcount(static_cast<Mask>(s))];
      if (slice.empty()) slice.resize(full);
      slice[s] = f[static_cast<Mask>(s)];
    }
    for (auto& slice : ranks_) {
      if (!slice.empty()) zeta_in_place(std::span<T>(slice), m_);
    }
  }

  int ground_size() const noexcept { return m_; }
  bool has_rank(int j) const { return !ranks_[j].empty(); }
  const std::vector<T>& rank(int j) const { return ranks_[j]; }

 private:
  int m_;
  std::vector<std::vector<T>> ranks_;
};

/// Sum of subset convolutions accumulated in the ranked transform domain.
/// Each add_product costs O(2^m m^2) ring operations at most; finish()
/// applies one ranked Mobius inversion for the whole sum.
template <class T>
class RankedAccumulator {
 public:
  explicit RankedAccumulator(int m) : m_(m), ranks_(m + 1) {}

  void add_product(const RankedTransform<T>& a, const RankedTransform<T>& b) {
    if (a.ground_size() != m_ || b.ground_size() != m_) throw std::invalid_argument("ground set mismatch");
    const std::size_t full = std::size_t{1} << m_;
    for (int s = 0; s <= m_; ++s) {
      for (int j = 0; j <= s; ++j) {
        if (!a.has_rank(j) || !b.has_rank(s - j)) continue;
        auto& out = ranks_[s];
        if (out.empty()) out.resize(full);
        const auto& x = a.rank(j);
        const auto& y = b.rank(s - j);
        // Rank-j transforms vanish below popcount j.
        const int floor_rank = j > s - j ? j : s - j;
        for (std::size_t mask = 0; mask < full; ++mask) {
          if (std::popcount(static_cast<Mask>(mask)) < floor_rank) continue;
          out[mask] += x[mask] * y[mask];
        }
      }
    }
  }

  SetFunction<T> finish() {
    SetFunction<T> result(m_);
    for (int s = 0; s <= m_; ++s) {
      auto& slice = ranks_[s];
      if (slice.empty()) continue;
      mobius_in_place(std::span<T>(slice), m_);
      for (std::size_t mask = 0; mask < slice.size(); ++mask) {
        if (std::popcount(static_cast<Mask>(mask)) == s) result[static_cast<Mask>(mask)] = std::move(slice[mask]);
      }
      slice.clear();
    }
    return result;
  }

 private:
  int m_;
  std::vector<std::vector<T>> ranks_;
};

/// (f * g)(S) = sum over A subset of S of f(A) g(S \ A), via ranked zeta
/// transforms, rank-wise products, and ranked Mobius inversion.
template <class T>
SetFunction<T> subset_convolve(const SetFunction<T>& f, const SetFunction<T>& g) {
  if (f.ground_size() != g.ground_size()) throw std::invalid_argument("ground set mismatch");
  RankedAccumulator<T> acc(f.ground_size());
  acc.add_product(RankedTransform<T>(f), RankedTransform<T>(g));
  return acc.finish();
}

/// Direct O(3^m) evaluation of the subset convolution.
template <class T>
SetFunction<T> naive_convolve(const SetFunction<T>& f, const SetFunction<T>& g) {
  if (f.ground_size() != g.ground_size()) throw std::invalid_argument("ground set mismatch");
  SetFunction<T> out(f.ground_size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const Mask full = static_cast<Mask>(s);
    for (Mask a = full;; a = (a - 1) & full) {
      out[full] += f[a] * g[full ^ a];
      if (a == 0) break;
    }
  }
  return out;
}

}  // namespace equicolor
