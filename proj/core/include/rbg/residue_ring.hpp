// Copyright 2026 The rbg Authors
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
#include <string>

#include "rbg/number_fields.hpp"

namespace rbg {

/// Presentation of O_E / q^n with O_E = Z[w], w^2 - w + 1 = 0.
///  - Inert and Ramified: (Z/q^n)[w]/(w^2 - w + 1), elements x + y w,
///    conjugation x + y w -> (x + y) - y w.
///  - Split: (Z/q^n) x (Z/q^n), conjugation swaps the coordinates.
enum class RingKind { Inert, Split, Ramified };
std::string to_string(RingKind k);

struct RingElem {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  friend bool operator==(const RingElem&, const RingElem&) = default;
};

class ResidueRing {
 public:
  /// Throws PreconditionError for non-prime q, n < 1 or q^n >= 2^31.
  ResidueRing(std::int64_t q, int n);

  std::int64_t q() const { return q_; }
  int n() const { return n_; }
  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  /// Number of ring elements, modulus^2.
  std::uint64_t size() const { return modulus_ * modulus_; }

  RingElem zero() const { return {0, 0}; }
  RingElem one() const { return kind_ == RingKind::Split ? RingElem{1, 1} : RingElem{1, 0}; }
  /// Image of w.
  RingElem omega() const;
  /// Image of an integer.
  RingElem from_int(std::int64_t v) const;

  RingElem add(RingElem a, RingElem b) const;
  RingElem sub(RingElem a, RingElem b) const;
  RingElem neg(RingElem a) const;
  RingElem mul(RingElem a, RingElem b) const;
  RingElem conj(RingElem a) const;
  /// a * conj(a) as an element of Z/q^n.
  std::uint64_t norm(RingElem a) const;
  bool is_unit(RingElem a) const;
  /// Throws std::domain_error for zero divisors.
  RingElem inverse(RingElem a) const;

  /// Bijection [0, size()) <-> elements, for enumeration.
  RingElem element(std::uint64_t index) const { return {index % modulus_, index / modulus_}; }
  std::uint64_t index(RingElem a) const { return a.x + a.y * modulus_; }

  /// Reduction O/q^n -> O/q^k for k <= n, as an element of ring_k.
  RingElem reduce(RingElem a, const ResidueRing& ring_k) const;

 private:
  std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % modulus_;  // modulus_ < 2^31
  }

  std::int64_t q_;
  int n_;
  RingKind kind_;
  std::uint64_t modulus_;
  /// Split kind only: root of w^2 - w + 1 mod q^n used to embed Z[w].
  std::uint64_t omega_root_ = 0;
};

}  // namespace rbg
