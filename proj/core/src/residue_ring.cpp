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
#include "rbg/residue_ring.hpp"

#include <stdexcept>
#include <utility>

#include "rbg/errors.hpp"
#include "rbg/primes.hpp"

namespace rbg {

std::string to_string(RingKind k) {
  switch (k) {
    case RingKind::Inert: return "inert";
    case RingKind::Split: return "split";
    case RingKind::Ramified: return "ramified";
  }
  return "?";
}

ResidueRing::ResidueRing(std::int64_t q, int n) : q_(q), n_(n) {
  require_prime(q, "ResidueRing");
  if (n < 1) throw PreconditionError("ResidueRing exponent must be at least 1");
  modulus_ = 1;
  for (int i = 0; i < n; ++i) {
    modulus_ *= static_cast<std::uint64_t>(q);
    if (modulus_ >= (1ULL << 31)) throw PreconditionError("q^n too large for ResidueRing");
  }
  switch (classify_prime(q).cls) {
    case SplitType::Inert: kind_ = RingKind::Inert; break;
    case SplitType::Ramified: kind_ = RingKind::Ramified; break;
    case SplitType::Split:
      kind_ = RingKind::Split;
      omega_root_ = hensel_lift_omega_root(q, n).get_ui();
      break;
  }
}

RingElem ResidueRing::omega() const {
  if (kind_ == RingKind::Split) return {omega_root_, (1 + modulus_ - omega_root_) % modulus_};
  return {0, 1 % modulus_};
}

RingElem ResidueRing::from_int(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  const auto r = static_cast<std::uint64_t>(((v % m) + m) % m);
  return kind_ == RingKind::Split ? RingElem{r, r} : RingElem{r, 0};
}

RingElem ResidueRing::add(RingElem a, RingElem b) const {
  return {(a.x + b.x) % modulus_, (a.y + b.y) % modulus_};
}

RingElem ResidueRing::sub(RingElem a, RingElem b) const {
  return {(a.x + modulus_ - b.x) % modulus_, (a.y + modulus_ - b.y) % modulus_};
}

RingElem ResidueRing::neg(RingElem a) const { return sub(zero(), a); }

RingElem ResidueRing::mul(RingElem a, RingElem b) const {
  if (kind_ == RingKind::Split) return {mulmod(a.x, b.x), mulmod(a.y, b.y)};
  // (a + b w)(c + d w) = (ac - bd) + (ad + bc + bd) w.
  const std::uint64_t bd = mulmod(a.y, b.y);
  const std::uint64_t x = (mulmod(a.x, b.x) + modulus_ - bd) % modulus_;
  const std::uint64_t y = (mulmod(a.x, b.y) + mulmod(a.y, b.x) + bd) % modulus_;
  return {x, y};
}

RingElem ResidueRing::conj(RingElem a) const {
  if (kind_ == RingKind::Split) return {a.y, a.x};
  return {(a.x + a.y) % modulus_, (modulus_ - a.y) % modulus_};
}

std::uint64_t ResidueRing::norm(RingElem a) const {
  if (kind_ == RingKind::Split) return mulmod(a.x, a.y);
  return (mulmod(a.x, a.x) + mulmod(a.x, a.y) + mulmod(a.y, a.y)) % modulus_;
}

bool ResidueRing::is_unit(RingElem a) const {
  const auto q = static_cast<std::uint64_t>(q_);
  if (kind_ == RingKind::Split) return a.x % q != 0 && a.y % q != 0;
  return norm(a) % q != 0;
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (r != 1) throw std::domain_error("not invertible modulo " + std::to_string(m));
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

RingElem ResidueRing::inverse(RingElem a) const {
  if (!is_unit(a)) throw std::domain_error("division by a zero divisor in O/q^n");
  if (kind_ == RingKind::Split) return {inverse_mod(a.x, modulus_), inverse_mod(a.y, modulus_)};
  const std::uint64_t ninv = inverse_mod(norm(a), modulus_);
  const RingElem c = conj(a);
  return {mulmod(c.x, ninv), mulmod(c.y, ninv)};
}

RingElem ResidueRing::reduce(RingElem a, const ResidueRing& ring_k) const {
  if (ring_k.q_ != q_ || ring_k.n_ > n_)
    throw std::invalid_argument("reduce: target ring must be O/q^k with k <= n");
  return {a.x % ring_k.modulus_, a.y % ring_k.modulus_};
}

}  // namespace rbg
