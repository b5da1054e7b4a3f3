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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rbg/provenance.hpp"
#include "rbg/residue_ring.hpp"

namespace rbg {

using RingMatrix = std::array<RingElem, 9>;  // row-major

RingMatrix ring_identity(const ResidueRing& R);
RingMatrix ring_mul(const ResidueRing& R, const RingMatrix& a, const RingMatrix& b);
/// Entrywise conjugate of the transpose.
RingMatrix ring_adjoint(const ResidueRing& R, const RingMatrix& a);
RingElem ring_det(const ResidueRing& R, const RingMatrix& a);
/// adjoint(g) g = 1 and det g = 1.
bool is_su3(const ResidueRing& R, const RingMatrix& g);

inline constexpr std::uint64_t kDefaultEnumerationCeiling = 10'000'000;
/// kDefaultEnumerationCeiling unless RBG_ENUMERATION_CEILING holds a positive
/// integer.
std::uint64_t enumeration_ceiling_from_env();

struct EnumerationOptions {
  std::uint64_t ceiling = kDefaultEnumerationCeiling;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Full multiplication table and inverse check. Costs order^2 products,
  /// which also count against the ceiling.
  bool closure_check = false;
};

/// Candidates examined by the row-wise scan of SU_3(O/q^n): every vector for
/// the first row, then every pair of unit rows. Saturates at UINT64_MAX.
/// first_rows is the number of unit vectors when known.
std::uint64_t su3_candidate_count(const ResidueRing& R, std::optional<std::uint64_t> first_rows = {});

/// All of SU_3(O/q^n), for any kind of q. The third row of an element of SU_3
/// is forced to be the conjugate of the cross product of the first two, so
/// the scan is over unit first rows and orthogonal unit second rows. Every
/// candidate is checked against is_su3 before it is kept. Throws
/// CeilingExceeded when the scan would pass options.ceiling.
std::vector<RingMatrix> su3_elements(const ResidueRing& R, const EnumerationOptions& options,
                                     std::uint64_t* candidates_examined = nullptr);

struct ClosureCheck {
  bool contains_identity = false;
  bool closed_under_products = false;
  bool closed_under_inverses = false;
  std::uint64_t products_checked = 0;
  bool passed() const { return contains_identity && closed_under_products && closed_under_inverses; }
};
ClosureCheck check_group_axioms(const ResidueRing& R, const std::vector<RingMatrix>& elements);

/// Classical orders: q^3 (q^2-1)(q^3+1) q^{8(n-1)} for inert q, the SL_3 value
/// q^3 (q^2-1)(q^3-1) q^{8(n-1)} for split q. None for q = 3.
std::optional<Integer> su3_order_formula(std::int64_t q, int n);

struct LevelReduction {
  int from_level = 0;  // k + 1
  int to_level = 0;    // k
  TaggedCount kernel_size;
  TaggedCount image_size;
  bool surjective = false;
  /// order(k+1) = image * kernel.
  bool orders_consistent = false;
};

struct FiniteGroupReport {
  std::int64_t q = 0;
  int n = 0;
  RingKind kind = RingKind::Inert;
  TaggedCount order;
  std::optional<TaggedCount> formula_order;
  /// Orders of SU_3(O/q^k) for k = 1..n.
  std::vector<TaggedCount> level_orders;
  /// One entry per consecutive pair of levels 1..n.
  std::vector<LevelReduction> reductions;
  std::optional<ClosureCheck> closure;
  std::uint64_t candidates_examined = 0;
};

/// Exhaustive enumeration of SU_3(O/q^k) for k = 1..n with reduction data
/// between consecutive levels. q must be inert (PreconditionError otherwise).
/// CeilingExceeded carries the would-be candidate count; formula mode is
/// su3_formula_report.
FiniteGroupReport enumerate_su3(std::int64_t q, int n, const EnumerationOptions& options = {});

/// Report built from su3_order_formula alone; kernels are q^8. Throws
/// PreconditionError when no formula applies (q = 3).
FiniteGroupReport su3_formula_report(std::int64_t q, int n);

}  // namespace rbg
