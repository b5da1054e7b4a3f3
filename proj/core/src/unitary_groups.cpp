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
#include "rbg/unitary_groups.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <unordered_set>

#include "rbg/errors.hpp"
#include "rbg/primes.hpp"

namespace rbg {

std::string to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Enumerated: return "enumerated";
    case Method::Formula: return "formula";
    case Method::Floating: return "floating";
  }
  return "?";
}

RingMatrix ring_identity(const ResidueRing& R) {
  RingMatrix m;
  m.fill(R.zero());
  m[0] = m[4] = m[8] = R.one();
  return m;
}

RingMatrix ring_mul(const ResidueRing& R, const RingMatrix& a, const RingMatrix& b) {
  RingMatrix c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      RingElem s = R.zero();
      for (int k = 0; k < 3; ++k) s = R.add(s, R.mul(a[3 * i + k], b[3 * k + j]));
      c[3 * i + j] = s;
    }
  return c;
}

RingMatrix ring_adjoint(const ResidueRing& R, const RingMatrix& a) {
  RingMatrix c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[3 * i + j] = R.conj(a[3 * j + i]);
  return c;
}

RingElem ring_det(const ResidueRing& R, const RingMatrix& a) {
  auto minor = [&](int i, int j, int k, int l) {
    return R.sub(R.mul(a[i], a[j]), R.mul(a[k], a[l]));
  };
  RingElem d = R.mul(a[0], minor(4, 8, 5, 7));
  d = R.sub(d, R.mul(a[1], minor(3, 8, 5, 6)));
  return R.add(d, R.mul(a[2], minor(3, 7, 4, 6)));
}

bool is_su3(const ResidueRing& R, const RingMatrix& g) {
  return ring_mul(R, ring_adjoint(R, g), g) == ring_identity(R) && ring_det(R, g) == R.one();
}

std::uint64_t enumeration_ceiling_from_env() {
  if (const char* env = std::getenv("RBG_ENUMERATION_CEILING")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCeiling;
}

namespace {

constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }

using Row = std::array<RingElem, 3>;

RingElem hermitian(const ResidueRing& R, const Row& a, const Row& b) {
  RingElem s = R.zero();
  for (int i = 0; i < 3; ++i) s = R.add(s, R.mul(a[i], R.conj(b[i])));
  return s;
}

struct MatrixHash {
  std::size_t operator()(const RingMatrix& m) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& e : m) {
      h = (h ^ e.x) * 1099511628211ULL;
      h = (h ^ e.y) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using MatrixSet = std::unordered_set<RingMatrix, MatrixHash>;

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

RingMatrix reduce_matrix(const ResidueRing& from, const ResidueRing& to, const RingMatrix& g) {
  RingMatrix r;
  for (int i = 0; i < 9; ++i) r[i] = from.reduce(g[i], to);
  return r;
}

}  // namespace

std::uint64_t su3_candidate_count(const ResidueRing& R, std::optional<std::uint64_t> first_rows) {
  const std::uint64_t vectors = sat_mul(sat_mul(R.size(), R.size()), R.size());
  if (!first_rows) return vectors;
  return sat_add(vectors, sat_mul(*first_rows, *first_rows));
}

std::vector<RingMatrix> su3_elements(const ResidueRing& R, const EnumerationOptions& options,
                                     std::uint64_t* candidates_examined) {
  const std::string where = "SU_3(O/" + std::to_string(R.q()) + "^" + std::to_string(R.n()) + ")";
  const std::uint64_t vectors = su3_candidate_count(R);
  if (vectors > options.ceiling)
    throw CeilingExceeded("enumeration of " + where + " exceeds the candidate ceiling (RBG_ENUMERATION_CEILING); use formula mode",
                          vectors);

  const std::uint64_t s = R.size();
  std::vector<Row> units;
  for (std::uint64_t idx = 0; idx < vectors; ++idx) {
    const Row v{R.element(idx % s), R.element((idx / s) % s), R.element(idx / (s * s))};
    if (hermitian(R, v, v) == R.one()) units.push_back(v);
  }
  const std::uint64_t total = su3_candidate_count(R, units.size());
  if (total > options.ceiling)
    throw CeilingExceeded("enumeration of " + where + " exceeds the candidate ceiling (RBG_ENUMERATION_CEILING); use formula mode",
                          total);

  std::vector<std::vector<RingMatrix>> per_row(units.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      const Row& a = units[i];
      for (const Row& b : units) {
        if (!(hermitian(R, a, b) == R.zero())) continue;
        const Row c{R.conj(R.sub(R.mul(a[1], b[2]), R.mul(a[2], b[1]))),
                    R.conj(R.sub(R.mul(a[2], b[0]), R.mul(a[0], b[2]))),
                    R.conj(R.sub(R.mul(a[0], b[1]), R.mul(a[1], b[0])))};
        const RingMatrix g{a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]};
        if (is_su3(R, g)) per_row[i].push_back(g);
      }
    }
  };
  const unsigned nthreads = std::min<std::size_t>(worker_count(options.threads), std::max<std::size_t>(1, units.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<RingMatrix> out;
  for (auto& v : per_row) out.insert(out.end(), v.begin(), v.end());
  if (candidates_examined) *candidates_examined = total;
  return out;
}

ClosureCheck check_group_axioms(const ResidueRing& R, const std::vector<RingMatrix>& elements) {
  const MatrixSet set(elements.begin(), elements.end());
  ClosureCheck c;
  const RingMatrix id = ring_identity(R);
  c.contains_identity = set.count(id) == 1;
  c.closed_under_inverses = std::all_of(elements.begin(), elements.end(), [&](const RingMatrix& g) {
    const RingMatrix inv = ring_adjoint(R, g);
    return set.count(inv) == 1 && ring_mul(R, g, inv) == id && ring_mul(R, inv, g) == id;
  });
  c.closed_under_products = true;
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      ++c.products_checked;
      if (set.count(ring_mul(R, a, b)) == 0) {
        c.closed_under_products = false;
        return c;
      }
    }
  }
  return c;
}

std::optional<Integer> su3_order_formula(std::int64_t q, int n) {
  if (n < 1) throw PreconditionError("level must be at least 1");
  const PrimeClass pc = classify_prime(q);
  if (pc.cls == SplitType::Ramified) return std::nullopt;
  const Integer Q = q;
  const Integer sign = pc.cls == SplitType::Inert ? 1 : -1;
  Integer order = Q * Q * Q * (Q * Q - 1) * (Q * Q * Q + sign);
  for (int k = 1; k < n; ++k) order *= Integer(Q * Q * Q * Q * Q * Q * Q * Q);
  return order;
}

FiniteGroupReport enumerate_su3(std::int64_t q, int n, const EnumerationOptions& options) {
  if (n < 1) throw PreconditionError("level must be at least 1");
  if (!classify_prime(q).good)
    throw PreconditionError("enumerate_su3 needs an inert prime q; " + std::to_string(q) +
                            " is not inert in Q(sqrt(-3)); use formula mode");
  FiniteGroupReport rep;
  rep.q = q;
  rep.n = n;
  rep.kind = RingKind::Inert;

  EnumerationOptions level_opts = options;
  std::vector<RingMatrix> previous;
  std::optional<ResidueRing> previous_ring;
  for (int k = 1; k <= n; ++k) {
    const ResidueRing R(q, k);
    level_opts.ceiling = options.ceiling - rep.candidates_examined;
    std::uint64_t examined = 0;
    std::vector<RingMatrix> current = su3_elements(R, level_opts, &examined);
    rep.candidates_examined += examined;
    rep.level_orders.push_back({Integer(static_cast<unsigned long>(current.size())), Method::Enumerated});
    if (previous_ring) {
      LevelReduction red;
      red.from_level = k;
      red.to_level = k - 1;
      const RingMatrix id = ring_identity(*previous_ring);
      MatrixSet image;
      std::uint64_t kernel = 0;
      for (const auto& g : current) {
        const RingMatrix r = reduce_matrix(R, *previous_ring, g);
        if (r == id) ++kernel;
        image.insert(r);
      }
      red.kernel_size = {Integer(static_cast<unsigned long>(kernel)), Method::Enumerated};
      red.image_size = {Integer(static_cast<unsigned long>(image.size())), Method::Enumerated};
      red.surjective = image.size() == previous.size();
      red.orders_consistent = static_cast<std::uint64_t>(image.size()) * kernel == current.size();
      rep.reductions.push_back(red);
    }
    previous = std::move(current);
    previous_ring.emplace(R);
  }
  rep.order = {Integer(static_cast<unsigned long>(previous.size())), Method::Enumerated};
  if (auto f = su3_order_formula(q, n)) rep.formula_order = TaggedCount{*f, Method::Formula};

  if (options.closure_check) {
    const std::uint64_t products = sat_mul(previous.size(), previous.size());
    const std::uint64_t would_be = sat_add(rep.candidates_examined, products);
    if (would_be > options.ceiling)
      throw CeilingExceeded("closure check on " + std::to_string(previous.size()) +
                                " elements exceeds the ceiling",
                            would_be);
    rep.closure = check_group_axioms(*previous_ring, previous);
  }
  return rep;
}

FiniteGroupReport su3_formula_report(std::int64_t q, int n) {
  const auto order = su3_order_formula(q, n);
  if (!order)
    throw PreconditionError("no closed-form order for SU_3 at the ramified prime 3; "
                            "only enumeration is available");
  FiniteGroupReport rep;
  rep.q = q;
  rep.n = n;
  rep.kind = classify_prime(q).good ? RingKind::Inert : RingKind::Split;
  rep.order = {*order, Method::Formula};
  rep.formula_order = rep.order;
  const Integer Q = q;
  for (int k = 1; k <= n; ++k) rep.level_orders.push_back({*su3_order_formula(q, k), Method::Formula});
  for (int k = 2; k <= n; ++k) {
    LevelReduction red;
    red.from_level = k;
    red.to_level = k - 1;
    red.kernel_size = {Q * Q * Q * Q * Q * Q * Q * Q, Method::Formula};
    red.image_size = {*su3_order_formula(q, k - 1), Method::Formula};
    red.surjective = true;
    red.orders_consistent = red.kernel_size.value * red.image_size.value == *su3_order_formula(q, k);
    rep.reductions.push_back(red);
  }
  return rep;
}

}  // namespace rbg
