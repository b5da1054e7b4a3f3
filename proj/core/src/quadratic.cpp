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
#include "rbg/quadratic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rbg/errors.hpp"

namespace rbg {

Rational parse_rational(const std::string& text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s),
               [](char c) { return c != ' '; });
  if (s.empty()) throw ParseError("empty rational literal");
  const auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    return std::all_of(part.begin() + static_cast<long>(i), part.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.find_first_of("+-") != std::string::npos)
    throw ParseError("malformed rational literal '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

// (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, and w^2 = w - 1.
QuadElem& QuadElem::operator*=(const QuadElem& o) {
  Rational bd = y_ * o.y_;
  Rational nx = x_ * o.x_ - bd;
  Rational ny = x_ * o.y_ + y_ * o.x_ + bd;
  x_ = std::move(nx);
  y_ = std::move(ny);
  return *this;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt(-3))");
  const Rational n = norm();
  QuadElem c = conj();
  return {c.x_ / n, c.y_ / n};
}

QuadElem QuadElem::pow(unsigned e) const {
  QuadElem result(1);
  QuadElem base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string QuadElem::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadElem& e) {
  if (e.y() == 0) return os << e.x().get_str();
  if (e.x() != 0) os << e.x().get_str() << (e.y() < 0 ? " - " : " + ");
  else if (e.y() < 0) os << "-";
  Rational ay = abs(e.y());
  if (ay != 1) os << ay.get_str() << "*";
  return os << "w";
}

QuadElem parse_quad(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_rational(text), 0};
  if (text.find(',', comma + 1) != std::string::npos)
    throw ParseError("expected 'x' or 'x,y' for an element of Q(w), got '" + text + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

namespace {

Integer cube(const Integer& u) { return u * u * u; }

std::optional<Integer> exact_cube_root(const Integer& v) {
  Integer r;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3);
  if (cube(r) == v) return r;
  return std::nullopt;
}

std::optional<Rational> exact_cube_root(const Rational& v) {
  auto n = exact_cube_root(Integer(v.get_num()));
  auto d = exact_cube_root(Integer(v.get_den()));
  if (!n || !d) return std::nullopt;
  Rational r(*n, *d);
  r.canonicalize();
  return r;
}

// Integer roots of u^3 + p u + q, found by bisection on the monotone pieces.
std::vector<Integer> integer_roots_depressed_cubic(const Integer& p, const Integer& q) {
  const auto f = [&](const Integer& u) -> Integer { return cube(u) + p * u + q; };
  Integer bound = 1 + std::max<Integer>(abs(p), abs(q));

  // Smallest u in [lo, hi] with pred(u); hi + 1 if none.
  const auto search = [](Integer lo, Integer hi, const auto& pred) {
    Integer end = hi + 1;
    hi += 1;
    while (lo < hi) {
      Integer mid = lo + (hi - lo) / 2;
      if (pred(mid)) hi = mid;
      else lo = mid + 1;
    }
    return lo <= end ? lo : end;
  };

  std::vector<std::pair<Integer, Integer>> increasing;
  std::vector<std::pair<Integer, Integer>> decreasing;
  if (p >= 0) {
    increasing.emplace_back(-bound, bound);
  } else {
    Integer third = (-p) / 3;
    Integer fl;
    mpz_sqrt(fl.get_mpz_t(), third.get_mpz_t());
    Integer ce = (3 * fl * fl == -p) ? fl : Integer(fl + 1);
    increasing.emplace_back(-bound, -ce);
    decreasing.emplace_back(-fl, fl);
    increasing.emplace_back(ce, bound);
  }

  std::vector<Integer> roots;
  for (const auto& [lo, hi] : increasing) {
    if (lo > hi) continue;
    Integer u = search(lo, hi, [&](const Integer& v) { return f(v) >= 0; });
    if (u <= hi && f(u) == 0) roots.push_back(u);
  }
  for (const auto& [lo, hi] : decreasing) {
    if (lo > hi) continue;
    Integer u = search(lo, hi, [&](const Integer& v) { return f(v) <= 0; });
    if (u <= hi && f(u) == 0) roots.push_back(u);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::optional<QuadElem> cube_root_in_E(const QuadElem& e) {
  if (e.is_zero()) return QuadElem(0);
  // A cube root c has N(c)^3 = N(e); N is positive definite so the rational
  // cube root is unique.
  auto n = exact_cube_root(e.norm());
  if (!n) return std::nullopt;

  // t = Tr(c) is rational and satisfies t^3 - 3 n t - Tr(e) = 0.
  const Rational tr = e.trace();
  Integer scale = lcm(Integer(n->get_den()), Integer(tr.get_den()));
  Rational pq = -3 * *n * scale * scale;
  Rational qq = -tr * scale * scale * scale;
  std::vector<QuadElem> candidates;
  for (const Integer& u : integer_roots_depressed_cubic(Integer(pq.get_num()),
                                                        Integer(qq.get_num()))) {
    Rational t(u, scale);
    t.canonicalize();
    // c^2 - t c + n = 0 gives c^3 = (t^2 - n) c - t n.
    Rational lead = t * t - *n;
    if (lead != 0) {
      candidates.push_back((e + QuadElem(t * *n)) / QuadElem(lead));
    } else {
      candidates.push_back(QuadElem(t) * QuadElem::omega());
      candidates.push_back(QuadElem(t) * QuadElem::omega().conj());
    }
  }
  for (const QuadElem& c : candidates)
    if (c * c * c == e) return c;
  return std::nullopt;
}

}  // namespace rbg
