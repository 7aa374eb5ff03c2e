// Copyright 2026 The congruence-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cforge/locring/modular_equations.hpp"

#include <algorithm>
#include <stdexcept>

namespace cforge::modeq {
namespace {

QPoly ints(std::initializer_list<long> c) {
  IntVec v;
  for (long x : c) v.emplace_back(x);
  return QPoly::from_integers(std::move(v));
}

}  // namespace

QPoly a(int j) {
  switch (j) {
    case 0: return ints({0, -1, -18, -81});
    case 1: return ints({0, -15, -279, -1296});
    case 2: return ints({0, -57, -1080, -5184});
    default: throw std::out_of_range("a_j needs 0 <= j <= 2");
  }
}

QPoly b(int k) {
  switch (k) {
    case 0: return ints({0, 0, 0, -1});
    case 1: return ints({1, 9, 9, -16});
    case 2: return ints({-2, -9, 72, -64});
    case 3: return ints({1});
    default: throw std::out_of_range("b_k needs 0 <= k <= 3");
  }
}

QPoly b_in_x(int k) { return b(k).compose_affine(Rat(9), Rat(1)); }

Rat BiPoly::coeff(std::size_t p, std::size_t q) const {
  if (p >= rows.size() || q >= rows[p].size()) return Rat(0);
  return rows[p][q];
}

bool operator==(const BiPoly& l, const BiPoly& r) {
  const std::size_t np = std::max(l.rows.size(), r.rows.size());
  for (std::size_t p = 0; p < np; ++p) {
    const std::size_t nq = std::max(p < l.rows.size() ? l.rows[p].size() : 0, p < r.rows.size() ? r.rows[p].size() : 0);
    for (std::size_t q = 0; q < nq; ++q)
      if (l.coeff(p, q) != r.coeff(p, q)) return false;
  }
  return true;
}

namespace {

void add_row(BiPoly& out, std::size_t p, const QPoly& poly_in_v) {
  if (out.rows.size() <= p) out.rows.resize(p + 1);
  auto& row = out.rows[p];
  if (!poly_in_v.is_zero() && row.size() <= static_cast<std::size_t>(poly_in_v.degree()))
    row.resize(static_cast<std::size_t>(poly_in_v.degree()) + 1);
  for (std::int64_t q = poly_in_v.low(); q <= poly_in_v.degree(); ++q) row[static_cast<std::size_t>(q)] += poly_in_v.coeff(q);
}

}  // namespace

BiPoly mod_x_polynomial() {
  BiPoly out;
  add_row(out, 3, QPoly::constant(Rat(1)));
  for (int j = 0; j < 3; ++j) add_row(out, static_cast<std::size_t>(j), a(j));
  return out;
}

BiPoly mod_z_polynomial() {
  BiPoly out;
  for (int k = 0; k < 4; ++k) add_row(out, static_cast<std::size_t>(k), b(k));
  return out;
}

BiPoly mod_x_in_z() {
  // x^p a(X) -> ((z-1)/9)^p a((Z-1)/9): expand the u-power by the binomial theorem.
  const QPoly u_lin = QPoly::from_rationals({Rat(-1, 9), Rat(1, 9)});
  BiPoly out;
  auto add_term = [&](int p, const QPoly& coeff_in_X) {
    const QPoly in_Z = coeff_in_X.compose_affine(Rat(1, 9), Rat(-1, 9));
    const QPoly u_pow = u_lin.pow(p);
    for (std::int64_t e = 0; e <= u_pow.degree(); ++e) add_row(out, static_cast<std::size_t>(e), in_Z.scaled(u_pow.coeff(e)));
  };
  add_term(3, QPoly::constant(Rat(1)));
  for (int j = 0; j < 3; ++j) add_term(j, a(j));
  return out;
}

}  // namespace cforge::modeq

namespace cforge {

LocalizedElement fundamental_relation(int i, int l) {
  auto poly = [](std::initializer_list<const char*> c) {
    IntVec v;
    for (const char* s : c) v.emplace_back(s);
    return QPoly::from_integers(std::move(v));
  };
  if (i == 1) {
    switch (l) {
      case 0: return {poly({"1"}), 0};
      case 1: return {poly({"0", "19", "360", "1728"}), 0};
      case 2: return {poly({"0", "10", "1269", "41904", "585792", "3732480", "8957952"}), 0};
      default: break;
    }
  } else if (i == 0) {
    switch (l) {
      case 0: return {poly({"0", "33", "1392", "21120", "138240", "331776"}), 1};
      case 1:
        return {poly({"0", "12", "2325", "121080", "2915136", "37988352", "277696512", "1074954240", "1719926784"}), 1};
      case 2:
        return {poly({"0", "1", "1213", "176005", "10225152", "318757248", "6012278784", "72239910912",
                      "558546223104", "2698565124096", "7430083706880", "8916100448256"}),
                1};
      default: break;
    }
  }
  throw std::out_of_range("fundamental relations exist for i in {0,1}, 0 <= l <= 2");
}

}  // namespace cforge
