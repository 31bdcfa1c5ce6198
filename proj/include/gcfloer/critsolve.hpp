/*
 * Copyright 2026 The gcfloer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcfloer/novikov.hpp"
#include "gcfloer/polytope.hpp"
#include "gcfloer/potential.hpp"
#include "gcfloer/tropical.hpp"

namespace gcfloer {

using Point3 = std::array<Complex, 3>;

enum class CaseTag { CaseA, CaseB1, CaseB2 };

const char* case_tag_name(CaseTag tag);

struct Witness {
  std::string name;
  bool holds;
};

struct ValuationCase {
  CaseTag tag;
  QVector valuations;
  bool inside_polytope;
  std::vector<Witness> witnesses;
};

struct CriticalPoint {
  Point3 leading;
  QVector valuation;
  Complex hess1;
  Complex hess2;
  /// Leading critical value as (exponent, coefficient) pairs.
  std::vector<SeriesTerm> critical_value_leading;
  std::optional<std::vector<NovikovSeries>> lifted;
};

/// Exponents S1 < S2 < S3 of the leading critical values.
std::array<Rational, 3> critical_exponents(const WoodwardParams& p);

/// The valuation u0 shared by the six non-degenerate critical points.
QVector critical_valuation(const WoodwardParams& p);

/// z^6 (z+b)^n (nz+b)^(n-2) - b^n c^(2-n) d^2 with b=T^l2, c=T^l3, d=T^(r+n*l3).
ValuedPolynomial eliminate_to_g(const WoodwardParams& p);

std::vector<ValuationCase> valuation_cases(const WoodwardParams& p);

/// Six solutions of y^2=1, x^2 y^n=z, z^2=xy, y=1 rows first.
std::vector<Point3> solve_leading_term_equations(const WoodwardParams& p);

/// (2 y^-3, 4 x^-2 z^-3 - z^-4). Throws DegenerateHessian if either vanishes.
std::pair<Complex, Complex> stage_hessians(const Point3& sol);

/// Determinant of the degenerate CaseB1 leading-term Hessian at (x, y, z).
Complex case_b1_hessian_det(const Point3& pt);

std::vector<std::vector<SeriesTerm>> critical_values(const WoodwardParams& p, const std::vector<Point3>& sols);

std::vector<CriticalPoint> critical_points(const WoodwardParams& p);

struct LiftResult {
  std::vector<NovikovSeries> point;
  /// Certified min valuation of the log-derivative residuals before each step and at the end.
  std::vector<Rational> residual_history;
};

/// Newton iteration in logarithmic coordinates until every x_i dP/dx_i has
/// certified valuation >= k.
LiftResult hensel_lift(const PotentialFunction& potential, const CriticalPoint& cp, const Rational& k);

/// K = S1 + 3(l2 - l3).
Rational default_lift_order(const WoodwardParams& p);

struct OracleOptions {
  std::uint64_t seed = 1;
  std::vector<double> box_lower;
  std::vector<double> box_upper;
  int max_iterations = 200;
  double tolerance = 1e-12;
  double dedup_distance = 1e-4;
};

struct OraclePoint {
  std::vector<Complex> point;
  std::vector<double> valuation;
};

/// Damped Newton on the logarithmic gradient of P with T = t, from random
/// seeds whose valuations are uniform in the option box.
std::vector<OraclePoint> numeric_torus_oracle(const PotentialFunction& potential, double t, int n_seeds,
                                              const OracleOptions& options);

}  // namespace gcfloer
