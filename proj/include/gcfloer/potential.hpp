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
#include <cstddef>
#include <string>
#include <vector>

#include "gcfloer/novikov.hpp"
#include "gcfloer/polytope.hpp"
#include "gcfloer/ratlin.hpp"

namespace gcfloer {

struct LaurentTerm {
  IntVector exponents;
  Rational shift;
  Complex coefficient{1.0, 0.0};
  /// Optional symbolic form of `shift` used by the pretty-printer.
  std::string shift_symbol;
};

class PotentialFunction {
 public:
  /// Merges terms with equal (exponents, shift), drops zero coefficients and
  /// sorts lexicographically on exponents then shift.
  PotentialFunction(std::size_t dim, std::vector<LaurentTerm> terms);

  std::size_t dimension() const { return dim_; }
  const std::vector<LaurentTerm>& terms() const { return terms_; }

  /// `symbolic` prints facet offsets by name ("T^(r+n*l3)") where known.
  std::string to_string(bool symbolic = false) const;

 private:
  std::size_t dim_;
  std::vector<LaurentTerm> terms_;
};

/// One term per facet: exponents = inward normal, shift = offset.
PotentialFunction leading_potential(const HPolytope& polytope);

/// x_i d/dx_i, with `axis` 0-based.
PotentialFunction log_derivative(const PotentialFunction& p, std::size_t axis);

/// min over terms of <exponents, u> + shift.
Rational tropicalize(const PotentialFunction& p, const QVector& u);

/// Per-term values <exponents, u> + shift, in term order.
std::vector<Rational> tropical_terms(const PotentialFunction& p, const QVector& u);

NovikovSeries evaluate_novikov(const PotentialFunction& p, const std::vector<NovikovSeries>& point,
                               const Rational& k);

Complex evaluate_complex(const PotentialFunction& p, double t, const std::vector<Complex>& point);

/// Entry (i, j) is log_derivative(log_derivative(p, i), j).
std::vector<std::vector<PotentialFunction>> hessian_terms(const PotentialFunction& p);

}  // namespace gcfloer
