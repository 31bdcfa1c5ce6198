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
#include <map>
#include <vector>

#include "gcfloer/critsolve.hpp"
#include "gcfloer/novikov.hpp"
#include "gcfloer/potential.hpp"

namespace gcfloer {

/// Monomial e_I keyed by the bitmask of I; bit i is generator e_{i+1}.
using CliffordElement = std::map<std::uint32_t, Complex>;

class GradedCliffordAlgebra {
 public:
  /// At most 8 generators. `gram` must be symmetric within eps; e_i e_j + e_j e_i = 2 gram(i,j).
  explicit GradedCliffordAlgebra(std::vector<std::vector<Complex>> gram, double eps = kEpsilon);

  static GradedCliffordAlgebra diagonal(const std::vector<Complex>& entries);

  int generators() const { return n_; }
  const std::vector<std::vector<Complex>>& gram() const { return gram_; }
  bool nondegenerate() const { return nondegenerate_; }
  double eps() const { return eps_; }

  CliffordElement basis(std::uint32_t mask) const;
  /// e_{i+1}.
  CliffordElement generator(int i) const;
  CliffordElement mul(const CliffordElement& a, const CliffordElement& b) const;

 private:
  const CliffordElement& basis_product(std::uint32_t a, std::uint32_t b) const;
  CliffordElement times_generator(std::uint32_t mask, int k) const;

  int n_;
  std::vector<std::vector<Complex>> gram_;
  double eps_;
  bool nondegenerate_;
  std::vector<std::vector<CliffordElement>> table_;
};

CliffordElement clifford_mul(const GradedCliffordAlgebra& a, const CliffordElement& x, const CliffordElement& y);

/// Dimension of the span of ab - (-1)^{|a||b|} ba over basis monomials.
int graded_commutator_span_rank(const GradedCliffordAlgebra& a);

int hh0(const GradedCliffordAlgebra& a);

/// Leading coefficients of the logarithmic Hessian of P at the (lifted) point.
/// Throws DegenerateForm if the gram has rank < 3.
GradedCliffordAlgebra quadratic_form_from_potential(const PotentialFunction& potential, const CriticalPoint& cp);

struct QhBetti {
  std::array<int, 4> betti;
  int degree4;
  int total;
};

/// Graded dimensions of Q[X1,X2]/(X1^2+3X1X2+X2^2, X1^2X2+X1X2^2).
QhBetti qh_betti();

bool twisted_torus_cohomology_is_zero(const std::vector<NovikovSeries>& tau);

/// The unit coefficient of (f1 f2 f3)^2 for a gram-orthogonal basis f.
Complex top_class_square(const GradedCliffordAlgebra& a);

}  // namespace gcfloer
