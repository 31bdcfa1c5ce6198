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

#include <map>
#include <utility>
#include <vector>

#include "gcfloer/novikov.hpp"
#include "gcfloer/polytope.hpp"

namespace gcfloer {

/// Univariate polynomial with Novikov coefficients, keyed by degree.
using ValuedPolynomial = std::map<int, NovikovSeries>;

struct NewtonVertex {
  int degree;
  Rational valuation;
  friend bool operator==(const NewtonVertex&, const NewtonVertex&) = default;
};

struct NewtonPolygon {
  std::vector<NewtonVertex> vertices;
};

struct RootValuation {
  Rational valuation;
  int multiplicity;
  friend bool operator==(const RootValuation&, const RootValuation&) = default;
};

/// Lower convex hull of (degree, val(coeff)); collinear points are merged.
NewtonPolygon newton_polygon(const ValuedPolynomial& f);

std::vector<RootValuation> root_valuation_counts(const NewtonPolygon& np);

enum class SlopeConfiguration { TwoSegments, SingleEdge, SingleEdgeAC };

struct SlopeComparison {
  Rational ab, bc, ac;
  SlopeConfiguration configuration;
};

/// Slopes of A=(0, 2r+n*l2+(n+2)*l3), B=(6, (2n-2)*l2), C=(2n+4, 0).
SlopeComparison slope_comparison(const WoodwardParams& p);

const char* slope_configuration_name(SlopeConfiguration c);

}  // namespace gcfloer
