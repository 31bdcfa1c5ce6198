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

#include "gcfloer/tropical.hpp"

#include "gcfloer/error.hpp"

namespace gcfloer {

namespace {

// Sign of the cross product (b - a) x (c - a); <= 0 means b is not strictly below ac.
int turn(const NewtonVertex& a, const NewtonVertex& b, const NewtonVertex& c) {
  const Rational cross = Rational(b.degree - a.degree) * (c.valuation - a.valuation) -
                         (b.valuation - a.valuation) * Rational(c.degree - a.degree);
  return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
}

}  // namespace

NewtonPolygon newton_polygon(const ValuedPolynomial& f) {
  std::vector<NewtonVertex> pts;
  for (const auto& [deg, c] : f) {
    if (c.is_zero()) continue;
    pts.push_back({deg, *c.valuation()});
  }
  if (pts.size() < 2) throw Error(ErrorCode::TooFewTerms, "Newton polygon needs at least two nonzero coefficients");
  // Map iteration gives increasing degrees; monotone chain keeps strict left turns.
  std::vector<NewtonVertex> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return {hull};
}

std::vector<RootValuation> root_valuation_counts(const NewtonPolygon& np) {
  std::vector<RootValuation> out;
  for (std::size_t i = 1; i < np.vertices.size(); ++i) {
    const auto& a = np.vertices[i - 1];
    const auto& b = np.vertices[i];
    const int span = b.degree - a.degree;
    if (span <= 0) throw Error(ErrorCode::InvalidArgument, "Newton polygon degrees must increase");
    out.push_back({-(b.valuation - a.valuation) / span, span});
  }
  return out;
}

SlopeComparison slope_comparison(const WoodwardParams& p) {
  const int n = p.n;
  const Rational a = 2 * p.r + n * p.lambda2 + (n + 2) * p.lambda3;
  const Rational b = (2 * n - 2) * p.lambda2;
  SlopeComparison s;
  s.ab = (b - a) / 6;
  s.bc = -b / (2 * n - 2);
  s.ac = -a / (2 * n + 4);
  if (s.ab < s.bc) s.configuration = SlopeConfiguration::TwoSegments;
  else if (s.ab == s.bc) s.configuration = SlopeConfiguration::SingleEdge;
  else s.configuration = SlopeConfiguration::SingleEdgeAC;
  return s;
}

const char* slope_configuration_name(SlopeConfiguration c) {
  switch (c) {
    case SlopeConfiguration::TwoSegments: return "two segments";
    case SlopeConfiguration::SingleEdge: return "single edge";
    case SlopeConfiguration::SingleEdgeAC: return "single edge AC";
  }
  return "?";
}

}  // namespace gcfloer
