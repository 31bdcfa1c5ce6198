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

// Half-space polytopes with exact rational data, and the Gelfand-Cetlin
// polytopes of the U(3) coadjoint orbit and of its symplectic cut.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcfloer/ratlin.hpp"

namespace gcfloer {

using IntVector = std::vector<std::int64_t>;

/// Parameters (n, r, lambda1 > lambda2 > lambda3) of the cut manifold.
struct WoodwardParams {
  int n = 3;
  Rational r;
  Rational lambda1;
  Rational lambda2;
  Rational lambda3;
};

enum class Strength { Basic, Strengthened };

struct ConstraintCheck {
  std::string name;
  std::string statement;
  bool strengthened_only = false;
  bool passed = false;
};

/// Every parameter inequality with its verdict, in a fixed order.
std::vector<ConstraintCheck> check_constraints(const WoodwardParams& p);

struct Violation {
  std::string name;
  std::string statement;
};

/// Names of the violated inequalities; empty means the parameters are valid
/// at the requested strength.
std::vector<Violation> validate_params(const WoodwardParams& p, Strength strength);

/// A facet <normal, u> + offset >= 0. The normal is the primitive inward
/// normal.
struct Facet {
  IntVector normal;
  Rational offset;
  std::string label;
  std::string offset_symbol;  // e.g. "r+n*l3"; empty when not symbolic
};

struct PointClass {
  enum class Kind { Interior, OnFaces, Outside };
  Kind kind = Kind::Interior;
  std::vector<std::size_t> faces;  // zero-valued facets (OnFaces), violated facets (Outside)
};

class HPolytope {
 public:
  /// Normalizes each normal to a primitive vector (scaling the offset), then
  /// checks that the polytope is bounded and full-dimensional. Throws
  /// DegenerateParameters otherwise.
  HPolytope(std::size_t dim, std::vector<Facet> facets, std::optional<QVector> singular_vertex = std::nullopt);

  std::size_t dimension() const { return dim_; }
  std::size_t facet_count() const { return facets_.size(); }
  const Facet& facet(std::size_t i) const { return facets_.at(i); }
  const std::vector<Facet>& facets() const { return facets_; }

  /// The distinguished non-smooth vertex, when the polytope has one.
  const std::optional<QVector>& singular_vertex() const { return singular_vertex_; }

  /// l_F(u) = <normal_F, u> + offset_F.
  Rational facet_value(std::size_t facet, const QVector& u) const;

  PointClass classify(const QVector& u) const;

  /// True iff w lies on facet F and strictly inside every other facet.
  bool facet_interior_contains(std::size_t facet, const QVector& w) const;

  /// All vertices, in lexicographic order.
  const std::vector<QVector>& vertices() const { return vertices_; }

  /// Structured text: one line per facet with exact "p/q" offsets.
  std::string serialize() const;

 private:
  std::size_t dim_;
  std::vector<Facet> facets_;
  std::optional<QVector> singular_vertex_;
  std::vector<QVector> vertices_;
};

/// Gelfand-Cetlin polytope of the orbit through diag(l1, l2, l3): the six
/// interlacing inequalities. Throws DegenerateParameters unless l1 > l2 > l3.
HPolytope build_orbit_polytope(const Rational& l1, const Rational& l2, const Rational& l3);

/// Polytope of the cut manifold, facets F1..F6 (left, right, top, bottom,
/// front, back). Throws DegenerateParameters when the basic constraints fail.
HPolytope build_cut_polytope(const WoodwardParams& p);

/// Axis-aligned box, mostly for tests and examples.
HPolytope build_box(const QVector& lower, const QVector& upper);

}  // namespace gcfloer
