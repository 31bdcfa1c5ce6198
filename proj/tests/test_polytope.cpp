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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gcfloer/error.hpp"
#include "gcfloer/polytope.hpp"
#include "support.hpp"

using namespace gcfloer;

namespace {

bool has_violation(const std::vector<Violation>& v, const std::string& name) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.name == name; });
}

std::set<std::pair<IntVector, Rational>> facet_set(const std::vector<Facet>& facets) {
  std::set<std::pair<IntVector, Rational>> out;
  for (const auto& f : facets) out.insert({f.normal, f.offset});
  return out;
}

HPolytope cube() { return build_box(QVector{0, 0, 0}, QVector{1, 1, 1}); }

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("validate_params examples") {
    CHECK(validate_params(gcftest::fixture(), Strength::Strengthened).empty());
    CHECK(has_violation(validate_params({3, 5, 4, 0, -1}, Strength::Basic), "relations between lambda and r"));
    const auto v = validate_params({3, 3, 10, 0, -1}, Strength::Strengthened);
    CHECK(has_violation(v, "1/(n+1) bound"));
    CHECK(has_violation(validate_params({3, 3, 10, 0, -1}, Strength::Basic), "cannot cut the S3 vertex"));
    CHECK(validate_params({3, 4, 10, 0, -1}, Strength::Basic).empty());
    CHECK(has_violation(validate_params({3, 4, 10, 0, -1}, Strength::Strengthened), "1/(n+1) bound"));
    CHECK(has_violation(validate_params({2, 5, 10, 0, -1}, Strength::Basic), "n > 2"));
  }

  TEST_CASE("orbit polytope examples") {
    const auto orbit = build_orbit_polytope(10, 0, -1);
    CHECK(orbit.classify(QVector{5, Rational(-1, 2), 2}).kind == PointClass::Kind::Interior);
    const auto c = orbit.classify(QVector{0, 0, 0});
    CHECK(c.kind == PointClass::Kind::OnFaces);
    CHECK(c.faces == std::vector<std::size_t>{1, 2, 4, 5});
    CHECK(gcftest::error_code([] { build_orbit_polytope(1, 0, 0); }) == ErrorCode::DegenerateParameters);
  }

  TEST_CASE("cut polytope examples") {
    const auto cut = build_cut_polytope(gcftest::fixture());
    REQUIRE(cut.facet_count() == 6);
    const QVector u0{Rational(13, 6), Rational(-1, 2), Rational(5, 6)};
    CHECK(cut.classify(u0).kind == PointClass::Kind::Interior);
    const std::vector<Rational> expected{Rational(1, 2), Rational(1, 2), Rational(4, 3),
                                         Rational(4, 3), Rational(13, 6), Rational(4, 3)};
    for (std::size_t i = 0; i < 6; ++i) CHECK(cut.facet_value(i, u0) == expected[i]);
    const auto sv = cut.classify(QVector{0, 0, 0});
    CHECK(sv.kind == PointClass::Kind::OnFaces);
    for (std::size_t f : {1u, 3u, 4u}) CHECK(std::count(sv.faces.begin(), sv.faces.end(), f) == 1);
    REQUIRE(cut.singular_vertex());
    CHECK(*cut.singular_vertex() == QVector{0, 0, 0});
    const auto far = cut.classify(QVector{100, 0, 0});
    CHECK(far.kind == PointClass::Kind::Outside);
    CHECK(far.faces == std::vector<std::size_t>{5});
  }

  TEST_CASE("classify on the cube") {
    const auto c = cube();
    CHECK(c.classify(QVector{Rational(1, 2), Rational(1, 2), Rational(1, 2)}).kind == PointClass::Kind::Interior);
    const auto face = c.classify(QVector{0, Rational(1, 2), Rational(1, 2)});
    CHECK(face.kind == PointClass::Kind::OnFaces);
    REQUIRE(face.faces.size() == 1);
    CHECK(c.facet(face.faces[0]).normal == IntVector{1, 0, 0});
    CHECK(c.classify(QVector{2, 0, 0}).kind == PointClass::Kind::Outside);
    CHECK(c.vertices().size() == 8);
    CHECK(gcftest::error_code([&] { c.classify(QVector{1, 2}); }) == ErrorCode::DimensionMismatch);
  }

  TEST_CASE("facet_interior_contains examples") {
    const auto cut = build_cut_polytope(gcftest::fixture());
    CHECK(cut.facet_interior_contains(2, QVector{1, Rational(-1, 2), 1}));
    CHECK_FALSE(cut.facet_interior_contains(2, QVector{0, 0, 0}));
    const auto c = cube();
    std::size_t x0 = 0;
    for (std::size_t i = 0; i < c.facet_count(); ++i)
      if (c.facet(i).normal == IntVector{1, 0, 0}) x0 = i;
    CHECK_FALSE(c.facet_interior_contains(x0, QVector{0, 0, 0}));
    CHECK(c.facet_interior_contains(x0, QVector{0, Rational(1, 3), Rational(2, 3)}));
  }

  TEST_CASE("facet symbols and normals") {
    const auto cut = build_cut_polytope(gcftest::fixture());
    CHECK(cut.facet(5).normal == IntVector{-1, -3, 0});
    CHECK(cut.facet(5).offset == 2);
    CHECK(cut.facet(5).offset_symbol == "r+n*l3");
    for (const auto& f : cut.facets()) {
      std::int64_t g = 0;
      for (auto x : f.normal) g = std::gcd(g, x);
      CHECK(g == 1);
    }
  }

  TEST_CASE("property: cut polytope is the orbit polytope with the first facet replaced") {
    auto g = gcftest::rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = gcftest::random_strengthened(g, gcftest::uniform_int(g, 3, 6));
      auto orbit = facet_set(build_orbit_polytope(p.lambda1, p.lambda2, p.lambda3).facets());
      orbit.erase({IntVector{-1, 0, 0}, p.lambda1});
      const IntVector back{-1, -p.n, 0};
      orbit.insert({back, p.r + p.n * p.lambda3});
      const auto cut = build_cut_polytope(p);
      CHECK(facet_set(cut.facets()) == orbit);
      CHECK(cut.vertices().size() >= 4);
    }
  }

  TEST_CASE("property: interior points survive small perturbations") {
    auto g = gcftest::rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = gcftest::random_strengthened(g, gcftest::uniform_int(g, 3, 5));
      const auto cut = build_cut_polytope(p);
      // Centroid of the vertices is interior.
      std::vector<Rational> c(3);
      for (const auto& v : cut.vertices())
        for (int i = 0; i < 3; ++i) c[i] += v[i] / static_cast<int>(cut.vertices().size());
      const QVector centre(c);
      REQUIRE(cut.classify(centre).kind == PointClass::Kind::Interior);
      Rational min_value = cut.facet_value(0, centre);
      std::int64_t max_l1 = 0;
      for (std::size_t i = 0; i < cut.facet_count(); ++i) {
        min_value = std::min(min_value, cut.facet_value(i, centre));
        std::int64_t l1 = 0;
        for (auto x : cut.facet(i).normal) l1 += std::abs(x);
        max_l1 = std::max(max_l1, l1);
      }
      const Rational delta = min_value / max_l1 * Rational(99, 100);
      std::vector<Rational> moved = c;
      for (int i = 0; i < 3; ++i) moved[i] += delta * gcftest::uniform_int(g, -1, 1);
      CHECK(cut.classify(QVector(moved)).kind == PointClass::Kind::Interior);
    }
  }

  TEST_CASE("serialize lists the facets") {
    const auto s = build_cut_polytope(gcftest::fixture()).serialize();
    CHECK(s.find("label back") != std::string::npos);
    CHECK(s.find("singular (0, 0, 0)") != std::string::npos);
  }
}
