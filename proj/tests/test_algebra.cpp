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

#include <cmath>

#include "gcfloer/algebra.hpp"
#include "gcfloer/error.hpp"
#include "support.hpp"

using namespace gcfloer;

namespace {

using Gram = std::vector<std::vector<Complex>>;

Gram diag(const std::vector<Complex>& d) {
  Gram g(d.size(), std::vector<Complex>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) g[i][i] = d[i];
  return g;
}

Gram random_gram(std::mt19937_64& g, int n) {
  Gram m(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      m[i][j] = m[j][i] = Complex(gcftest::uniform_int(g, -3, 3), gcftest::uniform_int(g, -1, 1));
  return m;
}

CliffordElement random_element(std::mt19937_64& g, int n) {
  CliffordElement x;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (gcftest::uniform_int(g, 0, 1)) x[s] = Complex(gcftest::uniform_int(g, -3, 3), gcftest::uniform_int(g, -3, 3));
  return x;
}

bool same(const CliffordElement& a, const CliffordElement& b, double tol = 1e-9) {
  auto get = [](const CliffordElement& x, std::uint32_t s) {
    auto it = x.find(s);
    return it == x.end() ? Complex{} : it->second;
  };
  for (const auto& [s, c] : a)
    if (std::abs(c - get(b, s)) > tol) return false;
  for (const auto& [s, c] : b)
    if (std::abs(c - get(a, s)) > tol) return false;
  return true;
}

Complex det(const Gram& g) {
  Eigen::MatrixXcd m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = g[i][j];
  return m.determinant();
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("product examples") {
    const auto a = GradedCliffordAlgebra::diagonal({2.0, 3.0, 5.0});
    CHECK(same(a.mul(a.generator(0), a.generator(0)), {{0u, 2.0}}));
    CHECK(same(a.mul(a.generator(0), a.generator(1)), {{0b011u, 1.0}}));
    CHECK(same(a.mul(a.generator(1), a.generator(0)), {{0b011u, -1.0}}));
    const auto top = a.basis(0b111u);
    CHECK(same(clifford_mul(a, top, top), {{0u, -30.0}}));
    CHECK(gcftest::error_code([] { GradedCliffordAlgebra(Gram{{1.0, 2.0}, {3.0, 1.0}}); }) == ErrorCode::InvalidArgument);
    CHECK(gcftest::error_code([] { GradedCliffordAlgebra::diagonal(std::vector<Complex>(9, 1.0)); }) ==
          ErrorCode::InvalidArgument);
  }

  TEST_CASE("property: products match the Chevalley representation") {
    auto g = gcftest::rng(81);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = gcftest::uniform_int(g, 1, 4);
      const auto gram = random_gram(g, n);
      const GradedCliffordAlgebra a(gram);
      const gcftest::ChevalleyModel model(gram);
      const auto x = random_element(g, n), y = random_element(g, n), z = random_element(g, n);
      const auto xy = a.mul(x, y);
      CHECK((model.element(xy) - model.element(x) * model.element(y)).norm() < 1e-8);
      CHECK(same(a.mul(xy, z), a.mul(x, a.mul(y, z)), 1e-8));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          auto lhs = a.mul(a.generator(i), a.generator(j));
          auto rhs = a.mul(a.generator(j), a.generator(i));
          for (auto& [s, c] : rhs) c = -c;
          rhs[0u] += 2.0 * gram[i][j];
          CHECK(same(lhs, rhs));
        }
    }
  }

  TEST_CASE("commutator ranks and hh0") {
    CHECK(graded_commutator_span_rank(GradedCliffordAlgebra::diagonal({1.0, 1.0, 1.0})) == 7);
    CHECK(graded_commutator_span_rank(GradedCliffordAlgebra::diagonal({2.5})) == 1);
    const Gram zero2(2, std::vector<Complex>(2));
    CHECK(hh0(GradedCliffordAlgebra(zero2)) == gcftest::ChevalleyModel(zero2).hh0());
    for (int n = 1; n <= 6; ++n) CHECK(hh0(GradedCliffordAlgebra::diagonal(std::vector<Complex>(n, 1.0))) == 1);
    CHECK(hh0(GradedCliffordAlgebra(Gram{})) == 1);
  }

  TEST_CASE("property: hh0 = 1 exactly for nondegenerate diagonal grams") {
    for (int n = 1; n <= 4; ++n) {
      int patterns = 1;
      for (int i = 0; i < n; ++i) patterns *= 3;
      for (int code = 0; code < patterns; ++code) {
        std::vector<Complex> d;
        for (int i = 0, c = code; i < n; ++i, c /= 3) d.push_back(static_cast<double>(c % 3 - 1));
        const auto a = GradedCliffordAlgebra::diagonal(d);
        const int expected = gcftest::ChevalleyModel(diag(d)).hh0();
        CHECK(hh0(a) == expected);
        CHECK((hh0(a) == 1) == a.nondegenerate());
      }
    }
  }

  TEST_CASE("top class square") {
    CHECK(std::abs(top_class_square(GradedCliffordAlgebra::diagonal({1.0, 1.0, 1.0})) + 1.0) < 1e-12);
    CHECK(std::abs(top_class_square(GradedCliffordAlgebra::diagonal({1.0, 0.0, 1.0}))) == 0.0);
    CHECK(std::abs(top_class_square(GradedCliffordAlgebra(Gram{{1.0, 1.0, 0.0}, {1.0, 1.0, 0.0}, {0.0, 0.0, 2.0}}))) == 0.0);
    CHECK(gcftest::error_code([] { top_class_square(GradedCliffordAlgebra::diagonal({1.0, 1.0})); }) ==
          ErrorCode::InvalidArgument);
    auto g = gcftest::rng(82);
    for (int trial = 0; trial < 300; ++trial) {
      const auto gram = random_gram(g, 3);
      const GradedCliffordAlgebra a(gram);
      const Complex v = top_class_square(a);
      CHECK((std::abs(v) > 1e-9) == a.nondegenerate());
      // A unimodular congruence to a diagonal form gives -det.
      CHECK(std::abs(v + det(gram)) < 1e-8 * (1 + std::abs(det(gram))));
    }
  }

  TEST_CASE("forms at the fixture critical points") {
    const auto p = gcftest::fixture();
    const auto potential = leading_potential(build_cut_polytope(p));
    const auto cps = critical_points(p);
    for (auto cp : cps) {
      cp.lifted = hensel_lift(potential, cp, default_lift_order(p)).point;
      const auto a = quadratic_form_from_potential(potential, cp);
      CHECK(a.nondegenerate());
      CHECK(hh0(a) == 1);
      CHECK(std::abs(top_class_square(a)) > 1e-6);
    }
    const auto a = quadratic_form_from_potential(potential, cps[0]);
    const Gram expected{{2.0, 3.0, -1.0}, {3.0, 2.0, -1.0}, {-1.0, -1.0, 2.0}};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(a.gram()[i][j] - expected[i][j]) < 1e-9);
    CHECK(std::abs(top_class_square(a) - 8.0) < 1e-9);

    const PotentialFunction squares(3, {{{2, 0, 0}, 0}, {{0, 2, 0}, 0}, {{0, 0, 2}, 0}});
    const CriticalPoint trivial{{1.0, 1.0, 1.0}, QVector{0, 0, 0}, 1.0, 1.0, {}, std::nullopt};
    const auto sq = quadratic_form_from_potential(squares, trivial);
    CHECK(sq.nondegenerate());
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(sq.gram()[i][i] - 4.0) < 1e-12);

    const PotentialFunction flat(3, {{{1, 1, 0}, 0}});
    CHECK(gcftest::error_code([&] { quadratic_form_from_potential(flat, trivial); }) == ErrorCode::DegenerateForm);
  }

  TEST_CASE("quantum cohomology ranks") {
    const auto q = qh_betti();
    CHECK(q.betti == std::array<int, 4>{1, 2, 2, 1});
    CHECK(q.degree4 == 0);
    CHECK(q.total == 6);
    // Degree 3: X1*R1, X2*R1, R2 in the basis X1^3, X1^2X2, X1X2^2, X2^3.
    const QMatrix deg3{{1, 3, 1, 0}, {0, 1, 3, 1}, {0, 1, 1, 0}};
    CHECK(4 - static_cast<int>(rank(deg3)) == q.betti[3]);
    // Degree 4: X1^2 R1, X1X2 R1, X2^2 R1, X1 R2, X2 R2 span all five monomials.
    const QMatrix deg4{{1, 3, 1, 0, 0}, {0, 1, 3, 1, 0}, {0, 0, 1, 3, 1}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}};
    CHECK(rank(deg4) == 5);
  }

  TEST_CASE("twisted torus cohomology") {
    auto c = [](Complex z) { return NovikovSeries::constant(z); };
    CHECK_FALSE(twisted_torus_cohomology_is_zero({c(1.0), c(1.0), c(1.0)}));
    CHECK(twisted_torus_cohomology_is_zero({c(gcftest::zeta()), c(1.0), c(1.0)}));
    CHECK(gcftest::error_code([&] {
            twisted_torus_cohomology_is_zero({NovikovSeries::monomial(1.0, 1), c(1.0), c(1.0)});
          }) == ErrorCode::NotUnitary);
    const auto cps = critical_points(gcftest::fixture());
    int pairs = 0;
    for (std::size_t i = 0; i < cps.size(); ++i)
      for (std::size_t j = i + 1; j < cps.size(); ++j) {
        std::vector<NovikovSeries> tau;
        for (std::size_t k = 0; k < 3; ++k) tau.push_back(c(cps[j].leading[k] / cps[i].leading[k]));
        CHECK(twisted_torus_cohomology_is_zero(tau));
        ++pairs;
      }
    CHECK(pairs == 15);
  }
}
