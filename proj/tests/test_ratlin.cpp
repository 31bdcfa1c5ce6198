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

#include "gcfloer/error.hpp"
#include "gcfloer/ratlin.hpp"
#include "support.hpp"

using namespace gcfloer;

TEST_SUITE("ratlin") {
  TEST_CASE("parse and print rationals") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational(" -7 ") == Rational(-7));
    CHECK(parse_rational("0.125") == Rational(1, 8));
    CHECK(parse_rational("-.5") == Rational(-1, 2));
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1e3"), Error);
  }

  TEST_CASE("reduced form after every operation") {
    const Rational a(2, 6);
    CHECK(numerator(a) == 1);
    CHECK(denominator(a) == 3);
    const Rational b = Rational(1, 6) + Rational(1, 3);
    CHECK(denominator(b) == 2);
  }

  TEST_CASE("solve_linear examples") {
    auto id = std::get<QVector>(solve_linear(QMatrix::identity(3), QVector{1, 2, 3}));
    CHECK(id == QVector{1, 2, 3});
    CHECK(std::holds_alternative<NoSolution>(solve_linear(QMatrix{{1, 1}, {1, 1}}, QVector{1, 2})));
    auto diag = std::get<QVector>(solve_linear(QMatrix{{2, 0}, {0, 4}}, QVector{1, 1}));
    CHECK(diag == QVector{Rational(1, 2), Rational(1, 4)});
    auto under = solve_linear(QMatrix{{1, 1}}, QVector{2});
    REQUIRE(std::holds_alternative<Underdetermined>(under));
    CHECK(std::get<Underdetermined>(under).nullity == 1);
  }

  TEST_CASE("rank examples") {
    CHECK(rank(QMatrix(3, 3)) == 0);
    CHECK(rank(QMatrix::identity(4)) == 4);
    CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
    std::vector<std::vector<Complex>> c{{1.0, Complex(0, 1)}, {Complex(0, 1), -1.0}};
    CHECK(rank(c) == 1);
  }

  TEST_CASE("property: exact arithmetic, rank symmetry, solutions check") {
    auto g = gcftest::rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const Rational a(gcftest::uniform_int(g, -50, 50), gcftest::uniform_int(g, 1, 30));
      const Rational b(gcftest::uniform_int(g, -50, 50), gcftest::uniform_int(g, 1, 30));
      CHECK((a + b) - b == a);
      const std::size_t rows = static_cast<std::size_t>(gcftest::uniform_int(g, 1, 4));
      const std::size_t cols = static_cast<std::size_t>(gcftest::uniform_int(g, 1, 4));
      std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
      for (auto& row : m)
        for (auto& x : row) x = Rational(gcftest::uniform_int(g, -2, 2), gcftest::uniform_int(g, 1, 3));
      const QMatrix q(m);
      CHECK(rank(q) == rank(q.transpose()));
      std::vector<Rational> rhs(rows);
      for (auto& x : rhs) x = gcftest::uniform_int(g, -3, 3);
      const auto sol = solve_linear(q, QVector(rhs));
      if (const auto* x = std::get_if<QVector>(&sol)) CHECK(q * *x == QVector(rhs));
      if (const auto* u = std::get_if<Underdetermined>(&sol)) CHECK(q * u->particular == QVector(rhs));
    }
  }

  TEST_CASE("dimension mismatch") {
    const QVector three{1, 2, 3};
    CHECK(gcftest::error_code([&] { (void)(QMatrix::identity(2) * three); }) == ErrorCode::DimensionMismatch);
    CHECK(gcftest::error_code([] { solve_linear(QMatrix::identity(2), QVector(1)); }) == ErrorCode::DimensionMismatch);
  }
}
