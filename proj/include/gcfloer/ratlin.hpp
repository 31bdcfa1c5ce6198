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

// Exact rationals, small dense rational matrices, and the complex
// coefficient type used throughout the library.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gcfloer {

using BigInt = boost::multiprecision::cpp_int;
// cpp_rational keeps numerator/denominator reduced with a positive
// denominator after every operation.
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Shared tolerance for complex coefficients: pruning in Novikov series,
/// pivoting in complex rank, and equality of leading-term solutions.
inline constexpr double kEpsilon = 1e-9;

/// Parses "p/q", "p", or a finite decimal such as "-0.25" exactly.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline bool is_zero(const Complex& z, double eps = kEpsilon) { return std::abs(z) <= eps; }

class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : entries_(n) {}
  explicit QVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  QVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const QVector&, const QVector&) = default;
  friend bool operator<(const QVector& a, const QVector& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Rational> entries_;
};

std::string to_string(const QVector& v);

class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  explicit QMatrix(const std::vector<std::vector<Rational>>& rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMatrix transpose() const;
  QVector operator*(const QVector& x) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct NoSolution {};

/// The system is consistent but has a solution space of positive
/// dimension; `particular` is one solution (free variables set to 0).
struct Underdetermined {
  QVector particular;
  std::size_t nullity = 0;
};

using LinearSolution = std::variant<QVector, NoSolution, Underdetermined>;

LinearSolution solve_linear(const QMatrix& a, const QVector& b);

std::size_t rank(const QMatrix& a);

/// Rank of a complex matrix, treating pivots with modulus <= eps * scale as
/// zero, where scale = max(1, largest entry modulus).
std::size_t rank(const std::vector<std::vector<Complex>>& a, double eps = kEpsilon);

}  // namespace gcfloer
