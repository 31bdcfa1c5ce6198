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

// Truncated Novikov-field scalars: finite sums  sum_i a_i T^{e_i}  with exact
// rational exponents and complex coefficients.
//
// A series optionally carries a truncation order K. When present, every
// term with exponent < K is known exactly and nothing is known at or beyond
// K. Arithmetic propagates the tightest order that is still valid, so a
// result never claims digits its inputs could not supply.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcfloer/ratlin.hpp"

namespace gcfloer {

struct SeriesTerm {
  Rational exponent;
  Complex coeff;
};

class NovikovSeries {
 public:
  /// Exact zero.
  NovikovSeries() = default;

  /// Sorts and merges the terms, drops coefficients with |c| <= eps, and
  /// discards every term at or beyond `order`.
  explicit NovikovSeries(std::vector<SeriesTerm> terms, std::optional<Rational> order = std::nullopt,
                         double eps = kEpsilon);

  static NovikovSeries constant(Complex c);
  static NovikovSeries monomial(Complex c, const Rational& exponent);
  /// Zero up to (but excluding) T^order, unknown beyond.
  static NovikovSeries zero_to_order(const Rational& order);

  const std::vector<SeriesTerm>& terms() const { return terms_; }
  const std::optional<Rational>& order() const { return order_; }
  bool truncated() const { return order_.has_value(); }
  /// True when no nonzero term is known.
  bool is_zero() const { return terms_.empty(); }

  /// Leading exponent; nullopt stands for +infinity (no known terms).
  std::optional<Rational> valuation() const;
  /// What the series certifies about its valuation: the leading exponent,
  /// or the truncation order when no term is known. nullopt for exact zero.
  std::optional<Rational> valuation_lower_bound() const;
  Complex leading_coefficient() const;

  NovikovSeries truncated_at(const Rational& k) const;
  /// Same terms, order marker dropped: the finite sum taken as an exact value.
  NovikovSeries as_exact() const;
  NovikovSeries scaled(Complex c) const;
  NovikovSeries shifted(const Rational& e) const;

  /// Numeric substitution T = t.
  Complex evaluate(double t) const;

  /// "a0*T^(p/q) + a1*T^(r/s) + ... + O(T^(K))".
  std::string to_string() const;
  static NovikovSeries parse(std::string_view text);

  friend NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b);
  friend NovikovSeries operator-(const NovikovSeries& a, const NovikovSeries& b);
  friend NovikovSeries operator-(const NovikovSeries& a);
  friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b);

 private:
  std::vector<SeriesTerm> terms_;
  std::optional<Rational> order_;
};

/// Product truncated at `cap` (absolute exponent) in addition to the
/// propagated order.
NovikovSeries multiply(const NovikovSeries& a, const NovikovSeries& b, const std::optional<Rational>& cap);

/// Multiplicative inverse, cut at absolute exponent `k`. A truncated input of
/// order K_s and valuation v yields at most order K_s - 2v.
/// Throws ErrorCode::ZeroSeries for the zero series.
NovikovSeries invert(const NovikovSeries& s, const Rational& k);

/// s^e for any integer e, cut at absolute exponent `cap`.
NovikovSeries power(const NovikovSeries& s, int e, const Rational& cap);

/// exp(s) for val(s) > 0, cut at absolute exponent `cap`.
NovikovSeries exp_series(const NovikovSeries& s, const Rational& cap);

/// Splits a unit a0 + (higher terms) into (a0, higher terms).
/// Throws ErrorCode::NotUnitary unless val(s) == 0.
std::pair<Complex, NovikovSeries> unitary_part(const NovikovSeries& s);

/// Default truncation order for a parameter set: 10 (lambda2 - lambda3).
Rational default_truncation_order(const Rational& lambda2, const Rational& lambda3);

/// Coefficient text used by series and potential printers: "2", "-0.5",
/// "(0.5+0.866025403784439i)".
std::string format_complex(Complex c);

}  // namespace gcfloer
