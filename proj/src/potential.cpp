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

#include "gcfloer/potential.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "gcfloer/error.hpp"

namespace gcfloer {

namespace {

std::string variable_name(std::size_t dim, std::size_t i) {
  if (dim <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

void check_dimension(const PotentialFunction& p, std::size_t n) {
  if (n != p.dimension()) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
}

}  // namespace

PotentialFunction::PotentialFunction(std::size_t dim, std::vector<LaurentTerm> terms) : dim_(dim) {
  std::map<std::pair<IntVector, Rational>, LaurentTerm> merged;
  for (auto& t : terms) {
    if (t.exponents.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "term has wrong exponent length");
    auto key = std::make_pair(t.exponents, t.shift);
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(std::move(key), std::move(t));
    } else {
      it->second.coefficient += t.coefficient;
    }
  }
  for (auto& [key, t] : merged)
    if (!is_zero(t.coefficient)) terms_.push_back(std::move(t));
}

std::string PotentialFunction::to_string(bool symbolic) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Complex c = t.coefficient;
    const bool negative = c.imag() == 0 && c.real() < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) c = -c;
    std::vector<std::string> factors;
    if (c != Complex(1.0, 0.0)) factors.push_back(format_complex(c));
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto e = t.exponents[i];
      if (e == 0) continue;
      std::string f = variable_name(dim_, i);
      if (e != 1) f += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      factors.push_back(f);
    }
    if (t.shift != 0 || (symbolic && !t.shift_symbol.empty() && t.shift_symbol != "0")) {
      std::string s = symbolic && !t.shift_symbol.empty() ? t.shift_symbol : gcfloer::to_string(t.shift);
      if (s != "0") factors.push_back(s == "1" ? "T" : "T^(" + s + ")");
    }
    if (factors.empty()) factors.push_back("1");
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    first = false;
  }
  return os.str();
}

PotentialFunction leading_potential(const HPolytope& polytope) {
  std::vector<LaurentTerm> terms;
  for (const auto& f : polytope.facets()) terms.push_back({f.normal, f.offset, {1.0, 0.0}, f.offset_symbol});
  return PotentialFunction(polytope.dimension(), std::move(terms));
}

PotentialFunction log_derivative(const PotentialFunction& p, std::size_t axis) {
  if (axis >= p.dimension()) throw Error(ErrorCode::InvalidArgument, "axis out of range");
  std::vector<LaurentTerm> terms;
  for (auto t : p.terms()) {
    t.coefficient *= static_cast<double>(t.exponents[axis]);
    terms.push_back(std::move(t));
  }
  return PotentialFunction(p.dimension(), std::move(terms));
}

std::vector<Rational> tropical_terms(const PotentialFunction& p, const QVector& u) {
  check_dimension(p, u.size());
  std::vector<Rational> out;
  for (const auto& t : p.terms()) {
    Rational v = t.shift;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (t.exponents[i] != 0) v += t.exponents[i] * u[i];
    out.push_back(v);
  }
  return out;
}

Rational tropicalize(const PotentialFunction& p, const QVector& u) {
  auto vals = tropical_terms(p, u);
  if (vals.empty()) throw Error(ErrorCode::InvalidArgument, "zero potential has no tropicalization");
  return *std::min_element(vals.begin(), vals.end());
}

NovikovSeries evaluate_novikov(const PotentialFunction& p, const std::vector<NovikovSeries>& point,
                               const Rational& k) {
  check_dimension(p, point.size());
  std::vector<Rational> vals;
  for (const auto& s : point) {
    if (s.is_zero()) throw Error(ErrorCode::ZeroCoordinate, "coordinate has no known nonzero term");
    vals.push_back(*s.valuation());
  }
  NovikovSeries sum = NovikovSeries::zero_to_order(k);
  for (const auto& t : p.terms()) {
    // Factor i may be truncated at the target minus the valuations of the others.
    Rational total = t.shift;
    for (std::size_t i = 0; i < point.size(); ++i) total += t.exponents[i] * vals[i];
    // Nothing below k; also keeps every factor cap above the factor's valuation.
    if (total >= k) continue;
    NovikovSeries term = NovikovSeries::monomial(t.coefficient, t.shift);
    Rational done = t.shift;
    for (std::size_t i = 0; i < point.size(); ++i) {
      const auto e = t.exponents[i];
      if (e == 0) continue;
      const Rational own = e * vals[i];
      done += own;
      // Keep whatever the factors still to come can bring below k.
      term = multiply(term, power(point[i], static_cast<int>(e), k - (total - own)), Rational(k - (total - done)));
    }
    sum = sum + term;
  }
  return sum.truncated_at(k);
}

Complex evaluate_complex(const PotentialFunction& p, double t, const std::vector<Complex>& point) {
  check_dimension(p, point.size());
  if (!(t > 0)) throw Error(ErrorCode::InvalidArgument, "t must be positive");
  for (const auto& c : point)
    if (c == Complex(0.0, 0.0)) throw Error(ErrorCode::ZeroCoordinate, "coordinate is zero");
  Complex sum = 0;
  for (const auto& term : p.terms()) {
    Complex v = term.coefficient * std::pow(t, to_double(term.shift));
    for (std::size_t i = 0; i < point.size(); ++i)
      if (term.exponents[i] != 0) v *= std::pow(point[i], static_cast<int>(term.exponents[i]));
    sum += v;
  }
  return sum;
}

std::vector<std::vector<PotentialFunction>> hessian_terms(const PotentialFunction& p) {
  const std::size_t d = p.dimension();
  std::vector<std::vector<PotentialFunction>> h(d);
  for (std::size_t i = 0; i < d; ++i) {
    const PotentialFunction di = log_derivative(p, i);
    for (std::size_t j = 0; j < d; ++j) h[i].push_back(log_derivative(di, j));
  }
  return h;
}

}  // namespace gcfloer
