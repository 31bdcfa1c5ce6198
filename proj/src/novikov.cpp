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

#include "gcfloer/novikov.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cctype>
#include <map>

#include "gcfloer/error.hpp"

namespace gcfloer {

namespace {

std::string shortest(double v) {
  if (v == 0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Display-only cleanup of floating residue in the real or imaginary part.
Complex snap(Complex c) {
  const double tiny = 1e-12 * std::max(1.0, std::abs(c));
  double re = std::abs(c.real()) <= tiny ? 0.0 : c.real();
  double im = std::abs(c.imag()) <= tiny ? 0.0 : c.imag();
  return {re, im};
}

std::optional<Rational> min_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

std::string format_complex(Complex c) {
  c = snap(c);
  if (c.imag() == 0) return shortest(c.real());
  if (c.real() == 0) return "(" + shortest(c.imag()) + "i)";
  std::string im = shortest(c.imag());
  if (im.front() != '-') im = "+" + im;
  return "(" + shortest(c.real()) + im + "i)";
}

NovikovSeries::NovikovSeries(std::vector<SeriesTerm> terms, std::optional<Rational> order, double eps)
    : order_(std::move(order)) {
  std::sort(terms.begin(), terms.end(),
            [](const SeriesTerm& a, const SeriesTerm& b) { return a.exponent < b.exponent; });
  for (auto& t : terms) {
    if (order_ && t.exponent >= *order_) break;
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff += t.coeff;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [eps](const SeriesTerm& t) { return std::abs(t.coeff) <= eps; });
}

NovikovSeries NovikovSeries::constant(Complex c) { return NovikovSeries({{Rational(0), c}}); }

NovikovSeries NovikovSeries::monomial(Complex c, const Rational& exponent) {
  return NovikovSeries({{exponent, c}});
}

NovikovSeries NovikovSeries::zero_to_order(const Rational& order) { return NovikovSeries({}, order); }

std::optional<Rational> NovikovSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

std::optional<Rational> NovikovSeries::valuation_lower_bound() const {
  if (!terms_.empty()) return terms_.front().exponent;
  return order_;
}

Complex NovikovSeries::leading_coefficient() const { return terms_.empty() ? Complex{} : terms_.front().coeff; }

NovikovSeries NovikovSeries::truncated_at(const Rational& k) const {
  return NovikovSeries(terms_, min_opt(order_, k));
}

NovikovSeries NovikovSeries::as_exact() const {
  NovikovSeries out = *this;
  out.order_.reset();
  return out;
}

NovikovSeries NovikovSeries::scaled(Complex c) const {
  auto terms = terms_;
  for (auto& t : terms) t.coeff *= c;
  return NovikovSeries(std::move(terms), order_);
}

NovikovSeries NovikovSeries::shifted(const Rational& e) const {
  auto terms = terms_;
  for (auto& t : terms) t.exponent += e;
  std::optional<Rational> order;
  if (order_) order = *order_ + e;
  return NovikovSeries(std::move(terms), order);
}

Complex NovikovSeries::evaluate(double t) const {
  Complex sum{};
  for (const auto& term : terms_) sum += term.coeff * std::pow(t, to_double(term.exponent));
  return sum;
}

std::string NovikovSeries::to_string() const {
  std::string out;
  for (const auto& term : terms_) {
    Complex c = snap(term.coeff);
    bool negative_real = c.imag() == 0 && c.real() < 0;
    if (!out.empty()) out += negative_real ? " - " : " + ";
    else if (negative_real) out += "-";
    if (negative_real) c = -c;
    const bool unit = c == Complex{1.0, 0.0};
    if (term.exponent == 0) {
      out += format_complex(c);
    } else {
      if (!unit) out += format_complex(c) + "*";
      out += "T^(" + gcfloer::to_string(term.exponent) + ")";
    }
  }
  if (out.empty()) out = "0";
  if (order_) out += " + O(T^(" + gcfloer::to_string(*order_) + "))";
  return out;
}

namespace {

class SeriesParser {
 public:
  explicit SeriesParser(std::string_view s) : s_(s) {}

  NovikovSeries parse() {
    std::vector<SeriesTerm> terms;
    std::optional<Rational> order;
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      double sign = 1.0;
      if (!first) {
        char op = next();
        if (op == '-') sign = -1.0;
        else if (op != '+') fail("expected '+' or '-'");
      } else if (peek() == '-') {
        ++pos_;
        sign = -1.0;
      }
      skip_ws();
      if (peek() == 'O') {
        if (sign < 0) fail("order marker must be added");
        order = parse_order();
      } else {
        auto term = parse_term();
        term.coeff *= sign;
        terms.push_back(std::move(term));
      }
      first = false;
      skip_ws();
    }
    if (first) fail("empty series");
    return NovikovSeries(std::move(terms), order);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char next() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    return s_[pos_++];
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(std::string_view lit) {
    skip_ws();
    if (s_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, "series parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  double parse_real() {
    skip_ws();
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    double v = 0;
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc{}) fail("expected a number");
    pos_ += static_cast<std::size_t>(res.ptr - begin);
    return v;
  }

  Complex parse_coeff() {
    skip_ws();
    if (peek() != '(') return {parse_real(), 0.0};
    ++pos_;
    double first = parse_real();
    skip_ws();
    if (peek() == 'i') {
      ++pos_;
      expect(")");
      return {0.0, first};
    }
    char op = next();
    if (op != '+' && op != '-') fail("expected imaginary part");
    double im = parse_real();
    expect("i");
    expect(")");
    return {first, op == '-' ? -im : im};
  }

  Rational parse_power() {
    // After 'T': either "^(p/q)" or nothing (T^1).
    skip_ws();
    if (peek() != '^') return Rational(1);
    ++pos_;
    expect("(");
    auto close = s_.find(')', pos_);
    if (close == std::string_view::npos) fail("unclosed exponent");
    Rational e = parse_rational(s_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return e;
  }

  SeriesTerm parse_term() {
    skip_ws();
    if (peek() == 'T') {
      ++pos_;
      return {parse_power(), Complex{1.0, 0.0}};
    }
    Complex c = parse_coeff();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'T') fail("expected 'T'");
      ++pos_;
      return {parse_power(), c};
    }
    return {Rational(0), c};
  }

  Rational parse_order() {
    expect("O");
    expect("(");
    expect("T");
    Rational k = parse_power();
    expect(")");
    return k;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

NovikovSeries NovikovSeries::parse(std::string_view text) { return SeriesParser(text).parse(); }

NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b) {
  std::vector<SeriesTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return NovikovSeries(std::move(terms), min_opt(a.order_, b.order_));
}

NovikovSeries operator-(const NovikovSeries& a) { return a.scaled(-1.0); }

NovikovSeries operator-(const NovikovSeries& a, const NovikovSeries& b) { return a + (-b); }

NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) { return multiply(a, b, std::nullopt); }

NovikovSeries multiply(const NovikovSeries& a, const NovikovSeries& b, const std::optional<Rational>& cap) {
  const auto lba = a.valuation_lower_bound();
  const auto lbb = b.valuation_lower_bound();
  // An exact zero factor makes the product exactly zero.
  if (!lba || !lbb) return NovikovSeries{};
  std::optional<Rational> order = cap;
  if (a.order()) order = min_opt(order, *a.order() + *lbb);
  if (b.order()) order = min_opt(order, *b.order() + *lba);

  std::map<Rational, Complex> acc;
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Rational e = s.exponent + t.exponent;
      if (order && e >= *order) break;  // b's terms are sorted
      acc[e] += s.coeff * t.coeff;
    }
  }
  std::vector<SeriesTerm> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) terms.push_back({e, c});
  return NovikovSeries(std::move(terms), order);
}

NovikovSeries invert(const NovikovSeries& s, const Rational& k) {
  if (s.is_zero()) throw Error(ErrorCode::ZeroSeries, "cannot invert the zero series");
  const Rational v = *s.valuation();
  const Complex a0 = s.leading_coefficient();
  // s = a0 T^v (1 + e) with val(e) > 0; 1/s = a0^{-1} T^{-v} sum_j (-e)^j.
  NovikovSeries e = s.shifted(-v).scaled(1.0 / a0) - NovikovSeries::constant(1.0);
  // Relative cut: absolute k corresponds to relative k + v.
  Rational rel_cap = k + v;
  if (s.order()) rel_cap = std::min<Rational>(rel_cap, *s.order() - v);
  if (e.is_zero() && !e.truncated()) {
    return NovikovSeries::monomial(1.0 / a0, -v);
  }
  NovikovSeries minus_e = -e;
  NovikovSeries sum = NovikovSeries::constant(1.0);
  NovikovSeries pw = NovikovSeries::constant(1.0);
  while (true) {
    pw = multiply(pw, minus_e, rel_cap);
    sum = sum + pw;
    if (pw.is_zero()) break;
  }
  return sum.truncated_at(rel_cap).shifted(-v).scaled(1.0 / a0);
}

NovikovSeries power(const NovikovSeries& s, int e, const Rational& cap) {
  if (e == 0) return NovikovSeries::constant(1.0);
  if (e < 0 && s.is_zero()) throw Error(ErrorCode::ZeroSeries, "negative power of the zero series");
  const auto lb = s.valuation_lower_bound();
  if (!lb) return NovikovSeries{};
  const int m = e < 0 ? -e : e;
  // Every factor has valuation >= w, so the other m-1 factors add (m-1)w.
  const Rational w = e < 0 ? Rational(-*s.valuation()) : *lb;
  if (cap <= m * w) return NovikovSeries::zero_to_order(cap);
  const NovikovSeries base = e < 0 ? invert(s, cap - (m - 1) * w) : s;
  NovikovSeries out = base.truncated_at(cap - (m - 1) * w);
  for (int k = 2; k <= m; ++k) out = multiply(out, base, Rational(cap - (m - k) * w));
  return out.truncated_at(cap);
}

NovikovSeries exp_series(const NovikovSeries& s, const Rational& cap) {
  const auto lb = s.valuation_lower_bound();
  if (lb && *lb <= 0) throw Error(ErrorCode::InvalidArgument, "exp requires positive valuation");
  NovikovSeries sum = NovikovSeries::constant(1.0);
  if (!lb) return sum;
  NovikovSeries pw = NovikovSeries::constant(1.0);
  for (int j = 1;; ++j) {
    pw = multiply(pw, s, cap).scaled(1.0 / j);
    sum = sum + pw;
    if (pw.is_zero()) break;
  }
  return sum.truncated_at(cap);
}

std::pair<Complex, NovikovSeries> unitary_part(const NovikovSeries& s) {
  const auto v = s.valuation();
  if (!v || *v != 0) throw Error(ErrorCode::NotUnitary, "series is not of valuation 0: " + s.to_string());
  const Complex a0 = s.leading_coefficient();
  return {a0, s - NovikovSeries::constant(a0)};
}

Rational default_truncation_order(const Rational& lambda2, const Rational& lambda3) {
  return 10 * (lambda2 - lambda3);
}

}  // namespace gcfloer
