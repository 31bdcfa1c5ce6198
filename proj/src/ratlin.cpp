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

#include "gcfloer/ratlin.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "gcfloer/error.hpp"

namespace gcfloer {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroSeries: return "ZeroSeries";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::TooFewTerms: return "TooFewTerms";
    case ErrorCode::DirectionNotInward: return "DirectionNotInward";
    case ErrorCode::DegenerateHessian: return "DegenerateHessian";
    case ErrorCode::HessianSingular: return "HessianSingular";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw Error(ErrorCode::Parse, "not an exact rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    BigInt d{std::string(den)};
    if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    value = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) bad_rational(text);
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    value = Rational(w * scale + BigInt(std::string(frac)), scale);
  } else {
    if (!all_digits(s)) bad_rational(text);
    value = Rational(BigInt(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  const auto& num = boost::multiprecision::numerator(q);
  const auto& den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const QVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QMatrix::QMatrix(const std::vector<std::vector<Rational>>& rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.front().size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return QMatrix(rows);
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

QVector QMatrix::operator*(const QVector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  return QVector(std::move(out));
}

namespace {

struct Echelon {
  std::vector<std::vector<Rational>> rows;  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan on an augmented copy; the last `augmented` columns are not
// eligible as pivots.
Echelon reduce(std::vector<std::vector<Rational>> m, std::size_t pivot_limit) {
  Echelon e;
  std::size_t row = 0;
  const std::size_t nrows = m.size();
  for (std::size_t col = 0; col < pivot_limit && row < nrows; ++col) {
    std::size_t p = row;
    while (p < nrows && m[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rows = std::move(m);
  return e;
}

}  // namespace

LinearSolution solve_linear(const QMatrix& a, const QVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side size mismatch");
  std::vector<std::vector<Rational>> aug(a.rows(), std::vector<Rational>(a.cols() + 1));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug[r][c] = a(r, c);
    aug[r][a.cols()] = b[r];
  }
  Echelon e = reduce(std::move(aug), a.cols());
  const std::size_t rk = e.pivot_cols.size();
  for (std::size_t r = rk; r < e.rows.size(); ++r)
    if (e.rows[r][a.cols()] != 0) return NoSolution{};
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < rk; ++i) x[e.pivot_cols[i]] = e.rows[i][a.cols()];
  if (rk < a.cols()) return Underdetermined{QVector(std::move(x)), a.cols() - rk};
  return QVector(std::move(x));
}

std::size_t rank(const QMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  return reduce(std::move(m), a.cols()).pivot_cols.size();
}

std::size_t rank(const std::vector<std::vector<Complex>>& a, double eps) {
  auto m = a;
  const std::size_t nrows = m.size();
  const std::size_t ncols = nrows ? m.front().size() : 0;
  double scale = 1.0;
  for (const auto& row : m)
    for (const auto& v : row) scale = std::max(scale, std::abs(v));
  const double tol = eps * scale;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t p = row;
    for (std::size_t r = row + 1; r < nrows; ++r)
      if (std::abs(m[r][col]) > std::abs(m[p][col])) p = r;
    if (std::abs(m[p][col]) <= tol) continue;
    std::swap(m[p], m[row]);
    for (std::size_t r = row + 1; r < nrows; ++r) {
      const Complex f = m[r][col] / m[row][col];
      if (f == Complex{}) continue;
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  return row;
}

}  // namespace gcfloer
