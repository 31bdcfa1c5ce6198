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

// Independent oracles and random generators shared by the unit tests and
// the acceptance runner.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include "gcfloer/algebra.hpp"
#include "gcfloer/error.hpp"
#include "gcfloer/polytope.hpp"
#include "gcfloer/tropical.hpp"

namespace gcftest {

using gcfloer::Complex;
using gcfloer::Rational;

/// The error code thrown by f, if any.
template <class F>
std::optional<gcfloer::ErrorCode> error_code(F&& f) {
  try {
    f();
  } catch (const gcfloer::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// The fixture parameters n=3, r=5, lambda=(10,0,-1).
inline gcfloer::WoodwardParams fixture() { return {3, 5, 10, 0, -1}; }

inline Complex zeta() { return std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0); }

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline int uniform_int(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline Complex unit_complex(std::mt19937_64& g) {
  return std::polar(1.0, std::uniform_real_distribution<double>(0.0, 6.283185307179586)(g));
}

/// Random parameters satisfying the strengthened constraints.
inline gcfloer::WoodwardParams random_strengthened(std::mt19937_64& g, int n) {
  gcfloer::WoodwardParams p;
  p.n = n;
  const int den = uniform_int(g, 1, 3);
  p.lambda3 = Rational(uniform_int(g, -12, 0), den);
  p.lambda2 = p.lambda3 + Rational(uniform_int(g, 1, 6), den);
  const Rational gap = p.lambda2 - p.lambda3;
  // r - l2 > (n+1) gap and 2r > (n+4) l2 - (n+2) l3.
  Rational r = p.lambda2 + (n + 1) * gap + Rational(uniform_int(g, 1, 12), den * 2);
  const Rational r0 = ((n + 4) * p.lambda2 - (n + 2) * p.lambda3) / 2;
  if (r <= r0) r = r0 + Rational(1, den);
  p.r = r;
  p.lambda1 = r + Rational(uniform_int(g, 1, 5), den);
  return p;
}

/// Chevalley model: e_i acts on the exterior algebra as wedge + contraction
/// with gram(i, .). The map to operators is faithful.
class ChevalleyModel {
 public:
  explicit ChevalleyModel(const std::vector<std::vector<Complex>>& gram) : n_(static_cast<int>(gram.size())) {
    const int dim = 1 << n_;
    for (int i = 0; i < n_; ++i) {
      Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
      for (int s = 0; s < dim; ++s) {
        // Wedge e_i on the left: sign from the generators before i.
        if (!(s & (1 << i))) {
          const int before = __builtin_popcount(s & ((1 << i) - 1));
          op(s | (1 << i), s) += (before % 2 ? -1.0 : 1.0);
        }
        // Contraction with gram(i, .): remove j with sign from generators before j.
        for (int j = 0; j < n_; ++j) {
          if (!(s & (1 << j)) || gram[i][j] == Complex(0.0, 0.0)) continue;
          const int before = __builtin_popcount(s & ((1 << j) - 1));
          op(s & ~(1 << j), s) += (before % 2 ? -1.0 : 1.0) * gram[i][j];
        }
      }
      gens_.push_back(op);
    }
  }

  Eigen::MatrixXcd monomial(std::uint32_t mask) const {
    const int dim = 1 << n_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
    for (int i = 0; i < n_; ++i)
      if (mask & (1u << i)) m = m * gens_[static_cast<std::size_t>(i)];
    return m;
  }

  Eigen::MatrixXcd element(const gcfloer::CliffordElement& x) const {
    const int dim = 1 << n_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [mask, c] : x) m += c * monomial(mask);
    return m;
  }

  /// 2^n minus the rank of all graded commutators of monomials.
  int hh0() const {
    const int dim = 1 << n_;
    std::vector<Eigen::MatrixXcd> mono;
    for (int s = 0; s < dim; ++s) mono.push_back(monomial(static_cast<std::uint32_t>(s)));
    Eigen::MatrixXcd rows(dim * dim, dim * dim);
    int k = 0;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        const double sign = (__builtin_popcount(a) % 2 && __builtin_popcount(b) % 2) ? -1.0 : 1.0;
        Eigen::MatrixXcd c = mono[a] * mono[b] - sign * mono[b] * mono[a];
        rows.row(k++) = Eigen::Map<Eigen::RowVectorXcd>(c.data(), dim * dim);
      }
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(rows);
    lu.setThreshold(1e-9);
    return dim - static_cast<int>(lu.rank());
  }

 private:
  int n_;
  std::vector<Eigen::MatrixXcd> gens_;
};

/// Complex roots of sum c_k z^k (dense coefficients, lowest degree first).
inline std::vector<Complex> numeric_roots(const std::vector<Complex>& coeffs) {
  Eigen::VectorXcd c(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[static_cast<Eigen::Index>(i)] = coeffs[i];
  Eigen::PolynomialSolver<Complex, Eigen::Dynamic> solver;
  solver.compute(c);
  std::vector<Complex> out;
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) out.push_back(solver.roots()[i]);
  return out;
}

}  // namespace gcftest
