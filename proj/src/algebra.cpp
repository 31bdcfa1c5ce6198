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

#include "gcfloer/algebra.hpp"

#include <bit>
#include <cmath>

#include "gcfloer/error.hpp"

namespace gcfloer {

namespace {

void add_to(CliffordElement& acc, std::uint32_t mask, Complex c) {
  if (c == Complex(0.0, 0.0)) return;
  acc[mask] += c;
}

CliffordElement pruned(CliffordElement e, double eps) {
  for (auto it = e.begin(); it != e.end();) it = is_zero(it->second, eps) ? e.erase(it) : std::next(it);
  return e;
}

int grade(std::uint32_t mask) { return std::popcount(mask) % 2; }

}  // namespace

GradedCliffordAlgebra::GradedCliffordAlgebra(std::vector<std::vector<Complex>> gram, double eps)
    : n_(static_cast<int>(gram.size())), gram_(std::move(gram)), eps_(eps) {
  if (n_ > 8) throw Error(ErrorCode::InvalidArgument, "at most 8 generators");
  for (const auto& row : gram_)
    if (static_cast<int>(row.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "gram must be square");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < i; ++j)
      if (!is_zero(gram_[i][j] - gram_[j][i], eps_)) throw Error(ErrorCode::InvalidArgument, "gram must be symmetric");
  nondegenerate_ = n_ == 0 || static_cast<int>(rank(gram_, eps_)) == n_;
  const std::uint32_t dim = 1u << n_;
  table_.assign(dim, std::vector<CliffordElement>(dim));
  for (std::uint32_t a = 0; a < dim; ++a) {
    for (std::uint32_t b = 0; b < dim; ++b) {
      CliffordElement acc{{a, 1.0}};
      for (int k = 0; k < n_; ++k) {
        if (!(b & (1u << k))) continue;
        CliffordElement next;
        for (const auto& [m, c] : acc)
          for (const auto& [m2, c2] : times_generator(m, k)) add_to(next, m2, c * c2);
        acc = std::move(next);
      }
      table_[a][b] = std::move(acc);
    }
  }
}

GradedCliffordAlgebra GradedCliffordAlgebra::diagonal(const std::vector<Complex>& entries) {
  std::vector<std::vector<Complex>> g(entries.size(), std::vector<Complex>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
  return GradedCliffordAlgebra(std::move(g));
}

CliffordElement GradedCliffordAlgebra::basis(std::uint32_t mask) const {
  if (mask >> n_) throw Error(ErrorCode::InvalidArgument, "monomial uses a missing generator");
  return {{mask, 1.0}};
}

CliffordElement GradedCliffordAlgebra::generator(int i) const {
  if (i < 0 || i >= n_) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  return {{1u << i, 1.0}};
}

CliffordElement GradedCliffordAlgebra::times_generator(std::uint32_t mask, int k) const {
  CliffordElement out;
  if (mask == 0) {
    out[1u << k] = 1.0;
    return out;
  }
  const int last = 31 - std::countl_zero(mask);
  const std::uint32_t rest = mask & ~(1u << last);
  if (last < k) {
    out[mask | (1u << k)] = 1.0;
  } else if (last == k) {
    add_to(out, rest, gram_[k][k]);
  } else {
    // e_rest e_last e_k = -(e_rest e_k) e_last + 2 g(last,k) e_rest.
    for (const auto& [m, c] : times_generator(rest, k))
      for (const auto& [m2, c2] : times_generator(m, last)) add_to(out, m2, -c * c2);
    add_to(out, rest, 2.0 * gram_[last][k]);
  }
  return out;
}

const CliffordElement& GradedCliffordAlgebra::basis_product(std::uint32_t a, std::uint32_t b) const {
  return table_[a][b];
}

CliffordElement GradedCliffordAlgebra::mul(const CliffordElement& a, const CliffordElement& b) const {
  CliffordElement out;
  for (const auto& [ma, ca] : a) {
    if (ma >> n_) throw Error(ErrorCode::InvalidArgument, "element uses a missing generator");
    for (const auto& [mb, cb] : b) {
      if (mb >> n_) throw Error(ErrorCode::InvalidArgument, "element uses a missing generator");
      for (const auto& [m, c] : basis_product(ma, mb)) add_to(out, m, ca * cb * c);
    }
  }
  return pruned(std::move(out), 0.0);
}

CliffordElement clifford_mul(const GradedCliffordAlgebra& a, const CliffordElement& x, const CliffordElement& y) {
  return a.mul(x, y);
}

int graded_commutator_span_rank(const GradedCliffordAlgebra& a) {
  const std::uint32_t dim = 1u << a.generators();
  std::vector<std::vector<Complex>> rows;
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = i; j < dim; ++j) {
      const double sign = (grade(i) && grade(j)) ? -1.0 : 1.0;
      std::vector<Complex> v(dim);
      for (const auto& [m, c] : a.mul(a.basis(i), a.basis(j))) v[m] += c;
      for (const auto& [m, c] : a.mul(a.basis(j), a.basis(i))) v[m] -= sign * c;
      bool nonzero = false;
      for (const auto& c : v) nonzero = nonzero || !is_zero(c, a.eps());
      if (nonzero) rows.push_back(std::move(v));
    }
  }
  if (rows.empty()) return 0;
  return static_cast<int>(rank(rows, a.eps()));
}

int hh0(const GradedCliffordAlgebra& a) { return (1 << a.generators()) - graded_commutator_span_rank(a); }

GradedCliffordAlgebra quadratic_form_from_potential(const PotentialFunction& potential, const CriticalPoint& cp) {
  const std::size_t d = potential.dimension();
  if (cp.valuation.size() != d) throw Error(ErrorCode::DimensionMismatch, "critical point has wrong dimension");
  std::vector<NovikovSeries> pt;
  if (cp.lifted) {
    pt = *cp.lifted;
  } else {
    for (std::size_t j = 0; j < d; ++j) pt.push_back(NovikovSeries::monomial(cp.leading[j], cp.valuation[j]));
  }
  Rational spread = 1;
  for (const auto& x : cp.valuation) spread = std::max<Rational>(spread, abs(x));
  const auto hess = hessian_terms(potential);
  std::vector<std::vector<Complex>> gram(d, std::vector<Complex>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) {
      if (hess[r][s].terms().empty()) continue;
      const Rational cap = tropicalize(hess[r][s], cp.valuation) + 4 * spread;
      const NovikovSeries v = evaluate_novikov(hess[r][s], pt, cap);
      if (!v.is_zero()) gram[r][s] = v.leading_coefficient();
    }
  }
  GradedCliffordAlgebra a(std::move(gram));
  if (!a.nondegenerate()) throw Error(ErrorCode::DegenerateForm, "quadratic form has rank below its dimension");
  return a;
}

QhBetti qh_betti() {
  // Polynomials in X1, X2 as degree -> coefficient vector indexed by the X2 power.
  using Poly = std::map<std::pair<int, int>, Rational>;
  const Poly r1{{{2, 0}, 1}, {{1, 1}, 3}, {{0, 2}, 1}};
  const Poly r2{{{2, 1}, 1}, {{1, 2}, 1}};
  const std::vector<std::pair<Poly, int>> relations{{r1, 2}, {r2, 3}};
  auto quotient_dim = [&](int deg) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& [rel, rdeg] : relations) {
      const int shift = deg - rdeg;
      if (shift < 0) continue;
      for (int b = 0; b <= shift; ++b) {
        std::vector<Rational> row(static_cast<std::size_t>(deg + 1));
        for (const auto& [mono, c] : rel) row[static_cast<std::size_t>(mono.second + b)] += c;
        rows.push_back(std::move(row));
      }
    }
    const int monomials = deg + 1;
    return rows.empty() ? monomials : monomials - static_cast<int>(rank(QMatrix(rows)));
  };
  QhBetti out{};
  out.total = 0;
  for (int d = 0; d < 4; ++d) {
    out.betti[static_cast<std::size_t>(d)] = quotient_dim(d);
    out.total += out.betti[static_cast<std::size_t>(d)];
  }
  out.degree4 = quotient_dim(4);
  return out;
}

bool twisted_torus_cohomology_is_zero(const std::vector<NovikovSeries>& tau) {
  bool nontrivial = false;
  for (const auto& t : tau) {
    unitary_part(t);
    if (!(t - NovikovSeries::constant(1.0)).is_zero()) nontrivial = true;
  }
  return nontrivial;
}

Complex top_class_square(const GradedCliffordAlgebra& a) {
  const int n = a.generators();
  if (n != 3) throw Error(ErrorCode::InvalidArgument, "top class square needs three generators");
  const auto& g = a.gram();
  auto form = [&](const std::vector<Complex>& u, const std::vector<Complex>& v) {
    Complex s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += u[i] * g[i][j] * v[j];
    return s;
  };
  std::vector<std::vector<Complex>> basis(n, std::vector<Complex>(n));
  for (int i = 0; i < n; ++i) basis[i][i] = 1.0;
  // Symmetric congruence: make the basis pairwise orthogonal.
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n && pivot < 0; ++i)
      if (!is_zero(form(basis[i], basis[i]), a.eps())) pivot = i;
    if (pivot < 0) {
      for (int i = k; i < n && pivot < 0; ++i)
        for (int j = i + 1; j < n && pivot < 0; ++j)
          if (!is_zero(form(basis[i], basis[j]), a.eps())) {
            for (int c = 0; c < n; ++c) basis[i][c] += basis[j][c];
            pivot = i;
          }
    }
    if (pivot < 0) break;
    std::swap(basis[k], basis[pivot]);
    const Complex dk = form(basis[k], basis[k]);
    for (int j = k + 1; j < n; ++j) {
      const Complex f = form(basis[j], basis[k]) / dk;
      for (int c = 0; c < n; ++c) basis[j][c] -= f * basis[k][c];
    }
  }
  CliffordElement prod{{0u, 1.0}};
  for (int i = 0; i < n; ++i) {
    CliffordElement f;
    for (int c = 0; c < n; ++c) add_to(f, 1u << c, basis[i][c]);
    prod = a.mul(prod, f);
  }
  const CliffordElement sq = a.mul(prod, prod);
  auto it = sq.find(0u);
  const Complex v = it == sq.end() ? Complex(0.0, 0.0) : it->second;
  return is_zero(v, a.eps()) ? Complex(0.0, 0.0) : v;
}

}  // namespace gcfloer
