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

#include "gcfloer/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "gcfloer/error.hpp"

namespace gcfloer {

std::vector<ConstraintCheck> check_constraints(const WoodwardParams& p) {
  const Rational& r = p.r;
  const Rational& l1 = p.lambda1;
  const Rational& l2 = p.lambda2;
  const Rational& l3 = p.lambda3;
  const Rational gap = l2 - l3;
  const Rational margin = r - l2;
  std::vector<ConstraintCheck> out;
  out.push_back({"n > 2", "n > 2", false, p.n > 2});
  out.push_back({"lambda strictly decreasing", "l1 > l2 > l3", false, l1 > l2 && l2 > l3});
  out.push_back({"relations between lambda and r", "l2 < r < l1", false, l2 < r && r < l1});
  // (l2-l3)/(r-l2) < 1/k  <=>  k (l2-l3) < r - l2, given r > l2.
  out.push_back({"cannot cut the S3 vertex", "(l2-l3)/(r-l2) < 1/n", false, margin > 0 && p.n * gap < margin});
  out.push_back({"1/(n+1) bound", "(l2-l3)/(r-l2) < 1/(n+1)", true, margin > 0 && (p.n + 1) * gap < margin});
  out.push_back({"r > r0", "r > ((n+4) l2 - (n+2) l3)/2", true, 2 * r > (p.n + 4) * l2 - (p.n + 2) * l3});
  return out;
}

std::vector<Violation> validate_params(const WoodwardParams& p, Strength strength) {
  std::vector<Violation> out;
  for (const auto& c : check_constraints(p)) {
    if (c.strengthened_only && strength == Strength::Basic) continue;
    if (!c.passed) out.push_back({c.name, c.statement});
  }
  return out;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

std::int64_t gcd_all(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace

HPolytope::HPolytope(std::size_t dim, std::vector<Facet> facets, std::optional<QVector> singular_vertex)
    : dim_(dim), facets_(std::move(facets)), singular_vertex_(std::move(singular_vertex)) {
  if (dim_ == 0) throw Error(ErrorCode::InvalidArgument, "polytope dimension must be positive");
  for (auto& f : facets_) {
    if (f.normal.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "facet normal has wrong length");
    const auto g = gcd_all(f.normal);
    if (g == 0) throw Error(ErrorCode::DegenerateParameters, "zero facet normal");
    if (g != 1) {
      for (auto& x : f.normal) x /= g;
      f.offset /= g;
    }
  }
  if (singular_vertex_ && singular_vertex_->size() != dim_)
    throw Error(ErrorCode::DimensionMismatch, "singular vertex has wrong length");

  // Vertices: feasible unique solutions of every d-subset of facet equations.
  std::set<QVector> verts;
  for_each_subset(facets_.size(), dim_, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (auto i : idx) {
      rows.emplace_back(facets_[i].normal.begin(), facets_[i].normal.end());
      rhs.push_back(-facets_[i].offset);
    }
    auto sol = solve_linear(QMatrix(rows), QVector(rhs));
    if (auto* x = std::get_if<QVector>(&sol)) {
      if (classify(*x).kind != PointClass::Kind::Outside) verts.insert(*x);
    }
  });
  vertices_.assign(verts.begin(), verts.end());

  // Bounded iff the recession cone {v : <n_F, v> >= 0 for all F} is {0}: the
  // normals span and no (d-1)-subset cuts out a feasible ray.
  std::vector<std::vector<Rational>> all_normals;
  for (const auto& f : facets_) all_normals.emplace_back(f.normal.begin(), f.normal.end());
  bool bounded = !all_normals.empty() && rank(QMatrix(all_normals)) == dim_;
  if (bounded && dim_ > 1) {
    for_each_subset(facets_.size(), dim_ - 1, [&](const std::vector<std::size_t>& idx) {
      if (!bounded) return;
      for (std::size_t k = 0; k < dim_; ++k) {
        std::vector<std::vector<Rational>> rows;
        std::vector<Rational> rhs;
        for (auto i : idx) {
          rows.emplace_back(facets_[i].normal.begin(), facets_[i].normal.end());
          rhs.emplace_back(0);
        }
        std::vector<Rational> pin(dim_);
        pin[k] = 1;
        rows.push_back(pin);
        rhs.emplace_back(1);
        auto sol = solve_linear(QMatrix(rows), QVector(rhs));
        auto* ray = std::get_if<QVector>(&sol);
        if (!ray) continue;
        for (int sign : {1, -1}) {
          bool feasible = true;
          for (const auto& f : facets_) {
            Rational dot;
            for (std::size_t j = 0; j < dim_; ++j) dot += f.normal[j] * (*ray)[j];
            if (sign * dot < 0) {
              feasible = false;
              break;
            }
          }
          if (feasible) bounded = false;
        }
        break;
      }
    });
  }
  if (!bounded) throw Error(ErrorCode::DegenerateParameters, "polytope is unbounded");
  if (vertices_.empty()) throw Error(ErrorCode::DegenerateParameters, "polytope is empty");
  // A bounded polytope is full-dimensional iff its vertex centroid is interior.
  std::vector<Rational> centroid(dim_);
  for (const auto& v : vertices_)
    for (std::size_t j = 0; j < dim_; ++j) centroid[j] += v[j];
  for (auto& c : centroid) c /= static_cast<long long>(vertices_.size());
  if (classify(QVector(centroid)).kind != PointClass::Kind::Interior)
    throw Error(ErrorCode::DegenerateParameters, "polytope is not full-dimensional");
}

Rational HPolytope::facet_value(std::size_t facet, const QVector& u) const {
  const Facet& f = facets_.at(facet);
  if (u.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
  Rational v = f.offset;
  for (std::size_t j = 0; j < dim_; ++j)
    if (f.normal[j] != 0) v += f.normal[j] * u[j];
  return v;
}

PointClass HPolytope::classify(const QVector& u) const {
  if (u.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
  PointClass out;
  std::vector<std::size_t> zero, negative;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const Rational v = facet_value(i, u);
    if (v < 0) negative.push_back(i);
    else if (v == 0) zero.push_back(i);
  }
  if (!negative.empty()) {
    out.kind = PointClass::Kind::Outside;
    out.faces = std::move(negative);
  } else if (!zero.empty()) {
    out.kind = PointClass::Kind::OnFaces;
    out.faces = std::move(zero);
  }
  return out;
}

bool HPolytope::facet_interior_contains(std::size_t facet, const QVector& w) const {
  if (facet >= facets_.size()) throw Error(ErrorCode::InvalidArgument, "facet index out of range");
  if (facet_value(facet, w) != 0) return false;
  for (std::size_t g = 0; g < facets_.size(); ++g)
    if (g != facet && facet_value(g, w) <= 0) return false;
  return true;
}

std::string HPolytope::serialize() const {
  std::ostringstream os;
  os << "dimension " << dim_ << "\n";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const Facet& f = facets_[i];
    os << "facet " << (i + 1) << " normal";
    for (auto x : f.normal) os << " " << x;
    os << " offset " << to_string(f.offset);
    if (!f.label.empty()) os << " label " << f.label;
    os << "\n";
  }
  if (singular_vertex_) os << "singular " << to_string(*singular_vertex_) << "\n";
  return os.str();
}

HPolytope build_orbit_polytope(const Rational& l1, const Rational& l2, const Rational& l3) {
  if (!(l1 > l2 && l2 > l3))
    throw Error(ErrorCode::DegenerateParameters, "eigenvalues must be strictly decreasing");
  std::vector<Facet> facets = {
      {{-1, 0, 0}, l1, "l1-u1", "l1"},
      {{1, 0, 0}, -l2, "u1-l2", "-l2"},
      {{0, -1, 0}, l2, "l2-u2", "l2"},
      {{0, 1, 0}, -l3, "u2-l3", "-l3"},
      {{1, 0, -1}, 0, "u1-u3", "0"},
      {{0, -1, 1}, 0, "u3-u2", "0"},
  };
  return HPolytope(3, std::move(facets), QVector{l2, l2, l2});
}

HPolytope build_cut_polytope(const WoodwardParams& p) {
  auto violations = validate_params(p, Strength::Basic);
  if (!violations.empty()) {
    std::string msg = "parameters violate:";
    for (const auto& v : violations) msg += " [" + v.name + "]";
    throw Error(ErrorCode::DegenerateParameters, msg);
  }
  std::vector<Facet> facets = {
      {{0, 1, 0}, -p.lambda3, "left", "-l3"},
      {{0, -1, 0}, p.lambda2, "right", "l2"},
      {{1, 0, -1}, 0, "top", "0"},
      {{0, -1, 1}, 0, "bottom", "0"},
      {{1, 0, 0}, -p.lambda2, "front", "-l2"},
      {{-1, -p.n, 0}, p.r + p.n * p.lambda3, "back", "r+n*l3"},
  };
  return HPolytope(3, std::move(facets), QVector{p.lambda2, p.lambda2, p.lambda2});
}

HPolytope build_box(const QVector& lower, const QVector& upper) {
  if (lower.size() != upper.size()) throw Error(ErrorCode::DimensionMismatch, "box bounds differ in length");
  const std::size_t d = lower.size();
  std::vector<Facet> facets;
  for (std::size_t j = 0; j < d; ++j) {
    IntVector lo(d, 0), hi(d, 0);
    lo[j] = 1;
    hi[j] = -1;
    facets.push_back({lo, -lower[j], "x" + std::to_string(j + 1) + ">=lo", ""});
    facets.push_back({hi, upper[j], "x" + std::to_string(j + 1) + "<=hi", ""});
  }
  return HPolytope(d, std::move(facets));
}

}  // namespace gcfloer
