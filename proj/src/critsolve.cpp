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

#include "gcfloer/critsolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "gcfloer/error.hpp"

namespace gcfloer {

const char* case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::CaseA: return "CaseA";
    case CaseTag::CaseB1: return "CaseB1";
    case CaseTag::CaseB2: return "CaseB2";
  }
  return "?";
}

std::array<Rational, 3> critical_exponents(const WoodwardParams& p) {
  const int n = p.n;
  const Rational &r = p.r, &l2 = p.lambda2, &l3 = p.lambda3;
  return {(l2 - l3) / 2, (2 * r - (n + 1) * l2 + (n - 1) * l3) / 6,
          (4 * r - (2 * n + 5) * l2 + (2 * n + 1) * l3) / 6};
}

QVector critical_valuation(const WoodwardParams& p) {
  const int n = p.n;
  const Rational &r = p.r, &l2 = p.lambda2, &l3 = p.lambda3;
  return {(4 * r - (2 * n - 1) * l2 + (2 * n + 1) * l3) / 6, (l2 + l3) / 2,
          (2 * r + (2 - n) * l2 + (n + 2) * l3) / 6};
}

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

void require_strengthened(const WoodwardParams& p) {
  auto v = validate_params(p, Strength::Strengthened);
  if (!v.empty()) {
    std::string msg = "parameters violate:";
    for (const auto& x : v) msg += " [" + x.name + "]";
    throw Error(ErrorCode::DegenerateParameters, msg);
  }
}

}  // namespace

ValuedPolynomial eliminate_to_g(const WoodwardParams& p) {
  require_strengthened(p);
  const int n = p.n;
  ValuedPolynomial g;
  // (z+b)^n (nz+b)^(n-2) has coefficient sum_j C(n,l-j) C(n-2,j) n^j b^(2n-2-l) on z^l.
  for (int l = 0; l <= 2 * n - 2; ++l) {
    double c = 0.0;
    for (int j = 0; j <= std::min(l, n - 2); ++j) c += binomial(n, l - j) * binomial(n - 2, j) * std::pow(n, j);
    if (c != 0.0) g[l + 6] = NovikovSeries::monomial(c, (2 * n - 2 - l) * p.lambda2);
  }
  g[0] = NovikovSeries::monomial(-1.0, 2 * p.r + n * p.lambda2 + (n + 2) * p.lambda3);
  return g;
}

std::vector<ValuationCase> valuation_cases(const WoodwardParams& p) {
  require_strengthened(p);
  const int n = p.n;
  const Rational &r = p.r, &l2 = p.lambda2, &l3 = p.lambda3;
  const HPolytope cut = build_cut_polytope(p);
  auto inside = [&](const QVector& u) { return cut.classify(u).kind == PointClass::Kind::Interior; };
  std::vector<ValuationCase> out;

  const QVector ua = critical_valuation(p);
  const auto s = critical_exponents(p);
  out.push_back({CaseTag::CaseA,
                 ua,
                 inside(ua),
                 {{"u3 > l2 so val(z+b) = l2", ua[2] > l2}, {"0 < S1 < S2 < S3", 0 < s[0] && s[0] < s[1] && s[1] < s[2]}}});

  const QVector ub1{(-r + (2 * n + 2) * l2 - (n + 1) * l3) / n, (r - 2 * l2 + (n + 1) * l3) / n, l2};
  const Rational b1 = (-r + (n + 2) * l2 - (n + 1) * l3) / n;
  out.push_back({CaseTag::CaseB1,
                 ub1,
                 inside(ub1),
                 {{"(l2-l3)/(r-l2) <= 1/(n+1)", (n + 1) * (l2 - l3) <= r - l2}, {"B <= 0", b1 <= 0}}});

  const QVector ub2{(-r + (2 * n - 1) * l2 - n * l3) / (n - 2), (r - 3 * l2 + n * l3) / (n - 2), l2};
  const Rational b2 = (-r + (n + 1) * l2 - n * l3) / (n - 2);
  out.push_back({CaseTag::CaseB2, ub2, inside(ub2), {{"B < 0", b2 < 0}}});
  return out;
}

std::vector<Point3> solve_leading_term_equations(const WoodwardParams& p) {
  require_strengthened(p);
  const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  std::vector<Point3> out;
  for (double y : {1.0, -1.0}) {
    const Complex yc(y, 0.0);
    const Complex yn = std::pow(yc, p.n);
    // z = x^2 y^n and z^2 = xy give x^3 = y; order the cube roots as the tables do.
    for (int k = 0; k < 3; ++k) {
      const Complex x = yc * std::pow(zeta, y > 0 ? k : (3 - k) % 3);
      const Complex z = x * x * yn;
      const double res = std::max({std::abs(yc * yc - 1.0), std::abs(x * x * yn - z), std::abs(z * z - x * yc)});
      if (res < kEpsilon) out.push_back({x, yc, z});
    }
  }
  return out;
}

std::pair<Complex, Complex> stage_hessians(const Point3& sol) {
  const auto& [x, y, z] = sol;
  if (is_zero(x, 1e-6) || is_zero(y, 1e-6) || is_zero(z, 1e-6))
    throw Error(ErrorCode::ZeroCoordinate, "leading coefficient too close to zero");
  const Complex h1 = 2.0 / (y * y * y);
  const Complex h2 = 4.0 / (x * x * z * z * z) - 1.0 / (z * z * z * z);
  if (is_zero(h1) || is_zero(h2)) throw Error(ErrorCode::DegenerateHessian, "stage Hessian vanishes");
  return {h1, h2};
}

Complex case_b1_hessian_det(const Point3& pt) {
  const auto& [x, y, z] = pt;
  Eigen::Matrix3cd m;
  m << 0.0, 0.0, -1.0 / (z * z), 0.0, 2.0 * (z + 1.0) / (y * y * y), -1.0 / (y * y), -1.0 / (z * z), -1.0 / (y * y),
      2.0 * x / (z * z * z);
  return m.determinant();
}

std::vector<std::vector<SeriesTerm>> critical_values(const WoodwardParams& p, const std::vector<Point3>& sols) {
  const auto s = critical_exponents(p);
  std::vector<std::vector<SeriesTerm>> out;
  for (const auto& [x, y, z] : sols) {
    // P at the leading point: the S1 terms are y and 1/y, the three S2 terms all equal z/y.
    out.push_back({{s[0], y + 1.0 / y}, {s[1], 3.0 * z / y}, {s[2], x}});
  }
  return out;
}

std::vector<CriticalPoint> critical_points(const WoodwardParams& p) {
  const auto sols = solve_leading_term_equations(p);
  const auto values = critical_values(p, sols);
  const QVector u = critical_valuation(p);
  std::vector<CriticalPoint> out;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto [h1, h2] = stage_hessians(sols[i]);
    out.push_back({sols[i], u, h1, h2, values[i], std::nullopt});
  }
  return out;
}

Rational default_lift_order(const WoodwardParams& p) {
  return critical_exponents(p)[0] + 3 * (p.lambda2 - p.lambda3);
}

namespace {

using SeriesMatrix = std::vector<std::vector<NovikovSeries>>;

NovikovSeries minor2(const SeriesMatrix& h, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1,
                     const Rational& cap) {
  return multiply(h[r0][c0], h[r1][c1], cap) - multiply(h[r0][c1], h[r1][c0], cap);
}

SeriesMatrix inverse3(const SeriesMatrix& h, const Rational& cap, const Rational& inner) {
  SeriesMatrix cof(3, std::vector<NovikovSeries>(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r[2], c[2], a = 0, b = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        if (k != i) r[a++] = k;
        if (k != j) c[b++] = k;
      }
      NovikovSeries m = minor2(h, r[0], r[1], c[0], c[1], inner);
      cof[i][j] = (i + j) % 2 ? -m : m;
    }
  }
  NovikovSeries det = NovikovSeries::zero_to_order(inner);
  for (std::size_t j = 0; j < 3; ++j) det = det + multiply(h[0][j], cof[0][j], inner);
  if (det.is_zero()) throw Error(ErrorCode::HessianSingular, "Hessian determinant has no known nonzero term");
  Rational min_cof = *det.valuation();
  for (const auto& row : cof)
    for (const auto& c : row)
      if (auto v = c.valuation_lower_bound()) min_cof = std::min(min_cof, *v);
  const NovikovSeries inv_det = invert(det, cap - min_cof);
  SeriesMatrix out(3, std::vector<NovikovSeries>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = multiply(cof[j][i], inv_det, cap);
  return out;
}

Rational certified_min(const std::vector<PotentialFunction>& fs, const std::vector<NovikovSeries>& pt,
                       const Rational& k) {
  Rational r = k;
  for (const auto& f : fs) {
    if (f.terms().empty()) continue;
    if (auto v = evaluate_novikov(f, pt, k).valuation_lower_bound()) r = std::min(r, *v);
  }
  return r;
}

}  // namespace

LiftResult hensel_lift(const PotentialFunction& potential, const CriticalPoint& cp, const Rational& k) {
  if (potential.dimension() != 3 || cp.valuation.size() != 3)
    throw Error(ErrorCode::DimensionMismatch, "lifting works in three variables");
  if (is_zero(cp.hess1) || is_zero(cp.hess2)) throw Error(ErrorCode::HessianSingular, "stage Hessian vanishes");
  const QVector& u = cp.valuation;
  std::vector<NovikovSeries> pt;
  for (std::size_t j = 0; j < 3; ++j) pt.push_back(NovikovSeries::monomial(cp.leading[j], u[j]));

  std::vector<PotentialFunction> grad;
  for (std::size_t i = 0; i < 3; ++i) grad.push_back(log_derivative(potential, i));
  const auto hess = hessian_terms(potential);

  // Working precision: the target plus room for the negative valuations of H^-1.
  Rational spread = 0;
  for (const auto& x : u) spread = std::max<Rational>(spread, abs(x));
  for (const auto& row : hess)
    for (const auto& h : row)
      if (!h.terms().empty()) spread = std::max<Rational>(spread, abs(tropicalize(h, u)));
  const Rational work = std::max<Rational>(k, 0) + 2 * spread;
  const Rational inner = work + 4 * spread;

  LiftResult result;
  for (int iter = 0; iter < 64; ++iter) {
    const Rational r = certified_min(grad, pt, k);
    if (!result.residual_history.empty() && r <= result.residual_history.back())
      throw Error(ErrorCode::NoConvergence, "residual valuation stalled at " + to_string(r));
    result.residual_history.push_back(r);
    if (r >= k) {
      result.point = pt;
      return result;
    }
    std::vector<NovikovSeries> f;
    for (const auto& g : grad) f.push_back(evaluate_novikov(g, pt, inner));
    SeriesMatrix h(3, std::vector<NovikovSeries>(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) h[i][j] = evaluate_novikov(hess[i][j], pt, inner);
    const SeriesMatrix hinv = inverse3(h, work, inner);
    for (std::size_t j = 0; j < 3; ++j) {
      NovikovSeries delta = NovikovSeries::zero_to_order(work);
      for (std::size_t i = 0; i < 3; ++i) delta = delta + multiply(hinv[j][i], f[i], work);
      const auto lb = delta.valuation_lower_bound();
      if (lb && *lb <= 0) throw Error(ErrorCode::NoConvergence, "Newton correction is not small");
      pt[j] = multiply(pt[j], exp_series(-delta, work), Rational(u[j] + work)).as_exact();
    }
  }
  throw Error(ErrorCode::NoConvergence, "iteration limit reached");
}

namespace {

struct Evaluated {
  Eigen::VectorXcd grad;
  Eigen::MatrixXcd hess;
  Eigen::VectorXd scale;
};

Evaluated evaluate_log_system(const PotentialFunction& p, double t, const Eigen::VectorXcd& xi) {
  const auto d = static_cast<Eigen::Index>(p.dimension());
  Evaluated e{Eigen::VectorXcd::Zero(d), Eigen::MatrixXcd::Zero(d, d), Eigen::VectorXd::Zero(d)};
  const double logt = std::log(t);
  for (const auto& term : p.terms()) {
    Complex logv = std::log(term.coefficient) + to_double(term.shift) * logt;
    for (Eigen::Index i = 0; i < d; ++i) logv += static_cast<double>(term.exponents[i]) * xi[i];
    const Complex v = std::exp(logv);
    for (Eigen::Index i = 0; i < d; ++i) {
      const double ei = static_cast<double>(term.exponents[i]);
      e.grad[i] += ei * v;
      e.scale[i] += std::abs(ei * v);
      for (Eigen::Index j = 0; j < d; ++j) e.hess(i, j) += ei * static_cast<double>(term.exponents[j]) * v;
    }
  }
  return e;
}

double scaled_residual(const Evaluated& e) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < e.grad.size(); ++i)
    if (e.scale[i] > 0) r = std::max(r, std::abs(e.grad[i]) / e.scale[i]);
  return r;
}

std::optional<Eigen::VectorXcd> newton_from(const PotentialFunction& p, double t, Eigen::VectorXcd xi,
                                            const OracleOptions& opt) {
  Evaluated e = evaluate_log_system(p, t, xi);
  double res = scaled_residual(e);
  for (int iter = 0; iter < opt.max_iterations; ++iter) {
    if (res < opt.tolerance) return xi;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(e.hess);
    if (!lu.isInvertible()) return std::nullopt;
    const Eigen::VectorXcd step = lu.solve(e.grad);
    double alpha = 1.0;
    bool moved = false;
    for (int k = 0; k < 30; ++k, alpha /= 2) {
      Eigen::VectorXcd trial = xi - alpha * step;
      Evaluated te = evaluate_log_system(p, t, trial);
      const double tr = scaled_residual(te);
      if (std::isfinite(tr) && tr < res) {
        xi = std::move(trial);
        e = std::move(te);
        res = tr;
        moved = true;
        break;
      }
    }
    if (!moved) return std::nullopt;
  }
  return res < opt.tolerance ? std::optional<Eigen::VectorXcd>(xi) : std::nullopt;
}

}  // namespace

std::vector<OraclePoint> numeric_torus_oracle(const PotentialFunction& potential, double t, int n_seeds,
                                              const OracleOptions& options) {
  if (!(t > 0 && t < 0.1)) throw Error(ErrorCode::InvalidArgument, "oracle needs 0 < t < 0.1");
  const std::size_t d = potential.dimension();
  std::vector<double> lo = options.box_lower, hi = options.box_upper;
  if (lo.empty()) lo.assign(d, -3.0);
  if (hi.empty()) hi.assign(d, 3.0);
  if (lo.size() != d || hi.size() != d) throw Error(ErrorCode::DimensionMismatch, "oracle box has wrong dimension");
  const int seeds = std::max(n_seeds, 0);

  std::vector<std::optional<Eigen::VectorXcd>> found(static_cast<std::size_t>(seeds));
  auto run = [&](int begin, int stride) {
    for (int s = begin; s < seeds; s += stride) {
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(s)};
      std::mt19937_64 rng(seq);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      Eigen::VectorXcd xi(static_cast<Eigen::Index>(d));
      for (std::size_t i = 0; i < d; ++i) {
        const double val = lo[i] + (hi[i] - lo[i]) * unit(rng);
        const double phase = 2.0 * std::numbers::pi * unit(rng);
        xi[static_cast<Eigen::Index>(i)] = Complex(val * std::log(t), phase);
      }
      found[static_cast<std::size_t>(s)] = newton_from(potential, t, xi, options);
    }
  };
  const int workers = std::max(1, std::min<int>(static_cast<int>(std::thread::hardware_concurrency()), seeds));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run, w, workers);
  run(0, workers);
  for (auto& th : pool) th.join();

  std::vector<OraclePoint> out;
  for (const auto& xi : found) {
    if (!xi) continue;
    std::vector<Complex> pt(d);
    for (std::size_t i = 0; i < d; ++i) pt[i] = std::exp((*xi)[static_cast<Eigen::Index>(i)]);
    const bool dup = std::any_of(out.begin(), out.end(), [&](const OraclePoint& q) {
      for (std::size_t i = 0; i < d; ++i)
        if (std::abs(pt[i] - q.point[i]) > options.dedup_distance * std::abs(q.point[i])) return false;
      return true;
    });
    if (dup) continue;
    std::vector<double> val(d);
    for (std::size_t i = 0; i < d; ++i) val[i] = std::log(std::abs(pt[i])) / std::log(t);
    out.push_back({std::move(pt), std::move(val)});
  }
  return out;
}

}  // namespace gcfloer
