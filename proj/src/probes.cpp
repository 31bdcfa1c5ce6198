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

#include "gcfloer/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "gcfloer/critsolve.hpp"
#include "gcfloer/error.hpp"

namespace gcfloer {

namespace {

Rational rate(const Facet& f, const IntVector& dir) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < dir.size(); ++j) s += f.normal[j] * dir[j];
  return Rational(s);
}

QVector along(const QVector& base, const IntVector& dir, const Rational& s) {
  std::vector<Rational> out(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) out[j] = base[j] + s * dir[j];
  return QVector(std::move(out));
}

bool primitive(const IntVector& dir) {
  std::int64_t g = 0;
  for (auto x : dir) g = std::gcd(g, x < 0 ? -x : x);
  return g == 1;
}

void note(std::string* diagnostic, const std::string& text) {
  if (diagnostic) *diagnostic = text;
}

}  // namespace

Rational exit_length(const HPolytope& polytope, const QVector& base, const IntVector& dir) {
  if (base.size() != polytope.dimension() || dir.size() != polytope.dimension())
    throw Error(ErrorCode::DimensionMismatch, "probe has wrong dimension");
  const PointClass pc = polytope.classify(base);
  if (pc.kind == PointClass::Kind::Outside) throw Error(ErrorCode::InvalidArgument, "base lies outside the polytope");
  if (pc.kind == PointClass::Kind::Interior) throw Error(ErrorCode::InvalidArgument, "base is not on the boundary");
  bool inward = false;
  for (auto f : pc.faces) {
    const Rational rt = rate(polytope.facet(f), dir);
    if (rt < 0) throw Error(ErrorCode::DirectionNotInward, "direction leaves the polytope at the base");
    if (rt > 0) inward = true;
  }
  if (!inward) throw Error(ErrorCode::DirectionNotInward, "direction is tangent to the base faces");
  std::optional<Rational> best;
  for (std::size_t g = 0; g < polytope.facet_count(); ++g) {
    const Rational rt = rate(polytope.facet(g), dir);
    if (rt >= 0) continue;
    const Rational s = polytope.facet_value(g, base) / -rt;
    if (s > 0 && (!best || s < *best)) best = s;
  }
  if (!best) throw Error(ErrorCode::DegenerateParameters, "ray never leaves the polytope");
  return *best;
}

bool probe_displaces(const HPolytope& polytope, const Probe& probe, const QVector& u, std::string* diagnostic) {
  if (probe.facet >= polytope.facet_count()) {
    note(diagnostic, "facet index out of range");
    return false;
  }
  if (probe.direction.size() != polytope.dimension() || u.size() != polytope.dimension() ||
      probe.base.size() != polytope.dimension()) {
    note(diagnostic, "dimension mismatch");
    return false;
  }
  if (!primitive(probe.direction)) {
    note(diagnostic, "direction is not primitive");
    return false;
  }
  if (rate(polytope.facet(probe.facet), probe.direction) != 1) {
    note(diagnostic, "<direction, facet normal> must be 1");
    return false;
  }
  if (!polytope.facet_interior_contains(probe.facet, probe.base)) {
    note(diagnostic, "base is not in the interior of the facet");
    return false;
  }
  const Rational exit = exit_length(polytope, probe.base, probe.direction);
  if (const auto& sv = polytope.singular_vertex()) {
    // The segment meets the vertex iff the vertex is base + s*dir with 0 <= s <= exit.
    std::optional<Rational> s;
    bool on_line = true;
    for (std::size_t j = 0; j < sv->size() && on_line; ++j) {
      const Rational diff = (*sv)[j] - probe.base[j];
      if (probe.direction[j] == 0) {
        on_line = diff == 0;
      } else {
        const Rational sj = diff / probe.direction[j];
        if (s && *s != sj) on_line = false;
        s = sj;
      }
    }
    if (on_line && s && *s >= 0 && *s <= exit) {
      note(diagnostic, "probe meets the singular vertex");
      return false;
    }
  }
  // u must be base + s*dir; the facet value of u equals s since <dir, n_F> = 1.
  const Rational s = polytope.facet_value(probe.facet, u);
  if (along(probe.base, probe.direction, s) != u) {
    note(diagnostic, "point is not on the probe");
    return false;
  }
  return s > 0 && 2 * s < exit;
}

std::optional<Probe> probe_through(const HPolytope& polytope, std::size_t facet, const IntVector& dir,
                                   const QVector& u) {
  if (rate(polytope.facet(facet), dir) != 1) return std::nullopt;
  const QVector w = along(u, dir, -polytope.facet_value(facet, u));
  if (!polytope.facet_interior_contains(facet, w)) return std::nullopt;
  return Probe{facet, dir, w};
}

std::vector<ProbeFamily> lemma_probe_families(const WoodwardParams& p) {
  const int n = p.n;
  const Rational r = p.r, l2 = p.lambda2, l3 = p.lambda3;
  const Rational a = r - n * (l2 - l3);
  const Rational mid = (l2 + l3) / 2;
  auto all = [](const QVector&) { return true; };
  auto u1_window = [=](const QVector& u) { return l2 < u[0] && u[0] < a; };
  std::vector<ProbeFamily> out;
  out.push_back({"top,-e3", 2, {0, 0, -1}, all, [](const QVector& u) { return u[0] + u[1] - 2 * u[2] < 0; }});
  out.push_back({"bottom,+e3", 3, {0, 0, 1}, all, [](const QVector& u) { return u[0] + u[1] - 2 * u[2] > 0; }});
  out.push_back({"left,+e2", 0, {0, 1, 0}, [=](const QVector& u) { return u1_window(u) && l2 <= u[2] && u[2] < a; },
                 [=](const QVector& u) { return u[1] < mid; }});
  out.push_back({"right,-e2", 1, {0, -1, 0}, [=](const QVector& u) { return u1_window(u) && l2 < u[2] && u[2] < a; },
                 [=](const QVector& u) { return u[1] > mid; }});
  auto upper = [=](const QVector& u) { return u1_window(u) && u[2] > l2; };
  auto lower = [=](const QVector& u) { return u1_window(u) && u[2] < l2; };
  out.push_back({"back,-e1 (top pairing)", 5, {-1, 0, 0}, upper,
                 [=](const QVector& u) { return 2 * u[0] + n * u[1] - u[2] > r + n * l3; }});
  out.push_back({"top,+e1", 2, {1, 0, 0}, upper,
                 [=](const QVector& u) { return 2 * u[0] + n * u[1] - u[2] < r + n * l3; }});
  out.push_back({"back,-e1 (front pairing)", 5, {-1, 0, 0}, lower,
                 [=](const QVector& u) { return 2 * u[0] + n * u[1] > r + l2 + n * l3; }});
  out.push_back({"front,+e1", 4, {1, 0, 0}, lower,
                 [=](const QVector& u) { return 2 * u[0] + n * u[1] < r + l2 + n * l3; }});
  return out;
}

std::vector<IntVector> generic_directions(const HPolytope& polytope, std::size_t facet, int maxdir) {
  const std::size_t d = polytope.dimension();
  std::vector<IntVector> out;
  IntVector dir(d, -maxdir);
  while (true) {
    if (primitive(dir) && rate(polytope.facet(facet), dir) == 1) out.push_back(dir);
    std::size_t j = 0;
    while (j < d && dir[j] == maxdir) dir[j++] = -maxdir;
    if (j == d) break;
    ++dir[j];
  }
  return out;
}

SweepResult sweep(const HPolytope& polytope, const WoodwardParams& p, int resolution, SweepMode mode, int maxdir) {
  if (resolution < 2) throw Error(ErrorCode::InvalidArgument, "sweep resolution must be at least 2");
  const std::size_t d = polytope.dimension();
  struct Candidate {
    std::size_t facet;
    IntVector dir;
    std::string rule;
  };
  std::vector<Candidate> candidates;
  if (mode == SweepMode::LemmaFamilies) {
    for (const auto& f : lemma_probe_families(p)) candidates.push_back({f.facet, f.direction, f.name});
  } else {
    for (std::size_t f = 0; f < polytope.facet_count(); ++f)
      for (auto& dir : generic_directions(polytope, f, maxdir)) candidates.push_back({f, dir, "generic"});
  }

  // Integer grid ranges from the vertex bounding box.
  std::vector<BigInt> lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational mn = polytope.vertices().front()[j], mx = mn;
    for (const auto& v : polytope.vertices()) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    const Rational a = mn * resolution, b = mx * resolution;
    lo[j] = numerator(a) / denominator(a) - 1;
    hi[j] = numerator(b) / denominator(b) + 1;
  }
  std::vector<QVector> points;
  std::vector<BigInt> idx = lo;
  while (true) {
    std::vector<Rational> coords(d);
    for (std::size_t j = 0; j < d; ++j) coords[j] = Rational(idx[j], BigInt(resolution));
    QVector u(std::move(coords));
    if (polytope.classify(u).kind == PointClass::Kind::Interior) points.push_back(std::move(u));
    std::size_t j = d;
    while (j > 0 && idx[j - 1] == hi[j - 1]) {
      idx[j - 1] = lo[j - 1];
      --j;
    }
    if (j == 0) break;
    ++idx[j - 1];
  }

  SweepResult result{resolution, std::vector<SweepEntry>(points.size())};
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < points.size(); i += stride) {
      SweepEntry e{points[i], std::nullopt, ""};
      for (const auto& c : candidates) {
        auto pr = probe_through(polytope, c.facet, c.dir, points[i]);
        if (pr && probe_displaces(polytope, *pr, points[i])) {
          e.displaced_by = std::move(pr);
          e.rule = c.rule;
          break;
        }
      }
      result.entries[i] = std::move(e);
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), points.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
  work(0, workers);
  for (auto& th : pool) th.join();
  return result;
}

std::function<bool(const QVector&)> residual_set_predicate(const WoodwardParams& p) {
  const Rational l2 = p.lambda2, l3 = p.lambda3;
  const QVector u0 = critical_valuation(p);
  return [=](const QVector& u) {
    if (u.size() != 3) return false;
    if (u == u0) return true;
    if (u[2] != l2) return false;
    const Rational t = (3 * l2 - l3) / 2 - u[0];
    return t >= 0 && t <= (l2 - l3) / 2 && u[1] == (l2 + l3) / 2 + t;
  };
}

std::string render_slice_svg(const SweepResult& result, const Rational& u3) {
  std::vector<const SweepEntry*> slice;
  for (const auto& e : result.entries)
    if (e.point.size() == 3 && e.point[2] == u3) slice.push_back(&e);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  if (!slice.empty()) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (auto* e : slice) {
      const double x = to_double(e->point[0]), y = to_double(e->point[1]);
      x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
    const double step = 1.0 / result.resolution;
    const double span = std::max({x1 - x0 + step, y1 - y0 + step, step});
    const double cell = 560.0 / (span / step);
    for (auto* e : slice) {
      const double px = 20 + (to_double(e->point[0]) - x0) / step * cell;
      const double py = 580 - (to_double(e->point[1]) - y0 + step) / step * cell;
      os << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\"" << cell
         << "\" fill=\"" << (e->displaced_by ? "#e8eef7" : "#1b2a41") << "\"><title>" << to_string(e->point)
         << "</title></rect>\n";
    }
  }
  os << "<text x=\"10\" y=\"16\" font-size=\"12\">u3 = " << to_string(u3) << "</text>\n</svg>\n";
  return os.str();
}

}  // namespace gcfloer
