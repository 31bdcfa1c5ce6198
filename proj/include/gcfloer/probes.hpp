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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcfloer/polytope.hpp"

namespace gcfloer {

struct Probe {
  std::size_t facet;
  IntVector direction;
  QVector base;
};

/// Smallest s > 0 with base + s*dir on the boundary.
Rational exit_length(const HPolytope& polytope, const QVector& base, const IntVector& dir);

/// True iff u lies strictly less than halfway along a well-formed probe that
/// avoids the singular vertex. `diagnostic` explains a malformed probe.
bool probe_displaces(const HPolytope& polytope, const Probe& probe, const QVector& u,
                     std::string* diagnostic = nullptr);

/// The probe through u with the given facet and direction, if its base lands
/// inside the facet (requires <dir, n_F> = 1).
std::optional<Probe> probe_through(const HPolytope& polytope, std::size_t facet, const IntVector& dir,
                                   const QVector& u);

struct ProbeFamily {
  std::string name;
  std::size_t facet;
  IntVector direction;
  /// Range of u the lemma speaks about.
  std::function<bool(const QVector&)> window;
  /// The lemma's inequality: displaced iff it holds, inside the window.
  std::function<bool(const QVector&)> condition;

  bool applies(const QVector& u) const { return window(u) && condition(u); }
};

/// The eight (facet, direction) pairs of the probe lemmas on the cut polytope.
std::vector<ProbeFamily> lemma_probe_families(const WoodwardParams& p);

enum class SweepMode { LemmaFamilies, GenericSearch };

struct SweepEntry {
  QVector point;
  std::optional<Probe> displaced_by;
  /// Family name, or "generic".
  std::string rule;
};

struct SweepResult {
  int resolution;
  /// Interior grid points in lexicographic order.
  std::vector<SweepEntry> entries;
};

/// Tests every interior point with denominator D. GenericSearch uses every
/// facet and every primitive direction with infinity-norm <= maxdir.
SweepResult sweep(const HPolytope& polytope, const WoodwardParams& p, int resolution, SweepMode mode,
                  int maxdir = 3);

/// Primitive directions with <dir, n_F> = 1 and infinity-norm <= maxdir.
std::vector<IntVector> generic_directions(const HPolytope& polytope, std::size_t facet, int maxdir);

/// The closed segment ((3l2-l3)/2 - t, (l2+l3)/2 + t, l2), 0 <= t <= (l2-l3)/2, plus u0.
std::function<bool(const QVector&)> residual_set_predicate(const WoodwardParams& p);

/// 600x600 slice of a sweep at fixed u3: displaced light, not displaced dark.
std::string render_slice_svg(const SweepResult& result, const Rational& u3);

}  // namespace gcfloer
