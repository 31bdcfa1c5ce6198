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

#include "gcfloer/commands.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gcfloer/algebra.hpp"
#include "gcfloer/critsolve.hpp"
#include "gcfloer/error.hpp"
#include "gcfloer/potential.hpp"
#include "gcfloer/probes.hpp"
#include "gcfloer/tropical.hpp"

namespace gcfloer {

namespace {

std::string int_vector(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* pass_fail(bool b) { return b ? "pass" : "fail"; }

std::string series_of(const std::vector<SeriesTerm>& terms) {
  return NovikovSeries(terms).to_string();
}

void require_strengthened(const WoodwardParams& p) {
  auto v = validate_params(p, Strength::Strengthened);
  if (!v.empty()) {
    std::string msg = "parameters violate:";
    for (const auto& x : v) msg += " [" + x.name + "]";
    throw Error(ErrorCode::DegenerateParameters, msg);
  }
}

Table constraint_table(const WoodwardParams& p) {
  Table t{"Parameter constraints", {"name", "statement", "scope", "result"}, {}};
  for (const auto& c : check_constraints(p))
    t.add({c.name, c.statement, c.strengthened_only ? "strengthened" : "basic", pass_fail(c.passed)});
  return t;
}

std::string dims(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

bool near_valuation(const OraclePoint& q, const QVector& u, double tol) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (std::abs(q.valuation[i] - to_double(u[i])) > tol) return false;
  return true;
}

OracleOptions oracle_options(const RunConfig& c, const HPolytope& polytope) {
  OracleOptions o;
  o.seed = c.seed;
  for (std::size_t j = 0; j < 3; ++j) {
    double lo = 1e300, hi = -1e300;
    for (const auto& v : polytope.vertices()) {
      lo = std::min(lo, to_double(v[j]));
      hi = std::max(hi, to_double(v[j]));
    }
    o.box_lower.push_back(lo);
    o.box_upper.push_back(hi);
  }
  return o;
}

std::optional<std::pair<Probe, std::string>> generic_displacer(const HPolytope& polytope, const QVector& u,
                                                               int maxdir) {
  for (std::size_t f = 0; f < polytope.facet_count(); ++f)
    for (const auto& dir : generic_directions(polytope, f, maxdir))
      if (auto pr = probe_through(polytope, f, dir, u); pr && probe_displaces(polytope, *pr, u))
        return std::make_pair(*pr, std::string("generic"));
  return std::nullopt;
}

}  // namespace

std::string root_of_unity_label(Complex z) {
  const Complex zeta = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  for (int k = 0; k < 3; ++k) {
    const Complex c = z / std::pow(zeta, k);
    const double re = std::round(c.real());
    if (std::abs(c - Complex(re, 0.0)) > 1e-9 || re == 0.0) continue;
    std::string coeff = re == 1 ? "" : (re == -1 ? "-" : std::to_string(static_cast<long long>(re)));
    if (k == 0) return std::to_string(static_cast<long long>(re));
    return coeff + (k == 1 ? "ζ" : "ζ^2");
  }
  return format_complex(z);
}

Report cmd_validate(const RunConfig& config) {
  Report r;
  r.tables.push_back(constraint_table(config.params));
  r.status = validate_params(config.params, Strength::Strengthened).empty() ? 0 : 1;
  return r;
}

Report cmd_polytope(const RunConfig& config) {
  const HPolytope cut = build_cut_polytope(config.params);
  Report r;
  Table facets{"Cut polytope facets", {"facet", "label", "normal", "offset", "offset_symbol"}, {}};
  for (std::size_t i = 0; i < cut.facet_count(); ++i) {
    const Facet& f = cut.facet(i);
    facets.add({"F" + std::to_string(i + 1), f.label, int_vector(f.normal), to_string(f.offset), f.offset_symbol});
  }
  Table verts{"Cut polytope vertices", {"u1", "u2", "u3", "faces", "singular"}, {}};
  for (const auto& v : cut.vertices()) {
    std::string faces;
    for (auto f : cut.classify(v).faces) faces += (faces.empty() ? "F" : " F") + std::to_string(f + 1);
    verts.add({to_string(v[0]), to_string(v[1]), to_string(v[2]), faces, yes_no(cut.singular_vertex() == v)});
  }
  r.tables.push_back(std::move(facets));
  r.tables.push_back(std::move(verts));
  return r;
}

Report cmd_potential(const RunConfig& config) {
  const HPolytope cut = build_cut_polytope(config.params);
  const PotentialFunction pot = leading_potential(cut);
  Report r;
  Table terms{"Leading order potential, one term per facet", {"facet", "exponents", "shift", "shift_symbol", "term"}, {}};
  for (std::size_t i = 0; i < cut.facet_count(); ++i) {
    const Facet& f = cut.facet(i);
    const PotentialFunction single(3, {{f.normal, f.offset, {1.0, 0.0}, f.offset_symbol}});
    terms.add({"F" + std::to_string(i + 1), int_vector(f.normal), to_string(f.offset), f.offset_symbol,
               single.to_string(true)});
  }
  Table whole{"Leading order potential", {"form", "potential"}, {}};
  whole.add({"symbolic", pot.to_string(true)});
  whole.add({"numeric", pot.to_string(false)});
  Table derivs{"Logarithmic derivatives", {"derivative", "expression"}, {}};
  const char* names[] = {"x dP/dx", "y dP/dy", "z dP/dz"};
  for (std::size_t i = 0; i < 3; ++i) derivs.add({names[i], log_derivative(pot, i).to_string(true)});
  r.tables.push_back(std::move(terms));
  r.tables.push_back(std::move(whole));
  r.tables.push_back(std::move(derivs));
  return r;
}

Report cmd_newton(const RunConfig& config) {
  const auto g = eliminate_to_g(config.params);
  const auto np = newton_polygon(g);
  const auto s = slope_comparison(config.params);
  Report r;
  Table coeffs{"Eliminated polynomial in z", {"degree", "coefficient"}, {}};
  for (auto it = g.rbegin(); it != g.rend(); ++it) coeffs.add({std::to_string(it->first), it->second.to_string()});
  Table verts{"Newton polygon vertices", {"degree", "valuation"}, {}};
  for (const auto& v : np.vertices) verts.add({std::to_string(v.degree), to_string(v.valuation)});
  Table roots{"Root valuations", {"valuation", "multiplicity"}, {}};
  for (const auto& rv : root_valuation_counts(np)) roots.add({to_string(rv.valuation), std::to_string(rv.multiplicity)});
  Table slopes{"Newton polygon slopes", {"AB", "BC", "AC", "configuration"}, {}};
  slopes.add({to_string(s.ab), to_string(s.bc), to_string(s.ac), slope_configuration_name(s.configuration)});
  r.tables.push_back(std::move(coeffs));
  r.tables.push_back(std::move(verts));
  r.tables.push_back(std::move(roots));
  r.tables.push_back(std::move(slopes));
  return r;
}

Report cmd_crit(const RunConfig& config, const std::optional<Rational>& lift) {
  const WoodwardParams& p = config.params;
  require_strengthened(p);
  Report r;
  Table cases{"Valuation cases", {"case", "u1", "u2", "u3", "inside_polytope", "witnesses"}, {}};
  for (const auto& c : valuation_cases(p)) {
    std::string w;
    for (const auto& x : c.witnesses) w += (w.empty() ? "" : "; ") + x.name + ": " + pass_fail(x.holds);
    cases.add({case_tag_name(c.tag), to_string(c.valuations[0]), to_string(c.valuations[1]),
               to_string(c.valuations[2]), yes_no(c.inside_polytope), w});
  }
  const auto s = critical_exponents(p);
  Table exps{"Critical value exponents", {"S1", "S2", "S3"}, {}};
  exps.add({to_string(s[0]), to_string(s[1]), to_string(s[2])});

  auto cps = critical_points(p);
  Table table{std::string("Critical points, ") + (p.n % 2 ? "odd" : "even") + " n",
              {"x0", "y0", "z0", "hess1", "hess2", "critical_value"}, {}};
  for (const auto& cp : cps) {
    table.add({root_of_unity_label(cp.leading[0]), root_of_unity_label(cp.leading[1]),
               root_of_unity_label(cp.leading[2]), root_of_unity_label(cp.hess1), root_of_unity_label(cp.hess2),
               series_of(cp.critical_value_leading)});
  }
  r.tables.push_back(std::move(cases));
  r.tables.push_back(std::move(exps));
  r.tables.push_back(std::move(table));
  if (lift) {
    const PotentialFunction pot = leading_potential(build_cut_polytope(p));
    Table lifted{"Lifted critical points", {"point", "coordinate", "series", "certified_residual_valuation"}, {}};
    const char* coord[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < cps.size(); ++i) {
      const auto res = hensel_lift(pot, cps[i], *lift);
      for (std::size_t j = 0; j < 3; ++j)
        lifted.add({std::to_string(i + 1), coord[j], res.point[j].to_string(), to_string(res.residual_history.back())});
    }
    r.tables.push_back(std::move(lifted));
  }
  return r;
}

Report cmd_probes(const RunConfig& config) {
  const WoodwardParams& p = config.params;
  const HPolytope cut = build_cut_polytope(p);
  const auto result = sweep(cut, p, config.grid, SweepMode::LemmaFamilies);
  const auto residual = residual_set_predicate(p);
  Report r;
  Table t{"Probe sweep, lemma families, D = " + std::to_string(config.grid),
          {"u1", "u2", "u3", "verdict", "probe_facet", "probe_direction", "rule", "residual"},
          {}};
  for (const auto& e : result.entries) {
    const bool d = e.displaced_by.has_value();
    t.add({to_string(e.point[0]), to_string(e.point[1]), to_string(e.point[2]), d ? "Displaced" : "NotDisplaced",
           d ? "F" + std::to_string(e.displaced_by->facet + 1) : "", d ? int_vector(e.displaced_by->direction) : "",
           e.rule, yes_no(residual(e.point))});
  }
  r.tables.push_back(std::move(t));
  r.svg = render_slice_svg(result, p.lambda2);
  return r;
}

Report cmd_clifford(int n, const std::string& gram) {
  if (n < 0 || n > 8) throw Error(ErrorCode::InvalidArgument, "n must lie in 0..8");
  std::vector<std::vector<Complex>> g(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n)));
  if (gram.empty()) {
    for (int i = 0; i < n; ++i) g[i][i] = 1.0;
  } else {
    std::vector<std::vector<Complex>> rows;
    std::stringstream ss(gram);
    std::string row;
    while (std::getline(ss, row, ';')) {
      std::vector<Complex> vals;
      std::stringstream rs(row);
      std::string cell;
      while (std::getline(rs, cell, ',')) vals.emplace_back(to_double(parse_rational(cell)), 0.0);
      rows.push_back(std::move(vals));
    }
    if (rows.size() == 1 && static_cast<int>(rows[0].size()) == n) {
      for (int i = 0; i < n; ++i) g[i][i] = rows[0][i];
    } else {
      if (static_cast<int>(rows.size()) != n) throw Error(ErrorCode::DimensionMismatch, "gram must have n rows");
      for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw Error(ErrorCode::DimensionMismatch, "gram must be n x n");
        g[i] = rows[i];
      }
    }
  }
  const GradedCliffordAlgebra a(g);
  Report r;
  Table t{"Clifford algebra", {"n", "nondegenerate", "commutator_span_rank", "hh0", "top_class_square"}, {}};
  const int span = graded_commutator_span_rank(a);
  t.add({std::to_string(n), yes_no(a.nondegenerate()), std::to_string(span), std::to_string((1 << n) - span),
         n == 3 ? format_complex(top_class_square(a)) : ""});
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_qh() {
  const QhBetti b = qh_betti();
  Report r;
  Table t{"Quantum cohomology ranks", {"degree", "betti"}, {}};
  for (int d = 0; d < 4; ++d) t.add({std::to_string(2 * d), std::to_string(b.betti[static_cast<std::size_t>(d)])});
  t.add({"8", std::to_string(b.degree4)});
  t.add({"total", std::to_string(b.total)});
  r.tables.push_back(std::move(t));
  return r;
}

Report cmd_verify_all(const RunConfig& config) {
  const WoodwardParams& p = config.params;
  Report r;
  if (!validate_params(p, Strength::Strengthened).empty()) {
    r.tables.push_back(constraint_table(p));
    r.status = 1;
    return r;
  }
  Table ledger{"Verification ledger", {"item", "claim", "result", "detail"}, {}};
  auto record = [&](const std::string& item, const std::string& claim, bool ok, const std::string& detail) {
    ledger.add({item, claim, pass_fail(ok), detail});
    if (!ok) r.status = 1;
  };
  const int n = p.n;
  const Rational K = lift_order(config);

  const HPolytope cut = build_cut_polytope(p);
  const PotentialFunction pot = leading_potential(cut);
  record("potential", "one leading term per facet", pot.terms().size() == cut.facet_count(), pot.to_string(true));

  const auto counts = root_valuation_counts(newton_polygon(eliminate_to_g(p)));
  const Rational u3 = (2 * p.r + (2 - n) * p.lambda2 + (n + 2) * p.lambda3) / 6;
  const std::vector<RootValuation> expect{{u3, 6}, {p.lambda2, 2 * n - 2}};
  std::string cdetail;
  for (const auto& c : counts) cdetail += "(" + to_string(c.valuation) + ", " + std::to_string(c.multiplicity) + ")";
  record("newton polygon", "6 roots of valuation u3 and 2n-2 of valuation l2", counts == expect, cdetail);

  const auto cases = valuation_cases(p);
  record("case (a)", "valuation u0 lies inside the polytope", cases[0].inside_polytope, to_string(cases[0].valuations));
  record("case (b)", "both case (b) triples lie outside the polytope",
         !cases[1].inside_polytope && !cases[2].inside_polytope,
         to_string(cases[1].valuations) + " " + to_string(cases[2].valuations));

  auto cps = critical_points(p);
  const QVector u0 = critical_valuation(p);
  bool six = cps.size() == 6;
  for (const auto& cp : cps) six = six && cp.valuation == u0 && !is_zero(cp.hess1) && !is_zero(cp.hess2);
  record("critical points", "six non-degenerate critical points of valuation u0", six,
         std::to_string(cps.size()) + " at " + to_string(u0));

  bool lifted = true;
  std::string ldetail;
  for (auto& cp : cps) {
    try {
      const auto res = hensel_lift(pot, cp, K);
      lifted = lifted && res.residual_history.back() >= K;
      cp.lifted = res.point;
    } catch (const Error& e) {
      lifted = false;
      ldetail = e.what();
    }
  }
  record("hensel lift", "residual valuation >= " + to_string(K) + " for every point", lifted,
         ldetail.empty() ? "K = " + to_string(K) : ldetail);

  const auto oracle = numeric_torus_oracle(pot, config.t, config.oracle_seeds, oracle_options(config, cut));
  int near = 0;
  for (const auto& q : oracle)
    if (near_valuation(q, u0, 0.1)) ++near;
  record("numeric oracle", "at least 6 critical points within 0.1 of u0", near >= 6,
         std::to_string(near) + " of " + std::to_string(oracle.size()) + " at t = " + dims({config.t}));

  const auto result = sweep(cut, p, config.grid, SweepMode::LemmaFamilies);
  const auto residual = residual_set_predicate(p);
  std::vector<QVector> gaps;
  bool residual_clean = true;
  std::size_t residual_points = 0;
  for (const auto& e : result.entries) {
    if (residual(e.point)) {
      ++residual_points;
      residual_clean = residual_clean && !e.displaced_by && !generic_displacer(cut, e.point, 3);
    } else if (!e.displaced_by) {
      gaps.push_back(e.point);
    }
  }
  std::string gdetail = std::to_string(result.entries.size()) + " interior points, " + std::to_string(gaps.size()) +
                        " not displaced";
  for (std::size_t i = 0; i < gaps.size() && i < 5; ++i) gdetail += " " + to_string(gaps[i]);
  record("probe sweep", "every interior grid point off the residual set is displaced by the lemma families",
         gaps.empty(), gdetail);
  if (!gaps.empty()) {
    bool covered = true;
    for (const auto& u : gaps) covered = covered && generic_displacer(cut, u, 3).has_value();
    record("generic probes", "points missed by the lemma families are displaced by some probe", covered,
           std::to_string(gaps.size()) + " checked with directions up to norm 3");
  }
  record("residual set", "no residual grid point is displaced by any probe", residual_clean,
         std::to_string(residual_points) + " residual grid points");

  bool forms = true;
  std::string fdetail;
  for (const auto& cp : cps) {
    try {
      const auto a = quadratic_form_from_potential(pot, cp);
      const Complex sq = top_class_square(a);
      forms = forms && hh0(a) == 1 && !is_zero(sq);
      fdetail += (fdetail.empty() ? "" : " ") + format_complex(sq);
    } catch (const Error& e) {
      forms = false;
      fdetail = e.what();
    }
  }
  record("clifford", "non-degenerate forms with HH0 = 1 and nonzero top class square", forms, fdetail);

  int pairs = 0, vanishing = 0;
  for (std::size_t i = 0; i < cps.size(); ++i)
    for (std::size_t j = i + 1; j < cps.size(); ++j) {
      std::vector<NovikovSeries> tau;
      for (std::size_t k = 0; k < 3; ++k) tau.push_back(NovikovSeries::constant(cps[j].leading[k] / cps[i].leading[k]));
      ++pairs;
      if (twisted_torus_cohomology_is_zero(tau)) ++vanishing;
    }
  record("local systems", "Floer cohomology between distinct critical points vanishes", pairs == 15 && vanishing == 15,
         std::to_string(vanishing) + " of " + std::to_string(pairs) + " pairs");

  const QhBetti b = qh_betti();
  record("quantum cohomology", "ranks (1,2,2,1), total equal to the number of critical points",
         b.betti == std::array<int, 4>{1, 2, 2, 1} && b.degree4 == 0 && b.total == static_cast<int>(cps.size()),
         "(" + std::to_string(b.betti[0]) + "," + std::to_string(b.betti[1]) + "," + std::to_string(b.betti[2]) + "," +
             std::to_string(b.betti[3]) + ")");

  r.tables.push_back(std::move(ledger));
  return r;
}

}  // namespace gcfloer
