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

#include <optional>
#include <string>
#include <vector>

#include "gcfloer/config.hpp"
#include "gcfloer/report.hpp"

namespace gcfloer {

Report cmd_validate(const RunConfig& config);
Report cmd_polytope(const RunConfig& config);
Report cmd_potential(const RunConfig& config);
Report cmd_newton(const RunConfig& config);
/// With `lift`, adds certified series to order *lift.
Report cmd_crit(const RunConfig& config, const std::optional<Rational>& lift);
Report cmd_probes(const RunConfig& config);
/// `gram` rows separated by ';', entries by ','; a single row is a diagonal.
/// Empty means the identity.
Report cmd_clifford(int n, const std::string& gram);
Report cmd_qh();
Report cmd_verify_all(const RunConfig& config);

/// "ζ^k" style label when z is an integer multiple of a cube root of unity.
std::string root_of_unity_label(Complex z);

}  // namespace gcfloer
