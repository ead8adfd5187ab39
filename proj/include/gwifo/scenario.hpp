// SPDX-License-Identifier: Apache-2.0
//
// gwifo - frequency response of Michelson gravitational-wave detectors
// Copyright (C) 2026 The gwifo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef GWIFO_SCENARIO_HPP
#define GWIFO_SCENARIO_HPP

#include "gwifo/detector.hpp"
#include "gwifo/sweep.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gwifo
{

/// Malformed or inconsistent scenario file.
class ScenarioError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct CurveSpec
{
    std::string label;
    DetectorConfig config;
};

struct NormalizationSpec
{
    std::optional<std::string> curve;  // label of a curve in the scenario
    std::optional<CurveSpec> reference; // or a detector evaluated only for normalization
    double at_hz = 1.0;
};

struct Scenario
{
    std::string name;
    SweepGrid grid;
    std::vector<CurveSpec> curves;
    std::optional<NormalizationSpec> normalize;
    std::optional<std::filesystem::path> csv; // default CSV destination, relative to the scenario file
};

Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Sweeps every curve on `grid` and applies the scenario normalization.
std::vector<ResponseCurve> run_scenario(const Scenario& scenario, const SweepGrid& grid);
inline std::vector<ResponseCurve> run_scenario(const Scenario& scenario)
{
    return run_scenario(scenario, scenario.grid);
}

} // namespace gwifo

#endif // GWIFO_SCENARIO_HPP
