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

#include "gwifo/scenario.hpp"
#include "gwifo/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace
{
constexpr int kParseError = 2;
constexpr int kDivergence = 3;
constexpr int kOracleFailure = 4;
constexpr std::int64_t kOracleBounces = 200000;

double oracle_check(const gwifo::Scenario& scenario, const gwifo::SweepGrid& grid)
{
    const gwifo::SweepGrid spots{grid.f_min, grid.f_max, 5, gwifo::Spacing::log};
    double worst = 0.0;
    for (const auto& c : scenario.curves)
    {
        const auto detector = gwifo::reduce(c.config);
        for (double f : spots.frequencies())
        {
            const double w = gwifo::angular(f);
            const auto n = std::max(kOracleBounces, gwifo::required_bounces(detector, w));
            const double closed = gwifo::signal_magnitude(detector, w).magnitude;
            const double series = gwifo::series_oracle(detector, w, n).magnitude;
            const double dev = std::abs(closed - series) / std::abs(series);
            std::fprintf(stderr, "oracle %-28s %12.6g Hz  rel dev %.3e\n", c.label.c_str(), f, dev);
            worst = std::max(worst, dev);
        }
    }
    return worst;
}

nlohmann::json metadata(const gwifo::Scenario& scenario, const gwifo::SweepGrid& grid)
{
    nlohmann::json doc;
    doc["scenario"] = scenario.name;
    doc["grid"] = {{"f_min_hz", grid.f_min},
                   {"f_max_hz", grid.f_max},
                   {"points", grid.points},
                   {"spacing", grid.spacing == gwifo::Spacing::log ? "log" : "lin"}};
    if (scenario.normalize)
        doc["normalization"] = {{"curve", scenario.normalize->curve ? *scenario.normalize->curve
                                                                    : scenario.normalize->reference->label},
                                {"at_hz", scenario.normalize->at_hz}};
    for (const auto& c : scenario.curves)
    {
        const auto r = gwifo::report(c.config);
        nlohmann::json entry{{"label", c.label},
                             {"topology", gwifo::to_string(c.config.topology)},
                             {"detuning_deg", c.config.detuning_deg},
                             {"arm_length_m", r.arm_length},
                             {"sideband_length_m", r.sideband_length},
                             {"homodyne_phase_rad", r.homodyne_phase}};
        if (r.sideband_resonance_hz)
            entry["sideband_resonance_hz"] = *r.sideband_resonance_hz;
        if (r.gap_length)
            entry["gap_length_m"] = *r.gap_length;
        if (r.medium_slope)
        {
            entry["medium_slope_s_per_rad"] = *r.medium_slope;
            entry["medium_center_offset_hz"] = *r.medium_center_offset_hz;
        }
        doc["curves"].push_back(entry);
    }
    return doc;
}
} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Frequency response of Michelson gravitational-wave detectors"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::optional<std::string> out_path;
    std::optional<std::string> grid_text;
    std::optional<std::string> metadata_path;
    bool check = false;
    double tolerance = 1e-6;

    auto* simulate = app.add_subcommand("simulate", "sweep a scenario and write CSV");
    simulate->add_option("scenario", scenario_path, "scenario file (YAML)")->required();
    simulate->add_option("--out", out_path, "CSV destination (default: the scenario outputs.csv, else stdout)");
    simulate->add_option("--grid", grid_text, "override grid as f_min:f_max:points:log|lin");
    simulate->add_flag("--oracle-check", check, "compare against the bounce-sum oracle at 5 frequencies");
    simulate->add_option("--oracle-tolerance", tolerance, "maximum relative deviation for --oracle-check")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--metadata", metadata_path, "write derived lengths and phases as JSON");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : kParseError;
    }

    gwifo::Scenario scenario;
    gwifo::SweepGrid grid;
    try
    {
        scenario = gwifo::load_scenario(scenario_path);
        grid = grid_text ? gwifo::SweepGrid::parse(*grid_text) : scenario.grid;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kParseError;
    }

    try
    {
        const auto curves = gwifo::run_scenario(scenario, grid);
        if (out_path)
            gwifo::emit_csv(curves, std::filesystem::path(*out_path));
        else if (scenario.csv)
            gwifo::emit_csv(curves, *scenario.csv);
        else
            gwifo::emit_csv(curves, std::cout);

        if (metadata_path)
        {
            std::ofstream file(*metadata_path);
            if (!file)
                throw std::runtime_error("cannot write " + *metadata_path);
            file << metadata(scenario, grid).dump(2) << '\n';
        }

        if (check)
        {
            const double worst = oracle_check(scenario, grid);
            std::fprintf(stderr, "oracle max rel dev %.3e (limit %.0e)\n", worst, tolerance);
            if (!(worst < tolerance))
                return kOracleFailure;
        }
    }
    catch (const gwifo::ModelError& e)
    {
        std::cerr << "model error: " << e.what() << '\n';
        return kDivergence;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
