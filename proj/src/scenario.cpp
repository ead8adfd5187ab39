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

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace gwifo
{

namespace
{
[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ScenarioError(where + ": " + what);
}

void only_keys(const YAML::Node& node, const std::string& where, const std::set<std::string>& allowed)
{
    if (!node.IsMap())
        fail(where, "expected a mapping");
    for (const auto& kv : node)
    {
        const auto key = kv.first.as<std::string>();
        if (!allowed.count(key))
            fail(where, "unknown key '" + key + "'");
    }
}

template <typename T>
T get(const YAML::Node& node, const std::string& where)
{
    try
    {
        return node.as<T>();
    }
    catch (const YAML::Exception&)
    {
        fail(where, "cannot read value '" + YAML::Dump(node) + "'");
    }
}

template <typename T>
std::optional<T> optional(const YAML::Node& parent, const char* key, const std::string& where)
{
    const YAML::Node node = parent[key];
    if (!node)
        return std::nullopt;
    return get<T>(node, where + "." + key);
}

double amplitude_reflectivity(const YAML::Node& node, const std::string& where)
{
    if (node.IsScalar())
        return get<double>(node, where);
    only_keys(node, where, {"r", "power_transmission"});
    const auto r = optional<double>(node, "r", where);
    const auto t2 = optional<double>(node, "power_transmission", where);
    if (r.has_value() == t2.has_value())
        fail(where, "give exactly one of r or power_transmission");
    if (t2 && !(*t2 >= 0.0 && *t2 <= 1.0))
        fail(where, "power_transmission must lie in [0, 1]");
    return r ? *r : std::sqrt(1.0 - *t2);
}

Mirror lossless(double r, bool substrate_inward, std::string label, const std::string& where)
{
    if (!(r >= 0.0 && r <= 1.0))
        fail(where, "amplitude reflectivity must lie in [0, 1]");
    return Mirror{r, std::sqrt(1.0 - r * r), substrate_inward, std::move(label)};
}

WlcMedium parse_medium(const YAML::Node& node, const std::string& where)
{
    only_keys(node, where, {"location", "model", "fill_length_m", "linewidth_hz", "slope_rule"});
    WlcMedium m;
    const auto location = optional<std::string>(node, "location", where).value_or("sideband_path");
    if (location == "sideband_path")
        m.location = MediumLocation::sideband_path;
    else if (location == "auxiliary_gap")
        m.location = MediumLocation::auxiliary_gap;
    else
        fail(where + ".location", "expected sideband_path or auxiliary_gap");

    const auto model = optional<std::string>(node, "model", where).value_or("linear");
    if (model == "linear")
        m.model = MediumModel::linear;
    else if (model == "lorentzian_derivative")
        m.model = MediumModel::lorentzian_derivative;
    else
        fail(where + ".model", "expected linear or lorentzian_derivative");

    const auto rule = optional<std::string>(node, "slope_rule", where)
                          .value_or(m.location == MediumLocation::auxiliary_gap ? "full_round_trip" : "path_length");
    if (rule == "path_length")
        m.slope_rule = SlopeRule::path_length;
    else if (rule == "full_round_trip")
        m.slope_rule = SlopeRule::full_round_trip;
    else
        fail(where + ".slope_rule", "expected path_length or full_round_trip");

    m.fill_length = optional<double>(node, "fill_length_m", where);
    if (const auto lw = optional<double>(node, "linewidth_hz", where))
        m.linewidth = angular(*lw);
    return m;
}

HomodyneChoice parse_homodyne(const YAML::Node& node, const std::string& where)
{
    only_keys(node, where, {"rule", "frequency_hz", "phase_rad"});
    HomodyneChoice h;
    const auto rule = optional<std::string>(node, "rule", where).value_or("reflection_phase");
    if (rule == "reflection_phase")
        h.rule = HomodyneChoice::Rule::reflection_phase;
    else if (rule == "optimal_at")
    {
        h.rule = HomodyneChoice::Rule::optimal_at;
        const auto f = optional<double>(node, "frequency_hz", where);
        if (!f)
            fail(where, "optimal_at needs frequency_hz");
        h.frequency_hz = *f;
    }
    else if (rule == "optimal_at_resonance")
        h.rule = HomodyneChoice::Rule::optimal_at_resonance;
    else if (rule == "fixed")
    {
        h.rule = HomodyneChoice::Rule::fixed;
        const auto p = optional<double>(node, "phase_rad", where);
        if (!p)
            fail(where, "fixed needs phase_rad");
        h.phase = *p;
    }
    else
        fail(where + ".rule", "expected reflection_phase, optimal_at, optimal_at_resonance or fixed");
    return h;
}

DetectorConfig parse_detector(const YAML::Node& node, const std::string& where, std::optional<double> default_strain)
{
    only_keys(node, where,
              {"label", "preset", "mirrors", "src_loss", "strain", "homodyne_amplitude", "homodyne", "detuning_deg",
               "detuning_m", "medium"});
    const auto preset = optional<std::string>(node, "preset", where);
    if (!preset)
        fail(where, "missing preset");

    const YAML::Node mirrors = node["mirrors"];
    std::set<std::string> adjustable;
    if (*preset == "adligo" || *preset == "arm_cavity")
        adjustable = {"end", "itm", "srm", "prm"};
    else if (*preset == "dual_recycling")
        adjustable = {"srm", "prm"};
    else if (*preset == "auxiliary_srm")
        adjustable = {"aux"};
    else
        fail(where + ".preset", "expected adligo, arm_cavity, dual_recycling or auxiliary_srm");
    if (mirrors)
        only_keys(mirrors, where + ".mirrors", adjustable);
    auto mirror_r = [&](const char* name) -> std::optional<double> {
        if (!mirrors || !mirrors[name])
            return std::nullopt;
        return amplitude_reflectivity(mirrors[name], where + ".mirrors." + name);
    };

    DetectorConfig cfg;
    try
    {
        if (*preset == "adligo" || *preset == "arm_cavity")
        {
            cfg = *preset == "adligo" ? adligo_preset() : arm_cavity_preset();
            const std::string w = where + ".mirrors";
            if (auto r = mirror_r("end"))
                cfg.end = lossless(*r, false, cfg.end.label, w + ".end");
            if (auto r = mirror_r("itm"))
                cfg.itm = lossless(*r, cfg.itm.substrate_inward, cfg.itm.label, w + ".itm");
            if (auto r = mirror_r("srm"))
                cfg.srm = lossless(*r, false, cfg.srm.label, w + ".srm");
            if (auto r = mirror_r("prm"))
                cfg.prm = lossless(*r, false, cfg.prm.label, w + ".prm");
            cfg = resonate_arm(cfg);
        }
        else if (*preset == "dual_recycling")
        {
            const double r_prm = mirror_r("prm").value_or(adligo_preset().prm.r);
            cfg = dual_recycling_preset(mirror_r("srm").value_or(0.0), r_prm, false);
        }
        else
        {
            cfg = auxiliary_srm_preset(mirror_r("aux").value_or(0.0), false);
        }

        if (const auto loss = optional<double>(node, "src_loss", where))
        {
            if (cfg.topology != Topology::dual_recycling_with_arms)
                fail(where + ".src_loss", "only the adligo preset has an SRC loss");
            cfg.src_loss = *loss;
        }
        cfg.strain = optional<double>(node, "strain", where).value_or(default_strain.value_or(cfg.strain));
        if (const auto a = optional<double>(node, "homodyne_amplitude", where))
            cfg.homodyne_amplitude = *a;
        if (node["homodyne"])
            cfg.homodyne = parse_homodyne(node["homodyne"], where + ".homodyne");
        if (node["medium"])
            cfg.medium = parse_medium(node["medium"], where + ".medium");

        const auto deg = optional<double>(node, "detuning_deg", where);
        const auto meters = optional<double>(node, "detuning_m", where);
        if (deg && meters)
            fail(where, "give detuning_deg or detuning_m, not both");
        if (deg && !(*deg >= 0.0 && *deg < 360.0))
            fail(where + ".detuning_deg", "must lie in [0, 360)");
        const double degrees = deg ? *deg : meters ? *meters / (0.5 * cfg.carrier.wavelength) * 360.0 : 0.0;
        if (degrees != 0.0)
            cfg = detune(cfg, degrees);
        cfg.validate();
    }
    catch (const ScenarioError&)
    {
        throw;
    }
    catch (const std::invalid_argument& e)
    {
        fail(where, e.what());
    }
    return cfg;
}

SweepGrid parse_grid(const YAML::Node& node, const std::string& where)
{
    SweepGrid grid;
    if (!node)
        return grid;
    only_keys(node, where, {"f_min_hz", "f_max_hz", "points", "spacing"});
    grid.f_min = optional<double>(node, "f_min_hz", where).value_or(grid.f_min);
    grid.f_max = optional<double>(node, "f_max_hz", where).value_or(grid.f_max);
    grid.points = optional<int>(node, "points", where).value_or(grid.points);
    const auto spacing = optional<std::string>(node, "spacing", where).value_or("log");
    if (spacing == "log")
        grid.spacing = Spacing::log;
    else if (spacing == "lin" || spacing == "linear")
        grid.spacing = Spacing::linear;
    else
        fail(where + ".spacing", "expected log or lin");
    try
    {
        grid.validate();
    }
    catch (const std::invalid_argument& e)
    {
        fail(where, e.what());
    }
    return grid;
}
} // namespace

Scenario parse_scenario(std::string_view text)
{
    YAML::Node root;
    try
    {
        root = YAML::Load(std::string(text));
    }
    catch (const YAML::Exception& e)
    {
        throw ScenarioError(std::string("malformed scenario: ") + e.what());
    }
    only_keys(root, "scenario", {"name", "grid", "gw", "normalize", "curves", "outputs"});

    Scenario s;
    s.name = optional<std::string>(root, "name", "scenario").value_or("");
    s.grid = parse_grid(root["grid"], "grid");

    std::optional<double> strain;
    if (const YAML::Node gw = root["gw"])
    {
        only_keys(gw, "gw", {"strain"});
        strain = optional<double>(gw, "strain", "gw");
    }
    if (const YAML::Node out = root["outputs"])
    {
        only_keys(out, "outputs", {"csv"});
        if (const auto csv = optional<std::string>(out, "csv", "outputs"))
            s.csv = *csv;
    }

    const YAML::Node curves = root["curves"];
    if (!curves || !curves.IsSequence() || curves.size() == 0)
        fail("curves", "expected a non-empty list");
    std::set<std::string> labels;
    for (std::size_t i = 0; i < curves.size(); ++i)
    {
        const std::string where = "curves[" + std::to_string(i) + "]";
        if (!curves[i].IsMap())
            fail(where, "expected a mapping");
        const auto label = optional<std::string>(curves[i], "label", where);
        if (!label || label->empty())
            fail(where, "missing label");
        if (!labels.insert(*label).second)
            fail(where, "duplicate label '" + *label + "'");
        s.curves.push_back({*label, parse_detector(curves[i], where, strain)});
    }

    if (const YAML::Node n = root["normalize"])
    {
        only_keys(n, "normalize", {"curve", "reference", "at_hz"});
        NormalizationSpec spec;
        spec.curve = optional<std::string>(n, "curve", "normalize");
        if (n["reference"])
            spec.reference = CurveSpec{optional<std::string>(n["reference"], "label", "normalize.reference")
                                           .value_or("reference"),
                                       parse_detector(n["reference"], "normalize.reference", strain)};
        spec.at_hz = optional<double>(n, "at_hz", "normalize").value_or(1.0);
        if (spec.curve.has_value() == spec.reference.has_value())
            fail("normalize", "give exactly one of curve or reference");
        if (spec.curve && !labels.count(*spec.curve))
            fail("normalize.curve", "no curve labelled '" + *spec.curve + "'");
        if (!(spec.at_hz > 0.0))
            fail("normalize.at_hz", "must be positive");
        s.normalize = spec;
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw ScenarioError("cannot open scenario " + path.string());
    std::ostringstream text;
    text << file.rdbuf();
    Scenario s = parse_scenario(text.str());
    if (s.csv && s.csv->is_relative())
        s.csv = path.parent_path() / *s.csv;
    return s;
}

std::vector<ResponseCurve> run_scenario(const Scenario& scenario, const SweepGrid& grid)
{
    std::vector<ResponseCurve> curves;
    curves.reserve(scenario.curves.size());
    for (const auto& c : scenario.curves)
        curves.push_back(run_sweep(c.config, grid, c.label));
    if (!scenario.normalize)
        return curves;

    const auto& n = *scenario.normalize;
    const DetectorConfig* reference_config = n.reference ? &n.reference->config : nullptr;
    std::string reference_label = n.reference ? n.reference->label : n.curve.value_or("");
    for (const auto& c : scenario.curves)
        if (n.curve && c.label == *n.curve)
            reference_config = &c.config;

    // evaluated exactly at the normalization frequency, on or off the grid
    ResponseCurve reference;
    reference.label = reference_label;
    reference.frequencies = {n.at_hz};
    reference.magnitudes = {signal_magnitude(reduce(*reference_config), angular(n.at_hz)).magnitude};
    for (auto& c : curves)
        c = normalize_curve(c, reference, n.at_hz);
    return curves;
}

} // namespace gwifo
