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

#include "gwifo/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace gwifo
{

namespace
{
double parse_number(std::string_view text, const char* what)
{
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw std::invalid_argument(std::string("bad grid ") + what + ": '" + std::string(text) + "'");
    return value;
}

std::string csv_field(const std::string& text)
{
    if (text.find_first_of(",\"\r\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char ch : text)
    {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + '"';
}

std::string format_number(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

double magnitude_at(const EffectiveDetector& detector, double f_hz)
{
    return signal_magnitude(detector, angular(f_hz)).magnitude;
}

Peak golden_section(const EffectiveDetector& detector, double a, double b)
{
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - g * (b - a);
    double x2 = a + g * (b - a);
    double f1 = magnitude_at(detector, x1);
    double f2 = magnitude_at(detector, x2);
    for (int it = 0; it < 200 && b - a > 1e-9 * b; ++it)
    {
        if (f1 < f2)
        {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = magnitude_at(detector, x2);
        }
        else
        {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = magnitude_at(detector, x1);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, magnitude_at(detector, x)};
}

double half_max_crossing(const EffectiveDetector& detector, const Peak& peak, double limit)
{
    const double half = 0.5 * peak.height;
    const double step = limit > peak.frequency_hz ? 1.01 : 1.0 / 1.01;
    double inside = peak.frequency_hz;
    double outside = inside;
    for (;;)
    {
        outside = limit > peak.frequency_hz ? std::min(outside * step, limit) : std::max(outside * step, limit);
        if (magnitude_at(detector, outside) < half)
            break;
        if (outside == limit)
            return limit;
        inside = outside;
    }
    for (int it = 0; it < 200 && std::abs(outside - inside) > 1e-12 * peak.frequency_hz; ++it)
    {
        const double mid = 0.5 * (inside + outside);
        (magnitude_at(detector, mid) < half ? outside : inside) = mid;
    }
    return 0.5 * (inside + outside);
}
} // namespace

void SweepGrid::validate() const
{
    if (!(f_min > 0.0 && f_max > f_min))
        throw std::invalid_argument("sweep grid needs 0 < f_min < f_max");
    if (points < 2)
        throw std::invalid_argument("sweep grid needs at least 2 points");
}

std::vector<double> SweepGrid::frequencies() const
{
    validate();
    std::vector<double> f(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
    {
        const double u = static_cast<double>(i) / (points - 1);
        f[i] = spacing == Spacing::log ? f_min * std::pow(f_max / f_min, u) : f_min + (f_max - f_min) * u;
    }
    f.front() = f_min;
    f.back() = f_max;
    return f;
}

SweepGrid SweepGrid::parse(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = text.find(':', start)) != std::string_view::npos; start = pos + 1)
        parts.push_back(text.substr(start, pos - start));
    parts.push_back(text.substr(start));
    if (parts.size() != 4)
        throw std::invalid_argument("grid must be f_min:f_max:points:log|lin");

    SweepGrid grid;
    grid.f_min = parse_number(parts[0], "f_min");
    grid.f_max = parse_number(parts[1], "f_max");
    const double points = parse_number(parts[2], "points");
    if (points != std::floor(points) || points > 1e7)
        throw std::invalid_argument("grid points must be a whole number");
    grid.points = static_cast<int>(points);
    if (parts[3] == "log")
        grid.spacing = Spacing::log;
    else if (parts[3] == "lin" || parts[3] == "linear")
        grid.spacing = Spacing::linear;
    else
        throw std::invalid_argument("grid spacing must be log or lin");
    grid.validate();
    return grid;
}

SweepError::SweepError(double frequency_hz, const std::string& what)
    : ModelError("at " + format_number(frequency_hz) + " Hz: " + what), frequency_hz_(frequency_hz)
{
}

ResponseCurve run_sweep(const EffectiveDetector& detector, const SweepGrid& grid, std::string label)
{
    ResponseCurve curve;
    curve.label = std::move(label);
    curve.frequencies = grid.frequencies();
    curve.magnitudes.reserve(curve.frequencies.size());
    for (double f : curve.frequencies)
    {
        try
        {
            curve.magnitudes.push_back(magnitude_at(detector, f));
        }
        catch (const DivergentRoundTrip&)
        {
            throw;
        }
        catch (const std::exception& e)
        {
            throw SweepError(f, e.what());
        }
    }
    return curve;
}

ResponseCurve run_sweep(const DetectorConfig& config, const SweepGrid& grid, std::string label)
{
    return run_sweep(reduce(config), grid, std::move(label));
}

double value_at(const ResponseCurve& curve, double f_hz)
{
    const auto& f = curve.frequencies;
    if (f.empty() || f.size() != curve.magnitudes.size())
        throw std::invalid_argument("curve '" + curve.label + "' has no usable samples");
    if (f_hz <= f.front())
        return curve.magnitudes.front();
    if (f_hz > f.back())
        throw std::invalid_argument("frequency above the range of curve '" + curve.label + "'");
    const auto it = std::lower_bound(f.begin(), f.end(), f_hz);
    const auto i = static_cast<std::size_t>(it - f.begin());
    if (f[i] == f_hz)
        return curve.magnitudes[i];
    const double m0 = curve.magnitudes[i - 1];
    const double m1 = curve.magnitudes[i];
    if (m0 <= 0.0 || m1 <= 0.0)
        return m0 + (m1 - m0) * (f_hz - f[i - 1]) / (f[i] - f[i - 1]);
    const double u = std::log(f_hz / f[i - 1]) / std::log(f[i] / f[i - 1]);
    return m0 * std::pow(m1 / m0, u);
}

ResponseCurve normalize_curve(const ResponseCurve& curve, const ResponseCurve& reference, double at_hz,
                              std::string reference_label)
{
    const double ref = value_at(reference, at_hz);
    if (!(ref != 0.0) || !std::isfinite(ref))
        throw std::invalid_argument("normalization reference is zero at " + format_number(at_hz) + " Hz");
    ResponseCurve out = curve;
    for (double& m : out.magnitudes)
        m /= ref;
    out.normalization_ref = NormalizationRef{reference_label.empty() ? reference.label : std::move(reference_label),
                                             at_hz};
    return out;
}

void emit_csv(const std::vector<ResponseCurve>& curves, std::ostream& out)
{
    for (const auto& c : curves)
    {
        if (c.frequencies.size() != c.magnitudes.size())
            throw std::invalid_argument("curve '" + c.label + "' has mismatched columns");
        if (c.frequencies != curves.front().frequencies)
            throw std::invalid_argument("curves do not share a frequency grid");
    }
    out << "frequency_hz";
    for (const auto& c : curves)
        out << ',' << csv_field(c.label);
    out << '\n';
    if (curves.empty())
        return;
    for (std::size_t i = 0; i < curves.front().frequencies.size(); ++i)
    {
        out << format_number(curves.front().frequencies[i]);
        for (const auto& c : curves)
            out << ',' << format_number(c.magnitudes[i]);
        out << '\n';
    }
}

void emit_csv(const std::vector<ResponseCurve>& curves, const std::filesystem::path& destination)
{
    std::ofstream file(destination, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write " + destination.string());
    emit_csv(curves, file);
    file.flush();
    if (!file)
        throw std::runtime_error("write failed for " + destination.string());
}

Peak find_peak(const EffectiveDetector& detector, double lo_hz, double hi_hz, std::optional<double> hint_hz,
               int points)
{
    const SweepGrid grid{lo_hz, hi_hz, points, Spacing::log};
    const auto f = grid.frequencies();
    std::size_t best = 0;
    double best_value = -1.0;
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        const double m = magnitude_at(detector, f[i]);
        if (m > best_value)
        {
            best_value = m;
            best = i;
        }
    }
    Peak peak = golden_section(detector, f[best == 0 ? 0 : best - 1], f[std::min(best + 1, f.size() - 1)]);
    if (best_value > peak.height)
        peak = {f[best], best_value};
    if (hint_hz && *hint_hz > lo_hz && *hint_hz < hi_hz)
    {
        const Peak near = golden_section(detector, std::max(lo_hz, 0.98 * *hint_hz), std::min(hi_hz, 1.02 * *hint_hz));
        if (near.height > peak.height)
            peak = near;
    }
    return peak;
}

double full_width_half_max(const EffectiveDetector& detector, const Peak& peak, double lo_hz, double hi_hz)
{
    return half_max_crossing(detector, peak, hi_hz) - half_max_crossing(detector, peak, lo_hz);
}

} // namespace gwifo
