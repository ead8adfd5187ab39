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

#ifndef GWIFO_SWEEP_HPP
#define GWIFO_SWEEP_HPP

#include "gwifo/detector.hpp"
#include "gwifo/response.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gwifo
{

enum class Spacing
{
    log,
    linear
};

struct SweepGrid
{
    double f_min = 1.0;   // Hz
    double f_max = 2e4;   // Hz
    int points = 200;
    Spacing spacing = Spacing::log;

    void validate() const;
    std::vector<double> frequencies() const;

    /// Parses "f_min:f_max:points:log|lin".
    static SweepGrid parse(std::string_view text);
};

struct NormalizationRef
{
    std::string curve;
    double frequency_hz = 1.0;
};

struct ResponseCurve
{
    std::vector<double> frequencies; // Hz
    std::vector<double> magnitudes;
    std::string label;
    std::optional<NormalizationRef> normalization_ref;
};

/// Model failure at one grid frequency.
class SweepError : public ModelError
{
public:
    SweepError(double frequency_hz, const std::string& what);
    double frequency_hz() const { return frequency_hz_; }

private:
    double frequency_hz_;
};

ResponseCurve run_sweep(const EffectiveDetector& detector, const SweepGrid& grid, std::string label = {});
ResponseCurve run_sweep(const DetectorConfig& config, const SweepGrid& grid, std::string label = {});

/// Value of a curve at `f_hz`: exact grid hit, the lowest point for frequencies below
/// the grid, otherwise log-log interpolation between neighbours.
double value_at(const ResponseCurve& curve, double f_hz);

ResponseCurve normalize_curve(const ResponseCurve& curve, const ResponseCurve& reference, double at_hz,
                              std::string reference_label = {});

/// Header `frequency_hz,<label>,...` and one row per grid frequency.
void emit_csv(const std::vector<ResponseCurve>& curves, std::ostream& out);
void emit_csv(const std::vector<ResponseCurve>& curves, const std::filesystem::path& destination);

struct Peak
{
    double frequency_hz = 0.0;
    double height = 0.0;
};

/// Maximum of |dI| over [lo_hz, hi_hz]: log grid scan refined by golden section.
/// `hint_hz` adds a refined candidate, for lines narrower than the grid spacing.
Peak find_peak(const EffectiveDetector& detector, double lo_hz, double hi_hz,
               std::optional<double> hint_hz = std::nullopt, int points = 400);

/// Width between the half-maximum crossings either side of `peak`, clamped to the band.
double full_width_half_max(const EffectiveDetector& detector, const Peak& peak, double lo_hz, double hi_hz);

} // namespace gwifo

#endif // GWIFO_SWEEP_HPP
