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

#ifndef GWIFO_DETECTOR_HPP
#define GWIFO_DETECTOR_HPP

#include "gwifo/cavity.hpp"
#include "gwifo/response.hpp"

#include <optional>
#include <string>

namespace gwifo
{

enum class Topology
{
    arm_cavities_only,        // Michelson with arm cavities
    dual_recycling,           // PRM and SRM outside plain arms
    dual_recycling_with_arms, // AdLIGO: arm cavities + PRC + SRC
    auxiliary_srm             // AdLIGO with matched SRC and an auxiliary SRM
};

std::string to_string(Topology topology);

enum class MediumModel
{
    linear,
    lorentzian_derivative
};

enum class MediumLocation
{
    sideband_path, // inside L_S (the arms for AdLIGO, BS-to-SRM for dual recycling)
    auxiliary_gap  // between M_C and the auxiliary mirror
};

enum class SlopeRule
{
    path_length,    // dn/dw = -L_S / (l w0)
    full_round_trip // zero d(psi)/dw of the whole sideband round trip, reflector included
};

/// Anomalously dispersive medium making the sideband cavity a white light cavity.
/// Its centre is placed on the sideband resonance of the medium-free detector.
struct WlcMedium
{
    MediumLocation location = MediumLocation::sideband_path;
    MediumModel model = MediumModel::linear;
    std::optional<double> fill_length; // m; defaults to the whole host path
    double linewidth = kTwoPi * 1600.0; // rad/s, Lorentzian-derivative only
    SlopeRule slope_rule = SlopeRule::path_length;
};

struct HomodyneChoice
{
    enum class Rule
    {
        reflection_phase,               // phi = -arg R_1S at the carrier
        optimal_at,           // maximise |dI| at `frequency_hz`
        optimal_at_resonance, // maximise |dI| at the sideband resonance
        fixed                 // phi = `phase`
    };
    Rule rule = Rule::reflection_phase;
    double frequency_hz = 0.0;
    double phase = 0.0;
};

struct DetectorConfig
{
    Topology topology = Topology::dual_recycling_with_arms;
    CarrierSpec carrier;
    double strain = 1e-12;
    double homodyne_amplitude = 1.0 / 25.65;
    HomodyneChoice homodyne;

    Mirror end;  // M_2
    Mirror itm;  // M_AB
    Mirror srm;  // M_C (SRM)
    Mirror prm;  // M_D (PRM)
    Mirror aux;  // auxiliary SRM

    PathLength arm;          // L
    PathLength sideband_arm; // L_S, dual recycling only
    PathLength prc;
    PathLength src;          // SRC, or the matched inner cavity for auxiliary_srm
    PathLength gap;          // M_C to auxiliary mirror

    double src_loss = 1.0;
    double detuning_deg = 0.0;
    std::optional<WlcMedium> medium;

    void validate() const;
};

/// AdLIGO parameters of the reference design (arm cavities + dual recycling).
DetectorConfig adligo_preset();

/// Shifts the length that sets the sideband operating point by (degrees/360)(lambda/2):
/// the SRC (AdLIGO), L_S (dual recycling) or the auxiliary gap.
DetectorConfig detune(const DetectorConfig& config, double degrees);

/// Dual recycling without arm cavities; AdLIGO arms, L_S about 5 m longer than L.
DetectorConfig dual_recycling_preset(double r_srm, double r_prm, bool with_wlc, double detuning_deg = 0.0);

/// Auxiliary SRM design: matched 0.5 m SRC, gap near 0.57 m chosen to resonate the
/// carrier in the sideband cavity, then detuned by `detuning_deg`.
DetectorConfig auxiliary_srm_preset(double r_aux, bool with_wlc, double detuning_deg = 0.0);

/// Plain Michelson with AdLIGO arm cavities, read out at the homodyne phase optimal at 1 Hz.
DetectorConfig arm_cavity_preset();

/// Resets L to the carrier-resonant length for the current carrier mirror.
DetectorConfig resonate_arm(const DetectorConfig& config);

/// Builds the two-mirror effective detector.
EffectiveDetector reduce(const DetectorConfig& config);

/// Quantities decided while reducing, reported alongside results.
struct ReductionReport
{
    std::optional<double> sideband_resonance_hz; // signed: > 0 upper sideband resonates
    std::optional<double> medium_slope; // s/rad
    std::optional<double> medium_center_offset_hz;
    double homodyne_phase = 0.0;
    double arm_length = 0.0;
    double sideband_length = 0.0;
    std::optional<double> gap_length;
};

ReductionReport report(const DetectorConfig& config);

/// FWHM (rad/s) of |T|^2 of a reflector around its transmission peak near `center`.
double transmission_linewidth(const Reflector& reflector, const OpticalFrequency& center);

} // namespace gwifo

#endif // GWIFO_DETECTOR_HPP
