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

#ifndef GWIFO_RESPONSE_HPP
#define GWIFO_RESPONSE_HPP

#include "gwifo/cavity.hpp"
#include "gwifo/dispersion.hpp"
#include "gwifo/optics.hpp"

#include <cstdint>

namespace gwifo
{

/// Two-mirror reduction of a Michelson detector with identical arms.
///
/// The arms become a single cavity between the end mirror (r_2) and an input
/// mirror that looks different to carrier (M_1CAR) and sidebands (M_1SB). Both
/// reflectors are evaluated at whatever optical frequency is needed, so any
/// compound or cascaded structure behind them is honoured.
struct EffectiveDetector
{
    CarrierSpec carrier;
    Reflector carrier_mirror;   // R_1C, T_1C (seen from the arm)
    Reflector sideband_mirror;  // R_1S, T_1S (seen from the arm)
    double end_reflectivity = 0.0;
    PathLength arm;             // L
    FilledPath sideband_path;   // L_S and any dispersive medium in it
    double strain = 0.0;
    double homodyne_amplitude = 1.0;
    double homodyne_phase = 0.0;

    void validate() const;
    RoundTripSpec round_trip() const { return {arm.meters}; }
};

/// Output signal P cos(w_g (t - L/c)) + Q sin(w_g (t - L/c)).
struct QuadratureSignal
{
    double P = 0.0;
    double Q = 0.0;
    double magnitude = 0.0;
};

enum class Sideband
{
    upper,
    lower
};

/// Length-independent scale of one sideband's contribution:
/// t_1C t_1S r_2 h w sin(w_g tau/2) / [w_g (1 - r_2 r_1C)^2 (1 - r_2 r_1S)^2].
double scaling_factor_xi(const EffectiveDetector& detector, double gw_angular_frequency, Sideband sideband);

struct CarrierBuildup
{
    double magnitude; // B
    double phase;     // phi_B
};

/// Magnitude and phase of the carrier stored in the arms.
CarrierBuildup carrier_buildup(const EffectiveDetector& detector);

/// phi_C = phi_t1C - phi_r1C - 2 k_c L - phi + phi_B - pi/2, reduced to (-pi, pi].
double carrier_total_phase(const EffectiveDetector& detector, double buildup_phase);

/// Closed-form detector output at GW angular frequency w_g.
QuadratureSignal signal_magnitude(const EffectiveDetector& detector, double gw_angular_frequency);

/// Raised when the series oracle is asked for too few bounces.
class InsufficientBounces : public ModelError
{
  public:
    InsufficientBounces(std::int64_t requested, std::int64_t required);
    std::int64_t required() const { return required_; }

  private:
    std::int64_t required_;
};

/// Smallest bounce count accepted by series_oracle: ceil(30 / (1 - max round-trip amplitude)).
std::int64_t required_bounces(const EffectiveDetector& detector, double gw_angular_frequency);

/// Brute-force reference: truncated bounce sums for carrier and sidebands, beat
/// against the local oscillator in the time domain, and projected onto the two
/// GW quadratures over one period.
QuadratureSignal series_oracle(const EffectiveDetector& detector, double gw_angular_frequency,
                               std::int64_t bounces);

/// Complex amplitudes of E_+ and E_- leaving the detector (E_0 = 1, no local oscillator).
struct SidebandFields
{
    Coefficient upper;
    Coefficient lower;
};

SidebandFields sideband_fields(const EffectiveDetector& detector, double gw_angular_frequency);

/// Homodyne phase that maximises |dI| at w_g.
double optimal_homodyne_phase(const EffectiveDetector& detector, double gw_angular_frequency);

/// The homodyne rule of the AdLIGO preset: phi = -arg R_1S at the carrier.
double reflection_homodyne_phase(const EffectiveDetector& detector);

/// Round-trip phase psi = arg R_1S - 2 theta_S seen by light at carrier + offset in the
/// sideband cavity; psi = 0 mod 2 pi is resonance.
double sideband_round_trip_phase(const EffectiveDetector& detector, double offset);

/// Offset (rad/s) from the carrier of the sideband-cavity resonance nearest the carrier.
double sideband_resonance_offset(const EffectiveDetector& detector);

/// Michelson with plain arm cavities: one input mirror for carrier and sidebands.
struct ArmCavityDetector
{
    CarrierSpec carrier;
    Mirror input;
    double end_reflectivity = 0.0;
    PathLength arm;
    double strain = 0.0;
    double homodyne_amplitude = 1.0;
    double homodyne_phase = 0.0;
};

/// Output of the plain arm-cavity Michelson, from its own field algebra.
QuadratureSignal arm_cavity_signal(const ArmCavityDetector& detector, double gw_angular_frequency);

} // namespace gwifo

#endif // GWIFO_RESPONSE_HPP
