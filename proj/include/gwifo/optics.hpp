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

#ifndef GWIFO_OPTICS_HPP
#define GWIFO_OPTICS_HPP

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace gwifo
{

inline constexpr double kSpeedOfLight = 3.0e8; // m/s, fixed (not CODATA)
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Base class for every error raised by the model.
class ModelError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A geometric series (cavity round trip) whose ratio is not strictly inside the unit disc.
class DivergentRoundTrip : public ModelError
{
  public:
    explicit DivergentRoundTrip(double round_trip_amplitude);
    double round_trip_amplitude() const { return amplitude_; }

  private:
    double amplitude_;
};

/// Reduces a phase to (-pi, pi].
double wrap_phase(double phase);

/// Hz -> rad/s.
constexpr double angular(double frequency_hz) { return kTwoPi * frequency_hz; }

/// Laser carrier, parameterised by its vacuum wavelength.
struct CarrierSpec
{
    double wavelength = 1064e-9; // m

    static CarrierSpec from_wavelength(double wavelength_m);

    double angular_frequency() const { return kTwoPi * kSpeedOfLight / wavelength; }
    double wavenumber() const { return kTwoPi / wavelength; }
};

/// Gravitational wave: strain amplitude and angular frequency (rad/s).
struct GwSpec
{
    double strain = 0.0;
    double angular_frequency = 0.0;

    static GwSpec from_hz(double strain, double frequency_hz);
};

/// Arm round trip; tau = 2L/c.
struct RoundTripSpec
{
    double arm_length = 0.0; // m

    double tau() const { return 2.0 * arm_length / kSpeedOfLight; }
};

/// An optical angular frequency held as carrier + offset.
///
/// GW sidebands sit a few rad/s to a few 1e5 rad/s away from a ~1.8e15 rad/s
/// carrier. Forming that sum in double precision throws the offset away, so every
/// phase in the library is assembled from the two parts separately.
struct OpticalFrequency
{
    double carrier = 0.0; // rad/s
    double offset = 0.0;  // rad/s

    double absolute() const { return carrier + offset; }

    /// Difference (this - other), exact when both share the carrier.
    double minus(const OpticalFrequency& other) const
    {
        return (carrier - other.carrier) + (offset - other.offset);
    }
};

inline OpticalFrequency at_carrier(const CarrierSpec& carrier, double offset = 0.0)
{
    return {carrier.angular_frequency(), offset};
}

/// A macroscopic length together with its exact microscopic tuning.
///
/// `tuning` is k_ref * meters reduced modulo 2 pi, where k_ref is the wavenumber of
/// the reference carrier. Arm lengths are ~1e10 wavelengths, so the tuning cannot
/// be recovered from `meters` alone; constructors that know the intended phase
/// (mode integers, detuning) set it exactly.
struct PathLength
{
    double meters = 0.0;
    double tuning = 0.0;    // rad, in [0, 2 pi)
    double reference = 0.0; // rad/s, carrier the tuning refers to

    /// Length whose carrier phase is k L = 2 pi * cycles + extra_phase.
    static PathLength from_carrier_phase(const CarrierSpec& carrier, std::int64_t cycles, double extra_phase);
    /// Arbitrary length; the tuning is computed from the metres (inexact for long paths).
    static PathLength from_meters(const CarrierSpec& carrier, double meters);

    /// Lengthens the path by `delta_meters`, tracking the tuning exactly.
    PathLength lengthened(double delta_meters) const;

    /// One-way vacuum phase k L at `frequency`, reduced so the carrier part is mod 2 pi.
    double vacuum_phase(const OpticalFrequency& frequency) const;
};

/// Phase modulation depth beta = h w / w_g sin(w_g tau / 2), with the w_g -> 0 limit h w tau / 2.
double modulation_index(const GwSpec& gw, const CarrierSpec& carrier, const RoundTripSpec& round_trip);

/// sin(w_g tau/2) / w_g, with a Taylor branch for |w_g tau| < 1e-6.
double sinc_factor(double gw_angular_frequency, double tau);

struct SidebandWavenumbers
{
    double carrier;
    double upper;
    double lower;
};

/// k_c = w/c and k_+- = (w +- w_g)/c.
SidebandWavenumbers sideband_wavenumbers(const CarrierSpec& carrier, const GwSpec& gw);

enum class ArmAxis
{
    x,
    y
};

/// Phase accumulated over one arm round trip ending at time t; the GW term has
/// opposite sign on the two axes.
double gw_arm_phase(ArmAxis axis, const GwSpec& gw, const CarrierSpec& carrier, const RoundTripSpec& round_trip,
                    double t);

} // namespace gwifo

#endif // GWIFO_OPTICS_HPP
