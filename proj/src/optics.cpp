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

#include "gwifo/optics.hpp"

#include <cmath>
#include <sstream>

namespace gwifo
{

namespace
{
std::string divergence_message(double amplitude)
{
    std::ostringstream os;
    os.precision(17);
    os << "overcoupled round trip: |round-trip amplitude| = " << amplitude << " (must be < 1)";
    return os.str();
}
} // namespace

DivergentRoundTrip::DivergentRoundTrip(double round_trip_amplitude)
    : ModelError(divergence_message(round_trip_amplitude)), amplitude_(round_trip_amplitude)
{
}

double wrap_phase(double phase)
{
    double wrapped = std::remainder(phase, kTwoPi); // [-pi, pi]
    if (wrapped <= -kPi)
        wrapped += kTwoPi;
    return wrapped;
}

CarrierSpec CarrierSpec::from_wavelength(double wavelength_m)
{
    if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
        throw std::invalid_argument("carrier wavelength must be positive");
    return CarrierSpec{wavelength_m};
}

GwSpec GwSpec::from_hz(double strain, double frequency_hz)
{
    if (!(strain >= 0.0))
        throw std::invalid_argument("GW strain must be non-negative");
    if (!(frequency_hz >= 0.0))
        throw std::invalid_argument("GW frequency must be non-negative");
    return GwSpec{strain, angular(frequency_hz)};
}

static double positive_mod_2pi(double phase)
{
    double r = std::fmod(phase, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    return r;
}

PathLength PathLength::from_carrier_phase(const CarrierSpec& carrier, std::int64_t cycles, double extra_phase)
{
    const double k = carrier.wavenumber();
    PathLength p;
    p.meters = (kTwoPi * static_cast<double>(cycles) + extra_phase) / k;
    p.tuning = positive_mod_2pi(extra_phase);
    p.reference = carrier.angular_frequency();
    if (!(p.meters > 0.0))
        throw std::invalid_argument("path length must be positive");
    return p;
}

PathLength PathLength::from_meters(const CarrierSpec& carrier, double meters)
{
    if (!(meters >= 0.0))
        throw std::invalid_argument("path length must be non-negative");
    PathLength p;
    p.meters = meters;
    p.tuning = positive_mod_2pi(carrier.wavenumber() * meters);
    p.reference = carrier.angular_frequency();
    return p;
}

PathLength PathLength::lengthened(double delta_meters) const
{
    PathLength p = *this;
    p.meters += delta_meters;
    p.tuning = positive_mod_2pi(tuning + reference / kSpeedOfLight * delta_meters);
    return p;
}

double PathLength::vacuum_phase(const OpticalFrequency& frequency) const
{
    const double offset = (frequency.carrier - reference) + frequency.offset;
    return tuning + offset * meters / kSpeedOfLight;
}

double sinc_factor(double gw_angular_frequency, double tau)
{
    const double x = gw_angular_frequency * tau;
    if (std::abs(x) < 1e-6)
    {
        // sin(x/2)/w_g = tau/2 (1 - x^2/24 + ...)
        return 0.5 * tau * (1.0 - x * x / 24.0);
    }
    return std::sin(0.5 * x) / gw_angular_frequency;
}

double modulation_index(const GwSpec& gw, const CarrierSpec& carrier, const RoundTripSpec& round_trip)
{
    return gw.strain * carrier.angular_frequency() * sinc_factor(gw.angular_frequency, round_trip.tau());
}

SidebandWavenumbers sideband_wavenumbers(const CarrierSpec& carrier, const GwSpec& gw)
{
    const double kc = carrier.wavenumber();
    const double dk = gw.angular_frequency / kSpeedOfLight;
    return {kc, kc + dk, kc - dk};
}

double gw_arm_phase(ArmAxis axis, const GwSpec& gw, const CarrierSpec& carrier, const RoundTripSpec& round_trip,
                    double t)
{
    const double w = carrier.angular_frequency();
    const double tau = round_trip.tau();
    const double modulation =
        gw.strain * w * sinc_factor(gw.angular_frequency, tau) * std::cos(gw.angular_frequency * (t - 0.5 * tau));
    return axis == ArmAxis::x ? w * tau - modulation : w * tau + modulation;
}

} // namespace gwifo
