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

#include "gwifo/cavity.hpp"

#include <cmath>
#include <stdexcept>

namespace gwifo
{

Mirror Mirror::from_power_transmission(double power_transmission, bool substrate_inward, std::string label)
{
    if (!(power_transmission >= 0.0 && power_transmission <= 1.0))
        throw std::invalid_argument("mirror power transmission must lie in [0, 1]");
    return Mirror{std::sqrt(1.0 - power_transmission), std::sqrt(power_transmission), substrate_inward,
                  std::move(label)};
}

void Mirror::validate() const
{
    if (!(r >= 0.0 && r <= 1.0) || !(t >= 0.0 && t <= 1.0))
        throw std::invalid_argument("mirror '" + label + "': r and t must lie in [0, 1]");
    if (r * r + t * t > 1.0 + 1e-12)
        throw std::invalid_argument("mirror '" + label + "': r^2 + t^2 exceeds 1");
}

void CavitySpec::validate() const
{
    front.validate();
    back.validate();
    path.validate();
    if (!(per_pass_loss > 0.0 && per_pass_loss <= 1.0))
        throw std::invalid_argument("per-pass loss factor must lie in (0, 1]");
}

double finesse_coefficient(double round_trip_amplitude)
{
    if (!(round_trip_amplitude >= 0.0))
        throw std::invalid_argument("round-trip amplitude must be non-negative");
    if (!(round_trip_amplitude < 1.0))
        throw DivergentRoundTrip(round_trip_amplitude);
    const double d = 1.0 - round_trip_amplitude;
    return 4.0 * round_trip_amplitude / (d * d);
}

namespace
{
struct Airy
{
    Coefficient one_way;   // sqrt(a) e^{-i theta}
    Coefficient loop;      // r_front_in * a * r_back_in * e^{-2 i theta}
    Coefficient inv_denom; // 1 / (1 - loop)
};

Airy airy(const CavitySpec& cavity, const OpticalFrequency& frequency)
{
    const double theta = propagation_phase(cavity.path, frequency);
    const Coefficient one_way = std::sqrt(cavity.per_pass_loss) * std::polar(1.0, -theta);
    const Coefficient loop = cavity.front.inner_reflection() * cavity.back.inner_reflection() * one_way * one_way;
    if (!(std::abs(loop) < kConvergenceBound))
        throw DivergentRoundTrip(std::abs(loop));
    return {one_way, loop, 1.0 / (1.0 - loop)};
}
} // namespace

Coefficient compound_reflectivity(const CavitySpec& cavity, const OpticalFrequency& frequency)
{
    const Airy a = airy(cavity, frequency);
    const double tf = cavity.front.t;
    return cavity.front.outer_reflection() +
           tf * tf * cavity.back.inner_reflection() * a.one_way * a.one_way * a.inv_denom;
}

Coefficient compound_transmissivity(const CavitySpec& cavity, const OpticalFrequency& frequency)
{
    const Airy a = airy(cavity, frequency);
    return cavity.front.t * cavity.back.t * a.one_way * a.inv_denom;
}

ScatteringMatrix<double> cavity_scattering(const CavitySpec& cavity, const OpticalFrequency& frequency)
{
    const auto front =
        interface(cavity.front.outer_reflection(), cavity.front.inner_reflection(), cavity.front.t);
    const auto back = interface(cavity.back.inner_reflection(), cavity.back.outer_reflection(), cavity.back.t);
    const auto gap = propagation(propagation_phase(cavity.path, frequency), std::sqrt(cavity.per_pass_loss));
    return star(star(front, gap), back);
}

ScatteringMatrix<double> cascade_scattering(const CascadeSpec& cascade, const OpticalFrequency& frequency)
{
    const auto outer = interface(cascade.outer.inner_reflection(), cascade.outer.outer_reflection(), cascade.outer.t);
    const auto gap = propagation(propagation_phase(cascade.gap, frequency));
    return star(star(cavity_scattering(cascade.inner, frequency), gap), outer);
}

Coefficient cascaded_reflectivity(const CavitySpec& inner, const FilledPath& gap, const Mirror& outer,
                                  const OpticalFrequency& frequency)
{
    return cascade_scattering(CascadeSpec{inner, gap, outer}, frequency)(0, 0);
}

Coefficient cascaded_transmissivity(const CavitySpec& inner, const FilledPath& gap, const Mirror& outer,
                                    const OpticalFrequency& frequency)
{
    return cascade_scattering(CascadeSpec{inner, gap, outer}, frequency)(1, 0);
}

ReflectorResponse evaluate(const Reflector& reflector, const OpticalFrequency& frequency)
{
    if (const auto* m = std::get_if<Mirror>(&reflector))
        return {Coefficient(m->r), Coefficient(m->t)};
    if (const auto* c = std::get_if<CavitySpec>(&reflector))
        return {compound_reflectivity(*c, frequency), compound_transmissivity(*c, frequency)};
    const auto s = cascade_scattering(std::get<CascadeSpec>(reflector), frequency);
    return {s(0, 0), s(1, 0)};
}

} // namespace gwifo
