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

#ifndef GWIFO_CAVITY_HPP
#define GWIFO_CAVITY_HPP

#include "gwifo/dispersion.hpp"
#include "gwifo/optics.hpp"
#include "gwifo/twoport.hpp"

#include <complex>
#include <string>
#include <variant>

namespace gwifo
{

using Coefficient = std::complex<double>;

/// A mirror with real amplitude reflectivity r and transmissivity t.
///
/// Reflection from the coated face is +r and from the substrate face -r. When the
/// mirror bounds a cavity, `substrate_inward` says which face the cavity sees.
struct Mirror
{
    double r = 0.0;
    double t = 1.0;
    bool substrate_inward = false;
    std::string label;

    /// Lossless mirror with r = sqrt(1 - T), t = sqrt(T).
    static Mirror from_power_transmission(double power_transmission, bool substrate_inward = false,
                                          std::string label = {});

    void validate() const;
    /// Reflection seen from inside the cavity the mirror bounds.
    double inner_reflection() const { return substrate_inward ? -r : r; }
    double outer_reflection() const { return -inner_reflection(); }
};

/// Two-mirror Fabry-Perot cavity; `front` faces the outside observer.
///
/// `per_pass_loss` a is the round-trip amplitude factor: each one-way traversal
/// multiplies the field by sqrt(a), so a reflection off the back mirror picks up
/// a * r_back.
struct CavitySpec
{
    Mirror front;
    Mirror back;
    FilledPath path;
    double per_pass_loss = 1.0;

    void validate() const;
};

/// Dimensionless Airy coefficient 4 rho / (1 - rho)^2.
double finesse_coefficient(double round_trip_amplitude);

/// Reflection of the cavity seen from outside the front mirror.
Coefficient compound_reflectivity(const CavitySpec& cavity, const OpticalFrequency& frequency);
/// Transmission through the cavity (front outside to back outside).
Coefficient compound_transmissivity(const CavitySpec& cavity, const OpticalFrequency& frequency);

/// Full scattering matrix of the cavity, built by star products of its parts.
ScatteringMatrix<double> cavity_scattering(const CavitySpec& cavity, const OpticalFrequency& frequency);

/// An inner cavity followed by a gap and an outer mirror (the auxiliary signal
/// recycling mirror). The outer mirror's coated face looks back at the gap.
struct CascadeSpec
{
    CavitySpec inner;
    FilledPath gap;
    Mirror outer;
};

ScatteringMatrix<double> cascade_scattering(const CascadeSpec& cascade, const OpticalFrequency& frequency);

/// Overall reflection of the cascade seen from the inner cavity's front.
Coefficient cascaded_reflectivity(const CavitySpec& inner, const FilledPath& gap, const Mirror& outer,
                                  const OpticalFrequency& frequency);
Coefficient cascaded_transmissivity(const CavitySpec& inner, const FilledPath& gap, const Mirror& outer,
                                    const OpticalFrequency& frequency);

/// Anything that acts as a (possibly compound) input mirror of an arm:
/// a bare mirror seen from its coated face, a cavity, or a cascade.
using Reflector = std::variant<Mirror, CavitySpec, CascadeSpec>;

struct ReflectorResponse
{
    Coefficient reflection;
    Coefficient transmission;
};

ReflectorResponse evaluate(const Reflector& reflector, const OpticalFrequency& frequency);

} // namespace gwifo

#endif // GWIFO_CAVITY_HPP
