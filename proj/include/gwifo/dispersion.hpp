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

#ifndef GWIFO_DISPERSION_HPP
#define GWIFO_DISPERSION_HPP

#include "gwifo/optics.hpp"

#include <span>
#include <variant>

namespace gwifo
{

struct VacuumIndex
{
};

/// n(w) = 1 + slope (w - w0).
struct LinearIndex
{
    OpticalFrequency center;
    double slope = 0.0; // s/rad
};

/// Index with the lineshape of the derivative of a Lorentzian:
///
///   n(w) = 1 + s * x / (1 + x^2)^2,   x = (w - w0) / gamma,
///
/// where `linewidth` is the spacing between the two index extrema (the extent of
/// the anomalous region), so gamma = linewidth * sqrt(3) / 2. The centre slope is
/// s / gamma.
struct LorentzianDerivativeIndex
{
    OpticalFrequency center;
    double linewidth = 0.0; // rad/s
    double scale = 0.0;     // dimensionless

    /// Solves for the scale that gives `center_slope` (s/rad) at the line centre.
    static LorentzianDerivativeIndex with_center_slope(OpticalFrequency center, double linewidth, double center_slope);

    double half_width() const;
    double center_slope() const { return scale / half_width(); }
};

using IndexModel = std::variant<VacuumIndex, LinearIndex, LorentzianDerivativeIndex>;

/// A path of total length L, of which l (0 <= l <= L) is filled with a medium.
struct FilledPath
{
    PathLength length;
    double medium_length = 0.0;
    IndexModel medium = VacuumIndex{};

    static FilledPath vacuum(const PathLength& length) { return FilledPath{length, 0.0, VacuumIndex{}}; }
    void validate() const;
};

/// n(w) - 1, evaluated without cancellation.
double index_excess(const IndexModel& model, const OpticalFrequency& frequency);

inline double index_at(const IndexModel& model, const OpticalFrequency& frequency)
{
    return 1.0 + index_excess(model, frequency);
}

/// Exact dn/dw of the model.
double index_slope(const IndexModel& model, const OpticalFrequency& frequency);

/// Index slope that makes the round-trip phase of a path of length `compensated_length`
/// stationary at w0 when a medium of length `medium_length` is present: -L / (l w0).
double wlc_slope(double compensated_length, double medium_length, double center_angular_frequency);

/// One-way phase theta = k (L - l) + n(w) k l. The carrier part of k L is reduced mod 2 pi.
double propagation_phase(const FilledPath& path, const OpticalFrequency& frequency);

/// d(theta_rt)/dw at w0 for a round trip through every path in `paths` (each
/// traversed there and back), by a five-point central stencil with a 1 Hz step.
double round_trip_phase_derivative(std::span<const FilledPath> paths, const OpticalFrequency& center);

} // namespace gwifo

#endif // GWIFO_DISPERSION_HPP
