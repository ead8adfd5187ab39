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

#include "gwifo/dispersion.hpp"

#include <cmath>
#include <stdexcept>

namespace gwifo
{

namespace
{
template <class... Ts> struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kSqrt3 = 1.7320508075688772;
} // namespace

LorentzianDerivativeIndex LorentzianDerivativeIndex::with_center_slope(OpticalFrequency center, double linewidth,
                                                                       double center_slope)
{
    if (!(linewidth > 0.0))
        throw std::invalid_argument("Lorentzian linewidth must be positive");
    LorentzianDerivativeIndex model{center, linewidth, 0.0};
    model.scale = center_slope * model.half_width();
    return model;
}

double LorentzianDerivativeIndex::half_width() const { return 0.5 * kSqrt3 * linewidth; }

void FilledPath::validate() const
{
    if (!(length.meters > 0.0))
        throw std::invalid_argument("filled path length must be positive");
    if (!(medium_length >= 0.0) || medium_length > length.meters)
        throw std::invalid_argument("medium length must lie in [0, path length]");
}

double index_excess(const IndexModel& model, const OpticalFrequency& frequency)
{
    return std::visit(overloaded{
                          [](const VacuumIndex&) { return 0.0; },
                          [&](const LinearIndex& m) { return m.slope * frequency.minus(m.center); },
                          [&](const LorentzianDerivativeIndex& m) {
                              const double x = frequency.minus(m.center) / m.half_width();
                              const double d = 1.0 + x * x;
                              return m.scale * x / (d * d);
                          },
                      },
                      model);
}

double index_slope(const IndexModel& model, const OpticalFrequency& frequency)
{
    return std::visit(overloaded{
                          [](const VacuumIndex&) { return 0.0; },
                          [](const LinearIndex& m) { return m.slope; },
                          [&](const LorentzianDerivativeIndex& m) {
                              const double g = m.half_width();
                              const double x = frequency.minus(m.center) / g;
                              const double d = 1.0 + x * x;
                              return m.scale / g * (1.0 - 3.0 * x * x) / (d * d * d);
                          },
                      },
                      model);
}

double wlc_slope(double compensated_length, double medium_length, double center_angular_frequency)
{
    if (!(medium_length > 0.0))
        throw std::invalid_argument("no medium to host dispersion (medium length must be > 0)");
    return -compensated_length / (medium_length * center_angular_frequency);
}

double propagation_phase(const FilledPath& path, const OpticalFrequency& frequency)
{
    // k (L - l) + n k l = k L + (n - 1) k l
    const double vacuum = path.length.vacuum_phase(frequency);
    if (path.medium_length == 0.0)
        return vacuum;
    const double k = frequency.absolute() / kSpeedOfLight;
    return vacuum + index_excess(path.medium, frequency) * k * path.medium_length;
}

double round_trip_phase_derivative(std::span<const FilledPath> paths, const OpticalFrequency& center)
{
    if (paths.empty())
        throw std::invalid_argument("round trip needs at least one path");
    const double h = kTwoPi; // 2 pi * 1 Hz
    auto phase = [&](double shift) {
        OpticalFrequency f{center.carrier, center.offset + shift};
        double total = 0.0;
        for (const auto& p : paths)
            total += 2.0 * propagation_phase(p, f);
        return total;
    };
    return (phase(-2 * h) - 8 * phase(-h) + 8 * phase(h) - phase(2 * h)) / (12 * h);
}

} // namespace gwifo
