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

#ifndef GWIFO_TWOPORT_HPP
#define GWIFO_TWOPORT_HPP

#include "gwifo/optics.hpp"

#include <Eigen/Core>

#include <complex>

namespace gwifo
{

/// Scattering matrix of a lossy-or-lossless optical two-port.
///
/// Port 1 is the front (left), port 2 the back (right); outgoing = S * incoming, so
/// S(0,0) is the reflection seen from the front, S(1,0) the front-to-back transmission.
template <typename Scalar> using ScatteringMatrix = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// Round-trip amplitudes at or above this bound are rejected as divergent.
inline constexpr double kConvergenceBound = 1.0 - 1e-12;

/// Redheffer star product: `front` followed by `back`, with front's port 2 joined
/// to back's port 1. The internal bounce series must converge.
template <typename Scalar>
ScatteringMatrix<Scalar> star(const ScatteringMatrix<Scalar>& front, const ScatteringMatrix<Scalar>& back)
{
    using Complex = std::complex<Scalar>;
    const Complex loop = front(1, 1) * back(0, 0);
    if (!(std::abs(loop) < Scalar(kConvergenceBound)))
        throw DivergentRoundTrip(static_cast<double>(std::abs(loop)));
    const Complex inv = Scalar(1) / (Scalar(1) - loop);

    ScatteringMatrix<Scalar> s;
    s(0, 0) = front(0, 0) + front(0, 1) * back(0, 0) * front(1, 0) * inv;
    s(0, 1) = front(0, 1) * back(0, 1) * inv;
    s(1, 0) = back(1, 0) * front(1, 0) * inv;
    s(1, 1) = back(1, 1) + back(1, 0) * front(1, 1) * back(0, 1) * inv;
    return s;
}

/// Free propagation with one-way phase theta and amplitude factor `amplitude`.
template <typename Scalar> ScatteringMatrix<Scalar> propagation(Scalar theta, Scalar amplitude = Scalar(1))
{
    const std::complex<Scalar> p = amplitude * std::polar(Scalar(1), -theta);
    ScatteringMatrix<Scalar> s;
    s << Scalar(0), p, p, Scalar(0);
    return s;
}

/// Partially reflecting surface with reflections `front_reflection` (seen from port 1)
/// and `back_reflection` (seen from port 2), transmission t both ways.
template <typename Scalar> ScatteringMatrix<Scalar> interface(Scalar front_reflection, Scalar back_reflection, Scalar t)
{
    ScatteringMatrix<Scalar> s;
    s << front_reflection, t, t, back_reflection;
    return s;
}

} // namespace gwifo

#endif // GWIFO_TWOPORT_HPP
