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

#include "gwifo/response.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gwifo
{

namespace
{
constexpr Coefficient kI{0.0, 1.0};

struct Port
{
    double r, phi_r, t, phi_t;
};

Port port(const Reflector& reflector, const OpticalFrequency& f)
{
    const auto resp = evaluate(reflector, f);
    return {std::abs(resp.reflection), std::arg(resp.reflection), std::abs(resp.transmission),
            std::arg(resp.transmission)};
}

double sideband_offset(double w_g, Sideband s) { return s == Sideband::upper ? w_g : -w_g; }

// 2 k_c L with the carrier part reduced.
double carrier_arm_phase(const EffectiveDetector& d) { return 2.0 * d.arm.vacuum_phase(at_carrier(d.carrier)); }

std::string bounce_message(std::int64_t requested, std::int64_t required)
{
    std::ostringstream os;
    os << "series oracle needs at least " << required << " bounces, got " << requested;
    return os.str();
}
} // namespace

void EffectiveDetector::validate() const
{
    if (!(arm.meters > 0.0))
        throw std::invalid_argument("arm length must be positive");
    sideband_path.validate();
    if (!(end_reflectivity >= 0.0 && end_reflectivity <= 1.0))
        throw std::invalid_argument("end mirror reflectivity must lie in [0, 1]");
    if (!(strain >= 0.0))
        throw std::invalid_argument("strain must be non-negative");
}

double scaling_factor_xi(const EffectiveDetector& d, double w_g, Sideband s)
{
    const auto c = port(d.carrier_mirror, at_carrier(d.carrier));
    const auto sb = port(d.sideband_mirror, at_carrier(d.carrier, sideband_offset(w_g, s)));
    const double r2 = d.end_reflectivity;
    // finesse_coefficient doubles as the convergence guard for both denominators
    finesse_coefficient(r2 * c.r);
    finesse_coefficient(r2 * sb.r);
    const double dc = 1.0 - r2 * c.r;
    const double ds = 1.0 - r2 * sb.r;
    return c.t * sb.t * r2 * d.strain * d.carrier.angular_frequency() * sinc_factor(w_g, d.round_trip().tau()) /
           (dc * dc * ds * ds);
}

CarrierBuildup carrier_buildup(const EffectiveDetector& d)
{
    const auto c = port(d.carrier_mirror, at_carrier(d.carrier));
    const double rho = d.end_reflectivity * c.r;
    const double F = finesse_coefficient(rho);
    const double psi = c.phi_r - carrier_arm_phase(d);
    const double s = std::sin(0.5 * psi);
    const Coefficient b = (std::polar(1.0, psi) - rho) / (1.0 + F * s * s);
    return {std::abs(b), std::arg(b)};
}

double carrier_total_phase(const EffectiveDetector& d, double buildup_phase)
{
    const auto c = port(d.carrier_mirror, at_carrier(d.carrier));
    return wrap_phase(c.phi_t - c.phi_r - carrier_arm_phase(d) - d.homodyne_phase + buildup_phase - 0.5 * kPi);
}

QuadratureSignal signal_magnitude(const EffectiveDetector& d, double w_g)
{
    const auto buildup = carrier_buildup(d);
    const double phi_c = carrier_total_phase(d, buildup.phase);
    const double r2 = d.end_reflectivity;

    double P = 0.0;
    double Q = 0.0;
    for (const Sideband s : {Sideband::upper, Sideband::lower})
    {
        const OpticalFrequency f = at_carrier(d.carrier, sideband_offset(w_g, s));
        const auto sb = port(d.sideband_mirror, f);
        const double theta = propagation_phase(d.sideband_path, f); // k_+- L_S
        const double rho = r2 * sb.r;
        const double F = finesse_coefficient(rho);
        const double sn = std::sin(theta - 0.5 * sb.phi_r);
        const double weight = scaling_factor_xi(d, w_g, s) / (1.0 + F * sn * sn);
        const double x = 2.0 * theta - sb.phi_r + sb.phi_t + phi_c;
        const double y = sb.phi_t + phi_c;
        const double q_sign = s == Sideband::upper ? 1.0 : -1.0;
        P += weight * (rho * std::cos(x) - std::cos(y));
        Q += q_sign * weight * (std::sin(y) - rho * std::sin(x));
    }
    const double scale = 2.0 * d.homodyne_amplitude * buildup.magnitude;
    P *= scale;
    Q *= scale;
    return {P, Q, std::hypot(P, Q)};
}

InsufficientBounces::InsufficientBounces(std::int64_t requested, std::int64_t required)
    : ModelError(bounce_message(requested, required)), required_(required)
{
}

std::int64_t required_bounces(const EffectiveDetector& d, double w_g)
{
    const double r2 = d.end_reflectivity;
    double worst = r2 * std::abs(evaluate(d.carrier_mirror, at_carrier(d.carrier)).reflection);
    for (const Sideband s : {Sideband::upper, Sideband::lower})
        worst = std::max(worst,
                         r2 * std::abs(evaluate(d.sideband_mirror, at_carrier(d.carrier, sideband_offset(w_g, s)))
                                           .reflection));
    if (!(worst < kConvergenceBound))
        throw DivergentRoundTrip(worst);
    return static_cast<std::int64_t>(std::ceil(30.0 / (1.0 - worst)));
}

namespace
{
// sum_{n=1}^{count} ratio^{n-1}, term by term
Coefficient bounce_sum(Coefficient ratio, std::int64_t count)
{
    Coefficient sum{0.0, 0.0};
    Coefficient term{1.0, 0.0};
    for (std::int64_t n = 0; n < count; ++n)
    {
        sum += term;
        term *= ratio;
    }
    return sum;
}
} // namespace

QuadratureSignal series_oracle(const EffectiveDetector& d, double w_g, std::int64_t bounces)
{
    const std::int64_t needed = required_bounces(d, w_g);
    if (bounces < needed)
        throw InsufficientBounces(bounces, needed);

    const double r2 = d.end_reflectivity;
    const auto carrier_port = evaluate(d.carrier_mirror, at_carrier(d.carrier));
    const Coefficient arm_trip = std::polar(1.0, -carrier_arm_phase(d)); // e^{-2 i k_c L}

    const Coefficient stored_carrier =
        carrier_port.transmission * r2 * arm_trip * bounce_sum(r2 * carrier_port.reflection * arm_trip, bounces);
    const double beta = modulation_index({d.strain, w_g}, d.carrier, d.round_trip());

    std::array<Coefficient, 2> out;
    for (const Sideband s : {Sideband::upper, Sideband::lower})
    {
        const OpticalFrequency f = at_carrier(d.carrier, sideband_offset(w_g, s));
        const auto sb = evaluate(d.sideband_mirror, f);
        const Coefficient trip = r2 * sb.reflection * std::polar(1.0, -2.0 * propagation_phase(d.sideband_path, f));
        const Coefficient stored = stored_carrier * kI * beta * arm_trip * bounce_sum(trip, bounces);
        out[s == Sideband::upper ? 0 : 1] = stored * sb.transmission;
    }

    // dI(u) with u = w_g (t - L/c); the optical e^{i w t} cancels in every beat term.
    const Coefficient lo_conj = d.homodyne_amplitude * std::polar(1.0, -d.homodyne_phase);
    constexpr int kSamples = 8;
    double P = 0.0;
    double Q = 0.0;
    for (int k = 0; k < kSamples; ++k)
    {
        const double u = kTwoPi * k / kSamples;
        const double dI = 2.0 * std::real(out[0] * std::polar(1.0, u) * lo_conj) +
                          2.0 * std::real(out[1] * std::polar(1.0, -u) * lo_conj);
        P += dI * std::cos(u);
        Q += dI * std::sin(u);
    }
    P *= 2.0 / kSamples;
    Q *= 2.0 / kSamples;
    return {P, Q, std::hypot(P, Q)};
}

SidebandFields sideband_fields(const EffectiveDetector& d, double w_g)
{
    const double r2 = d.end_reflectivity;
    const auto carrier_port = evaluate(d.carrier_mirror, at_carrier(d.carrier));
    const Coefficient arm_trip = std::polar(1.0, -carrier_arm_phase(d));
    const Coefficient carrier_loop = r2 * carrier_port.reflection * arm_trip;
    if (!(std::abs(carrier_loop) < kConvergenceBound))
        throw DivergentRoundTrip(std::abs(carrier_loop));
    const Coefficient stored_carrier = carrier_port.transmission * r2 * arm_trip / (1.0 - carrier_loop);
    const double beta = modulation_index({d.strain, w_g}, d.carrier, d.round_trip());

    SidebandFields fields{};
    for (const Sideband s : {Sideband::upper, Sideband::lower})
    {
        const OpticalFrequency f = at_carrier(d.carrier, sideband_offset(w_g, s));
        const auto sb = evaluate(d.sideband_mirror, f);
        const Coefficient loop = r2 * sb.reflection * std::polar(1.0, -2.0 * propagation_phase(d.sideband_path, f));
        if (!(std::abs(loop) < kConvergenceBound))
            throw DivergentRoundTrip(std::abs(loop));
        const Coefficient e = stored_carrier * kI * beta * arm_trip * sb.transmission / (1.0 - loop);
        (s == Sideband::upper ? fields.upper : fields.lower) = e;
    }
    return fields;
}

double optimal_homodyne_phase(const EffectiveDetector& d, double w_g)
{
    // |e^{-i phi} E_+ + e^{i phi} conj(E_-)| peaks at phi = (arg E_+ + arg E_-) / 2.
    const auto fields = sideband_fields(d, w_g);
    return wrap_phase(0.5 * (std::arg(fields.upper) + std::arg(fields.lower)));
}

double reflection_homodyne_phase(const EffectiveDetector& d)
{
    return wrap_phase(-std::arg(evaluate(d.sideband_mirror, at_carrier(d.carrier)).reflection));
}

double sideband_round_trip_phase(const EffectiveDetector& d, double offset)
{
    const OpticalFrequency f = at_carrier(d.carrier, offset);
    return std::arg(evaluate(d.sideband_mirror, f).reflection) - 2.0 * propagation_phase(d.sideband_path, f);
}

double sideband_resonance_offset(const EffectiveDetector& d)
{
    const double h = kTwoPi;
    double offset = 0.0;
    for (int iter = 0; iter < 50; ++iter)
    {
        const double psi = wrap_phase(sideband_round_trip_phase(d, offset));
        const double slope =
            (sideband_round_trip_phase(d, offset + h) - sideband_round_trip_phase(d, offset - h)) / (2.0 * h);
        if (slope == 0.0 || !std::isfinite(slope))
            throw ModelError("sideband round-trip phase is stationary; resonance is undefined");
        const double step = psi / slope;
        offset -= step;
        if (std::abs(step) < 1e-9 * std::max(1.0, std::abs(offset)))
            return offset;
    }
    throw ModelError("sideband resonance search did not converge");
}

QuadratureSignal arm_cavity_signal(const ArmCavityDetector& d, double w_g)
{
    const double r1 = d.input.r;
    const double t1 = d.input.t;
    const double r2 = d.end_reflectivity;
    const OpticalFrequency fc = at_carrier(d.carrier);
    const Coefficient arm_trip = std::polar(1.0, -2.0 * d.arm.vacuum_phase(fc));
    const Coefficient carrier_loop = r2 * r1 * arm_trip;
    if (!(std::abs(carrier_loop) < kConvergenceBound))
        throw DivergentRoundTrip(std::abs(carrier_loop));
    const double beta = modulation_index({d.strain, w_g}, d.carrier, {d.arm.meters});
    const Coefficient common = kI * beta * t1 * r2 * arm_trip * arm_trip / (1.0 - carrier_loop);

    auto leaving = [&](double offset) {
        const Coefficient loop = r2 * r1 * std::polar(1.0, -2.0 * d.arm.vacuum_phase(at_carrier(d.carrier, offset)));
        return common * t1 / (1.0 - loop);
    };
    const Coefficient lo_conj = d.homodyne_amplitude * std::polar(1.0, -d.homodyne_phase);
    // dI = 2 Re[(c_+ + conj(c_-)) e^{iu}]
    const Coefficient z = leaving(w_g) * lo_conj + std::conj(leaving(-w_g) * lo_conj);
    const double P = 2.0 * z.real();
    const double Q = -2.0 * z.imag();
    return {P, Q, std::hypot(P, Q)};
}

} // namespace gwifo
