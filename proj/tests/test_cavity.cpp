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

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace gwifo;
using C = std::complex<double>;

namespace
{
const CarrierSpec kCarrier = CarrierSpec::from_wavelength(1064e-9);

OpticalFrequency at(double offset) { return at_carrier(kCarrier, offset); }

Mirror lossless(double power_transmission, bool flagged = false)
{
    return Mirror::from_power_transmission(power_transmission, flagged);
}

// AdLIGO-like SRC: substrate-inward ITM, 2 k L = 2 pi N + pi.
CavitySpec adligo_src()
{
    const auto len = PathLength::from_carrier_phase(kCarrier, 105315700 / 2, M_PI / 2);
    return CavitySpec{lossless(0.014, true), lossless(0.2), FilledPath::vacuum(len), 0.991};
}

struct SeriesResult
{
    C reflection;
    C transmission;
    C back_reflection; // seen from behind the back mirror
};

// Partial-wave sums of a two-mirror cavity, one term per round trip.
SeriesResult partial_waves(const CavitySpec& c, const OpticalFrequency& f, int terms)
{
    const double theta = propagation_phase(c.path, f);
    const C pass = std::sqrt(c.per_pass_loss) * std::exp(C(0, -theta));
    const double rf = c.front.substrate_inward ? -c.front.r : c.front.r; // inside face
    const double rb = c.back.substrate_inward ? -c.back.r : c.back.r;
    const C trip = rf * rb * pass * pass;
    C reflection = -rf;
    C transmission = 0;
    C back = -rb;
    C power = 1;
    for (int n = 0; n < terms; ++n)
    {
        reflection += c.front.t * c.front.t * rb * pass * pass * power;
        transmission += c.front.t * c.back.t * pass * power;
        back += c.back.t * c.back.t * rf * pass * pass * power;
        power *= trip;
    }
    return {reflection, transmission, back};
}

double rel(C a, C b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("finesse coefficient")
{
    CHECK(finesse_coefficient(0.0) == 0.0);
    CHECK(finesse_coefficient(0.5) == doctest::Approx(8.0).epsilon(1e-15));
    const double rho = 0.9999 * std::sqrt(1 - 0.2);
    CHECK(finesse_coefficient(rho) == doctest::Approx(4 * rho / ((1 - rho) * (1 - rho))).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(finesse_coefficient(1.0), doctest::Contains("overcoupled round trip"), DivergentRoundTrip);
    CHECK_THROWS_AS(finesse_coefficient(1.5), DivergentRoundTrip);
    CHECK_THROWS_AS(finesse_coefficient(-0.1), std::invalid_argument);
}

TEST_CASE("mirror")
{
    const Mirror m = lossless(0.014, true);
    CHECK(m.r * m.r + m.t * m.t == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m.inner_reflection() == -m.r);
    CHECK(m.outer_reflection() == m.r);
    CHECK_NOTHROW(m.validate());
    CHECK_THROWS_AS((Mirror{0.9, 0.9, false, "bad"}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Mirror{1.2, 0.0, false, "bad"}.validate()), std::invalid_argument);
    CHECK_THROWS_AS(Mirror::from_power_transmission(1.2), std::invalid_argument);
    const auto r = evaluate(Mirror{0.6, 0.8, false, "bare"}, at(0.0));
    CHECK(r.reflection == C(0.6));
    CHECK(r.transmission == C(0.8));
}

TEST_CASE("compound reflectivity")
{
    SUBCASE("no back mirror leaves the front reflection")
    {
        const auto len = PathLength::from_meters(kCarrier, 0.37);
        const CavitySpec c{lossless(0.3, true), Mirror{0.0, 1.0, false, ""}, FilledPath::vacuum(len), 1.0};
        const C r = compound_reflectivity(c, at(2e4));
        CHECK(std::abs(r) == doctest::Approx(c.front.r).epsilon(1e-15));
        CHECK(r.real() == doctest::Approx(c.front.outer_reflection()).epsilon(1e-15));
    }
    SUBCASE("matched lossless cavity on resonance reflects nothing")
    {
        const auto len = PathLength::from_carrier_phase(kCarrier, 1000, 0.0);
        const CavitySpec c{lossless(0.05), lossless(0.05), FilledPath::vacuum(len), 1.0};
        CHECK(std::abs(compound_reflectivity(c, at(0.0))) < 1e-12);
        CHECK(std::abs(compound_transmissivity(c, at(0.0))) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("AdLIGO SRC agrees with the partial-wave sum")
    {
        const CavitySpec src = adligo_src();
        for (double f : {0.0, 100.0, 1e4, 3e5})
        {
            const auto series = partial_waves(src, at(2 * M_PI * f), 100000);
            CHECK(rel(compound_reflectivity(src, at(2 * M_PI * f)), series.reflection) < 1e-9);
            CHECK(rel(compound_transmissivity(src, at(2 * M_PI * f)), series.transmission) < 1e-9);
        }
        // mismatched mirrors: not fully transmitted even on resonance
        CHECK(std::abs(compound_transmissivity(src, at(0.0))) < 0.99);
        // the scattering-matrix route gives the same numbers
        const auto s = cavity_scattering(src, at(2 * M_PI * 500.0));
        CHECK(rel(s(0, 0), compound_reflectivity(src, at(2 * M_PI * 500.0))) < 1e-13);
        CHECK(rel(s(1, 0), compound_transmissivity(src, at(2 * M_PI * 500.0))) < 1e-13);
        CHECK(rel(s(1, 1), partial_waves(src, at(2 * M_PI * 500.0), 100000).back_reflection) < 1e-9);
    }
}

TEST_CASE("compound transmissivity")
{
    const auto len = PathLength::from_meters(kCarrier, 0.21);
    SUBCASE("empty path")
    {
        const Mirror none{0.0, 1.0, false, ""};
        const CavitySpec c{none, none, FilledPath::vacuum(len), 1.0};
        const C t = compound_transmissivity(c, at(5e3));
        CHECK(std::abs(t) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(wrap_phase(std::arg(t) + propagation_phase(c.path, at(5e3))) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("symmetric lossless cavity transmits fully on resonance")
    {
        const auto res = PathLength::from_carrier_phase(kCarrier, 470000, M_PI / 2);
        const CavitySpec c{lossless(0.014, true), lossless(0.014), FilledPath::vacuum(res), 1.0};
        CHECK(std::abs(compound_transmissivity(c, at(0.0))) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("passivity and periodicity")
{
    const CavitySpec lossy = adligo_src();
    CavitySpec clean = lossy;
    clean.per_pass_loss = 1.0;
    const double fsr = M_PI * 3e8 / lossy.path.length.meters; // rad/s
    for (int i = 0; i < 60; ++i)
    {
        const double d = -2 * fsr + i * fsr / 15.0;
        const double lossy_power = std::norm(compound_reflectivity(lossy, at(d))) +
                                   std::norm(compound_transmissivity(lossy, at(d)));
        const double clean_power = std::norm(compound_reflectivity(clean, at(d))) +
                                   std::norm(compound_transmissivity(clean, at(d)));
        CHECK(lossy_power <= 1.0 + 1e-12);
        CHECK(clean_power == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(rel(compound_reflectivity(lossy, at(d + fsr)), compound_reflectivity(lossy, at(d))) < 1e-6);
    }
}

TEST_CASE("substrate flag moves the resonance by half a free spectral range")
{
    const auto len = PathLength::from_carrier_phase(kCarrier, 470000, 0.0);
    const CavitySpec coated{lossless(0.1), lossless(0.1), FilledPath::vacuum(len), 1.0};
    CavitySpec flipped = coated;
    flipped.front.substrate_inward = true;
    const double half_fsr = 0.5 * M_PI * 3e8 / len.meters;
    for (double d : {0.0, 1e6, 3.3e7})
    {
        CHECK(std::abs(compound_reflectivity(flipped, at(d + half_fsr))) ==
              doctest::Approx(std::abs(compound_reflectivity(coated, at(d)))).epsilon(1e-6));
        CHECK(std::abs(compound_transmissivity(flipped, at(d + half_fsr))) ==
              doctest::Approx(std::abs(compound_transmissivity(coated, at(d)))).epsilon(1e-6));
    }
    CHECK(std::abs(compound_transmissivity(coated, at(0.0))) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(compound_transmissivity(flipped, at(0.0))) < 0.2);
}

TEST_CASE("divergent round trip is rejected")
{
    const auto len = PathLength::from_carrier_phase(kCarrier, 1000, 0.0);
    const CavitySpec perfect{Mirror{1.0, 0.0, false, ""}, Mirror{1.0, 0.0, false, ""}, FilledPath::vacuum(len), 1.0};
    CHECK_THROWS_AS(compound_reflectivity(perfect, at(0.0)), DivergentRoundTrip);
    CHECK_THROWS_AS(cavity_scattering(perfect, at(0.0)), DivergentRoundTrip);
}

TEST_CASE("cascaded reflectivity")
{
    const auto inner_len = PathLength::from_carrier_phase(kCarrier, 469925, M_PI / 2);
    const CavitySpec inner{lossless(0.014, true), lossless(0.014), FilledPath::vacuum(inner_len), 1.0};
    const FilledPath gap = FilledPath::vacuum(PathLength::from_meters(kCarrier, 0.57));

    SUBCASE("no auxiliary mirror")
    {
        const Mirror none{0.0, 1.0, false, ""};
        for (double d : {0.0, 2e3, 7e6})
        {
            CHECK(std::abs(cascaded_reflectivity(inner, gap, none, at(d)) - compound_reflectivity(inner, at(d))) < 1e-12);
        }
    }
    SUBCASE("transparent inner cavity")
    {
        const Mirror none{0.0, 1.0, false, ""};
        const CavitySpec open{none, none, inner.path, 1.0};
        const Mirror outer = lossless(0.02);
        for (double d : {0.0, 2e3, 7e6})
        {
            const double total = propagation_phase(inner.path, at(d)) + propagation_phase(gap, at(d));
            const C expected = outer.r * std::exp(C(0, -2 * total));
            CHECK(rel(cascaded_reflectivity(open, gap, outer, at(d)), expected) < 1e-12);
        }
    }
    SUBCASE("auxiliary-mirror geometry against a nested partial-wave sum")
    {
        const Mirror outer = lossless(0.02);
        for (double f : {0.0, 100.0, 2e4, 1e6, 1e8})
        {
            const auto f_opt = at(2 * M_PI * f);
            const auto in = partial_waves(inner, f_opt, 100000);
            const C g = std::exp(C(0, -propagation_phase(gap, f_opt)));
            C sum = in.reflection;
            C power = 1;
            const C trip = in.back_reflection * outer.r * g * g;
            for (int n = 0; n < 100000; ++n)
            {
                sum += in.transmission * in.transmission * outer.r * g * g * power;
                power *= trip;
            }
            CHECK(rel(cascaded_reflectivity(inner, gap, outer, f_opt), sum) < 1e-8);
        }
    }
    SUBCASE("reflector dispatch matches the direct calls")
    {
        const Mirror outer = lossless(0.02);
        const auto f = at(2 * M_PI * 300.0);
        const auto r = evaluate(CascadeSpec{inner, gap, outer}, f);
        CHECK(r.reflection == cascaded_reflectivity(inner, gap, outer, f));
        CHECK(r.transmission == cascaded_transmissivity(inner, gap, outer, f));
        const auto c = evaluate(inner, f);
        CHECK(c.reflection == compound_reflectivity(inner, f));
        CHECK(c.transmission == compound_transmissivity(inner, f));
    }
}
