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

#include "gwifo/detector.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace gwifo
{

namespace
{
// Mode integers and mirror values of the AdLIGO reference design.
constexpr std::int64_t kArmCycles = 3754460000;    // n = 3.75446e9
constexpr std::int64_t kPrcCycles = 54206750;      // m = 5.420675e7
constexpr std::int64_t kSrcHalfCycles = 105315700; // 10.53157e7
constexpr double kEndReflectivity = 0.9999;
constexpr double kItmTransmission = 0.014;
constexpr double kSrmTransmission = 0.2;
constexpr double kPrmTransmission = 0.03;
constexpr double kSrcLoss = 0.991;
constexpr double kStrain = 1e-12;
constexpr double kHomodyneAmplitude = 1.0 / 25.65;

constexpr double kDualRecyclingExtraSidebandArm = 5.0; // m, L_S - L
constexpr double kInnerCavityLength = 0.5;             // m
constexpr double kNominalGap = 0.57;                   // m
constexpr double kDualRecyclingMediumLength = 1.0;     // m

Mirror end_mirror()
{
    return Mirror{kEndReflectivity, std::sqrt(1.0 - kEndReflectivity * kEndReflectivity), false, "M2"};
}

Mirror plain_mirror(double r, std::string label)
{
    if (!(r >= 0.0 && r < 1.0))
        throw std::invalid_argument("mirror amplitude reflectivity must lie in [0, 1)");
    return Mirror{r, std::sqrt(1.0 - r * r), false, std::move(label)};
}

// Length with k L = pi * half_cycles + extra.
PathLength from_half_cycles(const CarrierSpec& c, std::int64_t half_cycles, double extra)
{
    return PathLength::from_carrier_phase(c, half_cycles / 2, kPi * static_cast<double>(half_cycles % 2) + extra);
}

// Nearest length to `target` with carrier phase k L = extra (mod 2 pi).
PathLength nearest_length(const CarrierSpec& c, double target, double extra)
{
    const auto cycles = static_cast<std::int64_t>(std::llround((c.wavenumber() * target - extra) / kTwoPi));
    return PathLength::from_carrier_phase(c, cycles, extra);
}

CavitySpec prc_cavity(const DetectorConfig& cfg)
{
    return CavitySpec{cfg.itm, cfg.prm, FilledPath::vacuum(cfg.prc), 1.0};
}

CavitySpec src_cavity(const DetectorConfig& cfg)
{
    return CavitySpec{cfg.itm, cfg.srm, FilledPath::vacuum(cfg.src), cfg.src_loss};
}

Reflector carrier_reflector(const DetectorConfig& cfg)
{
    switch (cfg.topology)
    {
    case Topology::arm_cavities_only:
        return cfg.itm;
    case Topology::dual_recycling:
        return cfg.prm;
    case Topology::dual_recycling_with_arms:
    case Topology::auxiliary_srm:
        return prc_cavity(cfg);
    }
    throw std::invalid_argument("unknown topology");
}

Reflector sideband_reflector(const DetectorConfig& cfg, const IndexModel& gap_medium, double gap_fill)
{
    switch (cfg.topology)
    {
    case Topology::arm_cavities_only:
        return cfg.itm;
    case Topology::dual_recycling:
        return cfg.srm;
    case Topology::dual_recycling_with_arms:
        return src_cavity(cfg);
    case Topology::auxiliary_srm:
        return CascadeSpec{src_cavity(cfg), FilledPath{cfg.gap, gap_fill, gap_medium}, cfg.aux};
    }
    throw std::invalid_argument("unknown topology");
}

double carrier_reflection_phase(const DetectorConfig& cfg)
{
    return std::arg(evaluate(carrier_reflector(cfg), at_carrier(cfg.carrier)).reflection);
}

// Arm length resonating the carrier: L = (2 pi n + phi_r1C / 2) / k_c.
PathLength resonant_arm(const DetectorConfig& cfg)
{
    return PathLength::from_carrier_phase(cfg.carrier, kArmCycles, 0.5 * carrier_reflection_phase(cfg));
}

EffectiveDetector medium_free(const DetectorConfig& cfg)
{
    EffectiveDetector d;
    d.carrier = cfg.carrier;
    d.carrier_mirror = carrier_reflector(cfg);
    d.sideband_mirror = sideband_reflector(cfg, VacuumIndex{}, 0.0);
    d.end_reflectivity = cfg.end.r;
    d.arm = cfg.arm;
    d.sideband_path = FilledPath::vacuum(cfg.topology == Topology::dual_recycling ? cfg.sideband_arm : cfg.arm);
    d.strain = cfg.strain;
    d.homodyne_amplitude = cfg.homodyne_amplitude;
    d.homodyne_phase = 0.0;
    return d;
}

IndexModel make_model(const WlcMedium& m, const OpticalFrequency& center, double slope)
{
    if (m.model == MediumModel::linear)
        return LinearIndex{center, slope};
    return LorentzianDerivativeIndex::with_center_slope(center, m.linewidth, slope);
}

double host_length(const DetectorConfig& cfg, const EffectiveDetector& base, MediumLocation where)
{
    return where == MediumLocation::auxiliary_gap ? cfg.gap.meters : base.sideband_path.length.meters;
}

EffectiveDetector with_medium(const DetectorConfig& cfg, const EffectiveDetector& base, const IndexModel& model,
                              double fill)
{
    EffectiveDetector d = base;
    if (cfg.medium->location == MediumLocation::auxiliary_gap)
    {
        if (cfg.topology != Topology::auxiliary_srm)
            throw std::invalid_argument("auxiliary-gap medium requires the auxiliary_srm topology");
        d.sideband_mirror = sideband_reflector(cfg, model, fill);
    }
    else
    {
        d.sideband_path.medium = model;
        d.sideband_path.medium_length = fill;
    }
    return d;
}

double psi_derivative(const EffectiveDetector& d, double offset)
{
    const double h = kTwoPi;
    auto psi = [&](double x) { return sideband_round_trip_phase(d, offset + x); };
    return (psi(-2 * h) - 8 * psi(-h) + 8 * psi(h) - psi(2 * h)) / (12 * h);
}

struct ResolvedMedium
{
    EffectiveDetector detector;
    double slope;
    double center_offset;
};

ResolvedMedium resolve_medium(const DetectorConfig& cfg, const EffectiveDetector& base, double resonance)
{
    const WlcMedium& m = *cfg.medium;
    const double fill = m.fill_length.value_or(host_length(cfg, base, m.location));
    const OpticalFrequency center = at_carrier(cfg.carrier, resonance);
    const double w0 = center.absolute();

    auto build = [&](double slope) { return with_medium(cfg, base, make_model(m, center, slope), fill); };

    if (m.slope_rule == SlopeRule::path_length && m.location == MediumLocation::sideband_path)
    {
        const double slope = wlc_slope(base.sideband_path.length.meters, fill, w0);
        return {build(slope), slope, resonance};
    }

    // Secant iteration on d(psi)/dw at the centre, which is close to linear in the slope.
    double s0 = 0.0;
    double d0 = psi_derivative(build(s0), resonance);
    double s1 = d0 * kSpeedOfLight / (2.0 * w0 * fill);
    double d1 = psi_derivative(build(s1), resonance);
    const double tolerance = 1e-10 * std::abs(d0);
    for (int iter = 0; iter < 30 && std::abs(d1) > tolerance; ++iter)
    {
        const double s2 = s1 - d1 * (s1 - s0) / (d1 - d0);
        s0 = s1;
        d0 = d1;
        s1 = s2;
        d1 = psi_derivative(build(s1), resonance);
    }
    return {build(s1), s1, resonance};
}

double resolve_homodyne(const DetectorConfig& cfg, const EffectiveDetector& d, double resonance)
{
    switch (cfg.homodyne.rule)
    {
    case HomodyneChoice::Rule::reflection_phase:
        return reflection_homodyne_phase(d);
    case HomodyneChoice::Rule::optimal_at:
        return optimal_homodyne_phase(d, angular(cfg.homodyne.frequency_hz));
    case HomodyneChoice::Rule::optimal_at_resonance:
        return optimal_homodyne_phase(d, std::abs(resonance));
    case HomodyneChoice::Rule::fixed:
        return cfg.homodyne.phase;
    }
    throw std::invalid_argument("unknown homodyne rule");
}

struct Reduction
{
    EffectiveDetector detector;
    double resonance;
    std::optional<ResolvedMedium> medium;
};

Reduction reduce_full(const DetectorConfig& cfg)
{
    cfg.validate();
    EffectiveDetector base = medium_free(cfg);
    base.validate();
    const bool needs_resonance = cfg.medium.has_value() ||
                                 cfg.homodyne.rule == HomodyneChoice::Rule::optimal_at_resonance;
    const double resonance = needs_resonance ? sideband_resonance_offset(base) : 0.0;

    Reduction out{base, resonance, std::nullopt};
    if (cfg.medium)
    {
        out.medium = resolve_medium(cfg, base, resonance);
        out.detector = out.medium->detector;
    }
    out.detector.homodyne_phase = resolve_homodyne(cfg, out.detector, resonance);
    return out;
}

// Gap tuning that puts the carrier on resonance in the arm + cascade sideband cavity.
double carrier_resonant_gap_tuning(DetectorConfig cfg)
{
    const double target = carrier_reflection_phase(cfg);
    auto mismatch = [&](double tuning) {
        cfg.gap = nearest_length(cfg.carrier, kNominalGap, tuning);
        const auto r = evaluate(sideband_reflector(cfg, VacuumIndex{}, 0.0), at_carrier(cfg.carrier)).reflection;
        return wrap_phase(std::arg(r) - target);
    };
    constexpr int kScan = 256;
    double a = 0.0;
    double fa = mismatch(a);
    for (int k = 1; k <= kScan; ++k)
    {
        double b = kPi * k / kScan;
        const double fb = mismatch(b);
        if (fa * fb <= 0.0 && std::abs(fa) < 0.5 * kPi && std::abs(fb) < 0.5 * kPi)
        {
            for (int it = 0; it < 200 && b - a > 1e-15; ++it)
            {
                const double mid = 0.5 * (a + b);
                const double fm = mismatch(mid);
                if (fa * fm <= 0.0)
                    b = mid;
                else
                {
                    a = mid;
                    fa = fm;
                }
            }
            return 0.5 * (a + b);
        }
        a = b;
        fa = fb;
    }
    throw ModelError("no gap length resonates the carrier in the sideband cavity");
}

} // namespace

std::string to_string(Topology topology)
{
    switch (topology)
    {
    case Topology::arm_cavities_only:
        return "arm_cavities_only";
    case Topology::dual_recycling:
        return "dual_recycling";
    case Topology::dual_recycling_with_arms:
        return "dual_recycling_with_arms";
    case Topology::auxiliary_srm:
        return "auxiliary_srm";
    }
    return "unknown";
}

void DetectorConfig::validate() const
{
    if (!(carrier.wavelength > 0.0))
        throw std::invalid_argument("carrier wavelength must be positive");
    if (!(strain >= 0.0))
        throw std::invalid_argument("strain must be non-negative");
    if (!(arm.meters > 0.0))
        throw std::invalid_argument("arm length must be positive");
    if (!(detuning_deg >= 0.0 && detuning_deg < 360.0))
        throw std::invalid_argument("detuning must lie in [0, 360) degrees");
    end.validate();
    itm.validate();
    switch (topology)
    {
    case Topology::arm_cavities_only:
        break;
    case Topology::dual_recycling:
        prm.validate();
        srm.validate();
        if (!(sideband_arm.meters > 0.0))
            throw std::invalid_argument("dual recycling needs a positive sideband arm length");
        break;
    case Topology::auxiliary_srm:
        aux.validate();
        if (!(gap.meters > 0.0))
            throw std::invalid_argument("auxiliary SRM topology needs a positive gap length");
        [[fallthrough]];
    case Topology::dual_recycling_with_arms:
        prm.validate();
        srm.validate();
        if (!(prc.meters > 0.0) || !(src.meters > 0.0))
            throw std::invalid_argument("recycling cavity lengths must be positive");
        if (!(src_loss > 0.0 && src_loss <= 1.0))
            throw std::invalid_argument("SRC loss factor must lie in (0, 1]");
        break;
    }
    if (medium)
    {
        if (medium->fill_length && !(*medium->fill_length > 0.0))
            throw std::invalid_argument("medium fill length must be positive");
        if (medium->model == MediumModel::lorentzian_derivative && !(medium->linewidth > 0.0))
            throw std::invalid_argument("medium linewidth must be positive");
    }
}

DetectorConfig adligo_preset()
{
    DetectorConfig cfg;
    cfg.topology = Topology::dual_recycling_with_arms;
    cfg.carrier = CarrierSpec::from_wavelength(1064e-9);
    cfg.strain = kStrain;
    cfg.homodyne_amplitude = kHomodyneAmplitude;
    cfg.homodyne = {HomodyneChoice::Rule::reflection_phase, 0.0, 0.0};
    cfg.end = end_mirror();
    cfg.itm = Mirror::from_power_transmission(kItmTransmission, true, "M_AB");
    cfg.srm = Mirror::from_power_transmission(kSrmTransmission, false, "M_C");
    cfg.prm = Mirror::from_power_transmission(kPrmTransmission, false, "M_D");
    cfg.src_loss = kSrcLoss;
    cfg.prc = PathLength::from_carrier_phase(cfg.carrier, kPrcCycles, 0.0);
    // 2 k_c L_src = 2 pi (10.53157e7) + pi
    cfg.src = from_half_cycles(cfg.carrier, kSrcHalfCycles, 0.5 * kPi);
    cfg.arm = resonant_arm(cfg);
    return cfg;
}

DetectorConfig arm_cavity_preset()
{
    DetectorConfig cfg = adligo_preset();
    cfg.topology = Topology::arm_cavities_only;
    cfg.arm = resonant_arm(cfg);
    cfg.homodyne = {HomodyneChoice::Rule::optimal_at, 1.0, 0.0};
    return cfg;
}

DetectorConfig detune(const DetectorConfig& config, double degrees)
{
    if (!std::isfinite(degrees))
        throw std::invalid_argument("detuning must be finite");
    DetectorConfig cfg = config;
    const double shift = degrees / 360.0 * 0.5 * cfg.carrier.wavelength;
    switch (cfg.topology)
    {
    case Topology::arm_cavities_only:
        throw std::invalid_argument("arm-cavity Michelson has no signal recycling length to detune");
    case Topology::dual_recycling:
        cfg.sideband_arm = cfg.sideband_arm.lengthened(shift);
        break;
    case Topology::dual_recycling_with_arms:
        cfg.src = cfg.src.lengthened(shift);
        break;
    case Topology::auxiliary_srm:
        cfg.gap = cfg.gap.lengthened(shift);
        break;
    }
    double total = std::fmod(cfg.detuning_deg + degrees, 360.0);
    if (total < 0.0)
        total += 360.0;
    cfg.detuning_deg = total;
    return cfg;
}

DetectorConfig dual_recycling_preset(double r_srm, double r_prm, bool with_wlc, double detuning_deg)
{
    DetectorConfig cfg = adligo_preset();
    cfg.topology = Topology::dual_recycling;
    cfg.srm = plain_mirror(r_srm, "SRM");
    cfg.prm = plain_mirror(r_prm, "PRM");
    cfg.arm = resonant_arm(cfg);
    const auto extra_cycles = static_cast<std::int64_t>(
        std::llround(kDualRecyclingExtraSidebandArm / cfg.carrier.wavelength));
    cfg.sideband_arm = PathLength::from_carrier_phase(cfg.carrier, kArmCycles + extra_cycles, 0.0);
    if (with_wlc)
    {
        WlcMedium m;
        m.location = MediumLocation::sideband_path;
        m.model = MediumModel::linear;
        m.fill_length = kDualRecyclingMediumLength;
        m.slope_rule = SlopeRule::path_length;
        cfg.medium = m;
    }
    return detuning_deg == 0.0 ? cfg : detune(cfg, detuning_deg);
}

DetectorConfig auxiliary_srm_preset(double r_aux, bool with_wlc, double detuning_deg)
{
    DetectorConfig cfg = adligo_preset();
    cfg.topology = Topology::auxiliary_srm;
    cfg.srm = Mirror::from_power_transmission(kItmTransmission, false, "M_C");
    cfg.aux = plain_mirror(r_aux, "M_aux");
    cfg.src_loss = 1.0;
    // substrate flip on M_AB: carrier resonance needs 2 k l = pi (mod 2 pi)
    cfg.src = nearest_length(cfg.carrier, kInnerCavityLength, 0.5 * kPi);
    cfg.arm = resonant_arm(cfg);
    const double gap_tuning = r_aux > 0.0 ? carrier_resonant_gap_tuning(cfg) : 0.0;
    // tuning and tuning + pi both resonate; take whichever lands nearer the nominal gap
    const PathLength a = nearest_length(cfg.carrier, kNominalGap, gap_tuning);
    const PathLength b = nearest_length(cfg.carrier, kNominalGap, gap_tuning + kPi);
    cfg.gap = std::abs(a.meters - kNominalGap) <= std::abs(b.meters - kNominalGap) ? a : b;
    if (with_wlc)
    {
        WlcMedium m;
        m.location = MediumLocation::auxiliary_gap;
        m.model = MediumModel::linear;
        m.slope_rule = SlopeRule::full_round_trip;
        cfg.medium = m;
    }
    return detuning_deg == 0.0 ? cfg : detune(cfg, detuning_deg);
}

DetectorConfig resonate_arm(const DetectorConfig& config)
{
    DetectorConfig cfg = config;
    cfg.arm = resonant_arm(cfg);
    return cfg;
}

EffectiveDetector reduce(const DetectorConfig& config) { return reduce_full(config).detector; }

ReductionReport report(const DetectorConfig& config)
{
    const Reduction r = reduce_full(config);
    ReductionReport rep;
    try
    {
        rep.sideband_resonance_hz = sideband_resonance_offset(medium_free(config)) / kTwoPi;
    }
    catch (const ModelError&)
    {
        // no sideband resonance, e.g. without a signal recycling mirror
    }
    rep.homodyne_phase = r.detector.homodyne_phase;
    rep.arm_length = r.detector.arm.meters;
    rep.sideband_length = r.detector.sideband_path.length.meters;
    if (r.medium)
    {
        rep.medium_slope = r.medium->slope;
        rep.medium_center_offset_hz = r.medium->center_offset / kTwoPi;
    }
    if (config.topology == Topology::auxiliary_srm)
        rep.gap_length = config.gap.meters;
    return rep;
}

double transmission_linewidth(const Reflector& reflector, const OpticalFrequency& center)
{
    auto power = [&](double offset) {
        return std::norm(evaluate(reflector, {center.carrier, center.offset + offset}).transmission);
    };
    const double half = 0.5 * power(0.0);
    auto edge = [&](double direction) {
        double inside = 0.0;
        double outside = direction * kTwoPi * 100.0;
        for (int k = 0; power(outside) > half; ++k)
        {
            if (k > 60)
                throw ModelError("transmission never falls to half maximum");
            inside = outside;
            outside *= 2.0;
        }
        for (int it = 0; it < 200; ++it)
        {
            const double mid = 0.5 * (inside + outside);
            (power(mid) > half ? inside : outside) = mid;
        }
        return 0.5 * (inside + outside);
    };
    return edge(1.0) - edge(-1.0);
}

} // namespace gwifo
