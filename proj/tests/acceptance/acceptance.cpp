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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "gwifo/scenario.hpp"

#include <algorithm>
#include <cstdarg>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace gwifo;

namespace
{
const std::filesystem::path kScenarios = GWIFO_SCENARIO_DIR;
const char* const kScenarioNames[] = {"fig5-I", "fig5-II", "fig6-A", "fig6-B", "fig7", "fig9"};

constexpr double kBandLo = 1.0;
constexpr double kBandHi = 2e4;

struct Outcome
{
    bool pass = true;
    std::string detail;
};

class Log
{
public:
    void check(bool ok, const char* format, ...) __attribute__((format(printf, 3, 4)))
    {
        char buffer[512];
        va_list args;
        va_start(args, format);
        std::vsnprintf(buffer, sizeof buffer, format, args);
        va_end(args);
        out_.pass = out_.pass && ok;
        out_.detail += std::string("    ") + (ok ? "ok   " : "FAIL ") + buffer + "\n";
    }
    void note(const char* format, ...) __attribute__((format(printf, 2, 3)))
    {
        char buffer[512];
        va_list args;
        va_start(args, format);
        std::vsnprintf(buffer, sizeof buffer, format, args);
        va_end(args);
        out_.detail += std::string("    note ") + buffer + "\n";
    }
    Outcome result() const { return out_; }

private:
    Outcome out_;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double magnitude(const EffectiveDetector& d, double f_hz)
{
    return signal_magnitude(d, angular(f_hz)).magnitude;
}

const CurveSpec& curve(const Scenario& s, const std::string& label)
{
    for (const auto& c : s.curves)
        if (c.label == label)
            return c;
    throw std::runtime_error("scenario " + s.name + " has no curve '" + label + "'");
}

std::optional<double> resonance_hz(const DetectorConfig& cfg)
{
    const auto hz = report(cfg).sideband_resonance_hz;
    if (!hz)
        return std::nullopt;
    return std::abs(*hz);
}

Peak detuned_peak(const DetectorConfig& cfg)
{
    return find_peak(reduce(cfg), kBandLo, kBandHi, resonance_hz(cfg));
}

Outcome oracle_equivalence()
{
    Log log;
    const auto start = std::chrono::steady_clock::now();
    const auto grid = SweepGrid{kBandLo, kBandHi, 50, Spacing::log}.frequencies();
    for (const char* name : kScenarioNames)
    {
        const Scenario s = load_scenario(kScenarios / (std::string(name) + ".yaml"));
        double worst = 0.0;
        std::int64_t most = 0;
        for (const auto& c : s.curves)
        {
            const EffectiveDetector d = reduce(c.config);
            for (double f : grid)
            {
                const double w = angular(f);
                const std::int64_t n = std::max<std::int64_t>(200000, required_bounces(d, w));
                most = std::max(most, n);
                const double closed = signal_magnitude(d, w).magnitude;
                const double series = series_oracle(d, w, n).magnitude;
                worst = std::max(worst, std::abs(closed - series) / series);
            }
        }
        log.check(worst < 1e-6, "%-8s max rel deviation %.2e over %zu curves x 50 points (up to %lld bounces)", name,
                  worst, s.curves.size(), static_cast<long long>(most));
    }
    const double elapsed = seconds_since(start);
    log.check(elapsed < 300.0, "runtime %.1f s (limit 300 s)", elapsed);
    return log.result();
}

Outcome tuned_normalization()
{
    Log log;
    const Scenario s = load_scenario(kScenarios / "fig5-I.yaml");
    const auto tuned = run_scenario(s, SweepGrid{kBandLo, kBandHi, 50, Spacing::log}).front();
    log.check(std::abs(tuned.magnitudes.front() - 1.0) <= 1e-3, "fig5-I tuned curve at 1 Hz = %.6f",
              tuned.magnitudes.front());

    // against the omega_g -> 0 limit rather than the 1 Hz sample itself
    const EffectiveDetector d = reduce(adligo_preset());
    const double ratio = magnitude(d, 1.0) / signal_magnitude(d, 0.0).magnitude;
    log.check(std::abs(ratio - 1.0) <= 1e-3, "AdLIGO tuned |dI(1 Hz)| / |dI(0)| = %.9f", ratio);
    return log.result();
}

Outcome bandwidth_tradeoff()
{
    Log log;
    const Scenario wide = load_scenario(kScenarios / "fig5-I.yaml");
    const Scenario narrow = load_scenario(kScenarios / "fig5-II.yaml");
    for (const char* label : {"B 20 deg", "C 25.2 deg", "D 36 deg", "E 54 deg"})
    {
        const DetectorConfig& a = curve(wide, label).config;
        const DetectorConfig& b = curve(narrow, label).config;
        const Peak pa = detuned_peak(a);
        const Peak pb = detuned_peak(b);
        const double wa = full_width_half_max(reduce(a), pa, kBandLo, kBandHi);
        const double wb = full_width_half_max(reduce(b), pb, kBandLo, kBandHi);
        log.check(pb.height > pa.height && wb < wa,
                  "%-10s t^2 0.2 -> 0.02: peak %.4g -> %.4g, FWHM %.4g -> %.4g Hz", label, pa.height, pb.height, wa,
                  wb);
    }
    return log.result();
}

void wlc_pair(Log& log, const Scenario& s, const std::string& detuned, const std::string& wlc)
{
    const DetectorConfig& cfg = curve(s, detuned).config;
    const Peak p = detuned_peak(cfg);
    const double broadband = magnitude(reduce(curve(s, wlc).config), p.frequency_hz);
    const double ratio = broadband / p.height;
    log.check(std::abs(ratio - 2.0) <= 0.1, "%-7s %s at %.2f Hz / peak of %s = %.4f (target 2 +- 5%%)",
              s.name.c_str(), wlc.c_str(), p.frequency_hz, detuned.c_str(), ratio);
}

Outcome wlc_doubling()
{
    Log log;
    const Scenario a = load_scenario(kScenarios / "fig6-A.yaml");
    const Scenario b = load_scenario(kScenarios / "fig6-B.yaml");
    const Scenario c = load_scenario(kScenarios / "fig7.yaml");
    wlc_pair(log, a, "detuned", "detuned + WLC linear");
    wlc_pair(log, b, "detuned", "detuned + WLC linear");
    wlc_pair(log, c, "B T_SRM=0.1", "D B + WLC");
    wlc_pair(log, c, "C T_SRM=0.001", "E C + WLC");
    return log.result();
}

Outcome wlc_flatness()
{
    Log log;
    for (const char* name : {"fig6-A", "fig6-B"})
    {
        const Scenario s = load_scenario(kScenarios / (std::string(name) + ".yaml"));
        const DetectorConfig& lorentzian = curve(s, "detuned + WLC lorentzian").config;
        const double center_hz = *resonance_hz(curve(s, "detuned").config);
        const double half_width_hz = lorentzian.medium->linewidth / kTwoPi / 2;
        // both sidebands inside the anomalous region: |f - f_c| and f + f_c within half a linewidth
        const double edge_hz = half_width_hz - center_hz;

        const EffectiveDetector lin = reduce(curve(s, "detuned + WLC linear").config);
        const double center = magnitude(lin, center_hz);
        double spread = 0.0;
        for (double f : SweepGrid{kBandLo, edge_hz, 200, Spacing::log}.frequencies())
            spread = std::max(spread, std::abs(magnitude(lin, f) / center - 1.0));
        log.check(spread < 0.01, "%-7s linear: max |dI/dI(%.1f Hz) - 1| over [1, %.0f] Hz = %.2e", name, center_hz,
                  edge_hz, spread);

        const EffectiveDetector lor = reduce(lorentzian);
        const double ratio = magnitude(lor, center_hz) / magnitude(lor, edge_hz);
        log.check(ratio > 1.0, "%-7s lorentzian (1600 Hz): centre / edge (%.0f Hz) = %.3g", name, edge_hz, ratio);
    }
    return log.result();
}

Outcome degenerate_reductions()
{
    Log log;
    const auto grid = SweepGrid{kBandLo, kBandHi, 50, Spacing::log}.frequencies();

    const DetectorConfig arm = arm_cavity_preset();
    const EffectiveDetector d = reduce(arm);
    const ArmCavityDetector direct{arm.carrier,  arm.itm,    arm.end.r, arm.arm, arm.strain, arm.homodyne_amplitude,
                                   d.homodyne_phase};
    double worst = 0.0;
    for (double f : grid)
    {
        const double a = magnitude(d, f);
        const double b = arm_cavity_signal(direct, angular(f)).magnitude;
        worst = std::max(worst, std::abs(a - b) / b);
    }
    log.check(worst < 1e-12, "(a) two-mirror route vs dedicated arm-cavity route: max rel difference %.2e", worst);

    DetectorConfig aux = auxiliary_srm_preset(0.0, false);
    aux.homodyne = {HomodyneChoice::Rule::optimal_at, 1.0, 0.0};
    DetectorConfig plain = adligo_preset();
    plain.srm = aux.srm;
    plain.src = aux.src;
    plain.src_loss = 1.0;
    plain = resonate_arm(plain);
    plain.homodyne = aux.homodyne;
    const EffectiveDetector da = reduce(aux);
    const EffectiveDetector dp = reduce(plain);
    worst = 0.0;
    for (double f : SweepGrid{kBandLo, 1e4, 100, Spacing::log}.frequencies())
        worst = std::max(worst, std::abs(magnitude(da, f) / magnitude(dp, f) - 1.0));
    log.check(worst < 0.01, "(b) auxiliary SRM with r_aux = 0 vs tuned dual recycling, matched SRC: max rel difference "
                            "%.2e over [1, 1e4] Hz",
              worst);
    return log.result();
}

Outcome src_linewidth()
{
    Log log;
    const DetectorConfig cfg = adligo_preset();
    const CavitySpec src{cfg.itm, cfg.srm, FilledPath::vacuum(cfg.src), cfg.src_loss};
    const double fwhm_hz = transmission_linewidth(src, at_carrier(cfg.carrier)) / kTwoPi;
    log.check(fwhm_hz >= 30e3, "AdLIGO SRC |T|^2 FWHM = %.1f kHz (limit >= 30 kHz)", fwhm_hz / 1e3);
    return log.result();
}

Outcome auxiliary_ordering()
{
    Log log;
    const Scenario s = load_scenario(kScenarios / "fig9.yaml");
    const DetectorConfig& a = curve(s, "A r_aux=0").config;
    const DetectorConfig& b = curve(s, "B T_aux=0.02").config;
    const DetectorConfig& c = curve(s, "C T_aux=0.002").config;
    const Peak pa = find_peak(reduce(a), kBandLo, kBandHi);
    const Peak pb = detuned_peak(b);
    const Peak pc = detuned_peak(c);
    log.check(pc.height > pb.height && pb.height > pa.height,
              "no medium: C peak %.4g > B peak %.4g > A plateau max %.4g", pc.height, pb.height, pa.height);

    const std::pair<const char*, const char*> pairs[] = {{"B T_aux=0.02", "D B + WLC"}, {"C T_aux=0.002", "E C + WLC"}};
    for (const auto& [plain_label, wlc_label] : pairs)
    {
        const DetectorConfig& plain = curve(s, plain_label).config;
        const DetectorConfig& wlc = curve(s, wlc_label).config;
        const Peak pp = detuned_peak(plain);
        const double wp = full_width_half_max(reduce(plain), pp, kBandLo, kBandHi);
        const Peak pw = find_peak(reduce(wlc), kBandLo, kBandHi, resonance_hz(plain));
        const double ww = full_width_half_max(reduce(wlc), pw, kBandLo, kBandHi);
        log.check(ww >= 5.0 * wp && pw.height >= pp.height,
                  "%s: FWHM %.4g Hz vs %.4g Hz (x%.1f), peak %.4g vs %.4g", wlc_label, ww, wp, ww / wp, pw.height,
                  pp.height);
        if (ww >= 0.99 * (kBandHi - kBandLo))
            log.note("%s stays above half maximum across the band; its FWHM is a lower bound", wlc_label);
    }
    return log.result();
}

Outcome determinism()
{
    Log log;
    for (const char* name : kScenarioNames)
    {
        const auto path = kScenarios / (std::string(name) + ".yaml");
        std::string csv[2];
        double elapsed[2];
        for (int run = 0; run < 2; ++run)
        {
            const auto start = std::chrono::steady_clock::now();
            const Scenario s = load_scenario(path);
            std::ostringstream out;
            emit_csv(run_scenario(s, SweepGrid{kBandLo, kBandHi, 200, Spacing::log}), out);
            csv[run] = out.str();
            elapsed[run] = seconds_since(start);
        }
        const double slowest = std::max(elapsed[0], elapsed[1]);
        log.check(slowest < 60.0 && csv[0] == csv[1], "%-8s 200 points in %.1f ms, %zu CSV bytes, runs %s", name,
                  slowest * 1e3, csv[0].size(), csv[0] == csv[1] ? "identical" : "DIFFER");
    }
    return log.result();
}
} // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"oracle equivalence", oracle_equivalence},
        {"tuned-mode normalization", tuned_normalization},
        {"sensitivity-bandwidth tradeoff", bandwidth_tradeoff},
        {"white-light cavity doubling", wlc_doubling},
        {"white-light cavity flatness", wlc_flatness},
        {"degenerate reductions", degenerate_reductions},
        {"SRC linewidth", src_linewidth},
        {"auxiliary SRM ordering", auxiliary_ordering},
        {"determinism and performance", determinism},
    };

    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria)
    {
        ++index;
        Outcome outcome;
        try
        {
            outcome = run();
        }
        catch (const std::exception& e)
        {
            outcome = {false, std::string("    FAIL exception: ") + e.what() + "\n"};
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("%s %d %s\n%s", outcome.pass ? "PASS" : "FAIL", index, name, outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
