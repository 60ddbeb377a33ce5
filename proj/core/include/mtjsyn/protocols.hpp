#pragma once

#include "mtjsyn/llg.hpp"

#include <cstdint>
#include <vector>

namespace mtjsyn {

/// Rectangular current pulses separated by zero-current gaps.
///
/// `interval` is edge to edge: from the falling edge of one pulse to the
/// rising edge of the next, so the period is width + interval.
struct PulseTrain {
    double amplitude = 100e-6;  ///< I_Q [A]
    double width = 1e-9;        ///< [s]
    double interval = 3e-9;     ///< gap between pulses [s]
    int count = 10;
    double relax_after = 10e-9; ///< zero-current window after the last pulse [s]

    /// Amplitude may be zero (null stimulus); width > 0, interval >= 0, count >= 1.
    void validate() const;

    /// Pulses, gaps and the trailing relaxation window.
    CurrentProgram program() const;

    /// count * width * amplitude [C]
    double delivered_charge() const;
};

/// A trial ends in LTP when m . m_p exceeds this after the relaxation window.
inline constexpr double kLtpAlignmentThreshold = 0.5;

struct TrialOutcome {
    bool ltp = false;
    std::vector<double> conductance_after_each_pulse; ///< sampled at each falling edge [S]
    double final_conductance = 0.0;                   ///< after relax_after [S]
    double final_alignment = -1.0;                    ///< m . m_p after relax_after
};

/// Equilibrates an AP state, applies the train, relaxes, classifies.
TrialOutcome run_trial(const PulseTrain &train, const LlgIntegrator &integrator, RngStream &stream,
                       double equilibration = 1e-9);

TrialOutcome run_trial(const PulseTrain &train, const DeviceParams &device, const DemagTensor &demag,
                       const StepperConfig &config, RngStream &stream);

struct SweepResult {
    std::vector<double> intervals;                           ///< [s]
    std::vector<double> ltp_probability;
    std::vector<double> confidence_halfwidth;                ///< 95% Wilson score halfwidth
    std::vector<std::vector<double>> mean_conductance_per_pulse; ///< [interval][pulse] in S
    std::vector<std::vector<double>> conductance_stderr;     ///< standard error of the above [S]
    std::vector<double> ppf;                                 ///< empty when fewer than 10 pulses
    std::vector<double> ptp;
    int trials = 0;
    int pulses = 0;
};

/// Runs `trials` trials per interval; trial k uses stream (master_seed, k).
/// Output is independent of `threads`.
SweepResult ltp_probability_sweep(const std::vector<double> &intervals, int trials, const PulseTrain &train_template,
                                  const LlgIntegrator &integrator, std::uint64_t master_seed, unsigned threads = 0,
                                  double equilibration = 1e-9);

struct PpfPtp {
    std::vector<double> ppf; ///< mean conductance after pulse 2 [S]
    std::vector<double> ptp; ///< mean conductance after pulse 10 [S]
};

inline constexpr int kPpfPulse = 2;
inline constexpr int kPtpPulse = 10;

/// Throws ProtocolError when the sweep has fewer than 10 pulses per trial.
PpfPtp ppf_ptp(const SweepResult &sweep);

/// 95% Wilson score interval halfwidth for `successes` out of `n`.
double wilson_halfwidth(int successes, int n, double z = 1.96);

} // namespace mtjsyn
