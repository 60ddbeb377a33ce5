#include "mtjsyn/protocols.hpp"

#include "mtjsyn/errors.hpp"
#include "mtjsyn/parallel.hpp"

#include <cmath>
#include <string>

namespace mtjsyn {

void PulseTrain::validate() const {
    auto fail = [](const std::string &what) { throw ConfigError("invalid pulse train: " + what); };
    if (!(amplitude >= 0.0)) fail("amplitude must be >= 0");
    if (!(width > 0.0)) fail("width must be > 0");
    if (!(interval >= 0.0)) fail("interval must be >= 0");
    if (count < 1) fail("count must be >= 1");
    if (!(relax_after >= 0.0)) fail("relax_after must be >= 0");
}

CurrentProgram PulseTrain::program() const {
    CurrentProgram p;
    for (int i = 0; i < count; ++i) {
        p.segments.push_back({width, amplitude});
        if (i + 1 < count && interval > 0.0) p.segments.push_back({interval, 0.0});
    }
    if (relax_after > 0.0) p.segments.push_back({relax_after, 0.0});
    return p;
}

double PulseTrain::delivered_charge() const { return count * width * amplitude; }

TrialOutcome run_trial(const PulseTrain &train, const LlgIntegrator &integrator, RngStream &stream,
                       double equilibration) {
    train.validate();
    const DeviceParams &device = integrator.device();
    MagnetizationState state = initial_ap_state(integrator, stream, equilibration);

    TrialOutcome out;
    out.conductance_after_each_pulse.reserve(train.count);
    for (int i = 0; i < train.count; ++i) {
        state = integrator.advance_for(state, train.amplitude, train.width, stream);
        out.conductance_after_each_pulse.push_back(conductance(state.m, device));
        if (i + 1 < train.count) state = integrator.advance_for(state, 0.0, train.interval, stream);
    }
    state = integrator.advance_for(state, 0.0, train.relax_after, stream);
    out.final_alignment = dot(state.m, device.m_p);
    out.final_conductance = conductance(state.m, device);
    out.ltp = out.final_alignment > kLtpAlignmentThreshold;
    return out;
}

TrialOutcome run_trial(const PulseTrain &train, const DeviceParams &device, const DemagTensor &demag,
                       const StepperConfig &config, RngStream &stream) {
    return run_trial(train, LlgIntegrator(device, demag, config), stream);
}

double wilson_halfwidth(int successes, int n, double z) {
    if (n <= 0) return 1.0;
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    return z / (1.0 + z2 / n) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
}

SweepResult ltp_probability_sweep(const std::vector<double> &intervals, int trials, const PulseTrain &train_template,
                                  const LlgIntegrator &integrator, std::uint64_t master_seed, unsigned threads,
                                  double equilibration) {
    if (trials < 1) throw ConfigError("ltp_probability_sweep: trials must be >= 1");
    train_template.validate();

    const std::size_t n_int = intervals.size();
    const std::size_t n_trials = static_cast<std::size_t>(trials);
    std::vector<TrialOutcome> outcomes(n_int * n_trials);
    parallel_for(outcomes.size(), threads, [&](std::size_t idx) {
        PulseTrain train = train_template;
        train.interval = intervals[idx / n_trials];
        RngStream stream(master_seed, idx % n_trials);
        outcomes[idx] = run_trial(train, integrator, stream, equilibration);
    });

    SweepResult r;
    r.intervals = intervals;
    r.trials = trials;
    r.pulses = train_template.count;
    const std::size_t pulses = static_cast<std::size_t>(train_template.count);
    for (std::size_t i = 0; i < n_int; ++i) {
        int hits = 0;
        std::vector<double> sum(pulses, 0.0);
        std::vector<double> sum_sq(pulses, 0.0);
        for (std::size_t k = 0; k < n_trials; ++k) {
            const TrialOutcome &o = outcomes[i * n_trials + k];
            hits += o.ltp ? 1 : 0;
            for (std::size_t p = 0; p < pulses; ++p) {
                const double g = o.conductance_after_each_pulse[p];
                sum[p] += g;
                sum_sq[p] += g * g;
            }
        }
        std::vector<double> mean(pulses);
        std::vector<double> stderr_(pulses);
        for (std::size_t p = 0; p < pulses; ++p) {
            mean[p] = sum[p] / trials;
            const double var = trials > 1 ? std::max(0.0, (sum_sq[p] - trials * mean[p] * mean[p]) / (trials - 1)) : 0.0;
            stderr_[p] = std::sqrt(var / trials);
        }
        r.ltp_probability.push_back(static_cast<double>(hits) / trials);
        r.confidence_halfwidth.push_back(wilson_halfwidth(hits, trials));
        r.mean_conductance_per_pulse.push_back(std::move(mean));
        r.conductance_stderr.push_back(std::move(stderr_));
    }
    if (r.pulses >= kPtpPulse) {
        auto pp = ppf_ptp(r);
        r.ppf = std::move(pp.ppf);
        r.ptp = std::move(pp.ptp);
    }
    return r;
}

PpfPtp ppf_ptp(const SweepResult &sweep) {
    if (sweep.pulses < kPtpPulse) {
        throw ProtocolError("ppf_ptp: need at least " + std::to_string(kPtpPulse) + " pulses per trial, sweep has " +
                            std::to_string(sweep.pulses));
    }
    PpfPtp out;
    for (const auto &row : sweep.mean_conductance_per_pulse) {
        out.ppf.push_back(row[kPpfPulse - 1]);
        out.ptp.push_back(row[kPtpPulse - 1]);
    }
    return out;
}

} // namespace mtjsyn
