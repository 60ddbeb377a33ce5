#include <doctest.h>

#include <mtjsyn/errors.hpp>
#include <mtjsyn/protocols.hpp>

#include <cmath>

using namespace mtjsyn;
using doctest::Approx;

namespace {

LlgIntegrator reference_integrator(double T = 300.0) {
    DeviceParams d = DeviceParams::reference();
    d.T_K = T;
    return LlgIntegrator(d, demag_factors(d), {});
}

} // namespace

TEST_SUITE("protocols") {

TEST_CASE("pulse train validation") {
    PulseTrain t;
    CHECK_NOTHROW(t.validate());
    t.amplitude = 0.0;
    CHECK_NOTHROW(t.validate());
    t = {};
    t.amplitude = -1e-6;
    CHECK_THROWS_AS(t.validate(), ConfigError);
    t = {};
    t.width = 0.0;
    CHECK_THROWS_AS(t.validate(), ConfigError);
    t = {};
    t.interval = -1e-9;
    CHECK_THROWS_AS(t.validate(), ConfigError);
    t = {};
    t.count = 0;
    CHECK_THROWS_AS(t.validate(), ConfigError);
}

TEST_CASE("program structure") {
    PulseTrain t;
    t.count = 3;
    t.interval = 2e-9;
    const CurrentProgram p = t.program();
    // pulse gap pulse gap pulse relax
    REQUIRE(p.segments.size() == 6);
    CHECK(p.segments[0].current == t.amplitude);
    CHECK(p.segments[1].current == 0.0);
    CHECK(p.segments[1].duration == Approx(2e-9));
    CHECK(p.segments.back().duration == Approx(t.relax_after));
    CHECK(p.duration() == Approx(3e-9 + 4e-9 + 10e-9));
    CHECK(p.charge() == Approx(t.delivered_charge()));
}

TEST_CASE("delivered charge does not depend on the interval") {
    PulseTrain t;
    const double q0 = t.delivered_charge();
    CHECK(q0 == Approx(10 * 1e-9 * 100e-6));
    for (double interval : {0.0, 2e-9, 8e-9, 50e-9}) {
        t.interval = interval;
        CHECK(t.delivered_charge() == q0);
        CHECK(t.program().charge() == Approx(q0).epsilon(1e-12));
    }
}

TEST_CASE("wilson halfwidth") {
    // (z / (1 + z^2/n)) sqrt(p(1-p)/n + z^2/(4n^2)), evaluated independently
    CHECK(wilson_halfwidth(50, 100) == Approx(0.0961701714).epsilon(1e-8));
    CHECK(wilson_halfwidth(0, 100) > 0.0);
    CHECK(wilson_halfwidth(100, 100) == Approx(wilson_halfwidth(0, 100)));
    CHECK(wilson_halfwidth(5, 10) > wilson_halfwidth(50, 100));
}

TEST_CASE("null stimulus never produces LTP") {
    const LlgIntegrator integ = reference_integrator();
    PulseTrain t;
    t.amplitude = 0.0;
    t.count = 3;
    t.relax_after = 2e-9;
    for (std::uint64_t k = 0; k < 20; ++k) {
        RngStream rng(9, k);
        const TrialOutcome o = run_trial(t, integ, rng);
        CHECK_FALSE(o.ltp);
        CHECK(o.final_alignment < -0.5);
        REQUIRE(o.conductance_after_each_pulse.size() == 3);
        for (double g : o.conductance_after_each_pulse) CHECK(g < 0.6e-3);
    }
}

TEST_CASE("zero temperature, zero amplitude: every conductance equals G_AP") {
    const LlgIntegrator integ = reference_integrator(0.0);
    PulseTrain t;
    t.amplitude = 0.0;
    t.relax_after = 1e-9;
    const SweepResult s = ltp_probability_sweep({2e-9, 4e-9}, 2, t, integ, 1, 1);
    const PpfPtp v = ppf_ptp(s);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(s.ltp_probability[i] == 0.0);
        CHECK(v.ppf[i] == Approx(0.5e-3).epsilon(1e-3));
        // the 1 degree start tilt is still relaxing, so PTP sits marginally closer to G_AP
        CHECK(v.ptp[i] <= v.ppf[i]);
        CHECK(v.ptp[i] == Approx(v.ppf[i]).epsilon(1e-5));
    }
}

TEST_CASE("single trial gives probability 0 or 1") {
    const LlgIntegrator integ = reference_integrator();
    PulseTrain t;
    t.count = 4;
    t.relax_after = 3e-9;
    const SweepResult s = ltp_probability_sweep({2e-9, 6e-9}, 1, t, integ, 4, 1);
    for (double p : s.ltp_probability) CHECK((p == 0.0 || p == 1.0));
    CHECK(s.trials == 1);
    CHECK(s.pulses == 4);
    CHECK(s.ppf.empty());
    CHECK_THROWS_AS(ppf_ptp(s), ProtocolError);
}

TEST_CASE("sweep is independent of the thread count") {
    const LlgIntegrator integ = reference_integrator();
    PulseTrain t;
    t.count = 10;
    t.relax_after = 2e-9;
    const std::vector<double> intervals{2e-9, 5e-9};
    const SweepResult a = ltp_probability_sweep(intervals, 6, t, integ, 11, 1);
    const SweepResult b = ltp_probability_sweep(intervals, 6, t, integ, 11, 3);
    CHECK(a.ltp_probability == b.ltp_probability);
    CHECK(a.mean_conductance_per_pulse == b.mean_conductance_per_pulse);
    CHECK(a.conductance_stderr == b.conductance_stderr);
    CHECK(a.ppf == b.ppf);
    CHECK(a.ptp == b.ptp);
    const PpfPtp v = ppf_ptp(a);
    CHECK(v.ppf == a.ppf);
    CHECK(v.ptp == a.ptp);
    CHECK(v.ppf[0] == a.mean_conductance_per_pulse[0][kPpfPulse - 1]);
    CHECK(v.ptp[0] == a.mean_conductance_per_pulse[0][kPtpPulse - 1]);
}

TEST_CASE("short interval potentiates pulse by pulse") {
    const LlgIntegrator integ = reference_integrator();
    PulseTrain t;
    t.count = 5;
    t.relax_after = 5e-9;
    const SweepResult s = ltp_probability_sweep({2e-9}, 40, t, integ, 2);
    const auto &g = s.mean_conductance_per_pulse[0];
    REQUIRE(g.size() == 5);
    CHECK(g.front() > 0.5e-3);
    CHECK(g.back() > g.front());
    for (std::size_t i = 1; i < g.size(); ++i) {
        CHECK(g[i] >= g[i - 1] - 2.0 * s.conductance_stderr[0][i]);
    }
}

TEST_CASE("trial outcome is reproducible from its stream") {
    const LlgIntegrator integ = reference_integrator();
    PulseTrain t;
    t.count = 3;
    t.relax_after = 2e-9;
    RngStream a(17, 2);
    RngStream b(17, 2);
    const TrialOutcome x = run_trial(t, integ, a);
    const TrialOutcome y = run_trial(t, integ, b);
    CHECK(x.conductance_after_each_pulse == y.conductance_after_each_pulse);
    CHECK(x.final_alignment == y.final_alignment);
    CHECK(x.ltp == (x.final_alignment > kLtpAlignmentThreshold));
}

} // TEST_SUITE
