#pragma once

#include "mtjsyn/device.hpp"
#include "mtjsyn/rng.hpp"
#include "mtjsyn/vector3.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace mtjsyn {

/// Free-layer unit magnetization at simulation time t [s].
struct MagnetizationState {
    Vector3 m{};
    double t = 0.0;
};

/// Total field acting on the free layer [A/m].
struct EffectiveField {
    Vector3 H{};
};

struct StepperConfig {
    double dt = 1e-12;           ///< integration step [s]
    bool renormalize = true;     ///< project back onto |m| = 1 after each corrector
    bool include_alpha_torque_correction = true; ///< keep the alpha (m x I_s) term of the explicit form
    double sample_every = 10e-12; ///< trace sampling period [s]

    void validate() const;

    /// Whole number of steps covering `duration` (rounded to nearest).
    std::int64_t steps_for(double duration) const;
};

/// Piecewise-constant charge-current program I_Q(t).
struct CurrentSegment {
    double duration = 0.0; ///< [s]
    double current = 0.0;  ///< I_Q [A], positive drives AP -> P
};

struct CurrentProgram {
    std::vector<CurrentSegment> segments;

    double duration() const;
    /// Integral of I_Q over the program [C].
    double charge() const;
};

struct TraceSample {
    double t = 0.0;       ///< [s]
    Vector3 m{};
    double theta = 0.0;   ///< angle between m and m_p [rad]
    double G = 0.0;       ///< conductance [S]
    double current = 0.0; ///< I_Q applied over the step ending at t [A]
};

using Trace = std::vector<TraceSample>;

/// H = -M_s N m + H_u (m . x) x + H_applied + thermal
EffectiveField effective_field(const MagnetizationState &state, const DeviceParams &device, const DemagTensor &demag,
                               const Vector3 &thermal);

/// Per-component standard deviation of the thermal field for step dt [A/m].
double thermal_field_sigma(const DeviceParams &device, double dt);

/// One draw of the thermal field; three Gaussians from `stream`.
Vector3 thermal_field(const DeviceParams &device, double dt, RngStream &stream);

/// Explicit right-hand side of the Gilbert equation with Slonczewski torque:
///   (1 + a^2) dm/dt = -g m x H - a g m x (m x H) + [m x (I_s x m) + a m x I_s] / (q N_s)
/// where `spin_current` is I_s = eta I_Q m_p [A]. The result is tangent to the sphere at m.
Vector3 llg_rhs(const MagnetizationState &state, const EffectiveField &field, const Vector3 &spin_current,
                const DeviceParams &device, bool include_alpha_torque_correction = true);

/// Stochastic Heun integrator bound to one device.
///
/// Holds the derived coefficients (N_s, H_u, thermal sigma) so that the hot
/// loop only evaluates fields and cross products. The thermal field is drawn
/// once per step and shared by predictor and corrector (Stratonovich).
class LlgIntegrator {
  public:
    LlgIntegrator(const DeviceParams &device, const DemagTensor &demag, const StepperConfig &config);

    MagnetizationState step(const MagnetizationState &state, double current, RngStream &stream) const;

    /// Advance `steps` steps at constant current.
    MagnetizationState advance(MagnetizationState state, double current, std::int64_t steps, RngStream &stream) const {
        for (std::int64_t i = 0; i < steps; ++i) state = step(state, current, stream);
        return state;
    }

    /// Advance by `duration` seconds (rounded to whole steps) at constant current.
    MagnetizationState advance_for(const MagnetizationState &state, double current, double duration,
                                   RngStream &stream) const {
        return advance(state, current, config_.steps_for(duration), stream);
    }

    Trace run(MagnetizationState state, const CurrentProgram &program, RngStream &stream) const;

    TraceSample sample(const MagnetizationState &state, double current) const;

    const DeviceParams &device() const { return device_; }
    const DemagTensor &demag() const { return demag_; }
    const StepperConfig &config() const { return config_; }
    double thermal_sigma() const { return sigma_; }

  private:
    Vector3 rhs(const Vector3 &m, const Vector3 &thermal, double current) const;

    DeviceParams device_;
    DemagTensor demag_;
    StepperConfig config_;
    double H_u_;
    double sigma_;
    double torque_coeff_; // 1 / (q N_s)
    double inv_one_plus_alpha2_;
};

MagnetizationState step_heun(const MagnetizationState &state, double current, const DeviceParams &device,
                             const DemagTensor &demag, const StepperConfig &config, RngStream &stream);

Trace run(const MagnetizationState &state, const CurrentProgram &program, const DeviceParams &device,
          const DemagTensor &demag, const StepperConfig &config, RngStream &stream);

/// Antiparallel starting state.
///
/// For T > 0 the polar angle from -m_p is drawn from the Boltzmann
/// distribution of the AP well and then relaxed for `equilibration` with no
/// current. For T = 0 the state is a deterministic 1 degree tilt from -x.
/// The returned state has t = 0.
MagnetizationState initial_ap_state(const LlgIntegrator &integrator, RngStream &stream,
                                    double equilibration = 1e-9);

inline constexpr double kZeroTemperatureTilt = std::numbers::pi / 180.0;

} // namespace mtjsyn
