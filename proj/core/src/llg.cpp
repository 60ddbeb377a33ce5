#include "mtjsyn/llg.hpp"

#include "mtjsyn/constants.hpp"
#include "mtjsyn/errors.hpp"

#include <cmath>
#include <numbers>

namespace mtjsyn {

using C = PhysicalConstants;

namespace {

Vector3 explicit_rhs(const Vector3 &m, const Vector3 &H, const Vector3 &I_s, double alpha, double torque_coeff,
                     double inv_one_plus_alpha2, bool alpha_torque) {
    const Vector3 mxH = cross(m, H);
    const Vector3 mxmxH = cross(m, mxH);
    const Vector3 mxI = cross(m, I_s);
    // m x (I_s x m) = I_s - m (m . I_s)
    Vector3 torque = cross(m, cross(I_s, m));
    if (alpha_torque) torque += alpha * mxI;
    return inv_one_plus_alpha2 * (-C::gamma * mxH - alpha * C::gamma * mxmxH + torque_coeff * torque);
}

Vector3 field_at(const Vector3 &m, const DeviceParams &device, const DemagTensor &demag, double H_u,
                 const Vector3 &thermal) {
    Vector3 H{-device.M_s * demag.N_x * m.x, -device.M_s * demag.N_y * m.y, -device.M_s * demag.N_z * m.z};
    H.x += H_u * m.x;
    return H + device.applied_field + thermal;
}

} // namespace

void StepperConfig::validate() const {
    if (!(dt > 0.0)) throw ConfigError("invalid stepper: dt must be > 0");
    if (!(sample_every >= dt)) throw ConfigError("invalid stepper: sample_every must be >= dt");
}

std::int64_t StepperConfig::steps_for(double duration) const {
    return static_cast<std::int64_t>(std::llround(duration / dt));
}

double CurrentProgram::duration() const {
    double d = 0.0;
    for (const auto &s : segments) d += s.duration;
    return d;
}

double CurrentProgram::charge() const {
    double c = 0.0;
    for (const auto &s : segments) c += s.duration * s.current;
    return c;
}

EffectiveField effective_field(const MagnetizationState &state, const DeviceParams &device, const DemagTensor &demag,
                               const Vector3 &thermal) {
    return {field_at(state.m, device, demag, uniaxial_field(device, demag), thermal)};
}

double thermal_field_sigma(const DeviceParams &device, double dt) {
    if (device.T_K < 0.0) throw ConfigError("thermal_field: T_K must be >= 0");
    if (!(dt > 0.0)) throw ConfigError("thermal_field: dt must be > 0");
    const double a = device.alpha;
    return std::sqrt(a / (1.0 + a * a) * 2.0 * C::k_B * device.T_K /
                     (C::gamma * C::mu_0 * device.M_s * device.volume() * dt));
}

Vector3 thermal_field(const DeviceParams &device, double dt, RngStream &stream) {
    const double sigma = thermal_field_sigma(device, dt);
    if (sigma == 0.0) return {};
    const double x = stream.gaussian();
    const double y = stream.gaussian();
    const double z = stream.gaussian();
    return Vector3{x, y, z} * sigma;
}

Vector3 llg_rhs(const MagnetizationState &state, const EffectiveField &field, const Vector3 &spin_current,
                const DeviceParams &device, bool include_alpha_torque_correction) {
    const double a = device.alpha;
    return explicit_rhs(state.m, field.H, spin_current, a, 1.0 / (C::q * num_spins(device)), 1.0 / (1.0 + a * a),
                        include_alpha_torque_correction);
}

LlgIntegrator::LlgIntegrator(const DeviceParams &device, const DemagTensor &demag, const StepperConfig &config)
    : device_(device), demag_(demag), config_(config) {
    device_.validate();
    config_.validate();
    H_u_ = uniaxial_field(device_, demag_);
    sigma_ = thermal_field_sigma(device_, config_.dt);
    torque_coeff_ = 1.0 / (C::q * num_spins(device_));
    inv_one_plus_alpha2_ = 1.0 / (1.0 + device_.alpha * device_.alpha);
}

Vector3 LlgIntegrator::rhs(const Vector3 &m, const Vector3 &thermal, double current) const {
    const Vector3 H = field_at(m, device_, demag_, H_u_, thermal);
    const Vector3 I_s = (device_.eta * current) * device_.m_p;
    return explicit_rhs(m, H, I_s, device_.alpha, torque_coeff_, inv_one_plus_alpha2_,
                        config_.include_alpha_torque_correction);
}

MagnetizationState LlgIntegrator::step(const MagnetizationState &state, double current, RngStream &stream) const {
    Vector3 thermal{};
    if (sigma_ > 0.0) {
        const double x = stream.gaussian();
        const double y = stream.gaussian();
        const double z = stream.gaussian();
        thermal = Vector3{x, y, z} * sigma_;
    }
    const double dt = config_.dt;
    const Vector3 k1 = rhs(state.m, thermal, current);
    const Vector3 predictor = state.m + dt * k1;
    const Vector3 k2 = rhs(predictor, thermal, current);
    Vector3 m = state.m + (0.5 * dt) * (k1 + k2);
    if (config_.renormalize) m = normalized(m);
    return {m, state.t + dt};
}

TraceSample LlgIntegrator::sample(const MagnetizationState &state, double current) const {
    return {state.t, state.m, angle_between(state.m, device_.m_p), conductance(state.m, device_), current};
}

Trace LlgIntegrator::run(MagnetizationState state, const CurrentProgram &program, RngStream &stream) const {
    const std::int64_t stride = std::max<std::int64_t>(1, config_.steps_for(config_.sample_every));
    Trace trace;
    const double first_current = program.segments.empty() ? 0.0 : program.segments.front().current;
    trace.push_back(sample(state, first_current));
    std::int64_t count = 0;
    bool last_sampled = true;
    double last_current = first_current;
    for (const auto &segment : program.segments) {
        const std::int64_t n = config_.steps_for(segment.duration);
        for (std::int64_t i = 0; i < n; ++i) {
            state = step(state, segment.current, stream);
            ++count;
            last_sampled = count % stride == 0;
            if (last_sampled) trace.push_back(sample(state, segment.current));
        }
        last_current = segment.current;
    }
    if (!last_sampled) trace.push_back(sample(state, last_current));
    return trace;
}

MagnetizationState step_heun(const MagnetizationState &state, double current, const DeviceParams &device,
                             const DemagTensor &demag, const StepperConfig &config, RngStream &stream) {
    return LlgIntegrator(device, demag, config).step(state, current, stream);
}

Trace run(const MagnetizationState &state, const CurrentProgram &program, const DeviceParams &device,
          const DemagTensor &demag, const StepperConfig &config, RngStream &stream) {
    if (!(program.duration() > 0.0)) throw ConfigError("run: program duration must be > 0");
    return LlgIntegrator(device, demag, config).run(state, program, stream);
}

MagnetizationState initial_ap_state(const LlgIntegrator &integrator, RngStream &stream, double equilibration) {
    const DeviceParams &device = integrator.device();
    if (device.T_K == 0.0) {
        return {unit_vector_from_angles(std::numbers::pi - kZeroTemperatureTilt, 0.0), 0.0};
    }
    // Rejection sample u = cos(theta') on [0, 1], theta' measured from -x;
    // density exp(-beta (1 - u^2)) in u already carries the sin(theta') Jacobian.
    const double beta = device.E_B / (C::k_B * device.T_K);
    double u = 0.0;
    do {
        u = stream.uniform();
    } while (stream.uniform() >= std::exp(-beta * (1.0 - u * u)));
    const double phi = 2.0 * std::numbers::pi * stream.uniform();
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    MagnetizationState state{{-u, s * std::cos(phi), s * std::sin(phi)}, 0.0};
    state = integrator.advance_for(state, 0.0, equilibration, stream);
    state.t = 0.0;
    return state;
}

} // namespace mtjsyn
