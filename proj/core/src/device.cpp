#include "mtjsyn/device.hpp"

#include "mtjsyn/constants.hpp"
#include "mtjsyn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace mtjsyn {

using C = PhysicalConstants;

DeviceParams DeviceParams::reference() {
    DeviceParams p;
    p.E_B = barrier_from_kT(31.44, p.T_K);
    return p;
}

double DeviceParams::volume() const { return std::numbers::pi / 4.0 * axis_a * axis_b * thickness; }

void DeviceParams::validate() const {
    auto fail = [](const std::string &what) { throw ConfigError("invalid device: " + what); };
    if (!(axis_a > 0.0)) fail("axis_a must be > 0");
    if (!(axis_b > 0.0)) fail("axis_b must be > 0");
    if (!(thickness > 0.0)) fail("thickness must be > 0");
    if (!(M_s > 0.0)) fail("M_s must be > 0");
    if (!(alpha >= 0.0)) fail("alpha must be >= 0");
    if (!(eta > 0.0 && eta <= 1.0)) fail("eta must be in (0, 1]");
    if (!(E_B >= 0.0)) fail("E_B must be >= 0");
    if (!(G_AP > 0.0)) fail("G_AP must be > 0");
    if (!(G_P > G_AP)) fail("G_P must exceed G_AP");
    if (!(T_K >= 0.0)) fail("T_K must be >= 0");
    if (std::abs(norm(m_p) - 1.0) > 1e-9) fail("m_p must be a unit vector");
}

double anisotropy_field(const DeviceParams &params) {
    const double v = params.volume();
    if (!(v > 0.0) || !(params.M_s > 0.0)) {
        throw ConfigError("anisotropy_field: volume and M_s must be positive");
    }
    return 2.0 * params.E_B / (C::mu_0 * params.M_s * v);
}

double uniaxial_field(const DeviceParams &params, const DemagTensor &demag) {
    return anisotropy_field(params) + params.M_s * (demag.N_x - std::min(demag.N_y, demag.N_z));
}

double num_spins(const DeviceParams &params) { return params.M_s * params.volume() / C::mu_B; }

double conductance_from_alignment(double cos_theta, const DeviceParams &params) {
    // cos^2(theta/2) = (1 + cos theta) / 2
    const double c2 = 0.5 * (1.0 + std::clamp(cos_theta, -1.0, 1.0));
    return params.G_P * c2 + params.G_AP * (1.0 - c2);
}

double conductance(const Vector3 &m, const DeviceParams &params) {
    return conductance_from_alignment(dot(m, params.m_p), params);
}

double energy(double theta, const DeviceParams &params) {
    const double s = std::sin(theta);
    return params.E_B * s * s;
}

double retention_lifetime(const DeviceParams &params, double attempt_time) {
    if (!(attempt_time > 0.0)) throw ConfigError("retention_lifetime: attempt_time must be > 0");
    if (params.E_B == 0.0) return attempt_time;
    if (!(params.T_K > 0.0)) throw ConfigError("retention_lifetime: T_K must be > 0 for a finite barrier");
    return attempt_time * std::exp(params.E_B / (C::k_B * params.T_K));
}

double barrier_from_kT(double barrier_kT, double T_K) { return barrier_kT * C::k_B * T_K; }

} // namespace mtjsyn
