#pragma once

#include "mtjsyn/vector3.hpp"

namespace mtjsyn {

/// Geometry, material and readout parameters of a single MTJ, in SI units.
///
/// Lab frame: +x is the film normal, which is also the free-layer easy axis
/// and the pinned-layer direction. The elliptical cross-section lies in the
/// y-z plane with full axis lengths axis_a (along y) and axis_b (along z).
struct DeviceParams {
    double axis_a = 40e-9;     ///< in-plane ellipse axis along y [m]
    double axis_b = 40e-9;     ///< in-plane ellipse axis along z [m]
    double thickness = 1.5e-9; ///< free-layer thickness, along x [m]
    double M_s = 1.0e6;        ///< saturation magnetization [A/m]
    double alpha = 0.0122;     ///< Gilbert damping
    double eta = 0.5;          ///< spin-polarization efficiency of the pinned layer
    double E_B = 0.0;          ///< energy barrier [J]; reference() sets 31.44 k_B T
    double G_P = 1.0e-3;       ///< parallel conductance [S]
    double G_AP = 0.5e-3;      ///< antiparallel conductance [S]
    double T_K = 300.0;        ///< temperature [K]
    Vector3 m_p{1.0, 0.0, 0.0};     ///< pinned-layer unit magnetization
    Vector3 applied_field{};        ///< external field [A/m], zero in all published experiments

    /// Reference device: 40 x 40 x 1.5 nm disk, M_s = 1000 kA/m, alpha = 0.0122,
    /// eta = 0.5, E_B = 31.44 k_B T at 300 K, G = 0.5-1 mS.
    static DeviceParams reference();

    /// (pi/4) a b t
    double volume() const;

    /// Throws ConfigError naming the first violated invariant.
    void validate() const;
};

/// Magnetometric demagnetizing factors along the lab axes.
struct DemagTensor {
    double N_x = 0.0; ///< along the film normal
    double N_y = 0.0;
    double N_z = 0.0;

    double trace() const { return N_x + N_y + N_z; }
};

/// Demagnetizing factors of a uniformly magnetized elliptic cylinder.
DemagTensor demag_factors(const DeviceParams &params);

/// H_k = 2 E_B / (mu_0 M_s V): net uniaxial field reproducing the configured barrier.
double anisotropy_field(const DeviceParams &params);

/// Coefficient of the easy-axis field term in H_eff.
///
/// The barrier E_B is the net barrier after shape anisotropy, so the
/// interfacial (perpendicular) anisotropy must overcome the shape term:
/// H_u = H_k + M_s (N_x - min(N_y, N_z)). For a circular disk the transverse
/// stiffness is isotropic and the energy reduces exactly to E_B sin^2(theta).
double uniaxial_field(const DeviceParams &params, const DemagTensor &demag);

/// N_s = M_s V / mu_B
double num_spins(const DeviceParams &params);

/// G = G_P cos^2(theta/2) + G_AP sin^2(theta/2), cos(theta) = m . m_p
double conductance(const Vector3 &m, const DeviceParams &params);

/// Conductance from the alignment cos(theta) = m . m_p directly.
double conductance_from_alignment(double cos_theta, const DeviceParams &params);

/// E(theta) = E_B sin^2(theta)
double energy(double theta, const DeviceParams &params);

/// Neel-Arrhenius lifetime attempt_time * exp(E_B / (k_B T)).
double retention_lifetime(const DeviceParams &params, double attempt_time);

/// Barrier in Joules for a barrier expressed in units of k_B T.
double barrier_from_kT(double barrier_kT, double T_K);

inline constexpr double kDefaultAttemptTime = 1e-9;

} // namespace mtjsyn
