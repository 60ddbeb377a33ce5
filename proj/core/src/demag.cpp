#include "mtjsyn/device.hpp"
#include "mtjsyn/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>

namespace mtjsyn {

namespace {

constexpr double kPi = std::numbers::pi;
// Upper limit of the radial wavenumber integral, in panels of width pi.
constexpr int kPanels = 1000;
// Azimuthal nodes; the integrand is smooth and periodic so the trapezoid rule converges spectrally.
constexpr int kAzimuthNodes = 96;

// Exponential integral E_3(x) for x > 0.
double expint_e3(double x) {
    const double e1 = -std::expint(-x);
    return 0.5 * (std::exp(-x) * (1.0 - x) + x * x * e1);
}

// F(s) = int_0^inf J1(q)^2 (1 - exp(-q s)) / q^2 dq
double thickness_kernel(double s) {
    using boost::math::quadrature::gauss;
    auto integrand = [s](double q) {
        const double j = boost::math::cyl_bessel_j(1, q);
        return j * j * -std::expm1(-q * s) / (q * q);
    };
    double sum = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        sum += gauss<double, 20>::integrate(integrand, i * kPi, (i + 1) * kPi);
    }
    // Tail with J1^2 replaced by its mean 1/(pi q).
    const double Q = kPanels * kPi;
    sum += (0.5 - expint_e3(Q * s)) / (kPi * Q * Q);
    return sum;
}

} // namespace

DemagTensor demag_factors(const DeviceParams &params) {
    if (!(params.axis_a > 0.0) || !(params.axis_b > 0.0) || !(params.thickness > 0.0)) {
        throw ConfigError("demag_factors: dimensions must be positive");
    }
    const double A = 0.5 * params.axis_a; // semi-axis along y
    const double B = 0.5 * params.axis_b; // semi-axis along z
    const double t = params.thickness;

    // Fourier-space magnetometric factors of an elliptic cylinder:
    //   N_x = (A B / (pi t)) int dpsi F(t/rho)/rho
    //   N_y = B/(A+B) - (A B / (pi t)) int dpsi cos^2(psi) F(t/rho)/rho
    // with rho(psi)^2 = A^2 cos^2 psi + B^2 sin^2 psi.
    double total = 0.0;
    double along_y = 0.0;
    double along_z = 0.0;
    if (A == B) {
        total = 2.0 * kPi * thickness_kernel(t / A) / A;
        along_y = 0.5 * total;
        along_z = along_y;
    } else {
        // rho(psi) is symmetric about both axes: evaluate the first quadrant, weight by four
        const double h = 2.0 * kPi / kAzimuthNodes;
        for (int i = 0; i < kAzimuthNodes / 4; ++i) {
            const double psi = (i + 0.5) * h;
            const double c = std::cos(psi);
            const double s = std::sin(psi);
            const double rho = std::sqrt(A * A * c * c + B * B * s * s);
            const double w = 4.0 * h * thickness_kernel(t / rho) / rho;
            total += w;
            along_y += w * c * c;
            along_z += w * s * s;
        }
    }
    const double pref = A * B / (kPi * t);
    DemagTensor n;
    n.N_x = pref * total;
    n.N_y = B / (A + B) - pref * along_y;
    n.N_z = A / (A + B) - pref * along_z;
    return n;
}

} // namespace mtjsyn
