#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's numerical paths.

#include <mtjsyn/vector3.hpp>

#include <cmath>
#include <functional>
#include <algorithm>
#include <numbers>
#include <vector>

namespace mtjsyn::oracle {

inline double adaptive_simpson(const std::function<double(double)> &f, double a, double b, double eps, int depth = 50) {
    auto simpson = [&](double lo, double hi, double flo, double fmid, double fhi) {
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    };
    std::function<double(double, double, double, double, double, double, double, int)> rec =
        [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double tol, int d) {
            const double mid = 0.5 * (lo + hi);
            const double lm = 0.5 * (lo + mid);
            const double rm = 0.5 * (mid + hi);
            const double flm = f(lm);
            const double frm = f(rm);
            const double left = simpson(lo, mid, flo, flm, fmid);
            const double right = simpson(mid, hi, fmid, frm, fhi);
            if (d <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
                return left + right + (left + right - whole) / 15.0;
            }
            return rec(lo, mid, flo, flm, fmid, left, 0.5 * tol, d - 1) +
                   rec(mid, hi, fmid, frm, fhi, right, 0.5 * tol, d - 1);
        };
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    return rec(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), eps, depth);
}

/// Axial demagnetizing factor of a circular cylinder from its surface charges:
/// N = [S_self - S_cross] / (2 pi V), where S_self = 16 pi R^3 / 3 is the
/// self-interaction of a uniformly charged disk and S_cross integrates the
/// pair-distance density 2 pi d A_overlap(d) against 1/sqrt(d^2 + t^2).
inline double cylinder_axial_demag(double radius, double thickness) {
    const double R = radius;
    const double t = thickness;
    const double pi = std::numbers::pi;
    auto overlap = [R](double d) {
        const double u = std::min(1.0, d / (2.0 * R));
        return 2.0 * R * R * std::acos(u) - 0.5 * d * std::sqrt(std::max(0.0, 4.0 * R * R - d * d));
    };
    auto integrand = [&](double d) { return 2.0 * pi * d * overlap(d) / std::sqrt(d * d + t * t); };
    const double scale = R * R * R;
    const double split = std::min(t, 2.0 * R);
    const double cross = adaptive_simpson(integrand, 0.0, split, 1e-13 * scale) +
                         adaptive_simpson(integrand, split, 2.0 * R, 1e-13 * scale);
    const double volume = pi * R * R * t;
    return (16.0 * pi * R * R * R / 3.0 - cross) / (2.0 * pi * volume);
}

/// Solves the implicit Gilbert form v = A + alpha m x v by fixed-point iteration,
/// where A = -gamma m x H + c m x (I_s x m).
inline Vector3 implicit_gilbert_rate(const Vector3 &m, const Vector3 &H, const Vector3 &I_s, double gamma,
                                     double alpha, double torque_coeff) {
    const Vector3 A = -gamma * cross(m, H) + torque_coeff * cross(m, cross(I_s, m));
    Vector3 v = A;
    for (int i = 0; i < 200; ++i) {
        const Vector3 next = A + alpha * cross(m, v);
        if (norm(next - v) <= 1e-17 * norm(next)) return next;
        v = next;
    }
    return v;
}

/// CDF of p(theta) ∝ sin(theta) exp(-beta sin^2 theta) on [0, pi], tabulated by quadrature.
class BoltzmannAngleCdf {
  public:
    explicit BoltzmannAngleCdf(double beta, int n = 20000) : n_(n), cdf_(n + 1, 0.0) {
        const double h = std::numbers::pi / n;
        auto p = [beta](double th) {
            const double s = std::sin(th);
            return s * std::exp(-beta * s * s);
        };
        for (int i = 0; i < n; ++i) {
            const double a = i * h;
            const double b = a + h;
            cdf_[i + 1] = cdf_[i] + h / 6.0 * (p(a) + 4.0 * p(0.5 * (a + b)) + p(b));
        }
        for (auto &c : cdf_) c /= cdf_.back();
    }

    double operator()(double theta) const {
        const double x = std::clamp(theta / std::numbers::pi, 0.0, 1.0) * n_;
        const int i = std::min(static_cast<int>(x), n_ - 1);
        const double f = x - i;
        return cdf_[i] * (1.0 - f) + cdf_[i + 1] * f;
    }

  private:
    int n_;
    std::vector<double> cdf_;
};

} // namespace mtjsyn::oracle
