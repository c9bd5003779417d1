#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gapflow {

/// Dormand-Prince 5(4) embedded pair with PI step-size control.
/// State must support scaled addition and expose .norm() (Eigen types do).
/// f(t, y) -> dy/dt.
template <class State, class F>
State rk45(F&& f, State y, double t0, double t1, double tol,
           int max_steps = 2'000'000) {
    if (t1 == t0) return y;
    const double dir = (t1 > t0) ? 1.0 : -1.0;
    double t = t0;
    double h = dir * std::min(std::abs(t1 - t0), 0.1);
    double err_prev = 1.0;

    // Dormand-Prince coefficients.
    static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static const double a21 = 1.0 / 5;
    static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
    static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static const double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                        e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                        e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    State k1 = f(t, y);
    for (int step = 0; step < max_steps; ++step) {
        if (dir * (t - t1) >= 0) return y;
        if (dir * (t + h - t1) > 0) h = t1 - t;
        if (std::abs(h) < 1e-15 * (1.0 + std::abs(t)))
            throw std::runtime_error("rk45: step size underflow");

        State k2 = f(t + c2 * h, y + h * (a21 * k1));
        State k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        State k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        State k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        State k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        State y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        State k7 = f(t + h, y_new);
        State err_v = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        const double sc = tol * (1.0 + std::max(y.norm(), y_new.norm()));
        const double err = err_v.norm() / sc;
        if (!std::isfinite(err)) throw std::runtime_error("rk45: non-finite field value");

        if (err <= 1.0) {
            t += h;
            y = y_new;
            k1 = k7;  // FSAL
            const double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) *
                               std::pow(err_prev, 0.4 / 5.0);
            h *= std::clamp(fac, 0.2, 5.0);
            err_prev = std::max(err, 1e-10);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
        }
    }
    throw std::runtime_error("rk45: step limit exceeded");
}

/// Classical fixed-step RK4; used for long cocycle integrations where the
/// cost of error control dominates.
template <class State, class F>
State rk4_fixed(F&& f, State y, double t0, double t1, double h) {
    const double dir = (t1 > t0) ? 1.0 : -1.0;
    h = dir * std::abs(h);
    double t = t0;
    while (dir * (t1 - t) > 1e-14 * (1.0 + std::abs(t1))) {
        double step = h;
        if (dir * (t + step - t1) > 0) step = t1 - t;
        State k1 = f(t, y);
        State k2 = f(t + 0.5 * step, y + (0.5 * step) * k1);
        State k3 = f(t + 0.5 * step, y + (0.5 * step) * k2);
        State k4 = f(t + step, y + step * k3);
        y = y + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += step;
    }
    return y;
}

}  // namespace gapflow
