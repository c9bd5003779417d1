#include "gapflow/dubrovin.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gapflow/ode.hpp"
#include "gapflow/reflectionless.hpp"

namespace gapflow {

double weight_W(std::size_t j, const Divisor& D, const GapSet& g) {
    check_divisor(D, g);
    const double mu_j = D.points.at(j).mu;
    double acc = 1.0;
    for (std::size_t l = 0; l < g.size(); ++l) {
        if (l == j) continue;
        const double d = D.points[l].mu - mu_j;
        if (d == 0.0) throw std::logic_error("weight_W: coincident divisor points");
        acc *= (g.gaps[l].a - mu_j) * (g.gaps[l].b - mu_j) / (d * d);
    }
    return std::sqrt(acc);
}

Vec field_rotation(const PhaseVector& y, const GapSet& g) {
    const Divisor D = phases_to_divisor(y, g);
    Vec rate(y.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        rate[j] = -0.5 * weight_W(j, D, g);
    return rate;
}

Vec field_psi(const PhaseVector& y, const GapSet& g) {
    const Divisor D = phases_to_divisor(y, g);
    const double q1 = trace_scalars(D, g).first;
    Vec rate(y.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        rate[j] = (0.5 * q1 + D.points[j].mu) * weight_W(j, D, g);
    return rate;
}

namespace {

Vec xi_with(const PhaseVector& y, const GapSet& g, double s, double kappa) {
    const Divisor D = phases_to_divisor(y, g);
    const auto [q1, q2] = trace_scalars(D, g);
    Vec rate(y.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double mu = D.points[j].mu;
        rate[j] = kappa * (0.25 * q2 + 0.125 * q1 * q1 + 0.5 * s * mu * q1 + mu * mu) *
                  weight_W(j, D, g);
    }
    return rate;
}

}  // namespace

Vec field_xi(const PhaseVector& y, const GapSet& g, const TimeConvention& conv) {
    if (!conv.calibrated()) throw std::invalid_argument("field_xi: uncalibrated convention");
    return xi_with(y, g, conv.sign_s, conv.kappa_t);
}

Vec field_xi_printed(const PhaseVector& y, const GapSet& g) {
    return xi_with(y, g, -1.0, 1.0);
}

TimeConvention calibrate_time_field(const GapSet& g_onegap) {
    g_onegap.validate();
    if (g_onegap.size() != 1 || std::abs(g_onegap.gaps[0].a + g_onegap.gaps[0].b) > 1e-14)
        throw std::invalid_argument("calibrate_time_field: need a single symmetric gap");
    const double c = g_onegap.gaps[0].b;
    const double T = 1.0 / (c * c);
    // Oracle u(t) = c e^{-2ic^2 t}: beta(t) = -2c^2 t, y(t) = pi/2 - beta/2.
    auto y_oracle = [c](double t) { return 0.5 * pi + c * c * t; };

    TimeConvention conv;
    std::ostringstream table;
    double best_err = 1e300;
    for (int s : {-1, 1}) {
        for (double kappa : {0.5, 1.0, 2.0}) {
            Vec y0(1);
            y0[0] = y_oracle(0.0);
            double err = 0.0;
            const int checks = 20;
            Vec y = y0;
            for (int i = 1; i <= checks; ++i) {
                const double t0 = T * (i - 1) / checks, t1 = T * i / checks;
                y = rk45([&](double, const Vec& yy) { return xi_with(yy, g_onegap, s, kappa); },
                         y, t0, t1, 1e-12);
                err = std::max(err, std::abs(y[0] - y_oracle(t1)));
            }
            table << "s=" << (s > 0 ? "+1" : "-1") << " kappa_t=" << kappa
                  << " max_phase_error=" << err << "\n";
            if (err < best_err) {
                best_err = err;
                conv.sign_s = s;
                conv.kappa_t = kappa;
                conv.max_phase_error = err;
            }
        }
    }
    conv.table = table.str();
    if (conv.max_phase_error > 1e-8) {
        conv.sign_s = 0;
        throw std::runtime_error("calibrate_time_field: no candidate matches the oracle\n" +
                                 conv.table);
    }
    // Mismatch of the printed field at c = 1, mu = c (y = pi/2), rescaled to
    // the calibrating gap.
    Vec y_top(1);
    y_top[0] = 0.5 * pi;
    conv.printed_field_value = field_xi_printed(y_top, g_onegap)[0];
    conv.oracle_rate = c * c;
    return conv;
}

FlowState evolve(const FlowState& s, double dx, double dt, double dbeta,
                 double tol, const TimeConvention* conv) {
    FlowState out = s;
    if (dt != 0.0) {
        TimeConvention local;
        if (!conv) {
            GapSet one;
            one.gaps = {{-1.0, 1.0}};
            local = calibrate_time_field(one);
            conv = &local;
        }
        out.y = rk45([&](double, const Vec& yy) { return field_xi(yy, out.g, *conv); },
                     Vec(out.y), 0.0, dt, tol);
        out.t += dt;
    }
    if (dx != 0.0) {
        out.y = rk45([&](double, const Vec& yy) { return field_psi(yy, out.g); },
                     Vec(out.y), 0.0, dx, tol);
        out.x += dx;
    }
    if (dbeta != 0.0) {
        out.y = rk45([&](double, const Vec& yy) { return field_rotation(yy, out.g); },
                     Vec(out.y), 0.0, dbeta, tol);
        out.beta += dbeta;
    }
    return out;
}

Divisor rotate_divisor(const Divisor& D, const GapSet& g, double dbeta, double tol) {
    if (g.size() == 0) return D;
    Vec y = divisor_to_phases(D, g);
    y = rk45([&](double, const Vec& yy) { return field_rotation(yy, g); },
             y, 0.0, dbeta, tol);
    return phases_to_divisor(y, g);
}

cplx field_at(const PhaseVector& y, const GapSet& g, double tol) {
    const Divisor D = phases_to_divisor(y, g);
    const Divisor D_rot = rotate_divisor(D, g, -0.5 * pi, tol);
    return reconstruct_field(D, D_rot, g);
}

}  // namespace gapflow
