#pragma once

#include <string>

#include "gapflow/spectral_domain.hpp"
#include "gapflow/types.hpp"

namespace gapflow {

/// Divisor state in phase coordinates together with the three flow clocks.
struct FlowState {
    PhaseVector y;
    GapSet g;
    double x = 0.0;
    double t = 0.0;
    double beta = 0.0;
};

/// Convention resolved by the constant-solution oracle: sign of the mu_j Q1
/// term in the time field and the clock ratio between the NLS flow and the
/// second AKNS flow.  sign_s = 0 marks an uncalibrated convention.
struct TimeConvention {
    int sign_s = 0;
    double kappa_t = 0.0;
    double max_phase_error = 0.0;
    double printed_field_value = 0.0;  // printed field at c = 1, mu = 1
    double oracle_rate = 0.0;          // oracle rate at the same state
    std::string table;                 // per-candidate mismatch table

    bool calibrated() const { return sign_s != 0; }
};

/// W_j = prod_{l != j} sqrt((a_l - mu_j)(b_l - mu_j)/(mu_l - mu_j)^2),
/// positive branch; empty product = 1.
double weight_W(std::size_t j, const Divisor& D, const GapSet& g);

/// dy_j/dbeta = -W_j / 2.
Vec field_rotation(const PhaseVector& y, const GapSet& g);

/// dy_j/dx = (Q1/2 + mu_j) W_j.
Vec field_psi(const PhaseVector& y, const GapSet& g);

/// dy_j/dt = kappa_t (Q2/4 + Q1^2/8 + s mu_j Q1 / 2 + mu_j^2) W_j in the NLS
/// clock, with (s, kappa_t) from the calibrated convention.
Vec field_xi(const PhaseVector& y, const GapSet& g, const TimeConvention& conv);

/// The printed form of the time field (s = -1, kappa_t = 1), kept evaluable
/// for the mismatch report.
Vec field_xi_printed(const PhaseVector& y, const GapSet& g);

/// Determines (s, kappa_t) in {+-1} x {1/2, 1, 2} by integrating the time
/// flow against the explicit divisor trajectory mu(t) = c cos(2 c^2 t) of the
/// constant solution on the symmetric one-gap set (-c, c).
TimeConvention calibrate_time_field(const GapSet& g_onegap);

/// Integrates the time, translation, and rotation fields sequentially.
FlowState evolve(const FlowState& s, double dx, double dt, double dbeta,
                 double tol = 1e-10, const TimeConvention* conv = nullptr);

/// Divisor of e^{i dbeta} phi from the divisor of phi.
Divisor rotate_divisor(const Divisor& D, const GapSet& g, double dbeta,
                       double tol = 1e-10);

/// phi at the state, via the trace formulas on D and the -pi/2 rotate.
cplx field_at(const PhaseVector& y, const GapSet& g, double tol = 1e-10);

}  // namespace gapflow
