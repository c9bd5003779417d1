#pragma once

#include <vector>

#include "gapflow/types.hpp"

namespace gapflow {

/// Periodic space-time samples: u[i] holds the field at time t[i] on the
/// uniform grid x[j] = x0 + j box / n, j = 0..n-1.
struct FieldGrid {
    double box = 0.0;
    double x0 = 0.0;
    Vec t;
    std::vector<CVec> u;

    int nx() const { return u.empty() ? 0 : int(u.front().size()); }
    double dx() const { return box / nx(); }
};

/// Strang split-step for i u_t = -u_xx + 2 |u|^2 u on a periodic box:
/// half a nonlinear phase rotation, a spectral linear step, half a rotation.
/// Snapshots at n_out equispaced times including both ends.  Throws when the
/// spectral tail blows up (top-sixth energy fraction above 1e-6 of the total)
/// or the field leaves a fixed amplitude guard.
FieldGrid split_step_evolve(const CVec& u0, double box, double dt, double T,
                            int n_out = 33, double x0 = 0.0);

/// c e^{i beta} e^{-2 i c^2 t}.
cplx constant_oracle(double c, double beta, double t);

/// Mass int |u|^2 and energy int |u_x|^2 + |u|^4 of one snapshot.
std::pair<double, double> mass_energy(const FieldGrid& g, int row);

struct TrajectoryDistance {
    double sup_error = 0.0;
    double l2_error = 0.0;
    double sup_u = 0.0;   // sup |u| of the first field
    double sup_ux = 0.0;  // sup |d_x u| of the first field (spectral)
};

/// Pointwise and discrete L^2 distance on the common grid; buffer is the
/// fraction of the box masked at each boundary.  Throws on grid mismatch.
TrajectoryDistance compare_trajectories(const FieldGrid& a, const FieldGrid& b,
                                        double buffer = 0.0);

struct AlmostPeriods {
    Vec shifts;           // all grid shifts with sup_x |u(x) - u(x-T)| < eps
    double max_gap = 0.0;  // largest gap between consecutive almost-periods
};

/// Scans shifts T = m h, 0 < T <= max_shift, comparing on the overlap (no
/// wraparound).  Throws if max_shift exceeds half the sampling window.
AlmostPeriods almost_period_search(const CVec& u, double h, double eps,
                                   double max_shift);

}  // namespace gapflow
