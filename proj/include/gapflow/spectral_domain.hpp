#pragma once

#include <optional>

#include "gapflow/types.hpp"

namespace gapflow {

/// mu_j = a_j + gamma_j sin^2(y_j), eps_j = sgn sin(2 y_j); eps = 0 at
/// edge-identified points.
Divisor phases_to_divisor(const PhaseVector& y, const GapSet& g);

/// Inverse of phases_to_divisor with the branch y_j in [0, pi).
PhaseVector divisor_to_phases(const Divisor& D, const GapSet& g);

/// C_j = sup_{z in G_j} ( prod_{G_k < G_j} (a_k - z)/(b_k - z)
///                      * prod_{G_j < G_k} (b_k - z)/(a_k - z) )^{1/2},
/// maximized over a Chebyshev grid plus the endpoint limits.
Vec comparability_constants(const GapSet& g, int grid = 256);

/// Declared decay of gap lengths beyond the truncation, used to bound the
/// tail contributions of the Craig sums.
enum class TailKind { none, exponential, power };

struct TailModel {
    TailKind kind = TailKind::none;
    double amplitude = 0.0;  // gamma_k <= amplitude * decay(|k|) beyond truncation
    double rate = 0.0;       // e^{-rate |k|} or |k|^{-rate}
    double spacing = 1.0;    // distance between consecutive tail gap centers
};

struct CraigReport {
    double sum1 = 0.0;  // sum_k (1 + eta_{k0}) C_k gamma_k^{1/2}
    double sup2 = 0.0;  // sup_j sum_{k != j} C_j^3 C_k^2 (1 + eta_{0j}^2) gamma_j^{1/2} gamma_k^{1/2} / eta_{jk}
    double sup3 = 0.0;  // sup_j sup_{k != j} gamma_j^{1/2} gamma_k^{1/2} / (gamma_j^delta eta_{jk})
    double tail1 = 0.0;
    double tail2 = 0.0;
    double tail3 = 0.0;
    bool finite1 = true;
    bool finite2 = true;
    bool finite3 = true;
    bool satisfied() const { return finite1 && finite2 && finite3; }
};

CraigReport craig_report(const GapSet& g, double delta, const TailModel& tail = {});

/// Minimum over sampled lambda in E intersect window and dyadic h of
/// |E cap (lambda - h, lambda + h)| / (2h), by exact interval arithmetic.
double homogeneity_estimate(const GapSet& g, double lambda_min, double lambda_max, int grid = 64);

}  // namespace gapflow
