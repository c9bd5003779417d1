#pragma once

#include <vector>

#include "gapflow/direct_spectral.hpp"
#include "gapflow/types.hpp"

namespace gapflow {

/// L^2 norms on [0, L] of A + xi B and A - xi B, where the transfer matrix
/// at real lambda is written T = [[A, B], [conj B, conj A]] and |xi| = 1.
struct PartialNorms {
    double L = 0.0;
    cplx xi;
    double n_plus = 0.0;
    double n_minus = 0.0;
};

/// Accumulates |A +- xi B|^2 along the same integration as the transfer
/// matrix (augmented state, shared nodes).
PartialNorms partial_norms(const QPotential& p, double lambda, cplx xi,
                           double L, const Vec& theta, double tol = 1e-10);

/// Unique root of 2 eps n_+(L) n_-(L) = 1.
double epsilon_of_L(const PartialNorms& n);

/// phi~(x) = conj(phi(-x)), the potential whose right half line matches the
/// left half line of phi; realized by conjugating the Fourier coefficients.
/// Evaluate it at -theta to reflect a torus orbit started at theta.
QPotential reflected_potential(const QPotential& p);

struct SchurEstimate {
    cplx s;
    double radius = 0.0;
    double length = 0.0;
};

/// Weyl-disk center at z, with the integration length doubled until the
/// radius drops below resolution (or the cap is hit; the caller decides
/// whether the returned radius is good enough).
SchurEstimate schur_estimate(const QPotential& p, cplx z, const Vec& theta,
                             double resolution = 1e-6, double cap = 3e4);

struct JLRow {
    double L = 0.0;
    double eps = 0.0;
    double ratio = 0.0;
    double radius = 0.0;
    bool inside = false;
    bool inconclusive = false;
};

struct JLReport {
    std::vector<JLRow> rows;
    bool all_pass = true;
};

/// For each L in the grid: eps = eps(xi, L), s = s_+(lambda + i eps), and the
/// two-sided check 3 - sqrt(8) <= |F_xi| n_+/n_- <= 3 + sqrt(8) with
/// F_xi = (1 + xi s)/(1 - xi s).  A row whose disk radius exceeds resolution
/// is inconclusive and fails the report.
JLReport jl_ratio_check(const QPotential& p, double lambda, cplx xi,
                        const Vec& L_grid, const Vec& theta,
                        double resolution = 1e-6);

struct MeasureRow {
    double eps = 0.0;
    double im_M = 0.0;
    double bound = 0.0;
    double radius = 0.0;
    bool holds = false;
    bool inconclusive = false;
};

struct MeasureReport {
    std::vector<MeasureRow> rows;
    bool all_pass = true;
};

/// Im M(lambda + i eps) <= 2 (3 + sqrt 8) sup_{0 <= x <= 1/(2 eps)}
/// ||T(lambda, x)||^2, with M = (m_+ m_- - 1)/(m_+ + m_-) and m_- taken from
/// the reflected potential.
MeasureReport measure_bound_check(const QPotential& p, double lambda,
                                  const Vec& eps_grid, const Vec& theta,
                                  double resolution = 1e-3);

}  // namespace gapflow
