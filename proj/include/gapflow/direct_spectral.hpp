#pragma once

#include <vector>

#include "gapflow/types.hpp"

namespace gapflow {

/// Analytic quasiperiodic sampling function on T^d.  Mode n contributes
/// phi_hat(n) e^{i<n,omega>x} e^{2 pi i <n,theta>}, so the x-frequency module
/// is <Z^d, omega> and gap k sits near <k,omega>/2.
struct QPotential {
    int d = 1;
    Vec omega;                                            // frequency vector
    std::vector<std::pair<std::vector<int>, cplx>> fourier;  // (n, phi_hat(n))
    double h = 0.0;                                       // analyticity strip
    double kappa = 0.0, tau = 0.0;                        // Diophantine pair

    cplx eval(double x, const Vec& theta) const;
    double norm_h() const;  // sum |phi_hat(n)| e^{2 pi h |n|}
    double inner(const std::vector<int>& n) const;        // <n, omega>

    /// Throws if omega looks rational (d = 1: continued-fraction probe) or
    /// shapes are inconsistent.
    void validate() const;
};

QPotential constant_potential(cplx c);

/// d = 1, phi~ = 2 eps0 cos(2 pi theta) at frequency omega.
QPotential cosine_potential(double omega, double eps0, double h = 0.05);

struct TransferMatrix {
    Mat2c T = Mat2c::Identity();
    Vec theta;
    double x = 0.0;
    cplx z;

    /// ||T* j T - j|| with j = diag(-1, 1); zero for real z in exact arithmetic.
    double su_defect() const;
};

/// Fundamental solution of X' = [[-iz, i phi],[-i conj(phi), iz]] X on [0, x]
/// with X(0) = I.
TransferMatrix transfer(const QPotential& p, cplx z, double x, const Vec& theta,
                        double tol = 1e-11);

/// (1/L) mean over equidistributed theta samples of log||T(z, L, theta)||,
/// integrated in renormalized blocks.
double lyapunov(const QPotential& p, cplx z, double L, int samples = 32,
                double tol = 1e-9);

/// Winding of arg(X1 + i X2) over [0, L] divided by L, signed so that the
/// result is nondecreasing in lambda (rho(lambda) = lambda for phi = 0).
double rotation_number(const QPotential& p, double lambda, double L,
                       double step = 0.01);

struct GapLabel {
    double lo = 0.0, hi = 0.0;       // detected plateau interval
    std::vector<int> k;              // label with 2 rho = <k, omega>
    double rho = 0.0;                // plateau value
    double label_error = 0.0;        // |2 rho - <k, omega>|
    bool ambiguous = false;          // second k within tolerance
    double center() const { return 0.5 * (lo + hi); }
    double size() const { return hi - lo; }
};

struct ScanResult {
    Vec lambda;
    Vec rho;
    std::vector<GapLabel> gaps;
};

/// Scans rho on the grid, detects plateaus, and labels each one by the
/// lattice point with |k| <= k_max minimizing |2 rho - <k, omega>|.
ScanResult ids_and_gaps(const QPotential& p, const Vec& grid, double L,
                        int k_max = 8, double step = 0.01);

/// Refines both edges of the gap labeled k by bisection on
/// 2 rho(lambda) = <k, omega> -+ threshold; returns (lo, hi).
std::pair<double, double> gap_edges_for_label(const QPotential& p,
                                              const std::vector<int>& k, double L,
                                              double threshold, double step = 0.01);

struct WeylDisks {
    Vec lengths;
    CVec centers;
    Vec radii;
    cplx s_plus;         // center of the last disk
    double error = 0.0;  // its radius
};

/// Disks D(z, l) of admissible Schur values from the j-form of the
/// fundamental matrix; throws if the radii fail to decrease.
WeylDisks weyl_disk_schur(const QPotential& p, cplx z, const Vec& lengths,
                          const Vec& theta, double tol = 1e-11);

struct FloquetReport {
    double w_asym_C = 0.0;      // max over the y-grid of y |w(iy) - iz|
    double thouless_gamma = 0.0;    // gamma(lambda0) from the transfer matrix
    double thouless_formula = 0.0;  // same point from the rho-integral formula
    Vec holder_exponents;           // local IDS exponents at sampled points
};

/// w(z) = -gamma(z) + i rho(z) checks: asymptotics on the imaginary axis,
/// the Thouless-type identity at lambda0, and local IDS Holder exponents at
/// the given spectral points.
FloquetReport floquet_checks(const QPotential& p, double lambda0,
                             const Vec& spectral_points, double L = 200.0);

}  // namespace gapflow
