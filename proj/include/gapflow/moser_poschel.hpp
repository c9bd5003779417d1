#pragma once

#include <utility>
#include <vector>

#include "gapflow/types.hpp"

namespace gapflow {

/// Scalar trig polynomial sum c_n e^{i<n,x>} on T^d.
struct ScalarSeries {
    int d = 1;
    std::vector<std::pair<std::vector<int>, cplx>> modes;

    cplx eval(const Vec& x) const;
    /// sum |c_n| e^{h |n|_1}
    double strip_norm(double h) const;
};

/// Coefficient-level complex conjugate: c_n -> conj(c_{-n}).
ScalarSeries conj_series(const ScalarSeries& s);
ScalarSeries product(const ScalarSeries& a, const ScalarSeries& b);

/// 2x2-matrix-valued trig polynomial.
struct MatSeries {
    int d = 1;
    std::vector<std::pair<std::vector<int>, Mat2c>> modes;

    Mat2c eval(const Vec& x) const;
    double strip_norm(double h) const;  // sum ||coef||_F e^{h |n|_1}
    Mat2c mean() const;                 // the n = 0 coefficient
};

/// Reducible parabolic model: the cocycle has been conjugated by B(theta) in
/// PSU(1,1) to the constant part A = (zeta/2) [[i, -i], [i, -i]].
struct ParabolicModel {
    double zeta = 0.0;
    ScalarSeries b11, b12;  // B = [[b11, b12], [conj b12, conj b11]]
    Vec omega;
    double kappa = 0.0, tau = 0.0;  // Diophantine pair of omega
    double R = 0.0;                 // analyticity strip of B

    Mat2c A() const;
    Mat2c B_at(const Vec& x) const;
    double B_norm(double h) const;  // sum ||B_hat(n)||_F e^{h |n|_1}

    /// Checks the SU(1,1) relation |b11|^2 - |b12|^2 = 1 on a sampling grid
    /// to 1e-8; throws otherwise.
    void validate() const;
};

/// D_tau = 2^{3 tau + 8} Gamma(3 tau + 1).
double averaging_constant(double tau);

/// P = B^{-1} diag(-i, i) B, assembled by Fourier convolution:
/// P11 = -i (|b11|^2 + |b12|^2), P12 = -2i conj(b11) b12, P21 = conj(P12),
/// P22 = -P11.  Validates the model first.
MatSeries perturbation_from_conjugation(const ParabolicModel& m);

struct HomologicalSolution {
    MatSeries Y;
    double residual = 0.0;  // sup norm of d_omega Y - [A,Y] - Delta (P - [P])
};

/// Solves the homological equation mode by mode over 0 < |n|_inf <= N;
/// throws if a divisor <n, omega>, <n, omega> +- zeta falls below the floor
/// kappa / (2 N^tau).
HomologicalSolution homological_solve(const ParabolicModel& m,
                                      const MatSeries& P, double Delta, int N);

struct AveragedModel {
    Mat2c A_tilde;          // A + Delta [P]
    double Delta = 0.0;
    double d = 0.0;         // factorized determinant
    double d_direct = 0.0;  // det(A_tilde), for the dual evaluation
    double denom = 0.0;     // [|b11|^2+|b12|^2]^2 - 4 |[b11 conj(b12)]|^2
};

/// d(Delta) = Delta denom (Delta - zeta ([|b11|^2+|b12|^2] +
/// 2 Re [b11 conj(b12)]) / denom); throws if denom < 1 - 1e-8.
AveragedModel averaged_determinant(const ParabolicModel& m, double Delta);

/// Energy reflection z -> -z: entrywise conjugation of B.
ParabolicModel reflect_energy(const ParabolicModel& m);

struct GapCertificate {
    bool hypothesis = false;
    bool det_bound = false;           // d(Delta) >= Delta^2 / 4
    bool displacement_bound = false;  // rotation-number displacement <= Delta/4
    bool certified = false;
    double gap_bound = 0.0;  // zeta^{1 - nu} when certified
};

/// Certifies |G| <= zeta^{1-nu} when ||B||_R^4 zeta^nu <
/// 2^{-6} D_tau^{-2} kappa^6 R^{2(3 tau + 1)}; requires nu in (0, 1/4).
GapCertificate gap_upper_bound_certificate(const ParabolicModel& m, double nu,
                                           double R);

}  // namespace gapflow
