#pragma once

#include <vector>

#include "gapflow/types.hpp"

namespace gapflow {

/// Two-sheeted curve w^2 = prod_j (z - a_j)(z - b_j) cut along the gaps,
/// with A_j a loop around gap j (j != reference) and B_j the cycle through
/// gap j and the reference gap.  Polynomial coefficients are stored in
/// ascending order.
struct HyperellipticData {
    GapSet g;
    int genus = 0;                   // number of gaps minus one
    std::vector<std::size_t> cycle;  // gap index of each A/B cycle
    Mat holo;        // column k: q of the normalized differential i q(z)/w dz
    Mat char_dens;   // column k: density polynomial of omega(., E_k) on gaps
    Vec rot_dens;    // density polynomial of omega(., E_infinity), deg <= N-1
    CMat B;          // B-period matrix of the normalized differentials
    double cond = 0.0;      // condition number of the normalization system
    double residual = 0.0;  // worst residual of the jump systems
};

HyperellipticData build_curve(const GapSet& g);

/// w(x + i0): boundary value from above of the branch with w ~ z^N at +infinity.
cplx w_upper(const GapSet& g, cplx z);

/// A_c[D](l_k) = sum_j (eps_j/2) int_{a_j}^{mu_j} omega(dt, E_k) mod 1,
/// one coordinate per nonreference gap, in cycle order.
Vec abel_character(const Divisor& D, const HyperellipticData& h);

/// A_r(D) = sum_j -(eps_j/2) int_{a_j}^{mu_j} omega(dxi, E_infinity) mod 1.
double abel_rotation(const Divisor& D, const HyperellipticData& h);

struct FrequencyData {
    Vec eta;        // B_j-periods of the order-0 second-kind integral
    Vec eta1;       // B_j-periods of the order-1 second-kind integral
    double theta0 = 0.0;
    double theta1 = 0.0;
};

/// eta, eta1 part: B-periods of the A-normalized differentials with poles at
/// infinity of orders 2 and 3 (d Theta_0, d Theta_1), signed so that the
/// character coordinates of a translation trajectory advance by -eta/(2 pi)
/// per unit x and -2 eta1/(2 pi) per unit t.
FrequencyData translation_frequencies(const HyperellipticData& h);

/// (theta0, theta1): rotation-coordinate frequencies, evaluated in closed
/// form from the E_infinity density polynomial.
std::pair<double, double> rotation_frequencies(const GapSet& g);

struct LinearFit {
    Vec slopes;
    Vec intercepts;
    double max_residual = 0.0;
};

/// Affine fit of each coordinate against the clock, with mod-1 unwrapping
/// (consecutive jumps above 1/2 are folded back).
LinearFit linearization_fit(const std::vector<Vec>& images, const Vec& clocks);

}  // namespace gapflow
