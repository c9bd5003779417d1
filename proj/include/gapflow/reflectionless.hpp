#pragma once

#include <functional>

#include "gapflow/types.hpp"

namespace gapflow {

/// Half-line Schur functions of a reflectionless Dirac operator, both mapping
/// the upper half plane into the unit disk.  Closed-form families may also
/// carry the flow derivatives of s_plus (NLS clock for d/dt); when absent the
/// derivative is taken to be zero (stationary data).
struct SchurPair {
    std::function<cplx(cplx)> s_plus;
    std::function<cplx(cplx)> s_minus;
    std::function<cplx(cplx)> ds_plus_dx;
    std::function<cplx(cplx)> ds_plus_dt;
};

/// Schur pair of the boosted constant family phi(x) = c e^{i(beta - 2 shift x)}
/// at x = 0, whose spectrum is R \ (shift - c, shift + c):
///   s_pm(z) = e^{+-i beta} (zeta - sqrt(zeta^2 - c^2))/c,  zeta = z - shift,
/// with the branch sqrt ~ zeta at infinity.
SchurPair constant_schur(double c, double beta, double shift = 0.0);

/// Product representation R(z) = i prod_j sqrt((z - mu_j)^2 /
/// ((z - a_j)(z - b_j))), branch fixed by R(iy) -> i; valid for Im z >= 0
/// (real z evaluated as the boundary value from above).
cplx resolvent_product(cplx z, const GapSet& g, const Divisor& D);

/// Q1 = sum (a_k + b_k - 2 mu_k), Q2 = sum (a_k^2 + b_k^2 - 2 mu_k^2).
std::pair<double, double> trace_scalars(const Divisor& D, const GapSet& g);

/// phi = -Q1(D)/2 + i (-Q1(D_rot)/2) where D_rot is the divisor of -i phi.
cplx reconstruct_field(const Divisor& D, const Divisor& D_rot, const GapSet& g);

/// Per gap: the unique zero of R in the open gap (bisection), with eps picked
/// by which of s_pm equals 1 there; constant sign over the gap puts mu at the
/// corresponding edge (eps = 0).
Divisor divisor_from_schur(const SchurPair& pair, const GapSet& g);

struct MTriple {
    cplx m_plus;
    cplx m_minus;
    cplx M;
};

/// m_pm = i(1 + s_pm)/(1 - s_pm); M = (m_+ m_- - 1)/(m_+ + m_-).
MTriple m_and_borel(const SchurPair& pair, cplx z);

/// R recovered from the pair: R = -2/(m_+ + m_-).
cplx resolvent_from_pair(const SchurPair& pair, cplx z);

enum class Flow { space, time };

/// |LHS - RHS| of the Riccati identity for s_plus at z.  Space flow:
/// -i ds/dx = conj(phi) s^2 - 2 z s + phi.  Time flow (NLS clock, scaled by
/// the calibrated kappa_t): -i (ds/dt)/kappa_t = F - 2 a s - H s^2 with
/// p = i phi, q = -i conj(phi), a = pq/2 + z^2, F = p_x/2 - i p z,
/// H = -(q_x/2 + i q z).
double riccati_residual(const SchurPair& pair, cplx phi, cplx dphi_dx, cplx z,
                        Flow flow, double kappa_t = 2.0);

}  // namespace gapflow
