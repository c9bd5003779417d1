#include "gapflow/reflectionless.hpp"

#include <cmath>
#include <stdexcept>

namespace gapflow {

namespace {

// sqrt(zeta^2 - c^2) with cut on [-c, c] and sqrt ~ zeta at infinity;
// real zeta is treated as the limit from the upper half plane.
cplx branch_root(cplx zeta, double c) {
    if (zeta.imag() == 0.0) zeta = cplx(zeta.real(), 0.0);  // kill -0.0
    return std::sqrt(zeta - c) * std::sqrt(zeta + c);
}

}  // namespace

SchurPair constant_schur(double c, double beta, double shift) {
    if (c <= 0) throw std::invalid_argument("constant_schur: c must be positive");
    const cplx phase = std::polar(1.0, beta);
    auto u = [c, shift](cplx z) {
        const cplx zeta = z - shift;
        return (zeta - branch_root(zeta, c)) / c;
    };
    SchurPair pair;
    // Lower half plane filled in by the symmetry s(z) = 1/conj(s(conj(z))).
    pair.s_plus = [phase, u](cplx z) {
        if (z.imag() < 0.0) return 1.0 / std::conj(phase * u(std::conj(z)));
        return phase * u(z);
    };
    pair.s_minus = [phase, u](cplx z) {
        if (z.imag() < 0.0) return 1.0 / std::conj(u(std::conj(z)) / phase);
        return u(z) / phase;
    };
    // phi(x,t) = c e^{i(beta - 2 shift x + sigma t)}, sigma = -(4 shift^2 + 2c^2).
    const double sigma = -(4.0 * shift * shift + 2.0 * c * c);
    auto sp = pair.s_plus;
    pair.ds_plus_dx = [sp, shift](cplx z) { return cplx(0, -2.0 * shift) * sp(z); };
    pair.ds_plus_dt = [sp, sigma](cplx z) { return cplx(0, sigma) * sp(z); };
    return pair;
}

cplx resolvent_product(cplx z, const GapSet& g, const Divisor& D) {
    check_divisor(D, g);
    if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j)
        acc += std::log(z - D.points[j].mu) -
               0.5 * std::log(z - g.gaps[j].a) - 0.5 * std::log(z - g.gaps[j].b);
    return cplx(0, 1) * std::exp(acc);
}

std::pair<double, double> trace_scalars(const Divisor& D, const GapSet& g) {
    check_divisor(D, g);
    double q1 = 0.0, q2 = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double a = g.gaps[j].a, b = g.gaps[j].b, mu = D.points[j].mu;
        q1 += a + b - 2.0 * mu;
        q2 += a * a + b * b - 2.0 * mu * mu;
    }
    return {q1, q2};
}

cplx reconstruct_field(const Divisor& D, const Divisor& D_rot, const GapSet& g) {
    const double re = -0.5 * trace_scalars(D, g).first;
    const double im = -0.5 * trace_scalars(D_rot, g).first;
    return {re, im};
}

Divisor divisor_from_schur(const SchurPair& pair, const GapSet& g) {
    g.validate();
    Divisor D;
    D.points.resize(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double a = g.gaps[j].a, b = g.gaps[j].b;
        auto R = [&](double x) { return resolvent_from_pair(pair, cplx(x, 0.0)).real(); };
        const int n = 257;
        double lo = 0.0, hi = 0.0;
        bool bracket = false, pos = true, neg = true;
        double xp = a + (b - a) / (n + 1);
        double fp = R(xp);
        if (fp > 0) neg = false;
        if (fp < 0) pos = false;
        for (int i = 2; i <= n; ++i) {
            const double x = a + (b - a) * i / (n + 1);
            const double f = R(x);
            if (f > 0) neg = false;
            if (f < 0) pos = false;
            if (fp < 0 && f >= 0) {
                lo = xp;
                hi = x;
                bracket = true;
                break;
            }
            xp = x;
            fp = f;
        }
        if (!bracket) {
            if (pos == neg)
                throw std::runtime_error("divisor_from_schur: sign pattern not monotone in gap");
            D.points[j] = {pos ? a : b, 0};
            continue;
        }
        const double tol = 1e-13 * (b - a);
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            (R(mid) < 0 ? lo : hi) = mid;
        }
        const double mu = 0.5 * (lo + hi);
        const cplx sp = pair.s_plus(cplx(mu, 0.0)), sm = pair.s_minus(cplx(mu, 0.0));
        D.points[j] = {mu, std::abs(sp - 1.0) <= std::abs(sm - 1.0) ? 1 : -1};
    }
    return D;
}

MTriple m_and_borel(const SchurPair& pair, cplx z) {
    const cplx sp = pair.s_plus(z), sm = pair.s_minus(z);
    if (std::abs(1.0 - sp) < 1e-14 || std::abs(1.0 - sm) < 1e-14)
        throw std::runtime_error("m_and_borel: Schur value at a pole of m");
    MTriple r;
    r.m_plus = cplx(0, 1) * (1.0 + sp) / (1.0 - sp);
    r.m_minus = cplx(0, 1) * (1.0 + sm) / (1.0 - sm);
    r.M = (r.m_plus * r.m_minus - 1.0) / (r.m_plus + r.m_minus);
    return r;
}

cplx resolvent_from_pair(const SchurPair& pair, cplx z) {
    const cplx sp = pair.s_plus(z), sm = pair.s_minus(z);
    return cplx(0, 1) * (1.0 - sp) * (1.0 - sm) / (1.0 - sp * sm);
}

double riccati_residual(const SchurPair& pair, cplx phi, cplx dphi_dx, cplx z,
                        Flow flow, double kappa_t) {
    const cplx s = pair.s_plus(z);
    if (flow == Flow::space) {
        const cplx ds = pair.ds_plus_dx ? pair.ds_plus_dx(z) : cplx(0);
        return std::abs(cplx(0, -1) * ds - (std::conj(phi) * s * s - 2.0 * z * s + phi));
    }
    const cplx p = cplx(0, 1) * phi;
    const cplx q = cplx(0, -1) * std::conj(phi);
    const cplx dp = cplx(0, 1) * dphi_dx;
    const cplx dq = cplx(0, -1) * std::conj(dphi_dx);
    const cplx a = 0.5 * p * q + z * z;
    const cplx F = 0.5 * dp - cplx(0, 1) * p * z;
    const cplx H = -(0.5 * dq + cplx(0, 1) * q * z);
    const cplx ds = pair.ds_plus_dt ? pair.ds_plus_dt(z) : cplx(0);
    return std::abs(cplx(0, -1) * ds / kappa_t - (F - 2.0 * a * s - H * s * s));
}

}  // namespace gapflow
