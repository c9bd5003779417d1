#include "gapflow/subordinacy.hpp"

#include <cmath>
#include <stdexcept>

#include "gapflow/ode.hpp"

namespace gapflow {

namespace {

Mat2c system_matrix(cplx z, cplx phi) {
    Mat2c A;
    A << cplx(0, -1) * z, cplx(0, 1) * phi, cplx(0, -1) * std::conj(phi),
        cplx(0, 1) * z;
    return A;
}

double op_norm(const Mat2c& T) {
    const Eigen::JacobiSVD<Mat2c> svd(T);
    return svd.singularValues()(0);
}

}  // namespace

PartialNorms partial_norms(const QPotential& p, double lambda, cplx xi,
                           double L, const Vec& theta, double tol) {
    if (std::abs(std::abs(xi) - 1.0) > 1e-12)
        throw std::invalid_argument("partial_norms: |xi| must be 1");
    // Rows 0-1 carry the transfer matrix, row 2 the two norm accumulators.
    using State = Eigen::Matrix<cplx, 3, 2>;
    State y = State::Zero();
    y.topRows<2>() = Mat2c::Identity();
    const auto f = [&](double x, const State& s) {
        State d;
        d.topRows<2>() = system_matrix(lambda, p.eval(x, theta)) * s.topRows<2>();
        const cplx A = s(0, 0), B = s(0, 1);
        d(2, 0) = std::norm(A + xi * B);
        d(2, 1) = std::norm(A - xi * B);
        return d;
    };
    y = rk45(f, y, 0.0, L, tol);
    PartialNorms out;
    out.L = L;
    out.xi = xi;
    out.n_plus = std::sqrt(y(2, 0).real());
    out.n_minus = std::sqrt(y(2, 1).real());
    return out;
}

double epsilon_of_L(const PartialNorms& n) {
    return 1.0 / (2.0 * n.n_plus * n.n_minus);
}

QPotential reflected_potential(const QPotential& p) {
    QPotential r = p;
    for (auto& [n, c] : r.fourier) c = std::conj(c);
    return r;
}

SchurEstimate schur_estimate(const QPotential& p, cplx z, const Vec& theta,
                             double resolution, double cap) {
    double l = 2.0;
    SchurEstimate last{cplx(0, 0), 2.0, 0.0};
    for (;;) {
        Vec ls(1);
        ls << l;
        try {
            const WeylDisks d = weyl_disk_schur(p, z, ls, theta);
            last = {d.s_plus, d.error, l};
        } catch (const std::exception&) {
            // The transfer matrix overflowed before the disk shrank; hand the
            // caller the last finite disk and let it judge the radius.
            if (last.length > 0.0) return last;
            throw;
        }
        if (last.radius <= resolution || l >= cap) return last;
        l = std::min(2.0 * l, cap);
    }
}

JLReport jl_ratio_check(const QPotential& p, double lambda, cplx xi,
                        const Vec& L_grid, const Vec& theta,
                        double resolution) {
    const double c_minus = 3.0 - std::sqrt(8.0);
    const double c_plus = 3.0 + std::sqrt(8.0);
    JLReport rep;
    for (int i = 0; i < L_grid.size(); ++i) {
        JLRow row;
        row.L = L_grid[i];
        const PartialNorms n = partial_norms(p, lambda, xi, row.L, theta);
        row.eps = epsilon_of_L(n);
        const SchurEstimate se =
            schur_estimate(p, cplx(lambda, row.eps), theta, resolution);
        row.radius = se.radius;
        row.inconclusive = se.radius > resolution;
        const cplx F = (1.0 + xi * se.s) / (1.0 - xi * se.s);
        row.ratio = std::abs(F) * n.n_plus / n.n_minus;
        row.inside = row.ratio >= c_minus && row.ratio <= c_plus;
        rep.all_pass = rep.all_pass && row.inside && !row.inconclusive;
        rep.rows.push_back(row);
    }
    return rep;
}

MeasureReport measure_bound_check(const QPotential& p, double lambda,
                                  const Vec& eps_grid, const Vec& theta,
                                  double resolution) {
    const double c_plus = 3.0 + std::sqrt(8.0);
    const QPotential refl = reflected_potential(p);
    const Vec theta_m = -theta;
    MeasureReport rep;
    for (int i = 0; i < eps_grid.size(); ++i) {
        MeasureRow row;
        row.eps = eps_grid[i];
        const cplx z(lambda, row.eps);
        const SchurEstimate sp = schur_estimate(p, z, theta, resolution);
        const SchurEstimate sm = schur_estimate(refl, z, theta_m, resolution);
        row.radius = std::max(sp.radius, sm.radius);
        row.inconclusive = row.radius > resolution;
        const cplx mp = cplx(0, 1) * (1.0 + sp.s) / (1.0 - sp.s);
        const cplx mm = cplx(0, 1) * (1.0 + sm.s) / (1.0 - sm.s);
        row.im_M = ((mp * mm - 1.0) / (mp + mm)).imag();

        // sup of ||T(lambda, x)||^2 over [0, 1/(2 eps)], sampled on a grid
        // fine against the potential's oscillation.
        const double X = 1.0 / (2.0 * row.eps);
        const double dx = 0.25;
        Mat2c T = Mat2c::Identity();
        double sup = 1.0;
        double x = 0.0;
        while (x < X) {
            const double x1 = std::min(x + dx, X);
            T = rk45(
                [&](double t, const Mat2c& M) {
                    return system_matrix(lambda, p.eval(t, theta)) * M;
                },
                T, x, x1, 1e-10);
            sup = std::max(sup, op_norm(T));
            x = x1;
        }
        row.bound = 2.0 * c_plus * sup * sup;
        row.holds = row.im_M <= row.bound;
        rep.all_pass = rep.all_pass && row.holds && !row.inconclusive;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace gapflow
