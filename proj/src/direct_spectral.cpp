#include "gapflow/direct_spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "gapflow/ode.hpp"

namespace gapflow {

namespace {

const Mat2c kJ = (Mat2c() << -1, 0, 0, 1).finished();

Mat2c system_matrix(cplx z, cplx phi) {
    Mat2c A;
    A << cplx(0, -1) * z, cplx(0, 1) * phi, cplx(0, -1) * std::conj(phi), cplx(0, 1) * z;
    return A;
}

/// Continue the fundamental matrix from x0 to x1.
Mat2c integrate_block(const QPotential& p, cplx z, double x0, double x1,
                      const Vec& theta, Mat2c T, double tol) {
    return rk45([&](double x, const Mat2c& M) -> Mat2c {
        return system_matrix(z, p.eval(x, theta)) * M;
    }, T, x0, x1, tol);
}

/// Largest singular value of a 2x2 complex matrix.
double op_norm(const Mat2c& T) {
    const Mat2c H = T.adjoint() * T;
    const double tr = H(0, 0).real() + H(1, 1).real();
    const double dt = std::abs(H.determinant());
    const double disc = std::max(0.25 * tr * tr - dt, 0.0);
    return std::sqrt(0.5 * tr + std::sqrt(disc));
}

/// Equidistributed point set on T^d (Kronecker sequence).
Vec kronecker_point(int d, int i) {
    static const double alphas[] = {0.41421356237309515, 0.7320508075688772,
                                    0.23606797749978969, 0.6457513110645906};
    Vec th(d);
    for (int c = 0; c < d; ++c) th[c] = std::fmod((i + 1) * alphas[c % 4], 1.0);
    return th;
}

}  // namespace

cplx QPotential::eval(double x, const Vec& theta) const {
    cplx acc = 0.0;
    for (const auto& [n, coef] : fourier) {
        double phase = 0.0;
        for (int c = 0; c < d; ++c) phase += n[c] * (omega[c] * x + 2 * pi * theta[c]);
        acc += coef * std::polar(1.0, phase);
    }
    return acc;
}

double QPotential::norm_h() const {
    double acc = 0.0;
    for (const auto& [n, coef] : fourier) {
        double l1 = 0.0;
        for (int c : n) l1 += std::abs(c);
        acc += std::abs(coef) * std::exp(2 * pi * h * l1);
    }
    return acc;
}

double QPotential::inner(const std::vector<int>& n) const {
    double acc = 0.0;
    for (int c = 0; c < d; ++c) acc += n[c] * omega[c];
    return acc;
}

void QPotential::validate() const {
    if (d < 1 || omega.size() != d)
        throw std::invalid_argument("QPotential: dimension mismatch");
    for (const auto& [n, coef] : fourier) {
        (void)coef;
        if (int(n.size()) != d)
            throw std::invalid_argument("QPotential: Fourier index dimension mismatch");
    }
    if (d == 1) {
        // Continued-fraction probe: a rational frequency terminates quickly.
        double x = std::abs(omega[0]);
        long long q_prev = 0, q = 1;
        for (int it = 0; it < 50 && q < 100'000'000; ++it) {
            const double a = std::floor(x);
            const double frac = x - a;
            if (frac < 1e-12)
                throw std::invalid_argument("QPotential: frequency is rational");
            const long long qn = static_cast<long long>(a) * q + q_prev;
            q_prev = q;
            q = std::max(qn, q + 1);
            x = 1.0 / frac;
        }
    }
}

QPotential constant_potential(cplx c) {
    QPotential p;
    p.d = 1;
    p.omega = Vec::Constant(1, 0.5 * (std::sqrt(5.0) - 1.0));
    p.fourier = {{{0}, c}};
    p.h = 1.0;
    p.kappa = 0.1;
    p.tau = 1.5;
    return p;
}

QPotential cosine_potential(double omega, double eps0, double h) {
    QPotential p;
    p.d = 1;
    p.omega = Vec::Constant(1, omega);
    p.fourier = {{{1}, eps0}, {{-1}, eps0}};
    p.h = h;
    p.kappa = 0.1;
    p.tau = 1.5;
    p.validate();
    return p;
}

double TransferMatrix::su_defect() const {
    return (T.adjoint() * kJ * T - kJ).norm();
}

TransferMatrix transfer(const QPotential& p, cplx z, double x, const Vec& theta,
                        double tol) {
    TransferMatrix out;
    out.theta = theta;
    out.x = x;
    out.z = z;
    out.T = integrate_block(p, z, 0.0, x, theta, Mat2c::Identity(), tol);
    return out;
}

double lyapunov(const QPotential& p, cplx z, double L, int samples, double tol) {
    if (L <= 0 || samples <= 0) throw std::invalid_argument("lyapunov: bad arguments");
    double acc = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Vec theta = kronecker_point(p.d, s);
        Mat2c T = Mat2c::Identity();
        double logs = 0.0;
        double x = 0.0;
        while (x < L) {
            const double x1 = std::min(L, x + 5.0);
            T = integrate_block(p, z, x, x1, theta, T, tol);
            const double n = T.norm();
            if (n > 1e8) {
                logs += std::log(n);
                T /= n;
            }
            x = x1;
        }
        acc += (logs + std::log(op_norm(T))) / L;
    }
    return acc / samples;
}

namespace {

/// Winding of arg(u) along the real-form solution u' = -i lambda u
/// + i phi conj(u) (the invariant subspace v = conj(u) of the system, which
/// exists for real lambda).  Unlike the winding of X1 + i X2 of a generic
/// solution, |u| is the full solution modulus, so the count stays resolved
/// deep inside hyperbolic regions.
double winding_real(const QPotential& p, double lambda, double L, double step,
                    const Vec& theta) {
    Eigen::Vector2cd y;
    y << 1.0, 0.0;
    double x = 0.0;
    const double block = 10.0;
    auto f = [&](double t, const Eigen::Vector2cd& s) -> Eigen::Vector2cd {
        const cplx phi = p.eval(t, theta);
        const cplx du = cplx(0, -1) * lambda * s[0] + cplx(0, 1) * phi * std::conj(s[0]);
        Eigen::Vector2cd r;
        r << du, std::imag(du * std::conj(s[0])) / std::norm(s[0]);
        return r;
    };
    while (x < L) {
        const double x1 = std::min(L, x + block);
        y = rk4_fixed(f, y, x, x1, step);
        y[0] /= std::abs(y[0]);
        x = x1;
    }
    return y[1].real();
}

/// Winding of arg(u + i v) along the solution started at (1, 0); the third
/// slot accumulates the (scale-invariant) argument derivative.  Used for
/// complex z, where the real form is not invariant.
double winding(const QPotential& p, cplx z, double L, double step, const Vec& theta) {
    Eigen::Vector3cd y;
    y << 1.0, 0.0, 0.0;
    double x = 0.0;
    const double block = 10.0;
    auto f = [&](double t, const Eigen::Vector3cd& s) -> Eigen::Vector3cd {
        const cplx phi = p.eval(t, theta);
        const cplx du = cplx(0, -1) * z * s[0] + cplx(0, 1) * phi * s[1];
        const cplx dv = cplx(0, -1) * std::conj(phi) * s[0] + cplx(0, 1) * z * s[1];
        const cplx g = s[0] + cplx(0, 1) * s[1];
        const cplx dg = du + cplx(0, 1) * dv;
        Eigen::Vector3cd r;
        r << du, dv, std::imag(dg * std::conj(g)) / std::norm(g);
        return r;
    };
    while (x < L) {
        const double x1 = std::min(L, x + block);
        y = rk4_fixed(f, y, x, x1, step);
        const double n = std::hypot(std::abs(y[0]), std::abs(y[1]));
        y[0] /= n;
        y[1] /= n;
        x = x1;
    }
    return y[2].real();
}

}  // namespace

double rotation_number(const QPotential& p, double lambda, double L, double step) {
    const Vec theta = Vec::Zero(p.d);
    return -winding_real(p, lambda, L, step, theta) / L;
}

ScanResult ids_and_gaps(const QPotential& p, const Vec& grid, double L, int k_max,
                        double step) {
    if (grid.size() < 3) throw std::invalid_argument("ids_and_gaps: grid too small");
    ScanResult out;
    out.lambda = grid;
    out.rho = Vec(grid.size());
    for (int i = 0; i < grid.size(); ++i) out.rho[i] = rotation_number(p, grid[i], L, step);

    const double overall =
        (out.rho[grid.size() - 1] - out.rho[0]) / (grid[grid.size() - 1] - grid[0]);
    const double flat_cut = 0.3 * std::max(overall, 1e-12);

    // Lattice points |k|_inf <= k_max, ordered by |k|_1 then lexicographically.
    std::vector<std::vector<int>> lattice;
    std::vector<int> cur(p.d, -k_max);
    while (true) {
        lattice.push_back(cur);
        int c = p.d - 1;
        while (c >= 0 && cur[c] == k_max) cur[c--] = -k_max;
        if (c < 0) break;
        ++cur[c];
    }
    std::stable_sort(lattice.begin(), lattice.end(), [](const auto& a, const auto& b) {
        int na = 0, nb = 0;
        for (int v : a) na += std::abs(v);
        for (int v : b) nb += std::abs(v);
        if (na != nb) return na < nb;
        return a < b;
    });

    int i = 0;
    while (i + 1 < grid.size()) {
        const double slope = (out.rho[i + 1] - out.rho[i]) / (grid[i + 1] - grid[i]);
        if (slope > flat_cut) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < grid.size() &&
               (out.rho[j + 1] - out.rho[j]) / (grid[j + 1] - grid[j]) <= flat_cut)
            ++j;
        GapLabel gl;
        gl.lo = grid[i];
        gl.hi = grid[j];
        gl.rho = 0.5 * (out.rho[i] + out.rho[j]);
        double best = 1e300, second = 1e300;
        for (const auto& k : lattice) {
            const double err = std::abs(2 * gl.rho - p.inner(k));
            if (err < best) {
                second = best;
                best = err;
                gl.k = k;
            } else if (err < second) {
                second = err;
            }
        }
        gl.label_error = best;
        gl.ambiguous = (second - best) < 1e-3;
        out.gaps.push_back(gl);
        i = j + 1;
    }
    return out;
}

std::pair<double, double> gap_edges_for_label(const QPotential& p,
                                              const std::vector<int>& k, double L,
                                              double threshold, double step) {
    const double target = p.inner(k);
    auto f = [&](double lam) { return 2 * rotation_number(p, lam, L, step) - target; };
    // The gap center can sit anywhere within eps0 of target/2; probe for a
    // point on the plateau first.
    double lc = 0.5 * target;
    double best = std::abs(f(lc));
    for (int i = -6; i <= 6; ++i) {
        const double lam = 0.5 * target + 0.01 * i;
        const double v = std::abs(f(lam));
        if (v < best) {
            best = v;
            lc = lam;
        }
    }
    if (best > threshold)
        throw std::runtime_error("gap_edges_for_label: plateau not found");
    const double reach = 0.25;
    auto bisect = [&](double a, double b, double level) {
        double fa = f(a) - level;
        double fb = f(b) - level;
        if (fa * fb > 0)
            throw std::runtime_error("gap_edges_for_label: no bracket at the gap");
        for (int it = 0; it < 50; ++it) {
            const double m = 0.5 * (a + b);
            const double fm = f(m) - level;
            if ((fm < 0) == (fa < 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        return 0.5 * (a + b);
    };
    const double lo = bisect(lc - reach, lc, -threshold);
    const double hi = bisect(lc, lc + reach, threshold);
    return {lo, hi};
}

WeylDisks weyl_disk_schur(const QPotential& p, cplx z, const Vec& lengths,
                          const Vec& theta, double tol) {
    if (z.imag() <= 0) throw std::invalid_argument("weyl_disk_schur: need Im z > 0");
    WeylDisks out;
    out.lengths = lengths;
    out.centers = CVec(lengths.size());
    out.radii = Vec(lengths.size());
    Mat2c T = Mat2c::Identity();
    double x = 0.0;
    for (int i = 0; i < lengths.size(); ++i) {
        if (lengths[i] <= x && i > 0)
            throw std::invalid_argument("weyl_disk_schur: lengths must increase");
        T = integrate_block(p, z, x, lengths[i], theta, T, tol);
        x = lengths[i];
        // Admissible Schur values: Q11 |s|^2 + 2 Re(conj(Q12) s) + Q22 >= 0
        // with Q = T* j T, a disk since Q11 < 0 for Im z > 0.
        const Mat2c Q = T.adjoint() * kJ * T;
        const double q11 = Q(0, 0).real();
        const cplx q12 = Q(0, 1);
        // |q12|^2 - q11 q22 = -det Q = |det T|^2 = 1: the system matrix is
        // traceless, so T is exactly unimodular.  Forming det T numerically
        // instead loses all digits once ||T||^2 exceeds 1e16.
        const double disc = 1.0;
        if (q11 >= 0)
            throw std::runtime_error("weyl_disk_schur: degenerate j-form");
        out.centers[i] = -q12 / q11;
        out.radii[i] = std::sqrt(disc) / std::abs(q11);
        if (i > 0 && out.radii[i] > out.radii[i - 1] * (1 + 1e-9) + 1e-14)
            throw std::runtime_error("weyl_disk_schur: radius not decreasing");
    }
    out.s_plus = out.centers[lengths.size() - 1];
    out.error = out.radii[lengths.size() - 1];
    return out;
}

FloquetReport floquet_checks(const QPotential& p, double lambda0,
                             const Vec& spectral_points, double L) {
    FloquetReport rep;
    const Vec theta = Vec::Zero(p.d);

    // w(iy) = -gamma + i rho should track iz = -y with an O(1/y) error.
    for (double y : {4.0, 8.0, 16.0}) {
        const cplx z(0.0, y);
        const double g = lyapunov(p, z, 60.0, 4);
        const double r = -winding(p, z, 60.0, 0.2 / y, theta) / 60.0;
        rep.w_asym_C = std::max(rep.w_asym_C, y * std::abs(cplx(-g, r) - cplx(0, 1) * z));
    }

    // Thouless-type identity at lambda0 through the rho-integral formula for
    // w; Richardson in L removes the leading finite-length bias of rho.
    auto rho_R = [&](double t) {
        const double step = std::min(0.01, 0.05 / (1.0 + std::abs(t)));
        return 2 * rotation_number(p, t, 2 * L, step) - rotation_number(p, t, L, step);
    };
    // Richardson in L cancels the O(1/L) overlap bias of the finite-length
    // Lyapunov estimate.
    rep.thouless_gamma = 2 * lyapunov(p, lambda0, 4 * L, 8) - lyapunov(p, lambda0, 2 * L, 8);
    const double T1 = 6.0;
    auto f = [&](double t) {
        double d = t - lambda0;
        if (std::abs(d) < 1e-7) d = (d >= 0) ? 1e-7 : -1e-7;
        return (rho_R(t) - t) / d;
    };
    // Adaptive Simpson; the integrand has square-root kinks at band edges.
    std::function<double(double, double, double, double, double, double, int)> simp =
        [&](double a, double b, double fa, double fm, double fb, double whole,
            int depth) -> double {
        const double m = 0.5 * (a + b);
        const double fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
        const double left = (m - a) / 6 * (fa + 4 * fl + fm);
        const double right = (b - m) / 6 * (fm + 4 * fr + fb);
        if (depth <= 0 || std::abs(left + right - whole) < 3e-5)
            return left + right;
        return simp(a, m, fa, fl, fm, left, depth - 1) +
               simp(m, b, fm, fr, fb, right, depth - 1);
    };
    double integral = 0.0;
    const int panels = 25;
    for (int i = 0; i < panels; ++i) {
        const double a = lambda0 - T1 + 2 * T1 * i / panels;
        const double b = lambda0 - T1 + 2 * T1 * (i + 1) / panels;
        const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
        const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
        integral += simp(a, b, fa, fm, fb, whole, 9);
    }
    // Tail model rho(t) - t ~ A/t + B/t^3 fitted at the cutoff.
    const double tp = lambda0 + T1, tm = lambda0 + T1 - 1.0;
    const double fp = (rho_R(tp) - tp) * tp, fm = (rho_R(tm) - tm) * tm;
    const double B = (fp - fm) / (1.0 / (tp * tp) - 1.0 / (tm * tm));
    const double A = fp - B / (tp * tp);
    integral += 2 * (A / T1 + B / (3 * T1 * T1 * T1));
    rep.thouless_formula = -integral / pi;

    rep.holder_exponents = Vec(spectral_points.size());
    for (int s = 0; s < spectral_points.size(); ++s) {
        const double lam = spectral_points[s];
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (double eps : {0.08, 0.16, 0.32, 0.64}) {
            const double dN = (rho_R(lam + eps) - rho_R(lam - eps)) / pi;
            if (dN <= 0) continue;
            const double lx = std::log(eps), ly = std::log(dN);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++m;
        }
        rep.holder_exponents[s] =
            (m >= 2) ? (m * sxy - sx * sy) / (m * sxx - sx * sx) : 0.0;
    }
    return rep;
}

}  // namespace gapflow
