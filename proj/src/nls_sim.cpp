#include "gapflow/nls_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <unsupported/Eigen/FFT>

namespace gapflow {

namespace {

Vec wavenumbers(int n, double box) {
    Vec k(n);
    for (int j = 0; j < n; ++j) {
        const int m = (j <= n / 2) ? j : j - n;
        k[j] = 2.0 * pi * m / box;
    }
    return k;
}

void tail_guard(const std::vector<cplx>& spec) {
    const int n = int(spec.size());
    double total = 0.0, tail = 0.0;
    for (int j = 0; j < n; ++j) {
        const int m = (j <= n / 2) ? j : n - j;
        const double e = std::norm(spec[j]);
        total += e;
        if (m > n / 3) tail += e;
    }
    if (total > 0 && tail > 1e-6 * total)
        throw std::runtime_error("split_step_evolve: spectral tail blow-up");
}

}  // namespace

FieldGrid split_step_evolve(const CVec& u0, double box, double dt, double T,
                            int n_out, double x0) {
    const int n = int(u0.size());
    if (n < 4 || box <= 0) throw std::invalid_argument("split_step_evolve: bad grid");
    if (n_out < 2) n_out = 2;
    const int steps = std::max(1, int(std::ceil(T / dt)));
    dt = T / steps;
    const Vec k = wavenumbers(n, box);
    const double guard = 100.0 * (1.0 + u0.cwiseAbs().maxCoeff());

    FieldGrid g;
    g.box = box;
    g.x0 = x0;
    g.t = Vec::LinSpaced(n_out, 0.0, T);
    g.u.push_back(u0);

    Eigen::FFT<double> fft;
    std::vector<cplx> buf(u0.data(), u0.data() + n), spec(n);
    int next_out = 1;
    for (int s = 0; s < steps; ++s) {
        for (cplx& v : buf) v *= std::polar(1.0, -std::norm(v) * dt);
        fft.fwd(spec, buf);
        for (int j = 0; j < n; ++j) spec[j] *= std::polar(1.0, -k[j] * k[j] * dt);
        tail_guard(spec);
        fft.inv(buf, spec);
        for (cplx& v : buf) {
            v *= std::polar(1.0, -std::norm(v) * dt);
            if (std::abs(v) > guard)
                throw std::runtime_error("split_step_evolve: amplitude blow-up");
        }
        while (next_out < n_out && (s + 1) * dt >= g.t[next_out] - 0.5 * dt) {
            g.u.push_back(Eigen::Map<const CVec>(buf.data(), n));
            ++next_out;
        }
    }
    while (next_out < n_out) {
        g.u.push_back(Eigen::Map<const CVec>(buf.data(), n));
        ++next_out;
    }
    // Snapshot times are the step times actually hit.
    for (int i = 0; i < n_out; ++i)
        g.t[i] = std::round(g.t[i] / dt) * dt;
    return g;
}

cplx constant_oracle(double c, double beta, double t) {
    return std::polar(c, beta - 2.0 * c * c * t);
}

std::pair<double, double> mass_energy(const FieldGrid& g, int row) {
    const CVec& u = g.u.at(row);
    const int n = int(u.size());
    const double dx = g.dx();
    Eigen::FFT<double> fft;
    std::vector<cplx> buf(u.data(), u.data() + n), spec(n);
    fft.fwd(spec, buf);
    const Vec k = wavenumbers(n, g.box);
    double mass = 0.0, energy = 0.0;
    for (int j = 0; j < n; ++j) {
        mass += std::norm(u[j]) * dx;
        energy += std::norm(u[j]) * std::norm(u[j]) * dx;
    }
    for (int j = 0; j < n; ++j)
        energy += k[j] * k[j] * std::norm(spec[j]) / double(n) * dx;
    return {mass, energy};
}

TrajectoryDistance compare_trajectories(const FieldGrid& a, const FieldGrid& b,
                                        double buffer) {
    if (a.nx() != b.nx() || a.u.size() != b.u.size() ||
        std::abs(a.box - b.box) > 1e-12 * (1.0 + a.box) ||
        std::abs(a.x0 - b.x0) > 1e-12 * (1.0 + std::abs(a.x0)))
        throw std::invalid_argument("compare_trajectories: grid mismatch");
    const int n = a.nx();
    const int lo = int(std::ceil(buffer * n));
    const int hi = n - lo;
    const double dx = a.dx();
    const Vec k = wavenumbers(n, a.box);
    Eigen::FFT<double> fft;

    TrajectoryDistance out;
    double l2 = 0.0;
    for (std::size_t r = 0; r < a.u.size(); ++r) {
        const CVec& ua = a.u[r];
        std::vector<cplx> buf(ua.data(), ua.data() + n), spec(n);
        fft.fwd(spec, buf);
        for (int j = 0; j < n; ++j) spec[j] *= cplx(0, 1) * k[j] / double(n);
        fft.inv(buf, spec);
        for (int j = lo; j < hi; ++j) {
            const double d = std::abs(ua[j] - b.u[r][j]);
            out.sup_error = std::max(out.sup_error, d);
            l2 += d * d * dx;
            out.sup_u = std::max(out.sup_u, std::abs(ua[j]));
            out.sup_ux = std::max(out.sup_ux, std::abs(buf[j]));
        }
    }
    out.l2_error = std::sqrt(l2 / double(a.u.size()));
    return out;
}

AlmostPeriods almost_period_search(const CVec& u, double h, double eps,
                                   double max_shift) {
    const int n = int(u.size());
    const int m_max = int(std::floor(max_shift / h));
    if (m_max >= n / 2)
        throw std::invalid_argument(
            "almost_period_search: window too short for the requested shifts");
    std::vector<double> found;
    for (int m = 1; m <= m_max; ++m) {
        double sup = 0.0;
        for (int j = m; j < n && sup < eps; ++j)
            sup = std::max(sup, std::abs(u[j] - u[j - m]));
        if (sup < eps) found.push_back(m * h);
    }
    AlmostPeriods out;
    out.shifts = Eigen::Map<const Vec>(found.data(), long(found.size()));
    double prev = 0.0;
    for (double s : found) {
        out.max_gap = std::max(out.max_gap, s - prev);
        prev = s;
    }
    out.max_gap = std::max(out.max_gap, m_max * h - prev);
    return out;
}

}  // namespace gapflow
