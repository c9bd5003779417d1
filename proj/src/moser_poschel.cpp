#include "gapflow/moser_poschel.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gapflow {

namespace {

double phase(const std::vector<int>& n, const Vec& x) {
    double s = 0.0;
    for (std::size_t c = 0; c < n.size(); ++c) s += n[c] * x[int(c)];
    return s;
}

int l1(const std::vector<int>& n) {
    int s = 0;
    for (int c : n) s += std::abs(c);
    return s;
}

int linf(const std::vector<int>& n) {
    int s = 0;
    for (int c : n) s = std::max(s, std::abs(c));
    return s;
}

std::vector<int> negate(std::vector<int> n) {
    for (int& c : n) c = -c;
    return n;
}

ScalarSeries from_map(int d, const std::map<std::vector<int>, cplx>& m) {
    ScalarSeries out;
    out.d = d;
    for (const auto& [n, c] : m)
        if (std::abs(c) > 0) out.modes.push_back({n, c});
    return out;
}

ScalarSeries add(const ScalarSeries& a, const ScalarSeries& b) {
    std::map<std::vector<int>, cplx> m;
    for (const auto& [n, c] : a.modes) m[n] += c;
    for (const auto& [n, c] : b.modes) m[n] += c;
    return from_map(a.d, m);
}

ScalarSeries scale(const ScalarSeries& a, cplx f) {
    ScalarSeries out = a;
    for (auto& [n, c] : out.modes) c *= f;
    return out;
}

/// Tensor sampling grid covering [0, 2 pi)^d.
std::vector<Vec> sample_grid(int d, int per_dim) {
    std::vector<Vec> pts;
    const int total = int(std::pow(per_dim, d));
    for (int i = 0; i < total; ++i) {
        Vec x(d);
        int r = i;
        for (int c = 0; c < d; ++c) {
            x[c] = 2.0 * pi * (r % per_dim) / per_dim;
            r /= per_dim;
        }
        pts.push_back(x);
    }
    return pts;
}

}  // namespace

cplx ScalarSeries::eval(const Vec& x) const {
    cplx s = 0.0;
    for (const auto& [n, c] : modes) s += c * std::polar(1.0, phase(n, x));
    return s;
}

double ScalarSeries::strip_norm(double h) const {
    double s = 0.0;
    for (const auto& [n, c] : modes) s += std::abs(c) * std::exp(h * l1(n));
    return s;
}

ScalarSeries conj_series(const ScalarSeries& s) {
    ScalarSeries out;
    out.d = s.d;
    for (const auto& [n, c] : s.modes)
        out.modes.push_back({negate(n), std::conj(c)});
    return out;
}

ScalarSeries product(const ScalarSeries& a, const ScalarSeries& b) {
    std::map<std::vector<int>, cplx> m;
    for (const auto& [na, ca] : a.modes)
        for (const auto& [nb, cb] : b.modes) {
            std::vector<int> n = na;
            for (std::size_t c = 0; c < n.size(); ++c) n[c] += nb[c];
            m[n] += ca * cb;
        }
    return from_map(a.d, m);
}

Mat2c MatSeries::eval(const Vec& x) const {
    Mat2c s = Mat2c::Zero();
    for (const auto& [n, c] : modes) s += c * std::polar(1.0, phase(n, x));
    return s;
}

double MatSeries::strip_norm(double h) const {
    double s = 0.0;
    for (const auto& [n, c] : modes) s += c.norm() * std::exp(h * l1(n));
    return s;
}

Mat2c MatSeries::mean() const {
    for (const auto& [n, c] : modes)
        if (l1(n) == 0) return c;
    return Mat2c::Zero();
}

Mat2c ParabolicModel::A() const {
    Mat2c a;
    a << cplx(0, 0.5 * zeta), cplx(0, -0.5 * zeta), cplx(0, 0.5 * zeta),
        cplx(0, -0.5 * zeta);
    return a;
}

Mat2c ParabolicModel::B_at(const Vec& x) const {
    const cplx v11 = b11.eval(x), v12 = b12.eval(x);
    Mat2c b;
    b << v11, v12, std::conj(v12), std::conj(v11);
    return b;
}

double ParabolicModel::B_norm(double h) const {
    // The lower row repeats the conjugated coefficients at -n, so the strip
    // norm of the full matrix splits entrywise.
    std::map<std::vector<int>, Mat2c> m;
    for (const auto& [n, c] : b11.modes) {
        m[n](0, 0) += c;
        m[negate(n)](1, 1) += std::conj(c);
    }
    for (const auto& [n, c] : b12.modes) {
        m[n](0, 1) += c;
        m[negate(n)](1, 0) += std::conj(c);
    }
    double s = 0.0;
    for (const auto& [n, c] : m) s += c.norm() * std::exp(h * l1(n));
    return s;
}

void ParabolicModel::validate() const {
    if (zeta <= 0) throw std::invalid_argument("parabolic model: zeta must be positive");
    const int d = b11.d;
    for (const Vec& x : sample_grid(d, d == 1 ? 64 : 16)) {
        const double su = std::norm(b11.eval(x)) - std::norm(b12.eval(x));
        if (std::abs(su - 1.0) > 1e-8)
            throw std::runtime_error("parabolic model: B leaves SU(1,1) on the grid");
    }
}

double averaging_constant(double tau) {
    return std::pow(2.0, 3.0 * tau + 8.0) * std::tgamma(3.0 * tau + 1.0);
}

MatSeries perturbation_from_conjugation(const ParabolicModel& m) {
    m.validate();
    const ScalarSeries p11 =
        scale(add(product(conj_series(m.b11), m.b11),
                  product(conj_series(m.b12), m.b12)),
              cplx(0, -1));
    const ScalarSeries p12 = scale(product(conj_series(m.b11), m.b12), cplx(0, -2));
    MatSeries out;
    out.d = m.b11.d;
    std::map<std::vector<int>, Mat2c> acc;
    for (const auto& [n, c] : p11.modes) {
        acc[n](0, 0) += c;
        acc[n](1, 1) -= c;
    }
    for (const auto& [n, c] : p12.modes) {
        acc[n](0, 1) += c;
        acc[negate(n)](1, 0) += std::conj(c);  // P21 = conj(P12) = 2i b11 conj(b12)
    }
    for (const auto& [n, c] : acc) out.modes.push_back({n, c});
    return out;
}

HomologicalSolution homological_solve(const ParabolicModel& mod,
                                      const MatSeries& P, double Delta,
                                      int N) {
    const double z = mod.zeta;
    const double floor = mod.kappa / (2.0 * std::pow(double(N), mod.tau));
    const cplx I(0, 1);
    HomologicalSolution sol;
    sol.Y.d = P.d;
    for (const auto& [n, p] : P.modes) {
        if (l1(n) == 0 || linf(n) > N) continue;
        double m = 0.0;
        for (std::size_t c = 0; c < n.size(); ++c) m += n[c] * mod.omega[int(c)];
        if (std::abs(m) < floor || std::abs(m - z) < floor ||
            std::abs(m + z) < floor) {
            std::ostringstream os;
            os << "homological_solve: small divisor at n = (";
            for (std::size_t c = 0; c < n.size(); ++c)
                os << n[c] << (c + 1 < n.size() ? "," : ")");
            throw std::runtime_error(os.str());
        }
        const cplx p11 = p(0, 0), p12 = p(0, 1), p21 = p(1, 0);
        const double m3 = m * m * m;
        const cplx y11 =
            Delta * ((m * m - z * z) * p11 / (I * m3) +
                     I * z * ((m + z) * p12 + (m - z) * p21) / (2.0 * m3));
        const cplx y12 = (I * z * y11 + Delta * p12) / (I * (m - z));
        const cplx y21 = (I * z * y11 + Delta * p21) / (I * (m + z));
        Mat2c y;
        y << y11, y12, y21, -y11;
        sol.Y.modes.push_back({n, y});
    }

    // Residual of d_omega Y = [A, Y] + Delta (P - [P]) on a dense grid.
    const Mat2c A = mod.A();
    const Mat2c Pmean = P.mean();
    for (const Vec& x : sample_grid(P.d, P.d == 1 ? 256 : 24)) {
        Mat2c dY = Mat2c::Zero();
        for (const auto& [n, y] : sol.Y.modes) {
            double m = 0.0;
            for (std::size_t c = 0; c < n.size(); ++c)
                m += n[c] * mod.omega[int(c)];
            dY += I * m * y * std::polar(1.0, phase(n, x));
        }
        const Mat2c Y = sol.Y.eval(x);
        const Mat2c res = dY - (A * Y - Y * A) - Delta * (P.eval(x) - Pmean);
        sol.residual = std::max(sol.residual, res.cwiseAbs().maxCoeff());
    }
    return sol;
}

AveragedModel averaged_determinant(const ParabolicModel& m, double Delta) {
    // Torus means need no convolution: [f conj(g)] = sum_n f_n conj(g_n).
    double u = 0.0;
    for (const auto& [n, c] : m.b11.modes) u += std::norm(c);
    for (const auto& [n, c] : m.b12.modes) u += std::norm(c);
    cplx v = 0.0;  // [b11 conj(b12)]
    std::map<std::vector<int>, cplx> b12map;
    for (const auto& [n, c] : m.b12.modes) b12map[n] += c;
    for (const auto& [n, c] : m.b11.modes) {
        const auto it = b12map.find(n);
        if (it != b12map.end()) v += c * std::conj(it->second);
    }

    AveragedModel out;
    out.Delta = Delta;
    out.denom = u * u - 4.0 * std::norm(v);
    if (out.denom < 1.0 - 1e-8)
        throw std::runtime_error("averaged_determinant: denominator below 1");
    const double num = u + 2.0 * v.real();
    out.d = Delta * out.denom * (Delta - m.zeta * num / out.denom);

    Mat2c Pmean;
    Pmean << cplx(0, -u), cplx(0, -2) * std::conj(v), cplx(0, 2) * v, cplx(0, u);
    out.A_tilde = m.A() + Delta * Pmean;
    out.d_direct = out.A_tilde.determinant().real();
    return out;
}

ParabolicModel reflect_energy(const ParabolicModel& m) {
    ParabolicModel r = m;
    r.b11 = conj_series(m.b11);
    r.b12 = conj_series(m.b12);
    return r;
}

GapCertificate gap_upper_bound_certificate(const ParabolicModel& m, double nu,
                                           double R) {
    if (nu <= 0.0 || nu >= 0.25)
        throw std::invalid_argument("gap_upper_bound_certificate: nu must lie in (0, 1/4)");
    const double Dt = averaging_constant(m.tau);
    const double BR = m.B_norm(R);
    GapCertificate cert;
    cert.hypothesis =
        std::pow(BR, 4) * std::pow(m.zeta, nu) <
        std::pow(2.0, -6.0) / (Dt * Dt) * std::pow(m.kappa, 6) *
            std::pow(R, 2.0 * (3.0 * m.tau + 1.0));
    if (!cert.hypothesis) return cert;

    const double Delta = std::pow(m.zeta, 1.0 - nu);
    const AveragedModel av = averaged_determinant(m, Delta);
    cert.det_bound = av.d >= 0.25 * Delta * Delta;
    if (av.d > 0) {
        const double disp = 8.0 * Delta * Delta * (m.zeta + Delta * BR * BR) /
                            std::sqrt(av.d) * Dt * Dt * std::pow(m.kappa, -6) *
                            std::pow(R, -2.0 * (3.0 * m.tau + 1.0)) *
                            std::pow(BR, 4);
        cert.displacement_bound = disp <= 0.25 * Delta;
    }
    cert.certified = cert.det_bound && cert.displacement_bound;
    if (cert.certified) cert.gap_bound = Delta;
    return cert;
}

}  // namespace gapflow
