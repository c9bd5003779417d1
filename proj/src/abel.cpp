#include "gapflow/abel.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "gapflow/quadrature.hpp"

namespace gapflow {

namespace {

double horner(const Vec& coeffs, double x) {
    double acc = 0.0;
    for (int i = int(coeffs.size()) - 1; i >= 0; --i) acc = acc * x + coeffs[i];
    return acc;
}

constexpr int kChebOrder = 512;

// int over (p, q) of poly(xi)/w(xi + i0), both endpoints branch points.
cplx full_interval_integral(const GapSet& g, const Vec& poly, double p, double q) {
    if (q - p <= 0) return 0.0;
    return chebyshev_singular_integral(
        [&](double x) {
            return horner(poly, x) * std::sqrt((x - p) * (q - x)) / w_upper(g, cplx(x, 0.0));
        },
        p, q, kChebOrder);
}

// int over (a_j, mu) of poly(xi)/w(xi + i0) inside gap j.
cplx partial_gap_integral(const GapSet& g, std::size_t j, const Vec& poly, double mu,
                          const GaussLegendre& gl) {
    const double a = g.gaps[j].a, b = g.gaps[j].b;
    if (mu <= a) return 0.0;
    auto f = [&](double x) { return horner(poly, x) / w_upper(g, cplx(x, 0.0)); };
    if (mu >= b) return full_interval_integral(g, poly, a, b);
    if (mu <= 0.5 * (a + b)) return left_singular_integral(f, a, mu, gl);
    return full_interval_integral(g, poly, a, b) - right_singular_integral(f, mu, b, gl);
}

// Laurent coefficients of z^N / w at infinity, e_0 = 1.
Vec inverse_w_series(const GapSet& g, int order) {
    Vec c(order + 1), d(order + 1), e(order + 1);
    c[0] = 0.0;
    for (int m = 1; m <= order; ++m) {
        double s = 0.0;
        for (const Gap& gp : g.gaps) s += std::pow(gp.a, m) + std::pow(gp.b, m);
        c[m] = 0.5 * s / m;
    }
    d[0] = 1.0;  // w / z^N = exp(-sum c_m z^{-m})
    for (int n = 1; n <= order; ++n) {
        double s = 0.0;
        for (int m = 1; m <= n; ++m) s += m * c[m] * d[n - m];
        d[n] = -s / n;
    }
    e[0] = 1.0;
    for (int n = 1; n <= order; ++n) {
        double s = 0.0;
        for (int m = 1; m <= n; ++m) s += d[m] * e[n - m];
        e[n] = -s;
    }
    return e;
}

double wrap_unit(double x) { return x - std::floor(x); }

}  // namespace

cplx w_upper(const GapSet& g, cplx z) {
    if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
    cplx acc = 0.0;
    for (const Gap& gp : g.gaps) acc += 0.5 * (std::log(z - gp.a) + std::log(z - gp.b));
    return std::exp(acc);
}

HyperellipticData build_curve(const GapSet& g) {
    g.validate();
    const int N = int(g.size());
    if (N == 0) throw std::invalid_argument("build_curve: no gaps");
    HyperellipticData h;
    h.g = g;
    h.genus = N - 1;
    const int r = g.reference_index;
    for (int j = 0; j < N; ++j)
        if (j != r) h.cycle.push_back(j);

    // jmat[j][c] = int_{gap j} i xi^c / w dxi  (real on gaps).
    Mat jmat(N, N);
    for (int c = 0; c < N; ++c) {
        Vec mono = Vec::Zero(c + 1);
        mono[c] = 1.0;
        for (int j = 0; j < N; ++j)
            jmat(j, c) = (cplx(0, 1) *
                          full_interval_integral(g, mono, g.gaps[j].a, g.gaps[j].b))
                             .real();
    }

    // omega(., E_infinity): deg <= N-1, jump +1 across the reference gap.
    {
        Vec rhs = Vec::Zero(N);
        rhs[r] = 1.0;
        h.rot_dens = jmat.fullPivLu().solve(rhs);
    }

    if (h.genus == 0) return h;

    // omega(., E_k): deg <= N-2, jumps +-1 across the two gaps bounding E_k.
    h.char_dens.resize(N - 1, h.genus);
    for (int kc = 0; kc < h.genus; ++kc) {
        const int k = int(h.cycle[kc]);
        Vec rhs = Vec::Zero(N);
        if (k > r) {
            rhs[r] = 1.0;
            rhs[k] = -1.0;
        } else {
            rhs[k] = 1.0;
            rhs[r] = -1.0;
        }
        const Mat A = jmat.leftCols(N - 1);
        const Vec q = A.colPivHouseholderQr().solve(rhs);
        h.residual = std::max(h.residual, (A * q - rhs).cwiseAbs().maxCoeff());
        h.char_dens.col(kc) = q;
    }

    // Normalized holomorphic differentials: 2 int_{gap j} i q_k / w = delta_jk.
    Mat A(h.genus, h.genus);
    for (int jc = 0; jc < h.genus; ++jc)
        for (int c = 0; c < h.genus; ++c) A(jc, c) = 2.0 * jmat(int(h.cycle[jc]), c);
    {
        Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        h.cond = svd.singularValues()(0) / svd.singularValues()(h.genus - 1);
        h.holo = svd.solve(Mat::Identity(h.genus, h.genus));
    }

    // B-periods.  Writing the cycle as an upper-sheet leg from gap j to the
    // reference gap plus its lower-sheet mirror, the two legs add to twice
    // the imaginary part of the boundary-value integral, so the gap
    // segments drop out and only the bands in between contribute.  The
    // orientation (from gap j towards the reference gap) makes B symmetric
    // with positive definite imaginary part.
    h.B = CMat::Zero(h.genus, h.genus);
    for (int jc = 0; jc < h.genus; ++jc) {
        const int j = int(h.cycle[jc]);
        const double orient = (j > r) ? -1.0 : 1.0;
        const int lo = std::min(j, r), hi = std::max(j, r);
        for (int kc = 0; kc < h.genus; ++kc) {
            double acc = 0.0;
            for (int i = lo; i < hi; ++i)  // band between gap i and gap i+1
                acc += (cplx(0, 1) * full_interval_integral(g, h.holo.col(kc), g.gaps[i].b,
                                                            g.gaps[i + 1].a))
                           .imag();
            h.B(jc, kc) = orient * 2.0 * cplx(0.0, acc);
        }
    }
    return h;
}

Vec abel_character(const Divisor& D, const HyperellipticData& h) {
    check_divisor(D, h.g);
    const GaussLegendre gl(96);
    Vec out(h.genus);
    for (int kc = 0; kc < h.genus; ++kc) {
        double acc = 0.0;
        for (std::size_t j = 0; j < h.g.size(); ++j) {
            const auto& pt = D.points[j];
            if (pt.mu <= h.g.gaps[j].a) continue;
            const double eps = (pt.eps == 0) ? 1.0 : double(pt.eps);
            const double val =
                (cplx(0, 1) * partial_gap_integral(h.g, j, h.char_dens.col(kc), pt.mu, gl))
                    .real();
            acc += 0.5 * eps * val;
        }
        out[kc] = wrap_unit(acc);
    }
    return out;
}

double abel_rotation(const Divisor& D, const HyperellipticData& h) {
    check_divisor(D, h.g);
    const GaussLegendre gl(96);
    double acc = 0.0;
    for (std::size_t j = 0; j < h.g.size(); ++j) {
        const auto& pt = D.points[j];
        if (pt.mu <= h.g.gaps[j].a) continue;
        const double eps = (pt.eps == 0) ? 1.0 : double(pt.eps);
        const double val =
            (cplx(0, 1) * partial_gap_integral(h.g, j, h.rot_dens, pt.mu, gl)).real();
        acc -= 0.5 * eps * val;
    }
    return wrap_unit(acc);
}

FrequencyData translation_frequencies(const HyperellipticData& h) {
    const GapSet& g = h.g;
    const int N = int(g.size());
    const int r = g.reference_index;
    FrequencyData out;

    // jmat restricted to monomials 0..N-1 on nonreference gaps, for the
    // A-normalization of the second-kind differentials.
    std::vector<Vec> T(2);
    const Vec e = inverse_w_series(g, 4);
    for (int k = 0; k <= 1; ++k) {
        Vec t = Vec::Zero(N + k + 1);
        // Match (T_k / w)(z) = (k+1) z^k + 0 z^{k-1} + ... + 0 z^{-1} + O(z^{-2}).
        t[N + k] = double(k + 1);
        for (int s = k - 1; s >= -1; --s) {
            double acc = 0.0;
            for (int m = 1; m <= k - s; ++m) acc += t[N + s + m] * e[m];
            t[N + s] = -acc;
        }
        if (h.genus > 0) {
            Mat A(h.genus, h.genus);
            Vec rhs(h.genus);
            for (int jc = 0; jc < h.genus; ++jc) {
                const int j = int(h.cycle[jc]);
                for (int c = 0; c < h.genus; ++c) {
                    Vec mono = Vec::Zero(c + 1);
                    mono[c] = 1.0;
                    A(jc, c) =
                        full_interval_integral(g, mono, g.gaps[j].a, g.gaps[j].b).imag();
                }
                Vec fixed = t;
                fixed.head(N - 1).setZero();
                rhs[jc] =
                    -full_interval_integral(g, fixed, g.gaps[j].a, g.gaps[j].b).imag();
            }
            const Vec u = A.colPivHouseholderQr().solve(rhs);
            t.head(N - 1) = u;
        }
        T[k] = t;
    }

    // Signed so that the character coordinate of a translation trajectory
    // advances by -eta/(2 pi) per unit x and -2 eta1/(2 pi) per unit t.
    out.eta = Vec::Zero(h.genus);
    out.eta1 = Vec::Zero(h.genus);
    for (int jc = 0; jc < h.genus; ++jc) {
        const int j = int(h.cycle[jc]);
        const int lo = std::min(j, r), hi = std::max(j, r);
        for (int i = lo; i < hi; ++i) {
            out.eta[jc] +=
                2.0 * full_interval_integral(g, T[0], g.gaps[i].b, g.gaps[i + 1].a).real();
            out.eta1[jc] +=
                2.0 * full_interval_integral(g, T[1], g.gaps[i].b, g.gaps[i + 1].a).real();
        }
    }

    const auto [t0, t1] = rotation_frequencies(g);
    out.theta0 = t0;
    out.theta1 = t1;
    return out;
}

std::pair<double, double> rotation_frequencies(const GapSet& g) {
    const HyperellipticData h = build_curve(g);
    const int N = int(g.size());
    double s1 = 0.0, s2 = 0.0;
    for (const Gap& gp : g.gaps) {
        s1 += gp.a + gp.b;
        s2 += gp.a * gp.a + gp.b * gp.b;
    }
    auto q = [&](int i) { return (i >= 0 && i < N) ? h.rot_dens[i] : 0.0; };
    const double theta0 = q(N - 1) * 0.5 * s1 + q(N - 2);
    const double theta1 =
        2.0 * (q(N - 1) * (0.125 * s1 * s1 + 0.25 * s2) + q(N - 2) * 0.5 * s1 + q(N - 3));
    return {theta0, theta1};
}

LinearFit linearization_fit(const std::vector<Vec>& images, const Vec& clocks) {
    if (images.size() < 8 || int(images.size()) != clocks.size())
        throw std::invalid_argument("linearization_fit: need >= 8 aligned samples");
    const int n = int(images.size());
    const int dim = int(images[0].size());
    LinearFit fit;
    fit.slopes = Vec::Zero(dim);
    fit.intercepts = Vec::Zero(dim);
    for (int c = 0; c < dim; ++c) {
        Vec v(n);
        double off = 0.0;
        for (int i = 0; i < n; ++i) {
            double x = images[i][c] + off;
            if (i > 0) {
                while (x - v[i - 1] > 0.5) {
                    x -= 1.0;
                    off -= 1.0;
                }
                while (x - v[i - 1] < -0.5) {
                    x += 1.0;
                    off += 1.0;
                }
            }
            v[i] = x;
        }
        const double cm = clocks.mean(), vm = v.mean();
        const double denom = (clocks.array() - cm).square().sum();
        const double slope =
            (denom == 0.0) ? 0.0
                           : ((clocks.array() - cm) * (v.array() - vm)).sum() / denom;
        const double icpt = vm - slope * cm;
        fit.slopes[c] = slope;
        fit.intercepts[c] = icpt;
        fit.max_residual = std::max(
            fit.max_residual,
            (v.array() - slope * clocks.array() - icpt).abs().maxCoeff());
    }
    return fit;
}

}  // namespace gapflow
