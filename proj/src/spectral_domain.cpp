#include "gapflow/spectral_domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gapflow {

Divisor phases_to_divisor(const PhaseVector& y, const GapSet& g) {
    if (static_cast<std::size_t>(y.size()) != g.size())
        throw std::invalid_argument("phases_to_divisor: length mismatch");
    Divisor D;
    D.points.resize(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double s = std::sin(y[j]);
        const double s2 = std::sin(2.0 * y[j]);
        D.points[j].mu = g.gaps[j].a + g.gamma(j) * s * s;
        D.points[j].eps = (std::abs(s2) < 1e-12) ? 0 : (s2 > 0 ? 1 : -1);
    }
    return D;
}

PhaseVector divisor_to_phases(const Divisor& D, const GapSet& g) {
    check_divisor(D, g);
    PhaseVector y(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double t = std::clamp((D.points[j].mu - g.gaps[j].a) / g.gamma(j), 0.0, 1.0);
        const double r = std::asin(std::sqrt(t));  // in [0, pi/2]
        y[j] = (D.points[j].eps < 0) ? pi - r : r;
    }
    return y;
}

namespace {

// log of the two-sided comparability product at z in gap j.
double log_product(const GapSet& g, std::size_t j, double z) {
    double acc = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (k == j) continue;
        if (g.gaps[k].b <= g.gaps[j].a)
            acc += std::log((g.gaps[k].a - z) / (g.gaps[k].b - z));
        else
            acc += std::log((g.gaps[k].b - z) / (g.gaps[k].a - z));
    }
    return acc;
}

}  // namespace

Vec comparability_constants(const GapSet& g, int grid) {
    g.validate();
    Vec C(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        double best = -std::numeric_limits<double>::infinity();
        const double mid = g.gaps[j].center(), half = 0.5 * g.gamma(j);
        for (int i = 0; i < grid; ++i) {
            const double th = pi * (i + 0.5) / grid;
            best = std::max(best, log_product(g, j, mid + half * std::cos(th)));
        }
        // The product is continuous up to the closed gap; include the
        // endpoint limits directly.
        best = std::max(best, log_product(g, j, g.gaps[j].a));
        best = std::max(best, log_product(g, j, g.gaps[j].b));
        C[j] = std::exp(0.5 * best);
    }
    return C;
}

namespace {

// Tail gap length at index K_trunc + m under the declared model.
double tail_gamma(const TailModel& t, std::size_t k_trunc, int m) {
    const double k = static_cast<double>(k_trunc + m);
    switch (t.kind) {
        case TailKind::exponential: return t.amplitude * std::exp(-t.rate * k);
        case TailKind::power: return t.amplitude * std::pow(k, -t.rate);
        default: return 0.0;
    }
}

}  // namespace

CraigReport craig_report(const GapSet& g, double delta, const TailModel& tail) {
    if (delta <= 0) throw std::invalid_argument("craig_report: delta must be positive");
    g.validate();
    CraigReport rep;
    const std::size_t n = g.size();
    if (n == 0) return rep;
    const Vec C = comparability_constants(g);
    const std::size_t r = static_cast<std::size_t>(g.reference_index);

    for (std::size_t k = 0; k < n; ++k)
        rep.sum1 += (1.0 + g.gap_distance(k, r)) * C[k] * std::sqrt(g.gamma(k));

    for (std::size_t j = 0; j < n; ++j) {
        const double eta0j = g.gap_distance(r, j);
        double s2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const double eta = g.gap_distance(j, k);
            s2 += C[j] * C[j] * C[j] * C[k] * C[k] * (1.0 + eta0j * eta0j) *
                  std::sqrt(g.gamma(j) * g.gamma(k)) / eta;
            rep.sup3 = std::max(rep.sup3, std::sqrt(g.gamma(j) * g.gamma(k)) /
                                              (std::pow(g.gamma(j), delta) * eta));
        }
        rep.sup2 = std::max(rep.sup2, s2);
    }

    if (tail.kind != TailKind::none) {
        // Tail gaps sit at distance >= spacing*m beyond the truncation; their
        // comparability constants are bounded by the largest computed one.
        const double C_bar = C.maxCoeff();
        const double edge = g.gaps.back().b - g.xi_star();
        const int M = 200000;
        double t1 = 0.0, t2 = 0.0, t3 = 0.0;
        bool conv = true;
        for (int m = 1; m <= M; ++m) {
            const double gam = tail_gamma(tail, n, m);
            const double dist0 = edge + tail.spacing * m;
            const double term1 = (1.0 + dist0) * C_bar * std::sqrt(gam);
            t1 += term1;
            t2 += C_bar * C_bar * std::sqrt(gam) / (tail.spacing * m);
            t3 = std::max(t3, std::sqrt(gam) / (tail.spacing * m));
            if (m == M && term1 > 1e-14) conv = false;
        }
        rep.tail1 = t1;
        rep.finite1 = conv;
        // Worst in-truncation prefactor multiplying the cross sum to the tail.
        double pre = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double eta0j = g.gap_distance(r, j);
            pre = std::max(pre, C[j] * C[j] * C[j] * (1.0 + eta0j * eta0j) * std::sqrt(g.gamma(j)));
        }
        rep.tail2 = pre * t2;
        rep.finite2 = conv;
        rep.tail3 = std::sqrt(g.gaps.back().width()) * t3;
        rep.finite3 = conv;
    }
    return rep;
}

double homogeneity_estimate(const GapSet& g, double lambda_min, double lambda_max, int grid) {
    g.validate();
    if (!(lambda_min < lambda_max))
        throw std::invalid_argument("homogeneity_estimate: empty window");

    auto in_spectrum = [&](double x) {
        for (const Gap& gp : g.gaps)
            if (gp.contains(x)) return false;
        return true;
    };

    std::vector<double> samples;
    for (int i = 0; i <= grid; ++i) {
        const double x = lambda_min + (lambda_max - lambda_min) * i / grid;
        if (in_spectrum(x)) samples.push_back(x);
    }
    for (const Gap& gp : g.gaps) {
        if (gp.a >= lambda_min && gp.a <= lambda_max) samples.push_back(gp.a);
        if (gp.b >= lambda_min && gp.b <= lambda_max) samples.push_back(gp.b);
    }
    if (samples.empty())
        throw std::invalid_argument("homogeneity_estimate: window does not meet the spectrum");

    double h_max = 0.5 * (lambda_max - lambda_min);
    double best = 1.0;
    for (double lam : samples) {
        double h = h_max;
        for (int m = 0; m < 45 && h > 1e-12; ++m, h *= 0.5) {
            double gap_measure = 0.0;
            for (const Gap& gp : g.gaps) {
                const double lo = std::max(gp.a, lam - h);
                const double hi = std::min(gp.b, lam + h);
                if (hi > lo) gap_measure += hi - lo;
            }
            best = std::min(best, (2.0 * h - gap_measure) / (2.0 * h));
        }
    }
    return best;
}

}  // namespace gapflow
