#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>

#include "gapflow/moser_poschel.hpp"

using namespace gapflow;

namespace {

/// Truncated Fourier coefficients of a smooth 2 pi periodic function.
ScalarSeries sample_series(const std::function<cplx(double)>& f, int nmax = 14) {
    const int M = 256;
    ScalarSeries s;
    s.d = 1;
    for (int n = -nmax; n <= nmax; ++n) {
        cplx c = 0.0;
        for (int j = 0; j < M; ++j) {
            const double x = 2.0 * pi * j / M;
            c += f(x) * std::polar(1.0, -n * x);
        }
        c /= double(M);
        if (std::abs(c) > 1e-16) s.modes.push_back({{n}, c});
    }
    return s;
}

ScalarSeries constant_series(cplx c) {
    ScalarSeries s;
    s.d = 1;
    s.modes = {{{0}, c}};
    return s;
}

ParabolicModel identity_model(double zeta) {
    ParabolicModel m;
    m.zeta = zeta;
    m.b11 = constant_series(1.0);
    m.b12.d = 1;
    m.omega = Vec::Constant(1, std::sqrt(2.0));
    m.kappa = 0.1;
    m.tau = 1.0;
    m.R = 0.5;
    return m;
}

/// b11 = cosh(r) e^{i phi}, b12 = sinh(r) e^{i psi} with trig-polynomial
/// exponents: analytic, SU(1,1) pointwise, rapidly decaying coefficients.
ParabolicModel random_model(std::mt19937& rng) {
    std::uniform_real_distribution<double> ph(0.0, 2.0 * pi);
    std::uniform_real_distribution<double> amp(0.05, 0.35);
    const double a1 = amp(rng), a2 = 0.4 * amp(rng);
    const double p1 = ph(rng), p2 = ph(rng), p3 = ph(rng), p4 = ph(rng);
    const auto r = [=](double x) {
        return a1 * std::cos(x + p1) + a2 * std::cos(2 * x + p2);
    };
    ParabolicModel m;
    m.zeta = 0.1;
    m.b11 = sample_series([=](double x) {
        return std::cosh(r(x)) * std::polar(1.0, 0.4 * std::cos(x + p3));
    });
    m.b12 = sample_series([=](double x) {
        return std::sinh(r(x)) * std::polar(1.0, 0.3 * std::cos(x + p4));
    });
    m.omega = Vec::Constant(1, std::sqrt(2.0));
    m.kappa = 0.1;
    m.tau = 1.0;
    m.R = 0.3;
    return m;
}

}  // namespace

TEST_CASE("series arithmetic") {
    ScalarSeries s;
    s.d = 1;
    s.modes = {{{0}, 1.0}, {{1}, cplx(0.0, 0.5)}};
    Vec x(1);
    x[0] = 0.7;
    CHECK(std::abs(s.eval(x) - (1.0 + cplx(0, 0.5) * std::polar(1.0, 0.7))) <=
          1e-14);
    CHECK(s.strip_norm(0.2) ==
          doctest::Approx(1.0 + 0.5 * std::exp(0.2)).epsilon(1e-12));

    const ScalarSeries sq = product(s, s);
    CHECK(std::abs(sq.eval(x) - s.eval(x) * s.eval(x)) <= 1e-14);
    const ScalarSeries cs = conj_series(s);
    CHECK(std::abs(cs.eval(x) - std::conj(s.eval(x))) <= 1e-14);
}

TEST_CASE("perturbation matrix from the conjugation") {
    // B = identity.
    const MatSeries Pid = perturbation_from_conjugation(identity_model(0.1));
    REQUIRE(Pid.modes.size() == 1);
    Mat2c expect;
    expect << cplx(0, -1), 0, 0, cplx(0, 1);
    CHECK((Pid.mean() - expect).cwiseAbs().maxCoeff() <= 1e-14);

    // Constant hyperbolic B.
    const double r = 0.7;
    ParabolicModel hyp = identity_model(0.1);
    hyp.b11 = constant_series(std::cosh(r));
    hyp.b12 = constant_series(std::sinh(r));
    const Mat2c P = perturbation_from_conjugation(hyp).mean();
    CHECK(std::abs(P(0, 0) - cplx(0, -std::cosh(2 * r))) <= 1e-12);
    CHECK(std::abs(P(0, 1) - cplx(0, -std::sinh(2 * r))) <= 1e-12);
    CHECK(std::abs(P(1, 0) - cplx(0, std::sinh(2 * r))) <= 1e-12);

    // Strip-norm bound on a random analytic model.
    std::mt19937 rng(7);
    const ParabolicModel m = random_model(rng);
    const MatSeries Pm = perturbation_from_conjugation(m);
    const double h = 0.5 * m.R;
    CHECK(Pm.strip_norm(h) <= 2.0 * m.B_norm(h) * m.B_norm(h));

    // A non-SU(1,1) model is rejected.
    ParabolicModel bad = identity_model(0.1);
    bad.b12 = constant_series(0.5);
    CHECK_THROWS(perturbation_from_conjugation(bad));
}

TEST_CASE("homological solve") {
    // Constant P has no nonconstant part to kill.
    ParabolicModel id = identity_model(0.1);
    const MatSeries Pid = perturbation_from_conjugation(id);
    const HomologicalSolution triv = homological_solve(id, Pid, 0.3, 8);
    CHECK(triv.Y.modes.empty());
    CHECK(triv.residual <= 1e-14);

    // Single mode with <n, omega> = 0.5, zeta = 0.1, P11 = 1:
    // Y11 = (0.25 - 0.01)/(0.125 i) = -1.92 i.
    ParabolicModel single = identity_model(0.1);
    single.omega = Vec::Constant(1, 0.5);
    MatSeries P1;
    P1.d = 1;
    Mat2c p;
    p << 1.0, 0.0, 0.0, -1.0;
    P1.modes = {{{1}, p}};
    const HomologicalSolution sol = homological_solve(single, P1, 1.0, 1);
    REQUIRE(sol.Y.modes.size() == 1);
    CHECK(std::abs(sol.Y.modes[0].second(0, 0) - cplx(0, -1.92)) <= 1e-12);

    // Synthetic analytic P: the truncated solve closes the equation on a
    // dense grid.
    std::mt19937 rng(11);
    const ParabolicModel m = random_model(rng);
    const MatSeries Pm = perturbation_from_conjugation(m);
    const HomologicalSolution s = homological_solve(m, Pm, 0.05, 64);
    CHECK(s.residual <= 1e-10);

    // Small divisor below kappa/(2 N^tau) is rejected.
    ParabolicModel sd = m;
    sd.omega = Vec::Constant(1, 1e-3);
    CHECK_THROWS(homological_solve(sd, Pm, 0.05, 8));
}

TEST_CASE("averaged determinant, dual evaluation") {
    // B = identity: d = Delta (Delta - zeta).
    const AveragedModel av = averaged_determinant(identity_model(0.3), 0.8);
    CHECK(av.d == doctest::Approx(0.8 * 0.5).epsilon(1e-14));
    CHECK(av.d_direct == doctest::Approx(av.d).epsilon(1e-14));
    CHECK(av.denom == doctest::Approx(1.0).epsilon(1e-14));

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dd(-0.5, 0.5);
    for (int trial = 0; trial < 100; ++trial) {
        const ParabolicModel m = random_model(rng);
        const double Delta = dd(rng);
        const AveragedModel a = averaged_determinant(m, Delta);
        CHECK(a.denom >= 1.0 - 1e-12);
        CHECK(std::abs(a.d - a.d_direct) <= 1e-12);
        // The energy reflection conjugates B entrywise and leaves d fixed.
        const AveragedModel ar = averaged_determinant(reflect_energy(m), Delta);
        CHECK(std::abs(ar.d - a.d) <= 1e-12);
    }
}

TEST_CASE("gap upper bound certificate") {
    // Large zeta: the smallness hypothesis fails, no certificate.
    ParabolicModel loose = identity_model(1e-6);
    loose.kappa = 0.1;
    loose.tau = 1.5;
    const GapCertificate none = gap_upper_bound_certificate(loose, 0.1, 0.5);
    CHECK(!none.hypothesis);
    CHECK(!none.certified);
    // Direct arithmetic on the displayed inequality with ||B||_R = 2.
    const double Dt = averaging_constant(1.5);
    CHECK(Dt == doctest::Approx(std::pow(2.0, 12.5) * std::tgamma(5.5)));
    CHECK(16.0 * std::pow(1e-6, 0.1) >
          std::pow(2.0, -6.0) / (Dt * Dt) * std::pow(0.1, 6) *
              std::pow(0.5, 11.0));

    // Tiny zeta with a friendly Diophantine pair: certified.
    ParabolicModel tight = identity_model(1e-38);
    tight.kappa = 1.0;
    tight.tau = 0.1;
    const GapCertificate cert = gap_upper_bound_certificate(tight, 0.2, 1.0);
    CHECK(cert.hypothesis);
    CHECK(cert.det_bound);
    CHECK(cert.displacement_bound);
    CHECK(cert.certified);
    CHECK(cert.gap_bound == doctest::Approx(std::pow(1e-38, 0.8)));

    CHECK_THROWS(gap_upper_bound_certificate(tight, 0.3, 1.0));
    CHECK_THROWS(gap_upper_bound_certificate(tight, -0.1, 1.0));
}

TEST_CASE("conjugation estimates on a synthetic model") {
    std::mt19937 rng(31);
    const ParabolicModel m = random_model(rng);
    const MatSeries P = perturbation_from_conjugation(m);
    const double Delta = 1e-3;
    const HomologicalSolution sol = homological_solve(m, P, Delta, 64);

    const double Dt = averaging_constant(m.tau);
    const double BR = m.B_norm(m.R);
    const double x_bound = 2.0 * Dt * std::pow(m.kappa, -3) *
                           std::pow(m.R, -(3.0 * m.tau + 1.0)) * Delta * BR * BR;
    const double p_bound = Dt * Dt * std::pow(m.kappa, -6) *
                           std::pow(m.R, -2.0 * (3.0 * m.tau + 1.0)) *
                           std::pow(BR, 4);

    const AveragedModel av = averaged_determinant(m, Delta);
    const Mat2c A = m.A();
    const double om = m.omega[0];
    const auto X_at = [&](double x) {
        Vec v(1);
        v[0] = x;
        return Mat2c(sol.Y.eval(v).exp());
    };
    double worst_x = 0.0, worst_p = 0.0;
    for (int j = 0; j < 64; ++j) {
        const double x = 2.0 * pi * j / 64;
        const Mat2c X = X_at(x);
        worst_x = std::max(worst_x, (X - Mat2c::Identity()).norm());
        // d_omega X by a centered five-point stencil.
        const double h = 1e-2;
        const Mat2c dX = om *
                         (X_at(x - 2 * h) - 8.0 * X_at(x - h) + 8.0 * X_at(x + h) -
                          X_at(x + 2 * h)) /
                         (12.0 * h);
        Vec v(1);
        v[0] = x;
        const Mat2c rem =
            X.inverse() * ((A + Delta * P.eval(v)) * X - dX) - av.A_tilde;
        worst_p = std::max(worst_p, rem.norm() / (Delta * Delta));
    }
    CHECK(worst_x <= x_bound);
    CHECK(worst_p <= p_bound);
}
