#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "gapflow/types.hpp"

namespace gapflow {

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by
/// Newton iteration on the Legendre recurrence.
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;

    explicit GaussLegendre(int n);

    /// Integrate f over [a, b].
    template <class F>
    auto integrate(F&& f, double a, double b) const {
        using R = decltype(f(a));
        R acc = R(0);
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (std::size_t i = 0; i < x.size(); ++i)
            acc += R(w[i] * half) * f(mid + half * x[i]);
        return acc;
    }
};

/// Integrate f(x)/sqrt((x-a)(b-x)) over the full interval (a, b) by the
/// substitution x = mid + half*cos(theta), which maps the weight to the
/// uniform measure: integral = (pi/n) * sum f(x_i) at Chebyshev nodes.
template <class F>
auto chebyshev_singular_integral(F&& f, double a, double b, int n = 256) {
    using R = decltype(f(a));
    R acc = R(0);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        const double th = pi * (i + 0.5) / n;
        acc += f(mid + half * std::cos(th));
    }
    return R(pi / n) * acc;
}

/// Integrate g(x) over (a, m) where g has a 1/sqrt(x-a) singularity at a
/// only (m strictly inside the smooth region).  Substitution x = a + (m-a)t^2.
template <class F>
auto left_singular_integral(F&& g, double a, double m, const GaussLegendre& gl) {
    using R = decltype(g(m));
    if (m <= a) return R(0);
    return gl.integrate([&](double t) -> R { return R(2.0 * (m - a) * t) * g(a + (m - a) * t * t); },
                        0.0, 1.0);
}

/// Integrate g(x) over (m, b) where g has a 1/sqrt(b-x) singularity at b
/// only.  Substitution x = b - (b-m)t^2.
template <class F>
auto right_singular_integral(F&& g, double m, double b, const GaussLegendre& gl) {
    using R = decltype(g(m));
    if (b <= m) return R(0);
    return gl.integrate([&](double t) -> R { return R(2.0 * (b - m) * t) * g(b - (b - m) * t * t); },
                        0.0, 1.0);
}

/// Integrate g(x) over (a, b) where g has 1/sqrt singularities at both ends.
/// Split at the midpoint and substitute from each side.
template <class F>
auto both_singular_integral(F&& g, double a, double b, const GaussLegendre& gl) {
    using R = decltype(g(0.5 * (a + b)));
    const double m = 0.5 * (a + b);
    R left = left_singular_integral(g, a, m, gl);
    R right = gl.integrate([&](double t) -> R { return R(2.0 * (b - m) * t) * g(b - (b - m) * t * t); },
                           0.0, 1.0);
    return left + right;
}

}  // namespace gapflow
