#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapflow {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Mat2c = Eigen::Matrix2cd;
using Vec2c = Eigen::Vector2cd;

constexpr double pi = 3.14159265358979323846;

/// Open spectral gap (a, b).
struct Gap {
    double a = 0.0;
    double b = 0.0;
    double width() const { return b - a; }
    double center() const { return 0.5 * (a + b); }
    bool contains(double x) const { return x > a && x < b; }
};

/// The spectrum E = R \ union of open gaps, stored as the ordered gap list.
/// reference_index marks the gap containing the normalization point xi*.
struct GapSet {
    std::vector<Gap> gaps;
    int reference_index = 0;
    std::vector<std::vector<int>> labels;  // optional integer labels k in Z^d

    std::size_t size() const { return gaps.size(); }
    double xi_star() const { return gaps.at(reference_index).center(); }
    double gamma(std::size_t j) const { return gaps.at(j).width(); }

    /// Distance between gaps j and k (0 if they touch; they never overlap).
    double gap_distance(std::size_t j, std::size_t k) const {
        if (j == k) return 0.0;
        const Gap& gj = gaps.at(j);
        const Gap& gk = gaps.at(k);
        return (gj.b <= gk.a) ? gk.a - gj.b : gj.a - gk.b;
    }

    void validate() const {
        if (gaps.empty()) return;
        if (reference_index < 0 || reference_index >= static_cast<int>(gaps.size()))
            throw std::invalid_argument("GapSet: reference_index out of range");
        for (std::size_t j = 0; j < gaps.size(); ++j) {
            if (!(gaps[j].a < gaps[j].b))
                throw std::invalid_argument("GapSet: gap " + std::to_string(j) + " has a >= b");
            if (j > 0 && !(gaps[j - 1].b <= gaps[j].a))
                throw std::invalid_argument("GapSet: gaps overlap or are unsorted at index " + std::to_string(j));
        }
        if (!labels.empty() && labels.size() != gaps.size())
            throw std::invalid_argument("GapSet: label count does not match gap count");
    }
};

/// Dirichlet data: one point (mu_j, eps_j) per gap.  eps = +1/-1 selects the
/// sheet; eps = 0 marks the edge-identified points mu = a_j or mu = b_j.
struct DivisorPoint {
    double mu = 0.0;
    int eps = 0;
};

struct Divisor {
    std::vector<DivisorPoint> points;
    std::size_t size() const { return points.size(); }
};

/// Angle coordinates y_j with mu_j = a_j + gamma_j sin^2(y_j).
using PhaseVector = Eigen::VectorXd;

inline void check_divisor(const Divisor& D, const GapSet& g) {
    if (D.size() != g.size())
        throw std::invalid_argument("divisor/gap-set size mismatch");
    for (std::size_t j = 0; j < g.size(); ++j) {
        const double mu = D.points[j].mu;
        if (mu < g.gaps[j].a || mu > g.gaps[j].b)
            throw std::invalid_argument("divisor point " + std::to_string(j) + " outside its gap");
    }
}

}  // namespace gapflow
