#pragma once

#include <functional>
#include <vector>

#include "zwdpp/hypkernel.hpp"

namespace zwdpp {

// Gauss-Legendre rule on (0, 1); the tail evaluator composes it with
// t -> s + t / (1 - t).
struct QuadratureScheme {
    int n = 0;
    std::vector<double> t;  // nodes, strictly increasing
    std::vector<double> w;  // weights, positive
};

QuadratureScheme gauss_legendre_01(int n);

using Kernel2D = std::function<double(double, double)>;

// det(I - K) over the half line (s, inf), symmetrized Nystrom discretization
double fredholm_det_tail(const Kernel2D& kernel, double s, const QuadratureScheme& quad);

// det(I - K) over a finite interval (a, b)
double fredholm_det_interval(const Kernel2D& kernel, double a, double b,
                             const QuadratureScheme& quad);

struct DetResult {
    double value = 0.0;
    double err_est = 0.0;  // |det_n - det_2n|
    int n = 0;
};

// Doubles the order once and reports the difference; throws
// QuadratureNotConverged when it exceeds tol.
DetResult fredholm_det_checked(const Kernel2D& kernel, double s, int n, double tol);

// Prob{alpha+_1 < u} = det(1 - K_{1/2+u})
double alpha1_cdf(const HypParams& hp, double u, const QuadratureScheme& quad);

// sigma(s) = (s^2 - 1/4) d/ds ln det(1 - K_s) - nu1^2 s + nu3 nu4 / 2
double sigma_function(const HypParams& hp, double s, const QuadratureScheme& quad,
                      double h = 4e-3, bool check_step = false);

// Normalized defect of the second-order ODE satisfied by sigma.
double painleve6_residual(const HypParams& hp, double s, const QuadratureScheme& quad,
                          double h = 1.2e-2);

struct GapCurve {
    std::vector<double> s;
    std::vector<double> det;
    std::vector<double> sigma;
    std::vector<double> residual;
    std::vector<double> err_est;
    int quad_n = 0;
};

GapCurve compute_gap_curve(const HypParams& hp, const std::vector<double>& grid, int quad_n,
                           bool with_residual);

// Kolmogorov-Smirnov distance between an empirical sample and a CDF,
// evaluated at the given probe locations.
double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf,
                   const std::vector<double>& probes);

}  // namespace zwdpp
