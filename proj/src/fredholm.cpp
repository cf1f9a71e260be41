#include "zwdpp/fredholm.hpp"

#include <algorithm>
#include <cmath>

#include "zwdpp/linalg.hpp"

namespace zwdpp {

QuadratureScheme gauss_legendre_01(int n) {
    if (n < 2) throw DomainError("gauss_legendre_01: order must be >= 2");
    QuadratureScheme q;
    q.n = n;
    q.t.resize(n);
    q.w.resize(n);
    // Newton iteration on P_n over (-1, 1), then map to (0, 1)
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * x * p2 - j * p3) / (j + 1);
            }
            pp = n * (x * p1 - p2) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double wgt = 2.0 / ((1.0 - x * x) * pp * pp);
        q.t[i] = 0.5 * (1.0 - x);
        q.w[i] = 0.5 * wgt;
        q.t[n - 1 - i] = 0.5 * (1.0 + x);
        q.w[n - 1 - i] = 0.5 * wgt;
    }
    return q;
}

namespace {

double nystrom_det(const Kernel2D& kernel, const std::vector<double>& x,
                   const std::vector<double>& w) {
    std::size_t n = x.size();
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) sq[i] = std::sqrt(w[i]);
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] = (i == j ? 1.0 : 0.0) - sq[i] * kernel(x[i], x[j]) * sq[j];
    return det_inplace(m, n);
}

}  // namespace

double fredholm_det_tail(const Kernel2D& kernel, double s, const QuadratureScheme& quad) {
    std::vector<double> x(quad.n), w(quad.n);
    for (int i = 0; i < quad.n; ++i) {
        double t = quad.t[i];
        double om = 1.0 - t;
        x[i] = s + t / om;
        w[i] = quad.w[i] / (om * om);
    }
    return nystrom_det(kernel, x, w);
}

double fredholm_det_interval(const Kernel2D& kernel, double a, double b,
                             const QuadratureScheme& quad) {
    if (!(b > a)) throw DomainError("fredholm_det_interval: empty interval");
    std::vector<double> x(quad.n), w(quad.n);
    for (int i = 0; i < quad.n; ++i) {
        x[i] = a + (b - a) * quad.t[i];
        w[i] = (b - a) * quad.w[i];
    }
    return nystrom_det(kernel, x, w);
}

DetResult fredholm_det_checked(const Kernel2D& kernel, double s, int n, double tol) {
    double d1 = fredholm_det_tail(kernel, s, gauss_legendre_01(n));
    double d2 = fredholm_det_tail(kernel, s, gauss_legendre_01(2 * n));
    DetResult res;
    res.value = d2;
    res.err_est = std::fabs(d2 - d1);
    res.n = 2 * n;
    if (res.err_est > tol)
        throw QuadratureNotConverged("fredholm_det_checked: order doubling moved the value");
    return res;
}

double alpha1_cdf(const HypParams& hp, double u, const QuadratureScheme& quad) {
    if (!(u > 0.0)) throw DomainError("alpha1_cdf: u must be positive");
    Kernel2D k = [&hp](double x, double y) { return hyp_kernel(hp, x, y); };
    return fredholm_det_tail(k, 0.5 + u, quad);
}

namespace {

double log_det_at(const HypParams& hp, double s, const QuadratureScheme& quad) {
    Kernel2D k = [&hp](double x, double y) { return hyp_kernel(hp, x, y); };
    double d = fredholm_det_tail(k, s, quad);
    if (!(d > 0.0)) throw DomainError("sigma_function: nonpositive determinant");
    return std::log(d);
}

double sigma_with_step(const HypParams& hp, double s, const QuadratureScheme& quad, double h) {
    double ld = (log_det_at(hp, s + h, quad) - log_det_at(hp, s - h, quad)) / (2.0 * h);
    return (s * s - 0.25) * ld - hp.nu1 * hp.nu1 * s + 0.5 * hp.nu3_nu4();
}

}  // namespace

double sigma_function(const HypParams& hp, double s, const QuadratureScheme& quad, double h,
                      bool check_step) {
    if (!(s > 0.5)) throw DomainError("sigma_function: s must exceed 1/2");
    double v = sigma_with_step(hp, s, quad, h);
    if (check_step) {
        double v2 = sigma_with_step(hp, s, quad, 0.5 * h);
        double scale = std::max({std::fabs(v), std::fabs(v2), 1.0});
        if (std::fabs(v - v2) > 1e-5 * scale)
            throw DerivativeUnstable("sigma_function: step halving moved the value");
        v = v2;
    }
    return v;
}

double painleve6_residual(const HypParams& hp, double s, const QuadratureScheme& quad, double h) {
    double sm = sigma_function(hp, s - h, quad);
    double s0 = sigma_function(hp, s, quad);
    double sp = sigma_function(hp, s + h, quad);
    double d1 = (sp - sm) / (2.0 * h);
    double d2 = (sp - 2.0 * s0 + sm) / (h * h);

    double nu1sq = hp.nu1 * hp.nu1;
    double lhs = -d1 * std::pow((s * s - 0.25) * d2, 2);
    double rhs = std::pow(2.0 * (s * d1 - s0) * d1 - nu1sq * hp.nu3_nu4(), 2) -
                 (d1 + nu1sq) * (d1 + nu1sq) * (d1 + hp.nu3_sq()) * (d1 + hp.nu4_sq());
    return std::fabs(lhs - rhs) / std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
}

GapCurve compute_gap_curve(const HypParams& hp, const std::vector<double>& grid, int quad_n,
                           bool with_residual) {
    GapCurve curve;
    curve.quad_n = quad_n;
    QuadratureScheme quad = gauss_legendre_01(quad_n);
    QuadratureScheme half = gauss_legendre_01(std::max(2, quad_n / 2));
    Kernel2D k = [&hp](double x, double y) { return hyp_kernel(hp, x, y); };
    for (double s : grid) {
        if (!(s > 0.5)) throw DomainError("compute_gap_curve: grid must stay above 1/2");
        double d = fredholm_det_tail(k, s, quad);
        double d_half = fredholm_det_tail(k, s, half);
        curve.s.push_back(s);
        curve.det.push_back(d);
        curve.err_est.push_back(std::fabs(d - d_half));
        curve.sigma.push_back(sigma_function(hp, s, quad));
        curve.residual.push_back(with_residual ? painleve6_residual(hp, s, quad) : 0.0);
    }
    return curve;
}

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf,
                   const std::vector<double>& probes) {
    if (samples.empty()) throw DomainError("ks_distance: no samples");
    std::sort(samples.begin(), samples.end());
    double worst = 0.0;
    for (double u : probes) {
        auto it = std::lower_bound(samples.begin(), samples.end(), u);
        double emp = static_cast<double>(it - samples.begin()) / samples.size();
        worst = std::max(worst, std::fabs(emp - cdf(u)));
    }
    return worst;
}

}  // namespace zwdpp
