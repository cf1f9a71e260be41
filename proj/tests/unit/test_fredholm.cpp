#include <doctest.h>

#include <cmath>

#include "zwdpp/fredholm.hpp"

using namespace zwdpp;

namespace {

HypParams& reference_params() {
    static HypParams hp = [] {
        HypParams h = make_hyp_params(Cplx(0.3, 0.4), Cplx(0.3, -0.4));
        ScaledKernelCache cache;
        calibrate(h, 1.0, 64, &cache);
        return h;
    }();
    return hp;
}

Kernel2D reference_kernel() {
    return [](double x, double y) { return hyp_kernel(reference_params(), x, y); };
}

}  // namespace

TEST_CASE("Gauss-Legendre rule on (0,1)") {
    QuadratureScheme q = gauss_legendre_01(16);
    double sum = 0.0, quad_x2 = 0.0;
    for (int i = 0; i < q.n; ++i) {
        CHECK(q.w[i] > 0.0);
        if (i > 0) CHECK(q.t[i] > q.t[i - 1]);
        sum += q.w[i];
        quad_x2 += q.w[i] * q.t[i] * q.t[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quad_x2 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("far tail determinant approaches 1 from below") {
    QuadratureScheme quad = gauss_legendre_01(32);
    Kernel2D k = reference_kernel();
    double prev = 0.0;
    for (double s : {1.0, 2.0, 4.0, 8.0}) {
        double det = fredholm_det_tail(k, s, quad);
        CHECK(det > prev);
        CHECK(det <= 1.0);
        CHECK(det > 0.0);
        prev = det;
    }
    CHECK(prev > 0.999);
}

TEST_CASE("trace expansion oracle at small kernel norm") {
    QuadratureScheme quad = gauss_legendre_01(48);
    Kernel2D k = reference_kernel();
    double s = 5.0;
    double det = fredholm_det_tail(k, s, quad);
    // independent route: 1 - Tr K + (Tr^2 K - Tr K^2)/2 over the same nodes
    double tr = 0.0, tr2 = 0.0;
    std::vector<double> x(quad.n), w(quad.n);
    for (int i = 0; i < quad.n; ++i) {
        double om = 1.0 - quad.t[i];
        x[i] = s + quad.t[i] / om;
        w[i] = quad.w[i] / (om * om);
    }
    for (int i = 0; i < quad.n; ++i) {
        tr += w[i] * k(x[i], x[i]);
        for (int j = 0; j < quad.n; ++j) tr2 += w[i] * w[j] * k(x[i], x[j]) * k(x[j], x[i]);
    }
    double expansion = 1.0 - tr + 0.5 * (tr * tr - tr2);
    CHECK(std::fabs(det - expansion) < 1e-6);
}

TEST_CASE("sine kernel gap slope at small interval") {
    QuadratureScheme quad = gauss_legendre_01(24);
    Kernel2D k = [](double x, double y) { return sine_kernel(x, y); };
    double eps = 0.01;
    double det = fredholm_det_interval(k, 0.0, eps, quad);
    CHECK(std::fabs((det - 1.0) / eps - (-1.0)) < 1e-4);
}

TEST_CASE("order-doubling check") {
    Kernel2D k = reference_kernel();
    DetResult res = fredholm_det_checked(k, 1.0, 16, 1e-8);
    CHECK(res.err_est <= 1e-8);
    CHECK(res.value > 0.9);
}

TEST_CASE("alpha1 CDF is a CDF") {
    HypParams& hp = reference_params();
    QuadratureScheme quad = gauss_legendre_01(32);
    double prev = 0.0;
    for (double u : {0.05, 0.1, 0.3, 0.7, 1.5, 3.0, 8.0}) {
        double f = alpha1_cdf(hp, u, quad);
        CHECK(f >= prev - 1e-12);
        CHECK(f <= 1.0 + 1e-12);
        prev = f;
    }
    CHECK(prev > 0.999);
}

TEST_CASE("sigma function") {
    HypParams& hp = reference_params();
    QuadratureScheme quad = gauss_legendre_01(32);

    // flat-determinant regime: sigma ~ -nu1^2 s + nu3 nu4 / 2
    double s = 4.0;
    double sig = sigma_function(hp, s, quad);
    double flat = -hp.nu1 * hp.nu1 * s + 0.5 * hp.nu3_nu4();
    CHECK(std::fabs(sig - flat) / std::fabs(flat) < 0.02);

    // step-halving consistency
    CHECK_NOTHROW(sigma_function(hp, 1.0, quad, 4e-3, true));
    double v1 = sigma_function(hp, 1.0, quad, 4e-3);
    double v2 = sigma_function(hp, 1.0, quad, 2e-3);
    CHECK(std::fabs(v1 - v2) < 1e-5 * std::max(1.0, std::fabs(v1)));
}

TEST_CASE("Painleve VI sigma-form residual") {
    HypParams& hp = reference_params();
    QuadratureScheme quad = gauss_legendre_01(32);
    for (double s : {0.6, 1.0, 1.8, 3.0}) {
        CHECK(painleve6_residual(hp, s, quad) < 1e-2);
    }
}

TEST_CASE("gap curve assembly") {
    HypParams& hp = reference_params();
    GapCurve curve = compute_gap_curve(hp, {0.8, 1.2, 1.6, 2.0}, 24, false);
    REQUIRE(curve.s.size() == 4);
    for (std::size_t i = 0; i < curve.s.size(); ++i) {
        CHECK(curve.det[i] > 0.0);
        CHECK(curve.det[i] <= 1.0);
        if (i > 0) CHECK(curve.det[i] >= curve.det[i - 1]);  // nondecreasing in s
        CHECK(curve.err_est[i] < 1e-6);
    }
}

TEST_CASE("ks_distance") {
    std::vector<double> samples = {0.1, 0.2, 0.3, 0.4};
    auto cdf = [](double u) { return u; };  // uniform on (0,1)
    std::vector<double> probes = {0.25, 0.5, 0.9};
    // F_emp(0.5) = 1.0 vs 0.5; F_emp(0.9) = 1.0 vs 0.9
    CHECK(ks_distance(samples, cdf, probes) == doctest::Approx(0.5));
}
