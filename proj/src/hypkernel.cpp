#include "zwdpp/hypkernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "zwdpp/numerics.hpp"

namespace zwdpp {

namespace {

// Jacobi eigendecomposition of a symmetric 4x4 matrix; returns eigenvalues
// ascending with matching columns in v.
void jacobi4(std::array<std::array<double, 4>, 4>& g, std::array<double, 4>& eval,
             std::array<std::array<double, 4>, 4>& evec) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) evec[i][j] = (i == j) ? 1.0 : 0.0;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) off += g[i][j] * g[i][j];
        if (off < 1e-300) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                if (std::fabs(g[p][q]) < 1e-300) continue;
                double theta = (g[q][q] - g[p][p]) / (2.0 * g[p][q]);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    double gkp = g[k][p], gkq = g[k][q];
                    g[k][p] = c * gkp - s * gkq;
                    g[k][q] = s * gkp + c * gkq;
                }
                for (int k = 0; k < 4; ++k) {
                    double gpk = g[p][k], gqk = g[q][k];
                    g[p][k] = c * gpk - s * gqk;
                    g[q][k] = s * gpk + c * gqk;
                }
                for (int k = 0; k < 4; ++k) {
                    double vp = evec[k][p], vq = evec[k][q];
                    evec[k][p] = c * vp - s * vq;
                    evec[k][q] = s * vp + c * vq;
                }
            }
    }
    std::array<int, 4> order = {0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return g[i][i] < g[j][j]; });
    std::array<std::array<double, 4>, 4> sorted_vec;
    std::array<double, 4> sorted_val;
    for (int k = 0; k < 4; ++k) {
        sorted_val[k] = g[order[k]][order[k]];
        for (int r = 0; r < 4; ++r) sorted_vec[r][k] = evec[r][order[k]];
    }
    eval = sorted_val;
    evec = sorted_vec;
}

double zeta_of(double x) { return 1.0 / (0.5 - x); }

}  // namespace

HypParams make_hyp_params(Cplx z, Cplx w) {
    ZWParams check(z, w);  // validates admissibility
    (void)check;
    HypParams hp;
    hp.z = z;
    hp.w = w;
    Cplx zb = std::conj(z), wb = std::conj(w);
    Cplx nu1 = 0.5 * (z + zb + w + wb);
    Cplx nu3 = 0.5 * (z - zb + w - wb);
    Cplx nu4 = 0.5 * (z - zb - w + wb);
    if (std::fabs(nu1.imag()) > 1e-14 || std::fabs(nu3.real()) > 1e-14 ||
        std::fabs(nu4.real()) > 1e-14)
        throw DomainError("make_hyp_params: nu invariants violated");
    hp.nu1 = nu1.real();
    hp.nu3_im = nu3.imag();
    hp.nu4_im = nu4.imag();
    hp.a = z + wb;
    hp.b = zb + wb;
    hp.c = 2.0 * hp.nu1 + 1.0;
    return hp;
}

std::pair<Cplx, Cplx> eval_pq_raw(const HypParams& hp, double x) {
    if (!(x > 0.5)) throw DomainError("eval_pq_raw: requires x > 1/2");
    double zeta = zeta_of(x);
    Cplx wb = std::conj(hp.w);
    Cplx ea = -Cplx(hp.z.real(), 0.0) - wb;  // -(z + conj z)/2 - conj w
    Cplx eb = 0.5 * (wb - hp.w);
    double lm = std::log(x - 0.5), lp = std::log(x + 0.5);
    Cplx pre_p = std::exp(ea * lm + eb * lp);
    Cplx fp = numerics::gauss_2f1(hp.a, hp.b, hp.c, zeta);
    Cplx fq = numerics::gauss_2f1(hp.a + 1.0, hp.b + 1.0, hp.c + 1.0, zeta);
    return {pre_p * fp, pre_p / (x - 0.5) * fq};
}

std::pair<Cplx, Cplx> eval_pq_raw_deriv(const HypParams& hp, double x) {
    if (!(x > 0.5)) throw DomainError("eval_pq_raw_deriv: requires x > 1/2");
    double zeta = zeta_of(x);
    double dzeta = zeta * zeta;  // d zeta / dx
    Cplx wb = std::conj(hp.w);
    Cplx ea = -Cplx(hp.z.real(), 0.0) - wb;
    Cplx eb = 0.5 * (wb - hp.w);
    double lm = std::log(x - 0.5), lp = std::log(x + 0.5);
    Cplx pre_p = std::exp(ea * lm + eb * lp);
    Cplx pre_q = pre_p / (x - 0.5);
    Cplx fp = numerics::gauss_2f1(hp.a, hp.b, hp.c, zeta);
    Cplx fq = numerics::gauss_2f1(hp.a + 1.0, hp.b + 1.0, hp.c + 1.0, zeta);
    Cplx dfp = numerics::deriv_2f1(hp.a, hp.b, hp.c, zeta);
    Cplx dfq = numerics::deriv_2f1(hp.a + 1.0, hp.b + 1.0, hp.c + 1.0, zeta);
    Cplx log_d_p = ea / (x - 0.5) + eb / (x + 0.5);
    Cplx log_d_q = (ea - 1.0) / (x - 0.5) + eb / (x + 0.5);
    Cplx dp = pre_p * (log_d_p * fp + dfp * dzeta);
    Cplx dq = pre_q * (log_d_q * fq + dfq * dzeta);
    return {dp, dq};
}

void fit_gauge(HypParams& hp) {
    static constexpr double pts[] = {0.551, 0.58, 0.63, 0.70, 0.79, 0.90, 1.05,
                                     1.25,  1.55, 2.0,  2.7,  3.8,  5.5,  9.0};
    const int m = static_cast<int>(std::size(pts));
    std::vector<Cplx> pv(m), qv(m);
    double sp = 0.0, sq = 0.0;
    for (int i = 0; i < m; ++i) {
        auto [p, q] = eval_pq_raw(hp, pts[i]);
        pv[i] = p;
        qv[i] = q;
        sp = std::max(sp, std::abs(p));
        sq = std::max(sq, std::abs(q));
    }
    // rows Im(u P + v Q) = 0 in scaled unknowns (ur sp, ui sp, vr sq, vi sq)
    std::array<std::array<double, 4>, 4> g{};
    for (int i = 0; i < m; ++i) {
        std::array<double, 4> row = {pv[i].imag() / sp, pv[i].real() / sp, qv[i].imag() / sq,
                                     qv[i].real() / sq};
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) g[r][c] += row[r] * row[c];
    }
    std::array<double, 4> eval;
    std::array<std::array<double, 4>, 4> evec;
    jacobi4(g, eval, evec);
    if (!(eval[1] <= 1e-14 * std::max(eval[3], 1e-30)))
        throw CalibrationUnstable("fit_gauge: no two-dimensional real subspace found");
    auto unpack = [&](int k) {
        return std::pair<Cplx, Cplx>{Cplx(evec[0][k], evec[1][k]) / sp,
                                     Cplx(evec[2][k], evec[3][k]) / sq};
    };
    auto [u1, v1] = unpack(0);
    auto [u2, v2] = unpack(1);
    hp.gauge_p[0] = u1;
    hp.gauge_p[1] = v1;
    hp.gauge_q[0] = u2;
    hp.gauge_q[1] = v2;
    hp.gauge_residual = std::sqrt(std::max(eval[1], 0.0) / m);
    hp.gauge_fitted = true;
}

PQValues eval_pq(const HypParams& hp, double x) {
    if (!hp.gauge_fitted) throw DomainError("eval_pq: gauge has not been fitted");
    auto [praw, qraw] = eval_pq_raw(hp, x);
    auto [dpraw, dqraw] = eval_pq_raw_deriv(hp, x);
    PQValues v;
    v.p = (hp.gauge_p[0] * praw + hp.gauge_p[1] * qraw).real();
    v.q = (hp.gauge_q[0] * praw + hp.gauge_q[1] * qraw).real();
    v.dp = (hp.gauge_p[0] * dpraw + hp.gauge_p[1] * dqraw).real();
    v.dq = (hp.gauge_q[0] * dpraw + hp.gauge_q[1] * dqraw).real();
    return v;
}

double hyp_kernel(const HypParams& hp, double x, double y) {
    if (!hp.calibrated) throw DomainError("hyp_kernel: calibrate() has not run");
    if (std::fabs(x - y) < 1e-6) {
        double mid = 0.5 * (x + y);
        PQValues v = eval_pq(hp, mid);
        return hp.c_pq * (v.dp * v.q - v.dq * v.p);
    }
    PQValues vx = eval_pq(hp, x);
    PQValues vy = eval_pq(hp, y);
    return hp.c_pq * (vx.p * vy.q - vx.q * vy.p) / (x - y);
}

const OPSystem& ScaledKernelCache::system(const ZWParams& p, int n, double reach) {
    // The window must be much wider than the particle bulk: the slow
    // |x|^(-2 Re(z+w) - 2) tail of the top polynomial carries an amplitude
    // of order N^(2 Re(z+w) + 1), so the half-width scales linearly in N.
    double needed = std::max({reach + 8.0, tail_factor_ * n, 0.62 * n + 24.0});
    auto it = by_n_.find(n);
    if (it != by_n_.end()) {
        double have = it->second.sites.back().value();
        if (have >= needed) return it->second;
        by_n_.erase(it);
    }
    auto [pos, inserted] = by_n_.emplace(n, build_op_system(n, p, needed));
    return pos->second;
}

Half snap_to_lattice(double x, int n) {
    double target = 2.0 * n * x;  // twice the coordinate
    long long par = ((n + 1) % 2 + 2) % 2;
    long long below = 2 * static_cast<long long>(std::floor((target - par) / 2.0)) + par;
    long long above = below + 2;
    double d_lo = target - static_cast<double>(below);
    double d_hi = static_cast<double>(above) - target;
    if (d_lo < d_hi) return Half::from_twice(below);
    if (d_hi < d_lo) return Half::from_twice(above);
    return Half::from_twice(std::llabs(below) <= std::llabs(above) ? below : above);
}

double lattice_kernel_scaled(const ZWParams& p, int n, double x, double y,
                             ScaledKernelCache* cache) {
    ScaledKernelCache local;
    ScaledKernelCache& store = cache ? *cache : local;
    double reach = std::max(std::fabs(x), std::fabs(y)) * n;
    const OPSystem& sys = store.system(p, n, reach);
    Half sx = snap_to_lattice(x, n);
    Half sy = snap_to_lattice(y, n);
    auto idx = [&](Half h) {
        auto it = std::lower_bound(sys.sites.begin(), sys.sites.end(), h);
        if (it == sys.sites.end() || !(*it == h))
            throw DomainError("lattice_kernel_scaled: snapped site outside window");
        return static_cast<int>(it - sys.sites.begin());
    };
    int i = idx(sx), j = idx(sy);
    double k = sys.kernel_at(i, j);
    double val;
    if (!is_outer(sx, n))
        val = (sx == sy ? 1.0 : 0.0) - k;
    else
        val = k;
    return n * val;
}

void calibrate(HypParams& hp, double x0, int n, ScaledKernelCache* cache) {
    if (!(x0 > 0.5)) throw DomainError("calibrate: x0 must lie in the analytic block");
    if (n % 4 != 0 || n < 8) throw DomainError("calibrate: N must be a multiple of 4, >= 8");
    if (!hp.gauge_fitted) fit_gauge(hp);
    ScaledKernelCache local;
    ScaledKernelCache& store = cache ? *cache : local;
    ZWParams p = hp.zw();

    auto ratio_at = [&](int m) {
        Half s = snap_to_lattice(x0, m);
        double xm = s.value() / m;
        double lattice = lattice_kernel_scaled(p, m, xm, xm, &store);
        PQValues v = eval_pq(hp, xm);
        double raw = v.dp * v.q - v.dq * v.p;
        if (std::fabs(raw) < 1e-300) throw CalibrationUnstable("calibrate: vanishing diagonal");
        return lattice / raw;
    };
    double c1 = ratio_at(n / 4);
    double c2 = ratio_at(n / 2);
    double c3 = ratio_at(n);
    double r_prev = 2.0 * c2 - c1;
    double r_final = 2.0 * c3 - c2;
    if (!(std::fabs(r_final - r_prev) <= 0.01 * std::fabs(r_final)))
        throw CalibrationUnstable("calibrate: extrapolated scale drifts by more than 1%");
    if (r_final < 0.0) {
        hp.gauge_q[0] = -hp.gauge_q[0];
        hp.gauge_q[1] = -hp.gauge_q[1];
        r_final = -r_final;
    }
    hp.c_pq = r_final;
    hp.calibrated = true;
    hp.calib_n = n;
    hp.calib_x0 = x0;
}

double sine_kernel(double x, double y) {
    double v = kPi * (x - y);
    if (std::fabs(v) < 1e-4) return 1.0 - v * v / 6.0 + v * v * v * v / 120.0;
    return std::sin(v) / v;
}

double coordinate_decay_rate(Cplx z, double* rel_dev) {
    if (near_integer(z, 1e-9)) throw DomainError("coordinate_decay_rate: z must not be an integer");
    double x = z.real(), y = z.imag();

    // closed form: pi sinh(2 pi y) / (y (cosh(2 pi y) - cos(2 pi x)))
    double denom = std::cosh(2.0 * kPi * y) - numerics::cos_pi(2.0 * x);
    double sum_closed;
    if (std::fabs(y) < 1e-6) {
        double y2 = y * y;
        double c = 2.0 * kPi;
        double sinh_over_y = c + c * c * c * y2 / 6.0 + c * c * c * c * c * y2 * y2 / 120.0;
        sum_closed = kPi * sinh_over_y / denom;
    } else {
        sum_closed = kPi * std::sinh(2.0 * kPi * y) / (y * denom);
    }

    // lattice sum with Euler-Maclaurin tails
    const long long m = 4000;
    double sum_lattice = 0.0;
    for (long long k = -m; k <= m; ++k) {
        double dx = x - static_cast<double>(k);
        sum_lattice += 1.0 / (dx * dx + y * y);
    }
    auto tail = [&](double t0) {  // sum over lattice points beyond distance t0 - 1/2
        double integral = (y == 0.0) ? 1.0 / t0
                                     : (kPi / 2.0 - std::atan(t0 / std::fabs(y))) / std::fabs(y);
        double d2 = t0 * t0 + y * y;
        double fprime = -2.0 * t0 / (d2 * d2);
        return integral + fprime / 24.0;
    };
    sum_lattice += tail(static_cast<double>(m) + 0.5 - x);
    sum_lattice += tail(static_cast<double>(m) + 0.5 + x);

    double dev = std::fabs(sum_closed - sum_lattice) / std::fabs(sum_closed);
    if (rel_dev) *rel_dev = dev;
    if (dev > 1e-9)
        throw DisagreementError("coordinate_decay_rate: lattice sum and closed form disagree");
    return std::exp(-sum_closed);
}

DecayDiagnostic decay_rate_diagnostic(const std::vector<Signature>& samples, Cplx z, Cplx w) {
    DecayDiagnostic diag;
    diag.q_z = coordinate_decay_rate(z);
    diag.q_w = coordinate_decay_rate(w);
    std::vector<double> plus, minus;
    for (const Signature& sig : samples) {
        long long n = sig.n();
        auto [pos, neg] = split_signature(sig);
        auto push = [n](const YoungDiagram& mu, std::vector<double>& out) {
            FrobeniusCoords fc = frobenius(mu);
            int d = fc.d();
            if (d < 2) return;  // need depth for a rate estimate
            double alpha_d = fc.a.back().value() / static_cast<double>(n);
            if (alpha_d > 0.0) out.push_back(std::pow(alpha_d, 1.0 / d));
        };
        push(pos, plus);
        push(neg, minus);
    }
    auto median = [](std::vector<double>& v) {
        if (v.empty()) return 0.0;
        std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
        return v[v.size() / 2];
    };
    diag.plus_count = static_cast<long long>(plus.size());
    diag.minus_count = static_cast<long long>(minus.size());
    diag.alpha_plus_rate = median(plus);
    diag.alpha_minus_rate = median(minus);
    return diag;
}

}  // namespace zwdpp
