#include "zwdpp/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zwdpp {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

double matching_half_width(int n, long long window) {
    return static_cast<double>(window) + (n - 1) / 2.0;
}

OPSystem build_op_system(int n, const ZWParams& p, double half_width) {
    if (n < 1) throw DomainError("build_op_system: N must be >= 1");
    OPSystem sys;
    sys.n = n;

    // sites of Z + (N+1)/2 with |x| <= half_width
    long long max_twice = static_cast<long long>(std::floor(2.0 * half_width));
    for (long long t = -max_twice; t <= max_twice; ++t)
        if (((t - (n + 1)) % 2 + 2) % 2 == 0) sys.sites.push_back(Half::from_twice(t));
    std::size_t m = sys.sites.size();
    if (m < static_cast<std::size_t>(n))
        throw DomainError("build_op_system: window too small for the requested rank");

    std::vector<double> xs(m);
    sys.log_weight.resize(m);
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        xs[i] = sys.sites[i].value();
        long long l = (sys.sites[i].twice - n - 1) / 2;
        sys.log_weight[i] = log_lattice_weight(l, n, p);
        max_log = std::max(max_log, sys.log_weight[i]);
    }

    // psi_0 proportional to sqrt(W); work relative to the weight maximum so
    // nothing underflows even when W itself would
    std::vector<double> cur(m);
    for (std::size_t i = 0; i < m; ++i) cur[i] = std::exp(0.5 * (sys.log_weight[i] - max_log));
    double norm0 = std::sqrt(dot(cur, cur));
    for (double& v : cur) v /= norm0;
    sys.psi.push_back(cur);

    std::vector<double> prev;
    double b_prev = 0.0;
    for (int k = 0; k + 1 < n; ++k) {
        const std::vector<double>& pk = sys.psi[k];
        double a_k = 0.0;
        for (std::size_t i = 0; i < m; ++i) a_k += xs[i] * pk[i] * pk[i];
        sys.rec_a.push_back(a_k);

        std::vector<double> next(m);
        for (std::size_t i = 0; i < m; ++i) {
            next[i] = (xs[i] - a_k) * pk[i];
            if (k > 0) next[i] -= b_prev * prev[i];
        }
        // full re-orthogonalization, twice
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 0; j <= k; ++j) {
                double c = dot(next, sys.psi[j]);
                for (std::size_t i = 0; i < m; ++i) next[i] -= c * sys.psi[j][i];
            }
        double nb = std::sqrt(dot(next, next));
        if (!(nb > 1e-200))
            throw LossOfOrthogonality("build_op_system: degenerate polynomial norm");
        for (double& v : next) v /= nb;
        sys.rec_b.push_back(nb);
        b_prev = nb;
        prev = sys.psi[k];
        sys.psi.push_back(std::move(next));
    }

    double defect = 0.0;
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            double g = dot(sys.psi[j], sys.psi[k]) - (j == k ? 1.0 : 0.0);
            defect = std::max(defect, std::fabs(g));
        }
    sys.ortho_defect = defect;
    if (defect > 1e-10)
        throw LossOfOrthogonality("build_op_system: orthonormality check failed");

    // Estimated particle mass beyond the window: the density tail behaves
    // like c |x|^(-2 Re(z+w) - 2); calibrate c at the window edge and apply
    // the integral comparison. This is the quantity window-sensitive
    // experiments audit.
    double q = p.shell_exponent();
    if (q > 1.0) {
        std::size_t edge = m - 1;
        double k_edge = 0.0;
        for (const auto& col : sys.psi) k_edge += col[edge] * col[edge];
        sys.tail_ratio_est = k_edge * half_width / (q - 1.0);
    } else {
        sys.tail_ratio_est = std::numeric_limits<double>::infinity();
    }
    return sys;
}

DiscreteKernel christoffel_darboux_kernel(const OPSystem& sys) {
    DiscreteKernel k;
    k.sites = sys.sites;
    std::size_t m = k.sites.size();
    k.entries.assign(m * m, 0.0);
    for (const auto& col : sys.psi)
        for (std::size_t i = 0; i < m; ++i) {
            double ci = col[i];
            if (ci == 0.0) continue;
            for (std::size_t j = 0; j < m; ++j) k.entries[i * m + j] += ci * col[j];
        }
    return k;
}

DiscreteKernel particle_hole_kernel(const DiscreteKernel& kernel, int n) {
    DiscreteKernel out;
    out.sites = kernel.sites;
    std::size_t m = out.sites.size();
    out.entries.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        bool inner = !is_outer(out.sites[i], n);
        for (std::size_t j = 0; j < m; ++j) {
            double v = kernel.cell(i, j);
            out.entries[i * m + j] = inner ? (i == j ? 1.0 - v : -v) : v;
        }
    }
    return out;
}

DensityProfile limit_density(int n, const ZWParams& p, double half_width) {
    OPSystem sys = build_op_system(n, p, half_width);
    DensityProfile profile;
    profile.sites = sys.sites;
    profile.density.resize(sys.sites.size());
    double inner_sum = 0.0;
    for (std::size_t i = 0; i < sys.sites.size(); ++i) {
        profile.density[i] = sys.kernel_at(static_cast<int>(i), static_cast<int>(i));
        if (!is_outer(sys.sites[i], n)) inner_sum += profile.density[i];
    }
    profile.inner_fraction = inner_sum / n;
    return profile;
}

}  // namespace zwdpp
