#include "zwdpp/dpp.hpp"

#include <algorithm>
#include <cmath>

#include "zwdpp/linalg.hpp"
#include "zwdpp/rng.hpp"

namespace zwdpp {

int DiscreteKernel::index_of(Half x) const {
    auto it = std::lower_bound(sites.begin(), sites.end(), x);
    if (it == sites.end() || !(*it == x))
        throw DomainError("DiscreteKernel: site outside the kernel window");
    return static_cast<int>(it - sites.begin());
}

double DiscreteKernel::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < size(); ++i) t += cell(i, i);
    return t;
}

double DiscreteKernel::projection_defect() const {
    std::size_t n = size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += cell(i, k) * cell(k, j);
            worst = std::max(worst, std::fabs(acc - cell(i, j)));
        }
    return worst;
}

ConfigTable lattice_config_table(const FiniteDistribution& dist) {
    ConfigTable table;
    table.configs.reserve(dist.support.size());
    table.probs = dist.probs;
    for (const Signature& sig : dist.support) {
        LatticeConfig cfg = signature_to_lattice(sig);
        std::vector<Half> pts(cfg.points.rbegin(), cfg.points.rend());
        table.configs.push_back(std::move(pts));
    }
    return table;
}

ConfigTable particle_hole_config_table(const FiniteDistribution& dist) {
    ConfigTable table;
    table.configs.reserve(dist.support.size());
    table.probs = dist.probs;
    for (const Signature& sig : dist.support) {
        LatticeConfig cfg = particle_hole_involution(signature_to_lattice(sig));
        std::vector<Half> pts(cfg.points.rbegin(), cfg.points.rend());
        table.configs.push_back(std::move(pts));
    }
    return table;
}

double brute_force_rho(const ConfigTable& table, std::span<const Half> points) {
    std::vector<Half> query(points.begin(), points.end());
    std::sort(query.begin(), query.end());
    if (std::adjacent_find(query.begin(), query.end()) != query.end()) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < table.configs.size(); ++i)
        if (std::includes(table.configs[i].begin(), table.configs[i].end(), query.begin(),
                          query.end()))
            acc += table.probs[i];
    return acc;
}

double det_rho(const DiscreteKernel& kernel, std::span<const Half> points) {
    std::size_t n = points.size();
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = kernel.at(points[i], points[j]);
    return det_inplace(m, n);
}

double discrete_gap(const DiscreteKernel& kernel, std::span<const Half> subset) {
    std::size_t n = subset.size();
    if (n == 0) return 1.0;
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] = (i == j ? 1.0 : 0.0) - kernel.at(subset[i], subset[j]);
    return det_inplace(m, n);
}

EmpiricalEstimate empirical_rho(const std::vector<std::vector<double>>& samples,
                                std::span<const double> points, double match_tol) {
    if (samples.empty()) throw DomainError("empirical_rho: no samples");
    auto contains = [&](const std::vector<double>& cfg, double x) {
        for (double v : cfg)
            if (std::fabs(v - x) <= match_tol) return true;
        return false;
    };
    long long hits = 0;
    for (const auto& cfg : samples) {
        bool all = true;
        for (double x : points)
            if (!contains(cfg, x)) {
                all = false;
                break;
            }
        hits += all ? 1 : 0;
    }
    EmpiricalEstimate est;
    double m = static_cast<double>(samples.size());
    est.value = hits / m;
    est.stderr_est = std::sqrt(est.value * (1.0 - est.value) / m);
    return est;
}

std::vector<double> poisson_sample(const std::function<double(double)>& intensity, double lo,
                                   double hi, std::uint64_t seed) {
    if (!(hi > lo)) throw DomainError("poisson_sample: empty window");
    const int grid = 4096;
    double h = (hi - lo) / grid;
    double total = 0.0;
    double peak = 0.0;
    for (int i = 0; i <= grid; ++i) {
        double v = intensity(lo + i * h);
        if (v < 0.0) throw DomainError("poisson_sample: negative intensity");
        total += (i == 0 || i == grid) ? 0.5 * v : v;
        peak = std::max(peak, v);
    }
    total *= h;

    Rng rng(derive_stream_seed(seed, 2));
    // Knuth inversion for the count (total mass is desk-scale here)
    int count = 0;
    double prod = rng.uniform();
    double limit = std::exp(-total);
    while (prod > limit) {
        ++count;
        prod *= rng.uniform();
    }
    std::vector<double> pts;
    pts.reserve(count);
    while (static_cast<int>(pts.size()) < count) {
        double x = lo + (hi - lo) * rng.uniform();
        if (peak <= 0.0) break;
        if (rng.uniform() * peak <= intensity(x)) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace zwdpp
