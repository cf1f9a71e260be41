#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "zwdpp/zmeasure.hpp"

namespace zwdpp {

// Kernel matrix over an explicit finite site window.
struct DiscreteKernel {
    std::vector<Half> sites;      // ascending
    std::vector<double> entries;  // row-major, sites x sites

    std::size_t size() const { return sites.size(); }
    int index_of(Half x) const;  // throws DomainError when x is outside the window
    double at(Half x, Half y) const { return entries[index_of(x) * size() + index_of(y)]; }
    double& cell(std::size_t i, std::size_t j) { return entries[i * size() + j]; }
    double cell(std::size_t i, std::size_t j) const { return entries[i * size() + j]; }

    double trace() const;
    // max |(K^2 - K)(i,j)|; meaningful for projection-type kernels
    double projection_defect() const;
};

// Finite distribution over lattice configurations, the brute-force carrier.
struct ConfigTable {
    std::vector<std::vector<Half>> configs;  // each sorted ascending
    std::vector<double> probs;
};

ConfigTable lattice_config_table(const FiniteDistribution& dist);
ConfigTable particle_hole_config_table(const FiniteDistribution& dist);

// P(X contains all query points), summed from an explicit distribution;
// repeated query points give 0.
double brute_force_rho(const ConfigTable& table, std::span<const Half> points);

// det[K(x_i, x_j)] over the query points
double det_rho(const DiscreteKernel& kernel, std::span<const Half> points);

// det(I - K restricted to subset x subset)
double discrete_gap(const DiscreteKernel& kernel, std::span<const Half> subset);

struct EmpiricalEstimate {
    double value = 0.0;
    double stderr_est = 0.0;
};

// Fraction of sampled configurations containing all query points (within
// match_tol), with binomial standard error.
EmpiricalEstimate empirical_rho(const std::vector<std::vector<double>>& samples,
                                std::span<const double> points, double match_tol = 1e-9);

// Poisson process on the interval (lo, hi) with the given intensity.
std::vector<double> poisson_sample(const std::function<double(double)>& intensity, double lo,
                                   double hi, std::uint64_t seed);

}  // namespace zwdpp
