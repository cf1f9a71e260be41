#pragma once

#include "zwdpp/dpp.hpp"

namespace zwdpp {

// Orthonormal polynomial system of the lattice weight on an explicit window
// of the shifted lattice Z + (N+1)/2. Values are stored as
// psi_k(x) = p_k(x) sqrt(W(x)), orthonormal under counting measure.
struct OPSystem {
    int n = 0;
    std::vector<Half> sites;              // ascending
    std::vector<double> log_weight;       // per site, shifted by a common constant
    std::vector<std::vector<double>> psi; // psi[k][site], k < n
    std::vector<double> rec_a;            // a_0 .. a_{n-2}
    std::vector<double> rec_b;            // b_1 .. b_{n-1}
    double ortho_defect = 0.0;            // max |<psi_j, psi_k> - delta_jk|
    double tail_ratio_est = 0.0;          // estimated particle mass beyond the window

    double kernel_at(int i, int j) const {  // sum_k psi_k(i) psi_k(j)
        double acc = 0.0;
        for (const auto& col : psi) acc += col[i] * col[j];
        return acc;
    }
};

// Window is given by its half-width: sites are all x in Z + (N+1)/2 with
// |x| <= half_width. Throws LossOfOrthogonality if the re-orthogonalized
// system fails its consistency check.
OPSystem build_op_system(int n, const ZWParams& p, double half_width);

// Convenience: half-width matching an enumeration window of signature parts
// in [-window, window] (images fill |x| <= window + (N-1)/2).
double matching_half_width(int n, long long window);

// Rank-N projection kernel sum_{k<N} psi_k(x) psi_k(y) on the window.
DiscreteKernel christoffel_darboux_kernel(const OPSystem& sys);

// Row transform producing the particle/hole correlation kernel:
// rows at inner sites become delta - K, rows at outer sites stay K.
DiscreteKernel particle_hole_kernel(const DiscreteKernel& kernel, int n);

struct DensityProfile {
    std::vector<Half> sites;
    std::vector<double> density;  // K(x, x)
    double inner_fraction = 0.0;  // sum over inner sites / N
};

DensityProfile limit_density(int n, const ZWParams& p, double half_width);

}  // namespace zwdpp
