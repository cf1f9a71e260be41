#pragma once

#include <cstdint>
#include <vector>

#include "zwdpp/combinatorics.hpp"
#include "zwdpp/common.hpp"

namespace zwdpp {

// Parameter pair of the measure family: z, w nonintegral, Re(z+w) > -1.
struct ZWParams {
    Cplx z, w;

    ZWParams(Cplx z_, Cplx w_) : z(z_), w(w_) { validate(); }
    void validate() const;

    double nu1() const { return z.real() + w.real(); }
    // one-coordinate tail exponent of the N-particle mass: the per-site
    // weight decays like |l|^(-2 Re(z+w) - 2N) and the squared difference
    // factors contribute |l|^(2(N-1)), leaving |l|^(-2 Re(z+w) - 2).
    double shell_exponent() const { return 2.0 * nu1() + 2.0; }
    ZWParams swapped() const { return ZWParams(w, z); }
};

// log of the per-site weight |Gamma(z - l) Gamma(w + N + 1 + l)|^(-2)
double log_lattice_weight(long long l, int n, const ZWParams& p);
// exp of the above; underflows are routed to 0 (flag reported when asked)
double lattice_weight(long long l, int n, const ZWParams& p, bool* underflow = nullptr);

// log of prod_i W_N(lambda_i - i) * prod_{i<j} (lambda_i - lambda_j - i + j)^2
double log_signature_mass(const Signature& sig, const ZWParams& p);
double signature_mass(const Signature& sig, const ZWParams& p);

struct NormalizationResult {
    double log_sum;            // log of the adaptive partial sum
    double const_inv;          // exp(log_sum); may overflow/underflow for large N
    long long window;          // final half-width M
    double tail_estimate_rel;  // integral-comparison bound on the missing mass
};

// Adaptive summation of the unnormalized masses over all signatures with
// parts in [-M, M], growing M until the power-law tail bound drops below
// tol * partial_sum. Throws BudgetExceeded when the cap is reached first
// (always the case when the shell exponent is <= 1).
NormalizationResult normalization(int n, const ZWParams& p, double tol,
                                  long long window_cap = 600000);

struct FiniteDistribution {
    int n = 0;
    long long window = 0;
    std::vector<Signature> support;
    std::vector<double> probs;     // normalized over the window, sums to 1
    double log_norm_window = 0.0;  // log of the window mass
    double tail_mass_rel = 0.0;    // estimated relative mass outside the window
};

// Exhaustive enumeration of signatures with parts in [-window, window].
FiniteDistribution enumerate_distribution(int n, const ZWParams& p, long long window);

// i.i.d. draws by inverse CDF over an enumerated distribution
std::vector<Signature> sample_exact(const FiniteDistribution& dist, long long count,
                                    std::uint64_t seed);

struct MhOptions {
    long long burn_in = 10000;  // steps
    long long thinning = 10;    // steps between retained samples
};

struct MhDiagnostics {
    double acceptance_rate = 0.0;
    bool ergodic_warning = false;  // acceptance below 0.1%
};

// Metropolis-Hastings on signature space: pick a row uniformly, propose +-1,
// reject monotonicity violations. Deterministic given the seed.
std::vector<Signature> sample_mh(int n, const ZWParams& p, long long count, std::uint64_t seed,
                                 const MhOptions& opts = {}, MhDiagnostics* diag = nullptr);

}  // namespace zwdpp
