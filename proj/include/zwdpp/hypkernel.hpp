#pragma once

#include <map>

#include "zwdpp/ensemble.hpp"

namespace zwdpp {

// Parameters of the continuous kernel on R \ {+-1/2}, plus the fitted gauge
// and calibration state.
struct HypParams {
    Cplx z, w;
    double nu1 = 0.0;     // Re(z + w)
    double nu3_im = 0.0;  // nu3 = i * nu3_im
    double nu4_im = 0.0;  // nu4 = i * nu4_im
    Cplx a, b, c;         // 2F1 parameters of the first kernel function

    // constant linear recombination turning the raw pair real
    Cplx gauge_p[2] = {Cplx(1.0), Cplx(0.0)};
    Cplx gauge_q[2] = {Cplx(0.0), Cplx(1.0)};
    bool gauge_fitted = false;
    double gauge_residual = 0.0;

    double c_pq = 0.0;  // overall kernel scale, set by calibrate()
    bool calibrated = false;
    int calib_n = 0;
    double calib_x0 = 0.0;

    double nu3_nu4() const { return -nu3_im * nu4_im; }  // real by construction
    double nu3_sq() const { return -nu3_im * nu3_im; }
    double nu4_sq() const { return -nu4_im * nu4_im; }
    ZWParams zw() const { return ZWParams(z, w); }
};

HypParams make_hyp_params(Cplx z, Cplx w);

// Raw kernel functions of the analytic block x > 1/2, before gauge fixing.
std::pair<Cplx, Cplx> eval_pq_raw(const HypParams& hp, double x);
std::pair<Cplx, Cplx> eval_pq_raw_deriv(const HypParams& hp, double x);

// Gauged real pair and its x-derivatives.
struct PQValues {
    double p, q, dp, dq;
};
PQValues eval_pq(const HypParams& hp, double x);

// Finds the constant recombination making the pair real across the block.
void fit_gauge(HypParams& hp);

// Integrable-form kernel on the block (1/2, inf)^2; requires calibration.
double hyp_kernel(const HypParams& hp, double x, double y);

// Lattice systems per N, reused across scaled-kernel evaluations.
class ScaledKernelCache {
  public:
    const OPSystem& system(const ZWParams& p, int n, double reach);
    void set_tail_factor(double f) { tail_factor_ = f; }

  private:
    std::map<int, OPSystem> by_n_;
    double tail_factor_ = 10.0;  // window half-width per unit of N
};

// Nearest lattice site of Z + (N+1)/2 to N*x; ties resolve toward zero.
Half snap_to_lattice(double x, int n);

// N * Ktilde_N at the snapped sites: the lattice approximation to the
// continuous kernel, valid on every block.
double lattice_kernel_scaled(const ZWParams& p, int n, double x, double y,
                             ScaledKernelCache* cache = nullptr);

// Matches the analytic diagonal to the lattice diagonal at x0, Richardson
// extrapolated over N/2 and N; sets c_pq. Throws CalibrationUnstable when the
// extrapolated value drifts by more than 1% between the (N/4, N/2) and
// (N/2, N) pairs.
void calibrate(HypParams& hp, double x0 = 1.0, int n = 64, ScaledKernelCache* cache = nullptr);

double sine_kernel(double x, double y);

// exp(-sum_{n in Z} |z - n|^(-2)); evaluates both the lattice sum and the
// closed form, checks agreement, returns the closed form. rel_dev, when
// given, receives the relative deviation between the two expressions.
double coordinate_decay_rate(Cplx z, double* rel_dev = nullptr);

// Exploratory diagnostic for the conjectured geometric decay of the deep
// boundary coordinates: median of (alpha_d)^(1/d) over sampled signatures,
// taken at the deepest available Frobenius index, next to the conjectured
// limits q(z) and q(w). Loose at desk scale; reported, never asserted.
struct DecayDiagnostic {
    double alpha_plus_rate = 0.0;
    double alpha_minus_rate = 0.0;
    long long plus_count = 0;
    long long minus_count = 0;
    double q_z = 0.0;
    double q_w = 0.0;
};
DecayDiagnostic decay_rate_diagnostic(const std::vector<Signature>& samples, Cplx z, Cplx w);

}  // namespace zwdpp
