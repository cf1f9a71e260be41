#include "zwdpp/zmeasure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "zwdpp/numerics.hpp"
#include "zwdpp/rng.hpp"

namespace zwdpp {

namespace {

double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// number of weakly decreasing N-tuples with parts in [-w, w]
double signature_count(int n, long long w) {
    double c = 1.0;
    for (int k = 1; k <= n; ++k) c *= static_cast<double>(2 * w + k) / k;
    return c;
}

// Visit all weakly decreasing N-tuples with parts in [-w, w].
void for_each_signature(int n, long long w, const std::function<void(const std::vector<long long>&)>& f) {
    std::vector<long long> parts(n);
    std::function<void(int, long long)> rec = [&](int i, long long hi) {
        if (i == n) {
            f(parts);
            return;
        }
        for (long long v = hi; v >= -w; --v) {
            parts[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, w);
}

}  // namespace

void ZWParams::validate() const {
    if (near_integer(z, 1e-12) || near_integer(w, 1e-12))
        throw DomainError("ZWParams: z and w must not be integers");
    if (!(nu1() > -1.0)) throw DomainError("ZWParams: Re(z + w) must exceed -1");
}

double log_lattice_weight(long long l, int n, const ZWParams& p) {
    double lf = static_cast<double>(l);
    Cplx g1 = numerics::log_gamma(p.z - lf);
    Cplx g2 = numerics::log_gamma(p.w + static_cast<double>(n + 1) + lf);
    return -2.0 * (g1.real() + g2.real());
}

double lattice_weight(long long l, int n, const ZWParams& p, bool* underflow) {
    double lw = log_lattice_weight(l, n, p);
    if (underflow) *underflow = lw < -745.0;
    return lw < -745.0 ? 0.0 : std::exp(lw);
}

double log_signature_mass(const Signature& sig, const ZWParams& p) {
    int n = sig.n();
    double acc = 0.0;
    for (int i = 1; i <= n; ++i) acc += log_lattice_weight(sig.parts[i - 1] - i, n, p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long diff = sig.parts[i] - sig.parts[j] + (j - i);
            acc += 2.0 * std::log(static_cast<double>(diff));
        }
    return acc;
}

double signature_mass(const Signature& sig, const ZWParams& p) {
    return std::exp(log_signature_mass(sig, p));
}

NormalizationResult normalization(int n, const ZWParams& p, double tol, long long window_cap) {
    if (!(tol > 0.0)) throw DomainError("normalization: tol must be positive");
    const double p_shell = p.shell_exponent();
    const double neg_inf = -std::numeric_limits<double>::infinity();

    // precompute log weights once per window, l in [-M-n, M-1]
    long long m = 8;
    while (m <= window_cap) {
        std::vector<double> logw(2 * m + n + 1);
        for (long long l = -m - n; l <= m - 1; ++l)
            logw[l + m + n] = log_lattice_weight(l, n, p);

        double log_sum = neg_inf;
        double log_shell = neg_inf;  // mass of the outermost shell max(l1, -lN) = M
        for_each_signature(n, m, [&](const std::vector<long long>& parts) {
            double acc = 0.0;
            for (int i = 1; i <= n; ++i) acc += logw[parts[i - 1] - i + m + n];
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    acc += 2.0 * std::log(static_cast<double>(parts[i] - parts[j] + (j - i)));
            log_sum = log_add_exp(log_sum, acc);
            if (parts.front() == m || parts.back() == -m) log_shell = log_add_exp(log_shell, acc);
        });

        // integral comparison: sum_{L>M} shell(L) <~ shell(M) * M / (p_shell - 1)
        if (p_shell > 1.0) {
            double log_tail =
                log_shell + std::log(static_cast<double>(m)) - std::log(p_shell - 1.0);
            double tail_rel = std::exp(log_tail - log_sum);
            if (tail_rel < tol) {
                NormalizationResult res;
                res.log_sum = log_sum;
                res.const_inv = std::exp(log_sum);
                res.window = m;
                res.tail_estimate_rel = tail_rel;
                return res;
            }
        }
        if (signature_count(n, 2 * m) > 4e7) break;  // next window too large to enumerate
        m *= 2;
    }
    throw BudgetExceeded("normalization: window cap reached before tail tolerance was met");
}

FiniteDistribution enumerate_distribution(int n, const ZWParams& p, long long window) {
    if (window < 1) throw DomainError("enumerate_distribution: window must be >= 1");
    if (signature_count(n, window) > 1e7)
        throw BudgetExceeded("enumerate_distribution: too many signatures to enumerate");

    FiniteDistribution dist;
    dist.n = n;
    dist.window = window;

    std::vector<double> logs;
    for_each_signature(n, window, [&](const std::vector<long long>& parts) {
        dist.support.emplace_back(Signature{std::vector<long long>(parts)});
        logs.push_back(log_signature_mass(dist.support.back(), p));
    });

    double log_sum = -std::numeric_limits<double>::infinity();
    double log_shell = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < logs.size(); ++i) {
        log_sum = log_add_exp(log_sum, logs[i]);
        const auto& parts = dist.support[i].parts;
        if (parts.front() == window || parts.back() == -window)
            log_shell = log_add_exp(log_shell, logs[i]);
    }
    dist.log_norm_window = log_sum;
    dist.probs.reserve(logs.size());
    for (double lg : logs) dist.probs.push_back(std::exp(lg - log_sum));

    double p_shell = p.shell_exponent();
    dist.tail_mass_rel = p_shell > 1.0
                             ? std::exp(log_shell - log_sum) * static_cast<double>(window) /
                                   (p_shell - 1.0)
                             : std::numeric_limits<double>::infinity();
    return dist;
}

std::vector<Signature> sample_exact(const FiniteDistribution& dist, long long count,
                                    std::uint64_t seed) {
    std::vector<double> cdf(dist.probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        acc += dist.probs[i];
        cdf[i] = acc;
    }
    Rng rng(derive_stream_seed(seed, 0));
    std::vector<Signature> out;
    out.reserve(count);
    for (long long k = 0; k < count; ++k) {
        double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t idx = std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
        out.push_back(dist.support[idx]);
    }
    return out;
}

std::vector<Signature> sample_mh(int n, const ZWParams& p, long long count, std::uint64_t seed,
                                 const MhOptions& opts, MhDiagnostics* diag) {
    Rng rng(derive_stream_seed(seed, 1));

    // state in shifted coordinates l_i = lambda_i - i, strictly decreasing
    std::vector<long long> l(n);
    for (int i = 0; i < n; ++i) l[i] = -(i + 1);  // zero signature
    std::vector<double> logw(n);
    for (int i = 0; i < n; ++i) logw[i] = log_lattice_weight(l[i], n, p);

    long long accepted = 0, proposed = 0;
    auto step = [&]() {
        int i = static_cast<int>(rng.below(n));
        long long delta = (rng.bits() & 1) ? 1 : -1;
        long long cand = l[i] + delta;
        ++proposed;
        // monotonicity of lambda <=> l_i strictly decreasing
        if (i > 0 && cand >= l[i - 1]) return;
        if (i + 1 < n && cand <= l[i + 1]) return;
        double cand_logw = log_lattice_weight(cand, n, p);
        double dlog = cand_logw - logw[i];
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            dlog += 2.0 * (std::log(std::fabs(static_cast<double>(cand - l[j]))) -
                           std::log(std::fabs(static_cast<double>(l[i] - l[j]))));
        }
        if (dlog >= 0.0 || std::log(rng.uniform() + 1e-300) < dlog) {
            l[i] = cand;
            logw[i] = cand_logw;
            ++accepted;
        }
    };

    for (long long k = 0; k < opts.burn_in; ++k) step();

    std::vector<Signature> out;
    out.reserve(count);
    for (long long k = 0; k < count; ++k) {
        for (long long t = 0; t < opts.thinning; ++t) step();
        std::vector<long long> parts(n);
        for (int i = 0; i < n; ++i) parts[i] = l[i] + (i + 1);
        out.emplace_back(Signature{std::move(parts)});
    }

    if (diag) {
        diag->acceptance_rate = proposed ? static_cast<double>(accepted) / proposed : 0.0;
        diag->ergodic_warning = diag->acceptance_rate < 1e-3;
    }
    return out;
}

}  // namespace zwdpp
