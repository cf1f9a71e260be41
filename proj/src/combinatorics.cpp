#include "zwdpp/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace zwdpp {

void Signature::validate() const {
    if (parts.empty()) throw DomainError("Signature: length must be >= 1");
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i]) throw DomainError("Signature: parts must be weakly decreasing");
}

void YoungDiagram::validate() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] <= 0) throw DomainError("YoungDiagram: rows must be positive");
        if (i > 0 && rows[i - 1] < rows[i])
            throw DomainError("YoungDiagram: rows must be weakly decreasing");
    }
}

long long YoungDiagram::size() const {
    return std::accumulate(rows.begin(), rows.end(), 0LL);
}

YoungDiagram YoungDiagram::transpose() const {
    YoungDiagram t;
    if (rows.empty()) return t;
    for (long long col = 1; col <= rows[0]; ++col) {
        long long h = 0;
        while (h < static_cast<long long>(rows.size()) && rows[h] >= col) ++h;
        t.rows.push_back(h);
    }
    return t;
}

void BoundaryPoint::validate() const {
    auto check_seq = [](const std::vector<Rational>& s, const char* what) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < Rational(0)) throw DomainError(std::string("BoundaryPoint: negative ") + what);
            if (i > 0 && s[i - 1] < s[i])
                throw DomainError(std::string("BoundaryPoint: non-monotone ") + what);
        }
    };
    check_seq(alpha_plus, "alpha+");
    check_seq(beta_plus, "beta+");
    check_seq(alpha_minus, "alpha-");
    check_seq(beta_minus, "beta-");
    Rational b1p = beta_plus.empty() ? Rational(0) : beta_plus.front();
    Rational b1m = beta_minus.empty() ? Rational(0) : beta_minus.front();
    if (Rational(1) < b1p + b1m) throw DomainError("BoundaryPoint: beta+_1 + beta-_1 > 1");
    auto total = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational s(0);
        for (auto& v : a) s = s + v;
        for (auto& v : b) s = s + v;
        return s;
    };
    if (delta_plus < total(alpha_plus, beta_plus))
        throw DomainError("BoundaryPoint: sum(alpha+ + beta+) > delta+");
    if (delta_minus < total(alpha_minus, beta_minus))
        throw DomainError("BoundaryPoint: sum(alpha- + beta-) > delta-");
}

bool LatticeConfig::on_lattice() const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (((points[i].twice - (n + 1)) % 2) != 0) return false;
        if (i > 0 && points[i - 1] <= points[i]) return false;
    }
    return true;
}

std::pair<YoungDiagram, YoungDiagram> split_signature(const Signature& sig) {
    YoungDiagram plus, minus;
    for (long long p : sig.parts)
        if (p > 0) plus.rows.push_back(p);
    for (auto it = sig.parts.rbegin(); it != sig.parts.rend(); ++it)
        if (*it < 0) minus.rows.push_back(-*it);
    return {plus, minus};
}

FrobeniusCoords frobenius(const YoungDiagram& mu) {
    FrobeniusCoords fc;
    YoungDiagram mut = mu.transpose();
    for (long long i = 1; i <= static_cast<long long>(mu.rows.size()); ++i) {
        if (mu.rows[i - 1] < i) break;
        fc.a.push_back(Half::from_twice(2 * (mu.rows[i - 1] - i) + 1));
        fc.b.push_back(Half::from_twice(2 * (mut.rows[i - 1] - i) + 1));
    }
    return fc;
}

BoundaryPoint embed_signature(const Signature& sig) {
    long long n = sig.n();
    auto [plus, minus] = split_signature(sig);
    BoundaryPoint omega;
    auto fill = [n](const YoungDiagram& mu, std::vector<Rational>& alpha,
                    std::vector<Rational>& beta, Rational& delta) {
        FrobeniusCoords fc = frobenius(mu);
        for (Half a : fc.a) alpha.push_back(a.over(n));
        for (Half b : fc.b) beta.push_back(b.over(n));
        delta = Rational(mu.size(), n);
    };
    fill(plus, omega.alpha_plus, omega.beta_plus, omega.delta_plus);
    fill(minus, omega.alpha_minus, omega.beta_minus, omega.delta_minus);
    omega.validate();
    return omega;
}

std::vector<Rational> boundary_to_configuration_exact(const BoundaryPoint& omega) {
    const Rational half(1, 2);
    const Rational one(1);
    std::vector<Rational> pts;
    for (auto& a : omega.alpha_plus)
        if (Rational(0) < a) pts.push_back(a + half);
    for (auto& b : omega.beta_plus)
        if (Rational(0) < b && b != one) pts.push_back(half - b);
    for (auto& a : omega.alpha_minus)
        if (Rational(0) < a) pts.push_back(-a - half);
    for (auto& b : omega.beta_minus)
        if (Rational(0) < b && b != one) pts.push_back(b - half);
    std::sort(pts.begin(), pts.end());
    return pts;
}

Configuration boundary_to_configuration(const BoundaryPoint& omega) {
    Configuration cfg;
    for (auto& r : boundary_to_configuration_exact(omega)) cfg.points.push_back(r.value());
    return cfg;
}

LatticeConfig signature_to_lattice(const Signature& sig) {
    LatticeConfig cfg;
    cfg.n = sig.n();
    long long n = cfg.n;
    for (long long i = 1; i <= n; ++i)
        cfg.points.push_back(Half::from_twice(2 * sig.parts[i - 1] + n + 1 - 2 * i));
    return cfg;
}

std::vector<Half> inner_window(int n) {
    std::vector<Half> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) pts.push_back(Half::from_twice(-(n - 1) + 2 * k));
    return pts;
}

bool is_outer(Half x, int n) { return std::abs(x.twice) > n - 1; }

LatticeConfig particle_hole_involution(const LatticeConfig& config) {
    if (!config.on_lattice()) throw DomainError("particle_hole_involution: invalid configuration");
    int n = config.n;
    std::vector<Half> result;
    for (Half x : config.points)
        if (is_outer(x, n)) result.push_back(x);
    std::vector<Half> inner = inner_window(n);
    for (Half x : inner)
        if (std::find(config.points.begin(), config.points.end(), x) == config.points.end())
            result.push_back(x);
    std::sort(result.begin(), result.end(), [](Half a, Half b) { return b < a; });
    LatticeConfig out;
    out.points = std::move(result);
    out.n = n;
    return out;
}

bool verify_involution_frobenius(const Signature& sig) {
    int n = sig.n();
    LatticeConfig image = particle_hole_involution(signature_to_lattice(sig));

    auto [plus, minus] = split_signature(sig);
    FrobeniusCoords fp = frobenius(plus);
    FrobeniusCoords fm = frobenius(minus);
    Half half_n = Half::from_twice(n);
    std::vector<Half> expected;
    for (Half a : fp.a) expected.push_back(a + half_n);
    for (Half a : fm.a) expected.push_back((a + half_n).negated());
    for (Half b : fp.b) expected.push_back(half_n - b);
    for (Half b : fm.b) expected.push_back(b - half_n);
    std::sort(expected.begin(), expected.end(), [](Half a, Half b) { return b < a; });
    return expected == image.points;
}

std::vector<Rational> scale_lattice_points(const LatticeConfig& config) {
    std::vector<Rational> out;
    out.reserve(config.points.size());
    for (Half x : config.points) out.push_back(x.over(config.n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace zwdpp
