#pragma once

#include <utility>
#include <vector>

#include "zwdpp/rational.hpp"

namespace zwdpp {

// Weakly decreasing integer N-tuple.
struct Signature {
    std::vector<long long> parts;

    Signature() = default;
    explicit Signature(std::vector<long long> p) : parts(std::move(p)) { validate(); }

    int n() const { return static_cast<int>(parts.size()); }
    void validate() const;
    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature& a, const Signature& b) { return a.parts <=> b.parts; }
};

// Partition shape; rows strictly positive, weakly decreasing. Empty allowed.
struct YoungDiagram {
    std::vector<long long> rows;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<long long> r) : rows(std::move(r)) { validate(); }

    void validate() const;
    long long size() const;  // |mu|
    YoungDiagram transpose() const;
    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
};

// Modified Frobenius coordinates: a_i = mu_i - i + 1/2, b_i = mu'_i - i + 1/2.
struct FrobeniusCoords {
    std::vector<Half> a;  // strictly decreasing positive half-integers
    std::vector<Half> b;
    int d() const { return static_cast<int>(a.size()); }
};

// Point of the boundary coordinate space: two (alpha, beta) coordinate pairs
// plus the delta totals. Coordinates produced by embed_signature are exact
// rationals; value() views feed the floating-point layers.
struct BoundaryPoint {
    std::vector<Rational> alpha_plus, beta_plus, alpha_minus, beta_minus;
    Rational delta_plus, delta_minus;

    void validate() const;
};

// N-point configuration on the shifted lattice Z + (N+1)/2, stored in
// decreasing order. The same type also carries particle/hole images, whose
// size can be any even number up to 2N.
struct LatticeConfig {
    std::vector<Half> points;  // strictly decreasing
    int n = 0;                 // lattice parity parameter

    bool on_lattice() const;
    friend bool operator==(const LatticeConfig&, const LatticeConfig&) = default;
};

// Finite point configuration on the real line (sorted ascending).
struct Configuration {
    std::vector<double> points;
};

std::pair<YoungDiagram, YoungDiagram> split_signature(const Signature& sig);
FrobeniusCoords frobenius(const YoungDiagram& mu);

// Scaled embedding of a length-N signature into the boundary space.
BoundaryPoint embed_signature(const Signature& sig);

// Projection of a boundary point to a point configuration:
// {alpha+ + 1/2} |_| {1/2 - beta+} |_| {-alpha- - 1/2} |_| {-1/2 + beta-},
// omitting zeros among alpha/beta and ones among beta. Multiset semantics:
// coinciding values are kept.
std::vector<Rational> boundary_to_configuration_exact(const BoundaryPoint& omega);
Configuration boundary_to_configuration(const BoundaryPoint& omega);

// lambda_i + (N+1)/2 - i on the lattice Z + (N+1)/2
LatticeConfig signature_to_lattice(const Signature& sig);

// The N lattice points inside (-N/2, N/2), ascending.
std::vector<Half> inner_window(int n);
bool is_outer(Half x, int n);

// Particles outside the inner window plus holes inside it.
LatticeConfig particle_hole_involution(const LatticeConfig& config);

// Exact check that the particle/hole image of a signature's lattice
// configuration coincides with its description through modified Frobenius
// coordinates: outer part {a+_i + N/2} u {-a-_i - N/2}, inner part
// {N/2 - b+_i} u {-N/2 + b-_i}.
bool verify_involution_frobenius(const Signature& sig);

// (1/N) * lattice points, exact; used by the scaling-consistency check.
std::vector<Rational> scale_lattice_points(const LatticeConfig& config);

}  // namespace zwdpp
