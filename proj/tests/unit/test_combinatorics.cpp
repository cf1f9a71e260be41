#include <doctest.h>

#include <algorithm>

#include "zwdpp/combinatorics.hpp"
#include "zwdpp/rng.hpp"

using namespace zwdpp;

namespace {

Signature random_signature(Rng& rng, int max_n = 8, long long bound = 10) {
    int n = 1 + static_cast<int>(rng.below(max_n));
    std::vector<long long> parts(n);
    for (auto& p : parts) p = -bound + static_cast<long long>(rng.below(2 * bound + 1));
    std::sort(parts.rbegin(), parts.rend());
    return Signature(parts);
}

}  // namespace

TEST_CASE("split_signature") {
    auto [p1, m1] = split_signature(Signature({3, 1, 0, -2}));
    CHECK(p1.rows == std::vector<long long>{3, 1});
    CHECK(m1.rows == std::vector<long long>{2});

    auto [p2, m2] = split_signature(Signature({0, 0, 0}));
    CHECK(p2.rows.empty());
    CHECK(m2.rows.empty());

    auto [p3, m3] = split_signature(Signature({2, 2, -1, -3}));
    CHECK(p3.rows == std::vector<long long>{2, 2});
    CHECK(m3.rows == std::vector<long long>{3, 1});
}

TEST_CASE("frobenius coordinates") {
    FrobeniusCoords fc = frobenius(YoungDiagram({3, 3, 1}));
    CHECK(fc.d() == 2);
    CHECK(fc.a == std::vector<Half>{Half::from_twice(5), Half::from_twice(3)});
    CHECK(fc.b == std::vector<Half>{Half::from_twice(5), Half::from_twice(1)});

    CHECK(frobenius(YoungDiagram{}).d() == 0);

    FrobeniusCoords single = frobenius(YoungDiagram({1}));
    CHECK(single.d() == 1);
    CHECK(single.a == std::vector<Half>{Half::from_twice(1)});
    CHECK(single.b == std::vector<Half>{Half::from_twice(1)});
}

TEST_CASE("frobenius sum rule over random diagrams") {
    Rng rng(derive_stream_seed(42u, 1));
    for (int trial = 0; trial < 500; ++trial) {
        Signature sig = random_signature(rng);
        auto [plus, minus] = split_signature(sig);
        for (const YoungDiagram& mu : {plus, minus}) {
            FrobeniusCoords fc = frobenius(mu);
            long long twice_total = 0;
            for (Half a : fc.a) twice_total += a.twice;
            for (Half b : fc.b) twice_total += b.twice;
            CHECK(twice_total == 2 * mu.size());
        }
    }
}

TEST_CASE("embed_signature worked examples") {
    BoundaryPoint zero = embed_signature(Signature({0, 0, 0, 0}));
    CHECK(zero.alpha_plus.empty());
    CHECK(zero.beta_plus.empty());
    CHECK(zero.delta_plus == Rational(0));
    CHECK(zero.delta_minus == Rational(0));

    BoundaryPoint om = embed_signature(Signature({3, 3, 1}));
    CHECK(om.alpha_plus == std::vector<Rational>{Rational(5, 6), Rational(1, 2)});
    CHECK(om.beta_plus == std::vector<Rational>{Rational(5, 6), Rational(1, 6)});
    CHECK(om.delta_plus == Rational(7, 3));
    CHECK(om.alpha_minus.empty());
    CHECK(om.delta_minus == Rational(0));

    BoundaryPoint sym = embed_signature(Signature({1, -1}));
    CHECK(sym.alpha_plus == std::vector<Rational>{Rational(1, 4)});
    CHECK(sym.beta_plus == std::vector<Rational>{Rational(1, 4)});
    CHECK(sym.delta_plus == Rational(1, 2));
    CHECK(sym.alpha_minus == sym.alpha_plus);
    CHECK(sym.beta_minus == sym.beta_plus);
}

TEST_CASE("embedding constraint beta+_1 + beta-_1 <= 1") {
    Rng rng(derive_stream_seed(42u, 2));
    for (int trial = 0; trial < 1000; ++trial) {
        BoundaryPoint om = embed_signature(random_signature(rng));
        Rational b1p = om.beta_plus.empty() ? Rational(0) : om.beta_plus.front();
        Rational b1m = om.beta_minus.empty() ? Rational(0) : om.beta_minus.front();
        CHECK(b1p + b1m <= Rational(1));
    }
}

TEST_CASE("boundary projection") {
    BoundaryPoint zero = embed_signature(Signature({0, 0}));
    CHECK(boundary_to_configuration_exact(zero).empty());

    // beta = 1 entries are omitted
    BoundaryPoint om;
    om.beta_plus = {Rational(1)};
    om.delta_plus = Rational(1);
    om.validate();
    CHECK(boundary_to_configuration_exact(om).empty());

    auto cfg = boundary_to_configuration_exact(embed_signature(Signature({1, -1})));
    std::vector<Rational> want{Rational(-3, 4), Rational(-1, 4), Rational(1, 4), Rational(3, 4)};
    CHECK(cfg == want);
}

TEST_CASE("signature_to_lattice") {
    auto staircase = signature_to_lattice(Signature({0, 0}));
    CHECK(staircase.points == std::vector<Half>{Half::from_twice(1), Half::from_twice(-1)});

    auto pm = signature_to_lattice(Signature({1, -1}));
    CHECK(pm.points == std::vector<Half>{Half::from_twice(3), Half::from_twice(-3)});

    auto three = signature_to_lattice(Signature({2, 1, 0}));
    CHECK(three.points ==
          std::vector<Half>{Half::whole(3), Half::whole(1), Half::whole(-1)});
    CHECK(three.on_lattice());
}

TEST_CASE("inner window") {
    CHECK(inner_window(1) == std::vector<Half>{Half::whole(0)});
    CHECK(inner_window(2) == std::vector<Half>{Half::from_twice(-1), Half::from_twice(1)});
    CHECK(inner_window(3) ==
          std::vector<Half>{Half::whole(-1), Half::whole(0), Half::whole(1)});
}

TEST_CASE("particle/hole involution worked examples") {
    // zero signature maps onto the inner window: image is empty
    auto empty = particle_hole_involution(signature_to_lattice(Signature({0, 0, 0})));
    CHECK(empty.points.empty());

    auto pm = particle_hole_involution(signature_to_lattice(Signature({1, -1})));
    CHECK(pm.points == std::vector<Half>{Half::from_twice(3), Half::from_twice(1),
                                         Half::from_twice(-1), Half::from_twice(-3)});

    // disjoint from the inner window: 2N points
    auto big = particle_hole_involution(signature_to_lattice(Signature({9, -9})));
    CHECK(big.points.size() == 4);
}

TEST_CASE("involution is self-inverse and balanced") {
    Rng rng(derive_stream_seed(42u, 3));
    for (int trial = 0; trial < 1000; ++trial) {
        Signature sig = random_signature(rng);
        LatticeConfig lat = signature_to_lattice(sig);
        LatticeConfig image = particle_hole_involution(lat);
        CHECK(image.points.size() % 2 == 0);
        int particles = 0, holes = 0;
        for (Half x : image.points) (is_outer(x, image.n) ? particles : holes)++;
        CHECK(particles == holes);
        CHECK(particle_hole_involution(image) == lat);
    }
}

TEST_CASE("Frobenius description of the involution image") {
    CHECK(verify_involution_frobenius(Signature({1, -1})));
    CHECK(verify_involution_frobenius(Signature({0, 0, 0})));
    Rng rng(derive_stream_seed(42u, 4));
    for (int trial = 0; trial < 10000; ++trial)
        CHECK(verify_involution_frobenius(random_signature(rng)));
}

TEST_CASE("scaling consistency of involution and projection") {
    Rng rng(derive_stream_seed(42u, 5));
    for (int trial = 0; trial < 2000; ++trial) {
        Signature sig = random_signature(rng);
        auto scaled = scale_lattice_points(particle_hole_involution(signature_to_lattice(sig)));
        auto projected = boundary_to_configuration_exact(embed_signature(sig));
        CHECK(scaled == projected);
    }
}
