#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "flagrep/error.hpp"
#include "flagrep/matsuki_sl2.hpp"

using namespace flagrep;
using namespace flagrep::sl2;

namespace {

OrbitLabel k(OrbitName n) { return OrbitLabel::make(Side::K, n); }
OrbitLabel gr(OrbitName n) { return OrbitLabel::make(Side::GR, n); }

}  // namespace

TEST_CASE("projective points are normalized") {
    auto p = ProjPoint::make(2.0, 4.0);
    CHECK(p.w() == Complex(1.0, 0.0));
    CHECK(p.z() == Complex(0.5, 0.0));
    auto q = ProjPoint::make(Complex(0, 3), 1.0);
    CHECK(q.z() == Complex(1.0, 0.0));
    CHECK(std::abs(q.w() - Complex(0, -1.0 / 3.0)) < 1e-15);
    CHECK(ProjPoint::infinity().w() == Complex(0.0, 0.0));

    for (auto [z, w] : {std::pair<Complex, Complex>{0.0, 0.0},
                        {std::numeric_limits<double>::quiet_NaN(), 1.0},
                        {1.0, std::numeric_limits<double>::infinity()}}) {
        try {
            (void)ProjPoint::make(z, w);
            FAIL("accepted an invalid point");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidArgument);
        }
    }
}

TEST_CASE("chordal distance") {
    CHECK(chordal_distance(ProjPoint::from_affine(0.0), ProjPoint::infinity()) == doctest::Approx(1.0));
    CHECK(chordal_distance(ProjPoint::from_affine(0.3), ProjPoint::from_affine(0.3)) == doctest::Approx(0.0));
    CHECK(chordal_distance(ProjPoint::from_affine(1e8), ProjPoint::infinity()) < 1e-7);
}

TEST_CASE("classify examples") {
    auto zero = ProjPoint::make(0.0, 1.0);
    auto inf = ProjPoint::make(1.0, 0.0);
    auto one = ProjPoint::make(1.0, 1.0);
    CHECK(classify(zero, Side::K) == k(OrbitName::Zero));
    CHECK(classify(zero, Side::GR) == gr(OrbitName::Disc));
    CHECK(classify(inf, Side::K) == k(OrbitName::Infinity));
    CHECK(classify(inf, Side::GR) == gr(OrbitName::Exterior));
    CHECK(classify(one, Side::K) == k(OrbitName::CStar));
    CHECK(classify(one, Side::GR) == gr(OrbitName::Circle));

    CHECK(classify(ProjPoint::from_affine(0.5), Side::GR) == gr(OrbitName::Disc));
    CHECK(classify(ProjPoint::from_affine(Complex(0, -2)), Side::GR) == gr(OrbitName::Exterior));
    CHECK(classify(ProjPoint::from_affine(1e-300), Side::K) == k(OrbitName::CStar));
    for (int t = 0; t < 64; ++t) {
        const double theta = 2 * std::numbers::pi * t / 64;
        CHECK(classify(ProjPoint::from_affine(std::polar(1.0, theta)), Side::GR) == gr(OrbitName::Circle));
    }
    CHECK(classify(ProjPoint::from_affine(1 + 1e-12), Side::GR) == gr(OrbitName::Circle));
    CHECK(classify(ProjPoint::from_affine(1 + 1e-6), Side::GR) == gr(OrbitName::Exterior));
}

TEST_CASE("labels are checked against their side") {
    try {
        (void)OrbitLabel::make(Side::K, OrbitName::Disc);
        FAIL("accepted a mismatched label");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
    CHECK(to_string(OrbitName::CStar) == "CStar");
}

TEST_CASE("matsuki dual") {
    CHECK(matsuki_dual(k(OrbitName::Zero)) == gr(OrbitName::Disc));
    CHECK(matsuki_dual(k(OrbitName::Infinity)) == gr(OrbitName::Exterior));
    CHECK(matsuki_dual(k(OrbitName::CStar)) == gr(OrbitName::Circle));
    for (const auto& q : k_orbits()) CHECK(matsuki_dual(matsuki_dual(q)) == q);
    for (const auto& s : gr_orbits()) CHECK(matsuki_dual(matsuki_dual(s)) == s);
    // Bijective: distinct K-orbits go to distinct GR-orbits.
    auto ks = k_orbits();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK((matsuki_dual(ks[i]) == matsuki_dual(ks[j])) == (i == j));
}

TEST_CASE("duality is verified by sampling") {
    auto report = verify_duality(10'000, std::uint64_t{42});
    CHECK(report.passed());
    CHECK_NOTHROW(require_passed(report));
    REQUIRE(report.pairs.size() == 9);
    std::size_t dual_pairs = 0;
    for (const auto& c : report.pairs) {
        CAPTURE(to_string(c.k_orbit.name));
        CAPTURE(to_string(c.gr_orbit.name));
        CHECK(c.dual == (matsuki_dual(c.k_orbit) == c.gr_orbit));
        if (c.dual) {
            ++dual_pairs;
            CHECK(c.observed == IntersectionShape::SingleOrbit);
        } else {
            CHECK(c.observed != IntersectionShape::SingleOrbit);
        }
    }
    CHECK(dual_pairs == 3);

    auto shape = [&](OrbitName q, OrbitName s) {
        for (const auto& c : report.pairs)
            if (c.k_orbit.name == q && c.gr_orbit.name == s) return c.observed;
        FAIL("missing pair");
        return IntersectionShape::Empty;
    };
    CHECK(shape(OrbitName::Zero, OrbitName::Circle) == IntersectionShape::Empty);
    CHECK(shape(OrbitName::Infinity, OrbitName::Disc) == IntersectionShape::Empty);
    CHECK(shape(OrbitName::CStar, OrbitName::Disc) == IntersectionShape::SeveralOrbits);
    CHECK(shape(OrbitName::CStar, OrbitName::Exterior) == IntersectionShape::SeveralOrbits);
}

TEST_CASE("sampling is deterministic per seed") {
    auto a = verify_duality(200, std::uint64_t{7});
    auto b = verify_duality(200, std::uint64_t{7});
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        CHECK(a.pairs[i].observed == b.pairs[i].observed);
        CHECK(a.pairs[i].samples == b.pairs[i].samples);
    }
    CHECK(verify_duality(1, std::uint64_t{0}).passed());
}

TEST_CASE("require_passed reports the first failure") {
    DualityReport bad;
    bad.failures.push_back({"not a single orbit", ProjPoint::from_affine(0.5)});
    try {
        require_passed(bad);
        FAIL("no error raised");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SampleFailure);
        CHECK(std::string(e.what()).find("not a single orbit") != std::string::npos);
    }
}

TEST_CASE("closure posets") {
    auto posets = closure_posets();
    const auto& K = posets.k_side;
    const auto& G = posets.gr_side;
    CHECK(K.is_partial_order());
    CHECK(G.is_partial_order());
    CHECK(posets.reversal_certificate);

    CHECK(K.leq(k(OrbitName::Zero), k(OrbitName::CStar)));
    CHECK(K.leq(k(OrbitName::Infinity), k(OrbitName::CStar)));
    CHECK_FALSE(K.leq(k(OrbitName::CStar), k(OrbitName::Zero)));
    CHECK_FALSE(K.leq(k(OrbitName::Zero), k(OrbitName::Infinity)));
    CHECK_FALSE(K.leq(k(OrbitName::Infinity), k(OrbitName::Zero)));

    CHECK(G.leq(gr(OrbitName::Circle), gr(OrbitName::Disc)));
    CHECK(G.leq(gr(OrbitName::Circle), gr(OrbitName::Exterior)));
    CHECK_FALSE(G.leq(gr(OrbitName::Disc), gr(OrbitName::Circle)));
    CHECK_FALSE(G.leq(gr(OrbitName::Disc), gr(OrbitName::Exterior)));
    CHECK_FALSE(G.leq(gr(OrbitName::Exterior), gr(OrbitName::Disc)));

    for (const auto& a : k_orbits()) {
        CHECK(K.leq(a, a));
        for (const auto& b : k_orbits()) CHECK(K.leq(a, b) == G.leq(matsuki_dual(b), matsuki_dual(a)));
    }
}
