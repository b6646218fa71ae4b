#include "doctest.h"

#include <algorithm>
#include <random>

#include "flagrep/highrep.hpp"
#include "flagrep/infchar.hpp"
#include "support.hpp"

using namespace flagrep;
using testing_support::weight;

namespace {

RootSystem rs_of(const char* label) { return build_root_system(CartanMatrix::from_label(label)); }

Weight random_conjugate(const RootSystem& rs, const Weight& lam, std::mt19937_64& gen) {
    std::uniform_int_distribution<std::size_t> len(0, 8), letter(0, rs.rank() - 1);
    std::vector<std::size_t> word(len(gen));
    for (auto& l : word) l = letter(gen);
    return WeylElement::from_word(rs, word).apply(lam);
}

bool integrally_dominant_by_form(const RootSystem& rs, const Weight& lam) {
    for (const auto& a : rs.positive_roots()) {
        const Rational p = 2 * inner_product(rs, lam, a.weight_coords) / inner_product(rs, a.weight_coords, a.weight_coords);
        if (is_integer(p) && p < 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("chi_equal examples") {
    auto a1 = rs_of("A1");
    auto a2 = rs_of("A2");
    CHECK(chi_equal(a2, weight({1, -3}), weight({1, -3})));
    CHECK(chi_equal(a1, weight({2}), weight({-2})));
    CHECK_FALSE(chi_equal(a1, weight({2}), weight({3})));
    CHECK(chi_equal(a1, Weight{make_rational(1, 2)}, Weight{make_rational(-1, 2)}));
}

TEST_CASE("infinitesimal character takes its argument literally") {
    auto a2 = rs_of("A2");
    auto chi = infinitesimal_character(a2, weight({-1, -1}));
    CHECK(chi.representative == weight({-1, -1}));
    CHECK(chi.canonical == weight({1, 1}));
    CHECK(infinitesimal_character(a2, weight({0, 0})).canonical == weight({0, 0}));
}

TEST_CASE("integrally_dominant examples") {
    auto a1 = rs_of("A1");
    auto b2 = rs_of("B2");
    CHECK(integrally_dominant(a1, weight({3})));
    CHECK(integrally_dominant(a1, weight({0})));
    CHECK_FALSE(integrally_dominant(a1, weight({-2})));
    CHECK(integrally_dominant(a1, Weight{make_rational(-1, 2)}));
    CHECK(integrally_dominant(b2, b2.rho()));
    // Generic weights have no integral pairings at all.
    CHECK(integrally_dominant(b2, Weight{make_rational(-1, 3), make_rational(-1, 5)}));
}

TEST_CASE("integrally_dominant_conjugate examples") {
    auto a1 = rs_of("A1");
    auto a2 = rs_of("A2");
    auto same = integrally_dominant_conjugate(a2, weight({2, 1}));
    CHECK(same.weight == weight({2, 1}));
    CHECK(same.w.is_identity());

    auto flip = integrally_dominant_conjugate(a1, weight({-2}));
    CHECK(flip.weight == weight({2}));
    CHECK(flip.w == WeylElement::simple(a1, 0));

    auto half = integrally_dominant_conjugate(a1, Weight{make_rational(-1, 2)});
    CHECK(half.weight == Weight{make_rational(-1, 2)});
    CHECK(half.w.is_identity());
}

TEST_CASE("property: integrally_dominant agrees with direct pairings") {
    std::mt19937_64 gen(37);
    for (const char* label : {"A1", "A2", "B2", "G2", "A3"}) {
        auto rs = rs_of(label);
        for (int t = 0; t < 300; ++t) {
            auto lam = testing_support::random_rational_weight(gen, rs.rank(), 3, 3);
            CHECK(integrally_dominant(rs, lam) == integrally_dominant_by_form(rs, lam));
            if (is_dominant(rs, lam)) CHECK(integrally_dominant(rs, lam));

            auto mu = testing_support::random_integer_weight(gen, rs.rank(), 4);
            if (integrally_dominant(rs, mu) && is_regular(rs, mu)) CHECK(is_dominant(rs, mu));

            auto c = integrally_dominant_conjugate(rs, lam);
            CHECK(integrally_dominant(rs, c.weight));
            CHECK(c.w.apply(lam) == c.weight);
        }
    }
}

TEST_CASE("property: chi_equal is orbit membership") {
    std::mt19937_64 gen(41);
    for (const char* label : {"A1", "A2", "B2", "G2"}) {
        auto rs = rs_of(label);
        for (int t = 0; t < 200; ++t) {
            auto lam = testing_support::random_rational_weight(gen, rs.rank(), 2, 2);
            auto mu = t % 2 ? random_conjugate(rs, lam, gen) : testing_support::random_rational_weight(gen, rs.rank(), 2, 2);
            auto pts = orbit(rs, lam);
            const bool member = std::find(pts.begin(), pts.end(), mu) != pts.end();
            CHECK(chi_equal(rs, lam, mu) == member);
            CHECK(chi_equal(rs, mu, lam) == member);
        }
    }
}

TEST_CASE("property: chi classes have one dominant point") {
    std::mt19937_64 gen(43);
    auto rs = rs_of("A2");
    std::vector<Weight> sample;
    for (int t = 0; t < 30; ++t) {
        auto lam = testing_support::random_rational_weight(gen, 2, 1, 2);
        sample.push_back(lam);
        sample.push_back(random_conjugate(rs, lam, gen));
    }
    for (const auto& a : sample)
        for (const auto& b : sample)
            for (const auto& c : sample)
                if (chi_equal(rs, a, b) && chi_equal(rs, b, c)) CHECK(chi_equal(rs, a, c));
    for (const auto& a : sample) {
        auto pts = orbit(rs, a);
        CHECK(std::count_if(pts.begin(), pts.end(), [&](const Weight& p) { return is_dominant(rs, p); }) == 1);
    }
}
