#include "doctest.h"

#include <random>

#include "flagrep/highrep.hpp"
#include "flagrep/weyl.hpp"
#include "support.hpp"

using namespace flagrep;
using testing_support::ints;
using testing_support::raw_matrix;
using testing_support::weight;

namespace {

RootSystem rs_of(const char* label) { return build_root_system(CartanMatrix::from_label(label)); }

// Every dominant integral weight with coordinates in [0, bound].
std::vector<Weight> dominant_box(std::size_t rank, std::int64_t bound) {
    std::vector<Weight> out;
    std::vector<std::int64_t> c(rank, 0);
    for (;;) {
        out.push_back(Weight::from_ints(c));
        std::size_t k = 0;
        while (k < rank && c[k] == bound) c[k++] = 0;
        if (k == rank) return out;
        ++c[k];
    }
}

std::vector<oracle::Vec> positive_simple_coords(const RootSystem& rs) {
    std::vector<oracle::Vec> out;
    for (const auto& r : rs.positive_roots()) out.emplace_back(r.simple_coords.begin(), r.simple_coords.end());
    return out;
}

void check_code(ErrorCode expected, auto&& fn) {
    try {
        fn();
        FAIL("no error raised");
    } catch (const Error& e) {
        CHECK(e.code() == expected);
    }
}

}  // namespace

TEST_CASE("dominance and regularity examples") {
    auto a2 = rs_of("A2");
    CHECK(is_dominant(a2, Weight::zero(2)));
    CHECK_FALSE(is_regular(a2, Weight::zero(2)));
    CHECK(is_dominant(a2, a2.rho()));
    CHECK(is_regular(a2, a2.rho()));
    CHECK_FALSE(is_dominant(a2, weight({1, -1})));
    CHECK_FALSE(is_regular(a2, weight({1, -1})));
    CHECK(is_regular(a2, weight({2, -1})));
    CHECK(is_dominant(a2, Weight{make_rational(1, 2), 0}));
}

TEST_CASE("weyl dimension examples") {
    auto a1 = rs_of("A1");
    auto a2 = rs_of("A2");
    CHECK(weyl_dimension(a2, Weight::zero(2)) == 1);
    for (long n = 0; n <= 20; ++n) {
        auto string = oracle::gelfand_tsetlin({n});
        long total = 0;
        for (const auto& [mu, m] : string) {
            CHECK(m == 1);
            CHECK((n - mu[0]) % 2 == 0);
            total += m;
        }
        CHECK(weyl_dimension(a1, weight({n})) == total);
        CHECK(weyl_dimension(a1, weight({n})) == n + 1);
    }
    CHECK(weyl_dimension(a2, a2.rho()) == 8);
    CHECK(weyl_dimension(a2, a2.rho()) == a2.roots().size() + a2.rank());
    CHECK(weyl_dimension(rs_of("G2"), weight({1, 0})) == 7);
    CHECK(weyl_dimension(rs_of("G2"), weight({0, 1})) == 14);
    CHECK(weyl_dimension(rs_of("E8"), weight({0, 0, 0, 0, 0, 0, 0, 1})) == 248);
    CHECK(weyl_dimension(rs_of("E8"), weight({1, 0, 0, 0, 0, 0, 0, 0})) == 3875);

    check_code(ErrorCode::NotDominant, [&] { (void)weyl_dimension(a2, weight({-1, 0})); });
    check_code(ErrorCode::NonIntegerWeight, [&] { (void)weyl_dimension(a2, Weight{make_rational(1, 2), 0}); });
}

TEST_CASE("weyl polynomial needs no dominance") {
    auto a1 = rs_of("A1");
    CHECK(weyl_polynomial(a1, weight({-3})) == -2);
    CHECK(weyl_polynomial(a1, weight({-1})) == 0);
    CHECK(weyl_polynomial(a1, Weight{make_rational(1, 2)}) == make_rational(3, 2));
}

TEST_CASE("weight system examples") {
    auto a1 = rs_of("A1");
    auto a2 = rs_of("A2");
    auto trivial = weight_system(a2, Weight::zero(2));
    CHECK(trivial.weights == std::map<Weight, BigInt>{{Weight::zero(2), 1}});
    CHECK(trivial.dimension == 1);

    auto sym2 = weight_system(a1, weight({2}));
    CHECK(sym2.weights == std::map<Weight, BigInt>{{weight({-2}), 1}, {weight({0}), 1}, {weight({2}), 1}});

    auto adjoint = weight_system(a2, weight({1, 1}));
    CHECK(adjoint.dimension == 8);
    CHECK(adjoint.weights.size() == 7);
    CHECK(adjoint.weights.at(Weight::zero(2)) == 2);
    for (const auto& r : a2.roots()) CHECK(adjoint.weights.at(r.weight_coords) == 1);

    check_code(ErrorCode::NotDominant, [&] { (void)weight_system(a2, weight({0, -1})); });
}

TEST_CASE("type A multiplicities match Gelfand-Tsetlin patterns") {
    for (const char* label : {"A1", "A2", "A3"}) {
        auto rs = rs_of(label);
        for (const auto& lam : dominant_box(rs.rank(), label[1] == '3' ? 2 : 3)) {
            CAPTURE(lam);
            auto expected = oracle::gelfand_tsetlin(ints(lam));
            std::map<oracle::Vec, long> got;
            for (const auto& [mu, m] : weight_system(rs, lam).weights) got[ints(mu)] = m.convert_to<long>();
            CHECK(got == expected);
        }
    }
}

TEST_CASE("multiplicities match Kostant's formula") {
    for (const char* label : {"B2", "G2", "C3"}) {
        CAPTURE(label);
        auto rs = rs_of(label);
        oracle::Kostant kostant(raw_matrix(rs.cartan()), positive_simple_coords(rs));
        const std::int64_t bound = rs.rank() == 3 ? 1 : 2;
        for (const auto& lam : dominant_box(rs.rank(), bound)) {
            CAPTURE(lam);
            for (const auto& [mu, m] : dominant_multiplicities(rs, lam))
                CHECK(m == kostant.multiplicity(ints(lam), ints(mu)));
        }
    }
}

TEST_CASE("properties of computed weight systems") {
    for (const char* label : {"A1", "A2", "A3", "B2", "G2", "B3", "C3"}) {
        CAPTURE(label);
        auto rs = rs_of(label);
        const std::int64_t bound = rs.rank() == 3 ? 2 : 3;
        for (const auto& lam : dominant_box(rs.rank(), bound)) {
            CAPTURE(lam);
            auto irrep = weight_system(rs, lam);
            const auto& ws = irrep.weights;
            REQUIRE(ws.contains(lam));
            CHECK(ws.at(lam) == 1);

            for (const auto& a : rs.positive_roots()) CHECK_FALSE(ws.contains(lam + a.weight_coords));

            BigInt total = 0;
            for (const auto& [mu, m] : ws) {
                CHECK(m > 0);
                total += m;
                for (const auto& c : rs.to_simple_coords(lam - mu)) {
                    CHECK(is_integer(c));
                    CHECK(c >= 0);
                }
                for (std::size_t i = 0; i < rs.rank(); ++i) {
                    auto image = simple_reflection(rs, i, mu);
                    REQUIRE(ws.contains(image));
                    CHECK(ws.at(image) == m);
                }
            }
            CHECK(total == irrep.dimension);
            CHECK(total == weyl_dimension(rs, lam));

            auto dom = dominant_multiplicities(rs, lam);
            for (const auto& [mu, m] : dom) {
                CHECK(is_dominant(rs, mu));
                CHECK(ws.at(mu) == m);
            }
        }
    }
}

TEST_CASE("property: dominance shift") {
    std::mt19937_64 gen(31);
    for (const char* label : {"A2", "B2", "G2", "A3", "B3"}) {
        auto rs = rs_of(label);
        for (int t = 0; t < 200; ++t) {
            auto lam = testing_support::random_integer_weight(gen, rs.rank(), 4);
            auto shifted = lam + rs.rho();
            CHECK(is_dominant(rs, lam) == (is_dominant(rs, shifted) && is_regular(rs, shifted)));
        }
    }
}

TEST_CASE("weight cap") {
    auto rs = rs_of("A3");
    check_code(ErrorCode::ResourceLimit, [&] { (void)weight_system(rs, weight({3, 3, 3}), 50); });
}
