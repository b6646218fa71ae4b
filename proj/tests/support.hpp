#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flagrep/cartan.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Mat raw_matrix(const flagrep::CartanMatrix& c) {
    oracle::Mat m(c.rank(), std::vector<long>(c.rank()));
    for (std::size_t i = 0; i < c.rank(); ++i)
        for (std::size_t j = 0; j < c.rank(); ++j) m[i][j] = static_cast<long>(c(i, j));
    return m;
}

inline flagrep::Weight weight(std::initializer_list<std::int64_t> coords) {
    std::vector<std::int64_t> v(coords);
    return flagrep::Weight::from_ints(v);
}

inline flagrep::Weight weight(const oracle::Vec& coords) {
    std::vector<flagrep::Rational> v(coords.begin(), coords.end());
    return flagrep::Weight(std::move(v));
}

inline oracle::Vec ints(const flagrep::Weight& w) {
    auto v = w.to_ints();
    return {v.begin(), v.end()};
}

inline flagrep::Weight random_integer_weight(std::mt19937_64& gen, std::size_t rank, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<flagrep::Rational> c;
    for (std::size_t i = 0; i < rank; ++i) c.emplace_back(d(gen));
    return flagrep::Weight(std::move(c));
}

// Coordinates p/q with |p| <= bound * q and q in 1..max_den.
inline flagrep::Weight random_rational_weight(std::mt19937_64& gen, std::size_t rank, int bound, int max_den) {
    std::uniform_int_distribution<int> den(1, max_den);
    std::vector<flagrep::Rational> c;
    for (std::size_t i = 0; i < rank; ++i) {
        const int q = den(gen);
        std::uniform_int_distribution<int> num(-bound * q, bound * q);
        c.push_back(flagrep::make_rational(num(gen), q));
    }
    return flagrep::Weight(std::move(c));
}

}  // namespace testing_support
