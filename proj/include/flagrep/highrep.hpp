#pragma once

#include <cstddef>
#include <map>

#include "flagrep/cartan.hpp"

namespace flagrep {

/// An irreducible representation, described by its highest weight. `weights`
/// maps every weight to its multiplicity when populated.
struct IrrepDescriptor {
    Weight highest_weight;
    BigInt dimension;
    std::map<Weight, BigInt> weights;
};

inline constexpr std::size_t kDefaultWeightCap = 1'000'000;

// (lambda, alpha) >= 0 for every positive root.
bool is_dominant(const RootSystem& rs, const Weight& lambda);
// (lambda, alpha) != 0 for every root.
bool is_regular(const RootSystem& rs, const Weight& lambda);

// prod over positive roots of (lambda + rho, alpha)/(rho, alpha). No dominance requirement.
Rational weyl_polynomial(const RootSystem& rs, const Weight& lambda);

// Dimension of the irreducible of highest weight lambda (dominant, integral).
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

// Multiplicities of the dominant weights only, by Freudenthal's recursion.
std::map<Weight, BigInt> dominant_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                 std::size_t max_weights = kDefaultWeightCap);

// Full character: dominant multiplicities spread over W-orbits.
IrrepDescriptor weight_system(const RootSystem& rs, const Weight& lambda, std::size_t max_weights = kDefaultWeightCap);

}  // namespace flagrep
