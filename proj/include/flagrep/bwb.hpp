#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flagrep/cartan.hpp"
#include "flagrep/weyl.hpp"

namespace flagrep {

/// The single non-vanishing cohomology group of a line bundle on the flag
/// variety, recorded as (degree, highest weight, dimension).
struct Cohomology {
    std::size_t degree;
    Weight highest_weight;
    BigInt dimension;
    WeylElement w_used;  // w_used.apply(lambda + rho) is dominant regular
};

struct CohomologyResult {
    std::optional<Cohomology> nonzero;  // empty iff all cohomology vanishes

    bool vanishes_identically() const noexcept { return !nonzero.has_value(); }
};

// Cohomology of the line bundle L_lambda. lambda must be integral.
CohomologyResult bwb(const RootSystem& rs, const Weight& lambda);

// Number of positive roots alpha with (weight, alpha) < 0.
std::size_t inversion_count(const RootSystem& rs, const Weight& weight);

// sum_p (-1)^p dim H^p(L_lambda), evaluated through the Weyl polynomial.
BigInt euler_characteristic(const RootSystem& rs, const Weight& lambda);

struct SerreDualReport {
    Weight lambda;
    Weight dual_lambda;  // -lambda - 2 rho
    CohomologyResult primal;
    CohomologyResult dual;
    bool holds;  // both vanish, or degrees sum to |Phi+| with equal dimensions
};

SerreDualReport serre_dual_check(const RootSystem& rs, const Weight& lambda);

struct CoordinateRange {
    std::int64_t lo;
    std::int64_t hi;
};

struct TableOptions {
    std::size_t max_points = 1'000'000;
    unsigned threads = 1;
};

struct BwbTableEntry {
    Weight lambda;
    CohomologyResult result;
};

// One entry per lattice point of the box, lexicographic in lambda (first
// coordinate slowest). Throws ResourceLimit when the box exceeds max_points.
std::vector<BwbTableEntry> bwb_table(const RootSystem& rs, std::span<const CoordinateRange> box,
                                     const TableOptions& options = {});

// Same range on every coordinate.
std::vector<BwbTableEntry> bwb_table(const RootSystem& rs, CoordinateRange range, const TableOptions& options = {});

}  // namespace flagrep
