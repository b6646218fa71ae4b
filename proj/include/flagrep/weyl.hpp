#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "flagrep/cartan.hpp"

namespace flagrep {

/// An element of the Weyl group, carried as a word in simple reflections
/// together with its integer action matrix on fundamental-weight coordinates.
///
/// The word is read as a product: w = s_{word[0]} s_{word[1]} ... s_{word[k-1]},
/// so the last letter acts first. Equality compares actions, never words.
class WeylElement {
public:
    static WeylElement identity(std::size_t rank);
    static WeylElement simple(const RootSystem& rs, std::size_t i);
    static WeylElement from_word(const RootSystem& rs, std::vector<std::size_t> word);

    const std::vector<std::size_t>& word() const noexcept { return word_; }
    const IntMatrix& action() const noexcept { return action_; }
    std::size_t rank() const noexcept { return action_.rows(); }
    bool is_identity() const { return action_ == IntMatrix::identity(rank()); }

    Weight apply(const Weight& lambda) const;

    // Composition (a * b)(x) = a(b(x)).
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }

private:
    WeylElement(std::vector<std::size_t> word, IntMatrix action)
        : word_(std::move(word)), action_(std::move(action)) {}

    std::vector<std::size_t> word_;
    IntMatrix action_;
};

/// Sign of (lambda, alpha) for every positive root alpha, in root-system order.
/// The first rank() entries are the simple roots.
struct ChamberTag {
    std::vector<int> signs;

    std::span<const int> simple_signs(std::size_t rank) const { return {signs.data(), rank}; }
    bool is_dominant() const;

    friend bool operator==(const ChamberTag&, const ChamberTag&) = default;
    friend auto operator<=>(const ChamberTag&, const ChamberTag&) = default;
};

struct DominantResult {
    Weight dominant;
    WeylElement w;  // w.apply(lambda) == dominant
};

struct OrbitPoint {
    Weight weight;
    WeylElement element;  // element.apply(start) == weight
    std::size_t depth;    // minimal word length reaching this point
};

inline constexpr std::size_t kDefaultOrbitCap = 2'000'000;

// lambda - lambda[i] * alpha_i.
Weight simple_reflection(const RootSystem& rs, std::size_t i, const Weight& lambda);

// Reflects at the lowest negative coordinate until none remain.
DominantResult make_dominant(const RootSystem& rs, const Weight& lambda);
// Same walk, without building the group element.
Weight dominant_conjugate(const RootSystem& rs, const Weight& lambda);

// The W-orbit, sorted lexicographically. Throws ResourceLimit beyond max_size points.
std::vector<Weight> orbit(const RootSystem& rs, const Weight& lambda, std::size_t max_size = kDefaultOrbitCap);

// Breadth-first orbit with a witnessing element per point.
std::vector<OrbitPoint> orbit_with_elements(const RootSystem& rs, const Weight& lambda,
                                            std::size_t max_size = kDefaultOrbitCap);

// All of W, enumerated through the regular orbit of rho.
std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::size_t max_size = kDefaultOrbitCap);

BigInt weyl_order(const RootSystem& rs);

// |W| from positive-root heights: prod_k ((k+1)/k)^{#roots of height k}.
BigInt weyl_order_from_heights(const RootSystem& rs);

// Throws SingularWeight when lambda lies on a wall.
ChamberTag chamber_of(const RootSystem& rs, const Weight& lambda);

}  // namespace flagrep
