#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagrep/error.hpp"
#include "flagrep/matrix.hpp"
#include "flagrep/rational.hpp"

namespace flagrep {

/// A weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
/// Lattice points have all-integer coordinates.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank)); }
    static Weight from_ints(std::span<const std::int64_t> coords);

    std::size_t rank() const noexcept { return coords_.size(); }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    bool is_integral() const;
    // Integer coordinates; throws Error(NonIntegerWeight) if any is fractional or out of range.
    std::vector<std::int64_t> to_ints() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a);
    friend Weight operator*(const Rational& s, Weight a);

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
    // Lexicographic on coordinates.
    friend bool operator<(const Weight& a, const Weight& b);

private:
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

/// Cartan matrix with A[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
/// Construction validates the generalized-Cartan axioms and finite type.
class CartanMatrix {
public:
    CartanMatrix(IntMatrix entries, std::string label = {});

    // "A<n>", "B<n>", "C<n>", "D<n>", "E6".."E8", "F4", "G2". Throws Error(ParseError).
    static CartanMatrix from_label(std::string_view label);
    // Whitespace-separated square integer matrix.
    static CartanMatrix from_text(std::string_view text, std::string label = {});
    static CartanMatrix from_file(const std::string& path);

    std::size_t rank() const noexcept { return entries_.rows(); }
    const IntMatrix& entries() const noexcept { return entries_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const std::string& label() const noexcept { return label_; }

    // d_i = (alpha_i, alpha_i)/2, with the shortest simple root of each
    // connected component normalized to d = 1.
    const std::vector<Rational>& symmetrizer() const noexcept { return symmetrizer_; }

    // Gram matrix of the simple roots, (alpha_i, alpha_j) = A[i][j] d_j.
    RationalMatrix symmetrized() const;

private:
    IntMatrix entries_;
    std::string label_;
    std::vector<Rational> symmetrizer_;
};

struct Root {
    std::vector<std::int64_t> simple_coords;
    Weight weight_coords;
    // <lambda, alpha^vee> = sum_j coroot_coords[j] * lambda[j].
    std::vector<std::int64_t> coroot_coords;
    bool is_positive = false;

    std::int64_t height() const;
};

/// The finite root system of a Cartan matrix. Immutable once built.
///
/// Roots are ordered with the positive roots first, sorted by height and then
/// reverse-lexicographically on simple coordinates, so roots()[i] is the simple
/// root alpha_i for i < rank. The negatives follow in the same order:
/// roots()[i + num_positive()] == -roots()[i].
class RootSystem {
public:
    explicit RootSystem(CartanMatrix cartan);

    const CartanMatrix& cartan() const noexcept { return cartan_; }
    std::size_t rank() const noexcept { return cartan_.rank(); }

    std::span<const Root> roots() const noexcept { return roots_; }
    const Root& root(std::size_t index) const { return roots_.at(index); }
    std::span<const Root> positive_roots() const noexcept { return {roots_.data(), num_positive_}; }
    std::size_t num_positive() const noexcept { return num_positive_; }
    std::vector<std::size_t> positives() const;
    const Root& simple_root(std::size_t i) const;
    std::size_t negation_index(std::size_t index) const;
    std::optional<std::size_t> find(std::span<const std::int64_t> simple_coords) const;
    std::optional<std::size_t> index_of(const Root& root) const { return find(root.simple_coords); }

    const Weight& rho() const noexcept { return rho_; }
    // Gram matrix of (.,.) in fundamental-weight coordinates.
    const RationalMatrix& form() const noexcept { return form_; }

    // Coefficients of a weight over the simple roots.
    std::vector<Rational> to_simple_coords(const Weight& w) const;

private:
    CartanMatrix cartan_;
    std::vector<Root> roots_;
    std::size_t num_positive_ = 0;
    std::map<std::vector<std::int64_t>, std::size_t> index_;
    Weight rho_;
    RationalMatrix form_;
    RationalMatrix inverse_cartan_;
};

RootSystem build_root_system(const CartanMatrix& cartan);

Rational inner_product(const RootSystem& rs, const Weight& a, const Weight& b);

// 2(lambda, alpha)/(alpha, alpha).
Rational pairing(const RootSystem& rs, const Weight& lambda, const Root& alpha);

enum class SumKind { Root, Zero, NotARoot };

struct SumClass {
    SumKind kind;
    std::optional<std::size_t> root_index;  // set iff kind == Root
};

SumClass classify_sum(const RootSystem& rs, const Root& alpha, const Root& beta);

}  // namespace flagrep
