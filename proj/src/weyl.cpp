#include "flagrep/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace flagrep {

namespace {

// Largest |W| for which weyl_order() enumerates the orbit of rho directly.
constexpr std::size_t kOrbitOrderLimit = 1'000'000;

IntMatrix simple_reflection_matrix(const RootSystem& rs, std::size_t i) {
    const std::size_t n = rs.rank();
    IntMatrix m = IntMatrix::identity(n);
    // lambda'_j = lambda_j - lambda_i A[i][j]
    for (std::size_t j = 0; j < n; ++j) m(j, i) -= rs.cartan()(i, j);
    return m;
}

void check_rank(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != rs.rank())
        throw Error(ErrorCode::DimensionMismatch, "weight has " + std::to_string(lambda.rank()) +
                                                      " coordinates, root system has rank " +
                                                      std::to_string(rs.rank()));
}

std::size_t iteration_cap(const RootSystem& rs) { return 4 * rs.num_positive() + 16; }

// Applies the lowest-index strategy; returns the reflections in application order.
std::vector<std::size_t> dominance_walk(const RootSystem& rs, Weight& lambda) {
    check_rank(rs, lambda);
    std::vector<std::size_t> applied;
    const std::size_t cap = iteration_cap(rs);
    for (;;) {
        std::size_t i = 0;
        while (i < rs.rank() && lambda[i] >= 0) ++i;
        if (i == rs.rank()) return applied;
        if (applied.size() >= cap) throw Error(ErrorCode::NonTermination, "dominance walk exceeded its iteration cap");
        lambda = simple_reflection(rs, i, lambda);
        applied.push_back(i);
    }
}

}  // namespace

WeylElement WeylElement::identity(std::size_t rank) { return WeylElement({}, IntMatrix::identity(rank)); }

WeylElement WeylElement::simple(const RootSystem& rs, std::size_t i) {
    if (i >= rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "simple reflection index " + std::to_string(i) + " out of range");
    return WeylElement({i}, simple_reflection_matrix(rs, i));
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::vector<std::size_t> word) {
    IntMatrix m = IntMatrix::identity(rs.rank());
    for (auto i : word) {
        if (i >= rs.rank()) throw Error(ErrorCode::IndexOutOfRange, "simple reflection index " + std::to_string(i) + " out of range");
        m = m * simple_reflection_matrix(rs, i);
    }
    return WeylElement(std::move(word), std::move(m));
}

Weight WeylElement::apply(const Weight& lambda) const {
    if (lambda.rank() != rank()) throw Error(ErrorCode::DimensionMismatch, "weight rank does not match Weyl element");
    std::vector<Rational> out(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            if (action_(i, j) != 0 && lambda[j] != 0) out[i] += action_(i, j) * lambda[j];
    return Weight(std::move(out));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    std::vector<std::size_t> word = a.word_;
    word.insert(word.end(), b.word_.begin(), b.word_.end());
    return WeylElement(std::move(word), a.action_ * b.action_);
}

bool ChamberTag::is_dominant() const {
    return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

Weight simple_reflection(const RootSystem& rs, std::size_t i, const Weight& lambda) {
    check_rank(rs, lambda);
    const Root& alpha = rs.simple_root(i);
    if (lambda[i] == 0) return lambda;
    const Rational c = lambda[i];
    Weight out = lambda;
    for (std::size_t j = 0; j < rs.rank(); ++j) out[j] -= c * alpha.weight_coords[j];
    return out;
}

DominantResult make_dominant(const RootSystem& rs, const Weight& lambda) {
    Weight current = lambda;
    auto applied = dominance_walk(rs, current);
    std::reverse(applied.begin(), applied.end());
    return {std::move(current), WeylElement::from_word(rs, std::move(applied))};
}

Weight dominant_conjugate(const RootSystem& rs, const Weight& lambda) {
    Weight current = lambda;
    dominance_walk(rs, current);
    return current;
}

std::vector<OrbitPoint> orbit_with_elements(const RootSystem& rs, const Weight& lambda, std::size_t max_size) {
    check_rank(rs, lambda);
    std::vector<OrbitPoint> points;
    std::unordered_set<Weight, WeightHash> seen;
    points.push_back({lambda, WeylElement::identity(rs.rank()), 0});
    seen.insert(lambda);
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (points[k].weight[i] == 0) continue;
            Weight image = simple_reflection(rs, i, points[k].weight);
            if (!seen.insert(image).second) continue;
            if (points.size() >= max_size) throw Error(ErrorCode::ResourceLimit, "orbit exceeds " + std::to_string(max_size) + " points");
            WeylElement element = WeylElement::simple(rs, i) * points[k].element;
            points.push_back({std::move(image), std::move(element), points[k].depth + 1});
        }
    }
    return points;
}

std::vector<Weight> orbit(const RootSystem& rs, const Weight& lambda, std::size_t max_size) {
    check_rank(rs, lambda);
    std::vector<Weight> frontier{lambda};
    std::unordered_set<Weight, WeightHash> seen{lambda};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& mu : frontier)
            for (std::size_t i = 0; i < rs.rank(); ++i) {
                if (mu[i] == 0) continue;
                Weight image = simple_reflection(rs, i, mu);
                if (seen.contains(image)) continue;
                if (seen.size() >= max_size) throw Error(ErrorCode::ResourceLimit, "orbit exceeds " + std::to_string(max_size) + " points");
                seen.insert(image);
                next.push_back(std::move(image));
            }
        frontier = std::move(next);
    }
    std::vector<Weight> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::size_t max_size) {
    auto points = orbit_with_elements(rs, rs.rho(), max_size);
    std::vector<WeylElement> out;
    out.reserve(points.size());
    for (auto& p : points) out.push_back(std::move(p.element));
    return out;
}

BigInt weyl_order_from_heights(const RootSystem& rs) {
    std::map<std::int64_t, std::size_t> per_height;
    for (const auto& r : rs.positive_roots()) ++per_height[r.height()];
    Rational order = 1;
    for (const auto& [k, count] : per_height)
        for (std::size_t c = 0; c < count; ++c) order *= Rational(k + 1, k);
    auto n = to_integer(order);
    if (!n) throw Error(ErrorCode::InternalError, "height formula produced a non-integer group order");
    return *n;
}

BigInt weyl_order(const RootSystem& rs) {
    const BigInt predicted = weyl_order_from_heights(rs);
    if (predicted > kOrbitOrderLimit) return predicted;
    const BigInt counted = orbit(rs, rs.rho(), kOrbitOrderLimit + 1).size();
    if (counted != predicted) throw Error(ErrorCode::InternalError, "orbit of rho disagrees with the height formula for |W|");
    return counted;
}

ChamberTag chamber_of(const RootSystem& rs, const Weight& lambda) {
    check_rank(rs, lambda);
    ChamberTag tag;
    tag.signs.reserve(rs.num_positive());
    for (const auto& alpha : rs.positive_roots()) {
        const Rational p = pairing(rs, lambda, alpha);
        if (p == 0) {
            std::ostringstream msg;
            msg << "weight " << lambda << " is singular";
            throw Error(ErrorCode::SingularWeight, msg.str());
        }
        tag.signs.push_back(p > 0 ? 1 : -1);
    }
    return tag;
}

}  // namespace flagrep
