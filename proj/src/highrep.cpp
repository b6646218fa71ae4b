#include "flagrep/highrep.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

#include "flagrep/weyl.hpp"

namespace flagrep {

namespace {

void check_rank(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != rs.rank())
        throw Error(ErrorCode::DimensionMismatch, "weight rank does not match root system rank");
}

void require_dominant_integral(const RootSystem& rs, const Weight& lambda) {
    check_rank(rs, lambda);
    if (!lambda.is_integral()) {
        std::ostringstream msg;
        msg << "weight " << lambda << " is not integral";
        throw Error(ErrorCode::NonIntegerWeight, msg.str());
    }
    if (!is_dominant(rs, lambda)) {
        std::ostringstream msg;
        msg << "weight " << lambda << " is not dominant";
        throw Error(ErrorCode::NotDominant, msg.str());
    }
}

// Height of lambda - mu over the simple roots; nullopt unless it lies in Q+.
std::optional<std::int64_t> depth_below(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    std::int64_t depth = 0;
    for (const auto& c : rs.to_simple_coords(lambda - mu)) {
        auto v = to_int64(c);
        if (!v || *v < 0) return std::nullopt;
        depth += *v;
    }
    return depth;
}

}  // namespace

bool is_dominant(const RootSystem& rs, const Weight& lambda) {
    check_rank(rs, lambda);
    for (const auto& alpha : rs.positive_roots())
        if (pairing(rs, lambda, alpha) < 0) return false;
    return true;
}

bool is_regular(const RootSystem& rs, const Weight& lambda) {
    check_rank(rs, lambda);
    for (const auto& alpha : rs.roots())
        if (pairing(rs, lambda, alpha) == 0) return false;
    return true;
}

Rational weyl_polynomial(const RootSystem& rs, const Weight& lambda) {
    check_rank(rs, lambda);
    const Weight shifted = lambda + rs.rho();
    Rational product = 1;
    for (const auto& alpha : rs.positive_roots()) {
        product *= pairing(rs, shifted, alpha) / pairing(rs, rs.rho(), alpha);
        if (product == 0) break;
    }
    return product;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    require_dominant_integral(rs, lambda);
    auto dim = to_integer(weyl_polynomial(rs, lambda));
    if (!dim || *dim <= 0) throw Error(ErrorCode::NonIntegerResult, "dimension formula did not yield a positive integer");
    return *dim;
}

std::map<Weight, BigInt> dominant_multiplicities(const RootSystem& rs, const Weight& lambda, std::size_t max_weights) {
    require_dominant_integral(rs, lambda);

    // Dominant weights below lambda. Any such weight is reachable from lambda by
    // subtracting positive roots without leaving the dominant cone.
    std::vector<std::pair<std::int64_t, Weight>> layers{{0, lambda}};
    std::set<Weight> seen{lambda};
    for (std::size_t k = 0; k < layers.size(); ++k) {
        for (const auto& alpha : rs.positive_roots()) {
            Weight mu = layers[k].second - alpha.weight_coords;
            if (!is_dominant(rs, mu) || seen.contains(mu)) continue;
            if (seen.size() >= max_weights)
                throw Error(ErrorCode::ResourceLimit, "dominant weight count exceeds " + std::to_string(max_weights));
            auto depth = depth_below(rs, lambda, mu);
            if (!depth) throw Error(ErrorCode::InternalError, "descent left the positive root cone");
            seen.insert(mu);
            layers.emplace_back(*depth, std::move(mu));
        }
    }
    std::stable_sort(layers.begin(), layers.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    const Weight lambda_rho = lambda + rs.rho();
    const Rational top = inner_product(rs, lambda_rho, lambda_rho);

    std::map<Weight, BigInt> mult;
    auto lookup = [&](const Weight& nu) -> BigInt {
        auto it = mult.find(dominant_conjugate(rs, nu));
        return it == mult.end() ? BigInt(0) : it->second;
    };

    mult.emplace(lambda, 1);
    for (std::size_t k = 1; k < layers.size(); ++k) {
        const Weight& mu = layers[k].second;
        // ((lambda+rho)^2 - (mu+rho)^2) m(mu) = 2 sum_{alpha>0} sum_{j>=1} m(mu + j alpha) (mu + j alpha, alpha)
        Rational rhs = 0;
        for (const auto& alpha : rs.positive_roots()) {
            Weight nu = mu + alpha.weight_coords;
            for (;;) {
                const BigInt m = lookup(nu);
                if (m == 0) break;
                rhs += Rational(m) * inner_product(rs, nu, alpha.weight_coords);
                nu += alpha.weight_coords;
            }
        }
        const Weight mu_rho = mu + rs.rho();
        const Rational gap = top - inner_product(rs, mu_rho, mu_rho);
        if (gap <= 0) throw Error(ErrorCode::InternalError, "Freudenthal denominator is not positive");
        auto m = to_integer(2 * rhs / gap);
        if (!m || *m < 0) throw Error(ErrorCode::NonIntegerResult, "Freudenthal recursion produced a non-integral multiplicity");
        if (*m != 0) mult.emplace(mu, *m);
    }
    return mult;
}

IrrepDescriptor weight_system(const RootSystem& rs, const Weight& lambda, std::size_t max_weights) {
    IrrepDescriptor out{lambda, weyl_dimension(rs, lambda), {}};
    const auto dominant = dominant_multiplicities(rs, lambda, max_weights);
    BigInt total = 0;
    for (const auto& [mu, m] : dominant) {
        const std::size_t remaining = max_weights - std::min(max_weights, out.weights.size());
        const Error over_cap(ErrorCode::ResourceLimit, "weight count exceeds " + std::to_string(max_weights));
        if (remaining == 0) throw over_cap;
        std::vector<Weight> points;
        try {
            points = orbit(rs, mu, remaining);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ResourceLimit) throw over_cap;
            throw;
        }
        for (auto& p : points) {
            total += m;
            out.weights.emplace(std::move(p), m);
        }
    }
    if (total != out.dimension) throw Error(ErrorCode::InternalError, "multiplicities do not sum to the dimension");
    return out;
}

}  // namespace flagrep
