#include "flagrep/bwb.hpp"

#include <exception>
#include <sstream>
#include <thread>

#include "flagrep/highrep.hpp"

namespace flagrep {

namespace {

void require_integral(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != rs.rank())
        throw Error(ErrorCode::DimensionMismatch, "weight rank does not match root system rank");
    if (!lambda.is_integral()) {
        std::ostringstream msg;
        msg << "weight " << lambda << " is not integral";
        throw Error(ErrorCode::NonIntegerWeight, msg.str());
    }
}

}  // namespace

std::size_t inversion_count(const RootSystem& rs, const Weight& weight) {
    std::size_t count = 0;
    for (const auto& alpha : rs.positive_roots())
        if (pairing(rs, weight, alpha) < 0) ++count;
    return count;
}

CohomologyResult bwb(const RootSystem& rs, const Weight& lambda) {
    require_integral(rs, lambda);
    const Weight shifted = lambda + rs.rho();
    if (!is_regular(rs, shifted)) return {};

    auto [dominant, w] = make_dominant(rs, shifted);
    Weight highest = dominant - rs.rho();
    BigInt dim = weyl_dimension(rs, highest);
    return {Cohomology{inversion_count(rs, shifted), std::move(highest), std::move(dim), std::move(w)}};
}

BigInt euler_characteristic(const RootSystem& rs, const Weight& lambda) {
    require_integral(rs, lambda);
    auto chi = to_integer(weyl_polynomial(rs, lambda));
    if (!chi) throw Error(ErrorCode::NonIntegerResult, "Euler characteristic is not an integer");
    return *chi;
}

SerreDualReport serre_dual_check(const RootSystem& rs, const Weight& lambda) {
    require_integral(rs, lambda);
    Weight dual_lambda = -lambda - Rational(2) * rs.rho();
    CohomologyResult primal = bwb(rs, lambda);
    CohomologyResult dual = bwb(rs, dual_lambda);

    bool holds = primal.vanishes_identically() == dual.vanishes_identically();
    if (holds && primal.nonzero)
        holds = primal.nonzero->degree + dual.nonzero->degree == rs.num_positive() &&
                primal.nonzero->dimension == dual.nonzero->dimension;
    return {lambda, std::move(dual_lambda), std::move(primal), std::move(dual), holds};
}

std::vector<BwbTableEntry> bwb_table(const RootSystem& rs, std::span<const CoordinateRange> box,
                                     const TableOptions& options) {
    if (box.size() != rs.rank()) throw Error(ErrorCode::DimensionMismatch, "box rank does not match root system rank");

    std::size_t total = 1;
    for (const auto& r : box) {
        if (r.hi < r.lo) return {};
        const auto width = static_cast<std::size_t>(r.hi - r.lo) + 1;
        if (width > options.max_points || total > options.max_points / width)
            throw Error(ErrorCode::ResourceLimit, "table exceeds " + std::to_string(options.max_points) + " points");
        total *= width;
    }

    auto point_at = [&](std::size_t index) {
        std::vector<std::int64_t> coords(box.size());
        for (std::size_t k = box.size(); k-- > 0;) {
            const auto width = static_cast<std::size_t>(box[k].hi - box[k].lo) + 1;
            coords[k] = box[k].lo + static_cast<std::int64_t>(index % width);
            index /= width;
        }
        return Weight::from_ints(coords);
    };

    std::vector<BwbTableEntry> table(total);
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Weight lambda = point_at(i);
            table[i].result = bwb(rs, lambda);
            table[i].lambda = std::move(lambda);
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(options.threads, total));
    if (workers == 1) {
        fill(0, total);
        return table;
    }
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (total + workers - 1) / workers;
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                try {
                    fill(std::min(total, t * chunk), std::min(total, (t + 1) * chunk));
                } catch (...) {
                    failures[t] = std::current_exception();
                }
            });
    }
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
    return table;
}

std::vector<BwbTableEntry> bwb_table(const RootSystem& rs, CoordinateRange range, const TableOptions& options) {
    std::vector<CoordinateRange> box(rs.rank(), range);
    return bwb_table(rs, box, options);
}

}  // namespace flagrep
