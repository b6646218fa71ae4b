#include "flagrep/serialize.hpp"

#include <limits>
#include <ostream>

namespace flagrep {

Json to_json(const BigInt& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return n.convert_to<std::int64_t>();
    return n.str();
}

Json to_json(const Rational& q) {
    if (auto n = to_integer(q)) return to_json(*n);
    return to_string(q);
}

Json to_json(const Weight& w) {
    Json out = Json::array();
    for (const auto& c : w.coords()) out.push_back(to_json(c));
    return out;
}

Json to_json(const RootSystem& rs) {
    Json out;
    out["label"] = rs.cartan().label().empty() ? Json(nullptr) : Json(rs.cartan().label());
    out["rank"] = rs.rank();
    Json roots = Json::array();
    for (const auto& r : rs.roots()) roots.push_back(r.simple_coords);
    out["roots"] = std::move(roots);
    out["positives"] = rs.positives();
    out["rho"] = to_json(rs.rho());
    return out;
}

Json to_json(const CohomologyResult& result) {
    Json out;
    out["vanishes"] = result.vanishes_identically();
    if (const auto& h = result.nonzero) {
        out["degree"] = h->degree;
        out["highest_weight"] = to_json(h->highest_weight);
        out["dimension"] = to_json(h->dimension);
    }
    return out;
}

Json to_json(const IrrepDescriptor& irrep) {
    Json out;
    out["highest_weight"] = to_json(irrep.highest_weight);
    out["dimension"] = to_json(irrep.dimension);
    Json weights = Json::array();
    for (const auto& [mu, m] : irrep.weights) {
        Json entry;
        entry["weight"] = to_json(mu);
        entry["multiplicity"] = to_json(m);
        weights.push_back(std::move(entry));
    }
    out["weights"] = std::move(weights);
    return out;
}

Json to_json(const sl2::DualityReport& report, const sl2::ClosurePosets& posets) {
    Json out;
    Json pairs = Json::array();
    for (const auto& q : sl2::k_orbits()) {
        Json p;
        p["k_orbit"] = std::string(sl2::to_string(q.name));
        p["gr_orbit"] = std::string(sl2::to_string(sl2::matsuki_dual(q).name));
        pairs.push_back(std::move(p));
    }
    out["duality_pairs"] = std::move(pairs);
    out["poset_reversal"] = posets.reversal_certificate;

    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json entry;
        entry["reason"] = f.reason;
        entry["z"] = {f.point.z().real(), f.point.z().imag()};
        entry["w"] = {f.point.w().real(), f.point.w().imag()};
        failures.push_back(std::move(entry));
    }
    out["sample_failures"] = std::move(failures);

    Json cells = Json::array();
    for (const auto& c : report.pairs) {
        Json entry;
        entry["k_orbit"] = std::string(sl2::to_string(c.k_orbit.name));
        entry["gr_orbit"] = std::string(sl2::to_string(c.gr_orbit.name));
        entry["dual"] = c.dual;
        entry["observed"] = std::string(sl2::to_string(c.observed));
        entry["samples"] = c.samples;
        cells.push_back(std::move(entry));
    }
    out["intersections"] = std::move(cells);

    auto closure = [](const sl2::OrbitPoset& poset) {
        Json rel = Json::array();
        for (const auto& a : poset.elements())
            for (const auto& b : poset.elements())
                if (a != b && poset.leq(a, b))
                    rel.push_back({std::string(sl2::to_string(a.name)), std::string(sl2::to_string(b.name))});
        return rel;
    };
    out["k_closure"] = closure(posets.k_side);
    out["gr_closure"] = closure(posets.gr_side);
    return out;
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        auto q = parse_rational(j.get<std::string>());
        if (auto n = to_integer(q)) return *n;
    }
    throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "expected a rational, got " + j.dump());
}

Weight weight_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a coordinate array, got " + j.dump());
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(rational_from_json(c));
    return Weight(std::move(coords));
}

void write_csv(std::ostream& os, const IrrepDescriptor& irrep) {
    for (std::size_t i = 0; i < irrep.highest_weight.rank(); ++i) os << "c" << i + 1 << ',';
    os << "multiplicity\n";
    for (const auto& [mu, m] : irrep.weights) {
        for (const auto& c : mu.coords()) os << to_string(c) << ',';
        os << m << '\n';
    }
}

void write_csv(std::ostream& os, std::size_t rank, std::span<const BwbTableEntry> table) {
    for (std::size_t i = 0; i < rank; ++i) os << "l" << i + 1 << ',';
    os << "vanishes,degree,";
    for (std::size_t i = 0; i < rank; ++i) os << "hw" << i + 1 << ',';
    os << "dimension\n";
    for (const auto& entry : table) {
        for (const auto& c : entry.lambda.coords()) os << to_string(c) << ',';
        const auto& h = entry.result.nonzero;
        os << (h ? "false" : "true") << ',';
        if (h) os << h->degree;
        os << ',';
        for (std::size_t i = 0; i < rank; ++i) {
            if (h) os << to_string(h->highest_weight[i]);
            os << ',';
        }
        if (h) os << h->dimension;
        os << '\n';
    }
}

}  // namespace flagrep
