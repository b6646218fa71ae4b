#include "flagrep/infchar.hpp"

namespace flagrep {

InfinitesimalCharacter infinitesimal_character(const RootSystem& rs, const Weight& lambda) {
    return {lambda, dominant_conjugate(rs, lambda)};
}

bool chi_equal(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    return dominant_conjugate(rs, lambda) == dominant_conjugate(rs, mu);
}

bool integrally_dominant(const RootSystem& rs, const Weight& lambda) {
    for (const auto& alpha : rs.positive_roots()) {
        const Rational p = pairing(rs, lambda, alpha);
        if (is_integer(p) && p < 0) return false;
    }
    return true;
}

ConjugateResult integrally_dominant_conjugate(const RootSystem& rs, const Weight& lambda) {
    // Breadth-first order visits points by nondecreasing word length.
    auto points = orbit_with_elements(rs, lambda);
    const OrbitPoint* best = nullptr;
    for (const auto& p : points) {
        if (best && p.depth > best->depth) break;
        if (!integrally_dominant(rs, p.weight)) continue;
        if (!best || p.weight < best->weight) best = &p;
    }
    if (!best) throw Error(ErrorCode::InternalError, "orbit has no integrally dominant point");
    return {best->weight, best->element};
}

}  // namespace flagrep
