#pragma once

#include "flagrep/cartan.hpp"
#include "flagrep/weyl.hpp"

namespace flagrep {

/// chi_lambda, identified by the dominant representative of the W-orbit of
/// lambda. The argument is taken literally: callers apply any rho-shift.
struct InfinitesimalCharacter {
    Weight representative;
    Weight canonical;
};

InfinitesimalCharacter infinitesimal_character(const RootSystem& rs, const Weight& lambda);

// chi_lambda == chi_mu, i.e. lambda and mu are W-conjugate.
bool chi_equal(const RootSystem& rs, const Weight& lambda, const Weight& mu);

// No 2(lambda, alpha)/(alpha, alpha) with alpha > 0 is a negative integer.
bool integrally_dominant(const RootSystem& rs, const Weight& lambda);

struct ConjugateResult {
    Weight weight;
    WeylElement w;  // w.apply(lambda) == weight
};

// An integrally dominant point of the orbit of lambda: the one reached by the
// shortest word, ties broken by smallest coordinates lexicographically.
ConjugateResult integrally_dominant_conjugate(const RootSystem& rs, const Weight& lambda);

}  // namespace flagrep
