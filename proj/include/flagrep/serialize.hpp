#pragma once

// JSON and CSV encodings shared by the CLI. Integers are JSON numbers when
// they fit in 64 bits and decimal strings otherwise; non-integral rationals
// are "p/q" strings.

#include <iosfwd>
#include <span>
#include <string>

#include "json.hpp"

#include "flagrep/bwb.hpp"
#include "flagrep/cartan.hpp"
#include "flagrep/highrep.hpp"
#include "flagrep/matsuki_sl2.hpp"

namespace flagrep {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const BigInt& n);
Json to_json(const Weight& w);

// {"label", "rank", "roots": [[simple coords]], "positives": [indices], "rho": [coords]}
Json to_json(const RootSystem& rs);

// {"vanishes": bool, "degree"?, "highest_weight"?, "dimension"?}
Json to_json(const CohomologyResult& result);

// {"highest_weight", "dimension", "weights": [{"weight", "multiplicity"}]}
Json to_json(const IrrepDescriptor& irrep);

// {"duality_pairs", "poset_reversal", "sample_failures", ...}
Json to_json(const sl2::DualityReport& report, const sl2::ClosurePosets& posets);

Rational rational_from_json(const Json& j);
BigInt bigint_from_json(const Json& j);
Weight weight_from_json(const Json& j);

// CSV columns: coords..., multiplicity.
void write_csv(std::ostream& os, const IrrepDescriptor& irrep);
// CSV columns: lambda coords..., vanishes, degree, hw coords..., dimension.
void write_csv(std::ostream& os, std::size_t rank, std::span<const BwbTableEntry> table);

}  // namespace flagrep
