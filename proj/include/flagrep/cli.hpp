#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagrep/bwb.hpp"
#include "flagrep/cartan.hpp"

namespace flagrep::cli {

enum class Verb { Roots, WeylOrder, Orbit, Dim, Weights, Bwb, BwbTable, ChiEqual, IntDom, MatsukiSl2 };
enum class Format { Pretty, Json, Csv };

struct Command {
    Verb verb = Verb::Roots;
    std::optional<CartanMatrix> cartan;  // every verb except matsuki-sl2
    std::vector<Weight> weights;         // one weight; two for chi-equal
    Format format = Format::Pretty;
    std::optional<CoordinateRange> range;
    std::size_t samples = 10'000;
    std::uint64_t seed = 42;
    std::size_t max_table = 1'000'000;
    unsigned threads = 1;
};

// Bad verb, malformed arguments, unknown type label. Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// argv[0] is the program name. Reads FLAGREP_MAX_TABLE for the table cap.
// Throws UsageError.
Command parse(const std::vector<std::string>& argv);

// Executes a parsed command; domain errors become a one-line diagnostic on err.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// parse + run, with usage errors and --help handled.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

// "1,-2,3/4" -> coordinates. Throws UsageError on empty or malformed tokens.
std::vector<Rational> parse_coords(const std::string& text);

// "lo..hi". Throws UsageError.
CoordinateRange parse_range(const std::string& text);

}  // namespace flagrep::cli
