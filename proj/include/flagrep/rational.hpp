#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace flagrep {

// Expression templates are disabled so that `auto` always yields a value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

// num/den in lowest terms. Boost's two-argument constructor rejects negative denominators.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

// Integer value of q, or nullopt when q is not an integer.
std::optional<BigInt> to_integer(const Rational& q);

// Integer value of q when it is an integer that fits in int64.
std::optional<std::int64_t> to_int64(const Rational& q);

// Accepts "n", "-n", "p/q" with optional leading sign. Throws Error(ParseError).
Rational parse_rational(std::string_view token);

// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

}  // namespace flagrep
