#include "flagrep/rational.hpp"

#include <cctype>
#include <limits>

#include "flagrep/error.hpp"

namespace flagrep {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw Error(ErrorCode::ParseError, "malformed number '" + std::string(whole) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorCode::ParseError, "malformed number '" + std::string(whole) + "'");
    return BigInt(std::string(digits));
}

}  // namespace

std::optional<BigInt> to_integer(const Rational& q) {
    if (!is_integer(q)) return std::nullopt;
    return BigInt(boost::multiprecision::numerator(q));
}

std::optional<std::int64_t> to_int64(const Rational& q) {
    auto n = to_integer(q);
    if (!n) return std::nullopt;
    if (*n > std::numeric_limits<std::int64_t>::max() || *n < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return n->convert_to<std::int64_t>();
}

Rational parse_rational(std::string_view token) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    BigInt num = parse_integer(body.substr(0, slash), token);
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        den = parse_integer(body.substr(slash + 1), token);
        if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(token) + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace flagrep
