// Copyright 2026 The arbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "arb/numeric.hpp"

#include <cctype>

#include "arb/error.hpp"

namespace arb {

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_fraction(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_decimal(std::string_view text) {
    if (text.empty()) return false;
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
    if (!is_decimal(text)) fail(ErrorCode::kParse, "malformed integer '" + std::string(text) + "'");
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

Rational ratio(const Integer& num, const Integer& den) {
    require(den != 0, "zero denominator");
    Rational result(num, den);
    result.canonicalize();
    return result;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        fail(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) fail(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
    return ratio(num, den);
}

double to_double(const Rational& value) { return value.get_d(); }

Integer common_denominator(const Rational* begin, const Rational* end) {
    Integer lcm = 1;
    for (const Rational* it = begin; it != end; ++it) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), it->get_den_mpz_t());
    }
    return lcm;
}

}  // namespace arb
