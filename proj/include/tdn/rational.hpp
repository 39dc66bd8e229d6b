#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tdn {

// Expression templates are disabled so the types behave as plain values inside Eigen
// matrices and with auto.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Parses "p", "p/q", and the epsilon shorthand "p/q+e", "p/q-e", "p/q+3e".
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text, const Rational& epsilon = Rational(1, 1000));

std::vector<Rational> parse_rational_list(std::string_view text,
                                          const Rational& epsilon = Rational(1, 1000));

std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace tdn
