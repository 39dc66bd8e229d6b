#include "tdn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tdn {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Rational parse_plain(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool seen_slash = false, digit_before = false, digit_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw std::invalid_argument("malformed rational literal: " + s);
  auto slash = s.find('/');
  Integer num(s.substr(0, slash));
  if (slash == std::string::npos) return Rational(num);
  Integer den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(num, den);
}

}  // namespace

Rational parse_rational(std::string_view text, const Rational& epsilon) {
  std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.back() != 'e') return parse_plain(s);
  // find the sign that separates the constant from the epsilon term
  std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  Rational constant(0);
  std::string coeff_text;
  if (split == std::string::npos) {
    coeff_text = body;
  } else {
    constant = parse_plain(body.substr(0, split));
    coeff_text = body.substr(split);
  }
  Rational coeff(1);
  if (coeff_text.empty() || coeff_text == "+") {
    coeff = 1;
  } else if (coeff_text == "-") {
    coeff = -1;
  } else {
    if (coeff_text.front() == '+') coeff_text.erase(0, 1);
    coeff = parse_plain(coeff_text);
  }
  return constant + coeff * epsilon;
}

std::vector<Rational> parse_rational_list(std::string_view text, const Rational& epsilon) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start), epsilon));
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& r) {
  if (is_integer(r)) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace tdn
