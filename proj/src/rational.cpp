#include "dbs/rational.hpp"

#include <cctype>

namespace dbs {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw InvalidInput("not a rational literal: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class d{std::string(den)};
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(mpz_class(n), d);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw InvalidInput("zero raised to a negative power");
    Rational inv = 1 / q;
    return pow(inv, -e);
  }
  Rational result = 1;
  Rational base = q;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace dbs
