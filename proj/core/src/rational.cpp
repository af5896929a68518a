#include "immvar/rational.hpp"

#include "immvar/errors.hpp"

#include <cctype>

namespace immvar {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  Int num = numerator(v);
  Int den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rat(std::string_view text) {
  auto fail = [&] { throw ParseError("not a rational: '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t i = from;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return i;
  };
  if (pos < text.size() && text[pos] == '-') ++pos;
  std::size_t num_end = digits(pos);
  if (num_end == pos) fail();
  Int num(std::string(text.substr(0, num_end)));
  if (num_end == text.size()) return Rat(num);
  if (text[num_end] != '/') fail();
  std::size_t den_begin = num_end + 1;
  std::size_t den_end = digits(den_begin);
  if (den_end != text.size() || den_end == den_begin) fail();
  Int den(std::string(text.substr(den_begin, den_end - den_begin)));
  if (den == 0) fail();
  return Rat(num, den);
}

bool is_integer(const Rat& v) { return denominator(v) == 1; }

Int to_integer(const Rat& v) {
  if (!is_integer(v)) throw InvalidArgumentError("not an integer: " + to_string(v));
  return numerator(v);
}

Int int_pow(const Int& base, unsigned exp) {
  Int result = 1;
  Int b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

} // namespace immvar
