#include "pgeo/rat.hpp"

#include <cctype>
#include <ostream>

namespace pgeo {

std::string to_string(const Rat& x) {
  std::string s = x.num().str();
  if (!x.is_integer()) {
    s += '/';
    s += x.den().str();
  }
  return s;
}

Rat parse_rat(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&] { throw Error("BadScalar", "malformed rational '" + std::string(text) + "'"); };

  bool neg = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t num_begin = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) fail();
  BigInt num(std::string(text.substr(num_begin, i - num_begin)));
  BigInt den = 1;
  if (i < n && text[i] == '/') {
    ++i;
    std::size_t den_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) fail();
    den = BigInt(std::string(text.substr(den_begin, i - den_begin)));
  }
  if (i != n) fail();
  if (neg) num = -num;
  return Rat::normalized(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << to_string(x); }

}  // namespace pgeo
