#include "celltrees/arith.hpp"

#include <sstream>

#include "celltrees/errors.hpp"

namespace celltrees {

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << rat_num(x);
  if (rat_den(x) != 1) os << '/' << rat_den(x);
  return os.str();
}

Rat parse_rational(const std::string& text) {
  const auto bad = [&]() -> Int { throw format_error("invalid rational: '" + text + "'"); };
  const auto parse_int_part = [&](const std::string& s) -> Int {
    if (s.empty()) return bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return bad();
    return Int(s);
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int_part(text));
  Int num = parse_int_part(text.substr(0, slash));
  Int den = parse_int_part(text.substr(slash + 1));
  if (den == 0) bad();
  return Rat(num, den);
}

Rat rat_pow(const Rat& x, long long e) {
  if (e == 0) return Rat(1);
  if (x == 0 && e < 0) throw argument_error("zero base with negative exponent");
  Rat base = e > 0 ? x : Rat(1) / x;
  auto n = e > 0 ? static_cast<unsigned long long>(e)
                 : static_cast<unsigned long long>(-(e + 1)) + 1ULL;
  Rat acc(1);
  while (n > 0) {
    if (n & 1ULL) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Int int_pow(const Int& base, unsigned long long e) {
  Int acc(1), b = base;
  while (e > 0) {
    if (e & 1ULL) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace celltrees
