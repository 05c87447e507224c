#include "pants/rational.hpp"

#include "pants/errors.hpp"

namespace pants {

Rat mod_two(const Rat& r) {
  // floor(r/2): cpp_int division truncates toward zero, so adjust negatives.
  Int num = numerator(r), den = denominator(r);  // den > 0 canonical
  Int q = num / (2 * den);
  if (num < 0 && q * 2 * den != num) --q;
  Rat out = r - Rat(2 * q);
  return out;  // in [0,2)
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw argument_error("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw argument_error("zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw argument_error("bad rational literal '" + text + "'");
  }
}

std::string to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace pants
