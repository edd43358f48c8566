#include "cfree/rational.hpp"

#include <stdexcept>

namespace cfree {

Rat rat_from_string(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
      return Rat(mpz_class(text));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
}

std::string rat_to_string(const Rat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat rat_pow(const Rat& value, int exponent) {
  if (exponent < 0) throw std::invalid_argument("rat_pow: negative exponent");
  Rat result(1);
  Rat base = value;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

}  // namespace cfree
