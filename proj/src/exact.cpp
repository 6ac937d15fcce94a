#include "cover_genus/exact.hpp"

namespace cover_genus {

Integer falling_factorial(std::int64_t n, std::int64_t k) {
  if (k > n) return 0;
  Integer out = 1;
  for (std::int64_t i = 0; i < k; ++i) out *= (n - i);
  return out;
}

Integer factorial(std::int64_t n) { return falling_factorial(n, n); }

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

}  // namespace cover_genus
