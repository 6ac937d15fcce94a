#ifndef COVER_GENUS_EXACT_HPP
#define COVER_GENUS_EXACT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cover_genus {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(std::int64_t n, std::int64_t k);

Integer factorial(std::int64_t n);

/// "p" for integers, "p/q" otherwise, with q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);

}  // namespace cover_genus

#endif  // COVER_GENUS_EXACT_HPP
