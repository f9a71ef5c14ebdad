#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace hkg {

// All public interfaces carry arbitrary-precision values; sieve tables are the
// only memory-bounded structures and check their extents explicitly.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int int_pow(const Int& base, unsigned exp);

// gcd on absolute values, gcd(0, x) = |x|
Int int_gcd(Int a, Int b);

// ceil(a/b) for b > 0
Int ceil_div(const Int& a, const Int& b);

// inverse of a modulo m (m > 0, gcd(a, m) = 1)
Int mod_inverse(Int a, const Int& m);

// trial division; intended for desk-scale primes
bool is_prime(const Int& n);

// q = p^s with p prime, s >= 1
std::optional<std::pair<Int, unsigned>> as_prime_power(const Int& q);

std::optional<std::int64_t> to_int64(const Int& v);

// "a" for integers, "a/b" otherwise
std::string format_rational(const Rat& r);

// accepts "a" or "a/b" with optional sign; throws ParseError
Rat parse_rational(const std::string& text);

Int parse_int(const std::string& text);

}  // namespace hkg
