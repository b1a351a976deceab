#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace grp {

using bigint = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct cap_exceeded : error {
  using error::error;
};

inline bigint factorial(unsigned n) {
  bigint r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// lcm in uint64 with overflow detection
inline std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  unsigned __int128 r = (unsigned __int128)(a / g) * b;
  if (r > UINT64_MAX) throw error("lcm overflow");
  return (std::uint64_t)r;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// if q = p^a for a prime p, returns {p, a}; otherwise {0, 0}
inline std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  unsigned a = 0;
  std::uint64_t m = q;
  while (m % p == 0) { m /= p; ++a; }
  if (m != 1) return {0, 0};
  return {p, a};
}

}  // namespace grp
