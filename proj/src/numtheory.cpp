#include "supchar/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace supchar {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  for (; exp != 0; exp >>= 1U) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
  }
  return result;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t divisor_count(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisor_count requires n >= 1");
  std::uint64_t count = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

PrimeProfile prime_profile(std::uint64_t p) {
  PrimeProfile profile;
  profile.p = p;
  profile.is_prime = is_prime(p);
  if (profile.is_prime) {
    profile.is_sophie_germain = is_prime(2 * p + 1);
    profile.is_safe = p % 2 == 1 && is_prime((p - 1) / 2);
  }
  return profile;
}

std::vector<std::uint64_t> safe_primes_upto(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 5; p <= bound; p += 2) {
    if (prime_profile(p).is_safe) out.push_back(p);
  }
  return out;
}

std::uint64_t s_cyclic(std::uint64_t p) {
  require_prime(p);
  return divisor_count(p - 1);
}

std::optional<unsigned> classify_small_s(std::uint64_t p) {
  require_prime(p);
  if (p == 5) return 3U;
  if (p > 5 && (p - 1) % 2 == 0 && is_prime((p - 1) / 2)) return 4U;
  return std::nullopt;
}

}  // namespace supchar
