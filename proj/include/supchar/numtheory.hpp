#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace supchar {

struct PrimeProfile {
  std::uint64_t p = 0;
  bool is_prime = false;
  bool is_sophie_germain = false;  // p and 2p + 1 prime
  bool is_safe = false;            // p and (p - 1) / 2 prime
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

std::uint64_t divisor_count(std::uint64_t n);

PrimeProfile prime_profile(std::uint64_t p);

/// Safe primes p <= bound, ascending.
std::vector<std::uint64_t> safe_primes_upto(std::uint64_t bound);

/// Number of supercharacter theories of Z_p: d(p - 1). Throws
/// std::invalid_argument unless p is prime.
std::uint64_t s_cyclic(std::uint64_t p);

/// 3 iff p = 5; 4 iff p - 1 = 2r with r an odd prime; nothing otherwise.
/// Throws std::invalid_argument unless p is prime.
std::optional<unsigned> classify_small_s(std::uint64_t p);

}  // namespace supchar
