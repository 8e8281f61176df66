#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace supchar {

using Integer = mpz_class;
using Rational = mpq_class;

/// Syntax error in a cyclotomic expression; `position` is the 0-based
/// offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

enum class ValueKind { Rational, RealIrrational, NonReal };

std::string_view to_string(ValueKind kind);

/// An exact element of the cyclotomic field Q(E(N)).
///
/// Values are stored in the Zumbroich-style basis of Q(E(N)) with N the
/// conductor (the smallest N such that the value lies in Q(E(N))). Two values
/// compare equal iff their (conductor, terms) representations are identical.
/// Every operation returns a value in this canonical form.
class Cyclotomic {
 public:
  /// (exponent of E(N), nonzero coefficient), sorted by exponent.
  using Term = std::pair<std::uint32_t, Rational>;

  Cyclotomic() = default;
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// E(n)^exponent.
  static Cyclotomic root_of_unity(std::uint32_t n, std::uint64_t exponent = 1);

  /// Builds sum(coefficient * E(n)^exponent) from arbitrary exponents in
  /// [0, n); the result is reduced to canonical form.
  static Cyclotomic from_exponents(std::uint32_t n,
                                   std::span<const std::pair<std::uint64_t, Rational>> terms);

  std::uint32_t conductor() const noexcept { return conductor_; }
  std::span<const Term> terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept { return conductor_ == 1; }
  /// The value if it is rational.
  std::optional<Rational> rational_value() const;
  /// The value if it is a rational integer.
  std::optional<Integer> integer_value() const;

  Cyclotomic conjugate() const;
  /// Image under E(N) -> E(N)^u. Throws std::invalid_argument unless
  /// gcd(u, conductor) = 1.
  Cyclotomic galois(long long u) const;
  ValueKind classify() const;

  Cyclotomic pow(unsigned exponent) const;

  /// Textual form accepted by parse_cyclotomic.
  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other) { return *this = *this + other; }
  Cyclotomic& operator-=(const Cyclotomic& other) { return *this = *this - other; }
  Cyclotomic& operator*=(const Cyclotomic& other) { return *this = *this * other; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Total order: conductor first, then terms lexicographically by
  /// (exponent, coefficient). Used only for deterministic tie-breaking.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(std::uint32_t conductor, std::vector<Term> terms)
      : conductor_(conductor), terms_(std::move(terms)) {}

  friend class CyclotomicBuilder;

  std::uint32_t conductor_ = 1;
  std::vector<Term> terms_;
};

/// Parses the expression grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' int)?
///   atom   := int | int '/' posint | 'E(' posint ')' | '(' expr ')'
/// Whitespace between tokens is ignored.
Cyclotomic parse_cyclotomic(std::string_view text);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

struct PrimePower {
  std::uint32_t prime;
  unsigned exponent;
  std::uint32_t value;
};
std::vector<PrimePower> factorize(std::uint32_t n);

}  // namespace supchar

template <>
struct std::hash<supchar::Cyclotomic> {
  std::size_t operator()(const supchar::Cyclotomic& c) const noexcept { return c.hash(); }
};
