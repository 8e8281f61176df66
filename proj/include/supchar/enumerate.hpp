#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "supchar/theory.hpp"

namespace supchar {

/// Refusal to start an enumeration whose search space exceeds the limit.
class CandidateLimitExceeded : public std::runtime_error {
 public:
  CandidateLimitExceeded(const std::string& bell, std::uint64_t limit)
      : std::runtime_error("refusing to enumerate: Bell(k-1) = " + bell + " candidates exceeds limit " +
                           std::to_string(limit)),
        bell_(bell) {}

  /// Decimal Bell(k-1).
  const std::string& bell() const noexcept { return bell_; }

 private:
  std::string bell_;
};

struct EnumerationOptions {
  unsigned workers = 1;
  std::uint64_t candidate_limit = 100'000'000;
};

struct EnumerationStats {
  std::uint64_t candidates = 0;
  std::uint64_t rejected_by_grouping = 0;
  std::uint64_t rejected_by_verify = 0;
  double wall_seconds = 0.0;
};

struct EnumerationResult {
  std::vector<SuperTheory> theories;  // canonical order
  std::uint64_t count = 0;
  EnumerationStats stats;
};

/// lambda_i(P) = sum_{j in P} |x_j^G| chi_i(x_j) / chi_i(1).
Cyclotomic central_sum(const CharacterTable& t, std::size_t row, std::span<const std::size_t> classes);

/// The unique character partition compatible with `classes`, if any: rows
/// are grouped by their central-sum vectors over the class blocks; the
/// grouping is returned iff it has as many blocks as `classes` and the pair
/// verifies. Throws std::invalid_argument unless the identity class is a
/// singleton block.
std::optional<SetPartition> derive_characters(const TablePtr& t, const SetPartition& classes);

/// Called once per theory, in canonical order, while the enumeration runs.
using TheorySink = std::function<void(const SuperTheory&)>;

/// Every supercharacter theory of `t`, by running over all partitions of the
/// non-identity classes. Output is independent of the worker count. With a
/// sink, theories are streamed to it and not retained in the result.
EnumerationResult enumerate_all(const TablePtr& t, const EnumerationOptions& options = {},
                                const TheorySink& sink = {});

/// s(G) without retaining theories.
std::uint64_t count_scts(const TablePtr& t, const EnumerationOptions& options = {});

/// Brute-force oracle over all (X, K) pairs; k <= 7 only.
EnumerationResult naive_enumerate(const TablePtr& t);

/// Bell(n) in decimal; exact for any n.
std::string bell_number_string(std::size_t n);

}  // namespace supchar
