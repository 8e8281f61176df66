#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace supchar {

/// Cycle type of a permutation of {1..n}: parts in weakly decreasing order.
struct CycleType {
  std::vector<unsigned> parts;

  unsigned n() const;
  std::string to_string() const;  // "[5,3,1]"
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

struct SplitClassProfile {
  CycleType cycle_type;
  bool splits = false;        // the S_n class breaks into two A_n classes
  bool nonreal_pair = false;  // and those two classes are mutually inverse
};

/// All partitions of n, parts descending, generated with the largest part
/// running from n down to 1.
std::vector<CycleType> integer_partitions(unsigned n);

/// Partitions of n into distinct odd parts, in the same order.
std::vector<CycleType> odd_distinct_partitions(unsigned n);

/// Throws std::invalid_argument unless parts are positive and descending.
SplitClassProfile split_profile(const CycleType& lambda);

/// Number of pairs of non-real classes of A_n.
std::size_t nonreal_pair_count(unsigned n);

struct NClassification {
  std::vector<unsigned> all_real;     // no non-real class
  std::vector<unsigned> exactly_one;  // exactly one non-real pair
  std::vector<unsigned> two_or_more;
};

/// Sorts every n in [5, bound] into one of the three sets. Throws
/// std::invalid_argument if bound < 5.
NClassification classify_n(unsigned bound);

}  // namespace supchar
