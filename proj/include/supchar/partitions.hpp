#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace supchar {

/// A set partition of {0, ..., n-1} in restricted-growth form: rgs[0] = 0 and
/// rgs[i] <= 1 + max(rgs[0..i-1]). Block ids are assigned by first
/// occurrence, so equal partitions have equal sequences.
class SetPartition {
 public:
  using Blocks = std::vector<std::vector<std::size_t>>;

  SetPartition() = default;

  /// Throws std::invalid_argument if `rgs` is not a restricted growth string.
  static SetPartition from_rgs(std::vector<std::uint32_t> rgs);
  /// Throws std::invalid_argument on overlapping blocks, out-of-range or
  /// missing elements, or empty blocks.
  static SetPartition from_blocks(std::size_t n, const Blocks& blocks);
  /// Groups positions by equal label; any label type with operator==.
  template <typename Label>
  static SetPartition from_labels(std::span<const Label> labels);

  static SetPartition singletons(std::size_t n);
  static SetPartition one_block(std::size_t n);

  std::size_t size() const noexcept { return rgs_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  std::span<const std::uint32_t> rgs() const noexcept { return rgs_; }
  std::uint32_t block_of(std::size_t i) const { return rgs_[i]; }
  /// Blocks as sorted index lists, ordered by minimum element.
  Blocks blocks() const;
  std::size_t block_size(std::uint32_t block) const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.rgs_ <=> b.rgs_;
  }

 private:
  explicit SetPartition(std::vector<std::uint32_t> rgs);

  std::vector<std::uint32_t> rgs_;
  std::size_t blocks_ = 0;
};

template <typename Label>
SetPartition SetPartition::from_labels(std::span<const Label> labels) {
  std::vector<std::uint32_t> rgs(labels.size());
  std::vector<std::size_t> firsts;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::uint32_t id = static_cast<std::uint32_t>(firsts.size());
    for (std::uint32_t b = 0; b < firsts.size(); ++b) {
      if (labels[firsts[b]] == labels[i]) {
        id = b;
        break;
      }
    }
    if (id == firsts.size()) firsts.push_back(i);
    rgs[i] = id;
  }
  return SetPartition(std::move(rgs));
}

/// Finest common coarsening. Throws std::invalid_argument on size mismatch.
SetPartition partition_join(const SetPartition& p, const SetPartition& q);
/// True iff every block of p lies inside a block of q.
bool partition_refines(const SetPartition& p, const SetPartition& q);

/// Bell number B(n); throws std::overflow_error past B(25).
std::uint64_t bell_number(std::size_t n);

/// Lexicographic enumeration of restricted growth strings of length n,
/// optionally restricted to those extending a fixed prefix. A cursor is a
/// plain value: copies enumerate independently, and disjoint prefixes give
/// disjoint ranges that concatenate in lexicographic order.
class PartitionCursor {
 public:
  explicit PartitionCursor(std::size_t n, std::vector<std::uint32_t> prefix = {});

  bool done() const noexcept { return done_; }
  std::span<const std::uint32_t> rgs() const noexcept { return rgs_; }
  /// 1 + max(rgs): number of blocks of the current partition.
  std::uint32_t block_count() const noexcept { return n_ == 0 ? 0 : running_max_.back() + 1; }
  SetPartition partition() const { return SetPartition::from_rgs(rgs_); }
  /// Advances to the next string; returns false when exhausted.
  bool next();

 private:
  std::size_t n_;
  std::size_t fixed_;
  std::vector<std::uint32_t> rgs_;
  std::vector<std::uint32_t> running_max_;  // running_max_[i] = max(rgs[0..i])
  bool done_ = false;
};

/// All partitions of {0..n-1} in lexicographic RGS order.
std::vector<SetPartition> all_partitions(std::size_t n);

/// All valid restricted-growth prefixes of the given length (length <= n).
std::vector<std::vector<std::uint32_t>> rgs_prefixes(std::size_t length);

}  // namespace supchar
