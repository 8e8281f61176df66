#include "supchar/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace supchar {

namespace {

bool is_rgs(std::span<const std::uint32_t> rgs) {
  std::uint32_t next = 0;
  for (std::uint32_t b : rgs) {
    if (b > next) return false;
    if (b == next) ++next;
  }
  return true;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

SetPartition::SetPartition(std::vector<std::uint32_t> rgs) : rgs_(std::move(rgs)) {
  blocks_ = rgs_.empty() ? 0 : *std::max_element(rgs_.begin(), rgs_.end()) + 1;
}

SetPartition SetPartition::from_rgs(std::vector<std::uint32_t> rgs) {
  if (!is_rgs(rgs)) throw std::invalid_argument("not a restricted growth string");
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::from_blocks(std::size_t n, const Blocks& blocks) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block " + std::to_string(b));
    for (std::size_t x : blocks[b]) {
      if (x >= n) throw std::invalid_argument("element " + std::to_string(x) + " out of range");
      if (label[x] != kUnset) throw std::invalid_argument("element " + std::to_string(x) + " in two blocks");
      label[x] = static_cast<std::uint32_t>(b);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] == kUnset) throw std::invalid_argument("element " + std::to_string(x) + " missing");
  }
  return from_labels(std::span<const std::uint32_t>(label));
}

SetPartition SetPartition::singletons(std::size_t n) {
  std::vector<std::uint32_t> rgs(n);
  std::iota(rgs.begin(), rgs.end(), 0U);
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::one_block(std::size_t n) { return SetPartition(std::vector<std::uint32_t>(n, 0)); }

SetPartition::Blocks SetPartition::blocks() const {
  Blocks out(blocks_);
  for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(i);
  return out;
}

std::size_t SetPartition::block_size(std::uint32_t block) const {
  return static_cast<std::size_t>(std::count(rgs_.begin(), rgs_.end(), block));
}

SetPartition partition_join(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition sizes differ");
  const std::size_t n = p.size();
  UnionFind uf(n);
  std::vector<std::size_t> first_p(p.block_count(), n), first_q(q.block_count(), n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t& fp = first_p[p.block_of(i)];
    if (fp == n) fp = i; else uf.unite(fp, i);
    std::size_t& fq = first_q[q.block_of(i)];
    if (fq == n) fq = i; else uf.unite(fq, i);
  }
  std::vector<std::size_t> roots(n);
  for (std::size_t i = 0; i < n; ++i) roots[i] = uf.find(i);
  return SetPartition::from_labels(std::span<const std::size_t>(roots));
}

bool partition_refines(const SetPartition& p, const SetPartition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("partition sizes differ");
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> image(p.block_count(), kUnset);
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::uint32_t& target = image[p.block_of(i)];
    if (target == kUnset) {
      target = q.block_of(i);
    } else if (target != q.block_of(i)) {
      return false;
    }
  }
  return true;
}

std::uint64_t bell_number(std::size_t n) {
  if (n > 25) throw std::overflow_error("Bell number B(" + std::to_string(n) + ") exceeds 64 bits");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

PartitionCursor::PartitionCursor(std::size_t n, std::vector<std::uint32_t> prefix)
    : n_(n), fixed_(prefix.size()), rgs_(std::move(prefix)) {
  if (fixed_ > n_) throw std::invalid_argument("prefix longer than ground set");
  if (!is_rgs(rgs_)) throw std::invalid_argument("prefix is not a restricted growth string");
  rgs_.resize(n_, 0);
  running_max_.resize(n_);
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    m = std::max(m, rgs_[i]);
    running_max_[i] = m;
  }
}

bool PartitionCursor::next() {
  if (done_) return false;
  // Rightmost free position that can still grow; position 0 is always 0.
  for (std::size_t i = n_; i-- > std::max<std::size_t>(fixed_, 1);) {
    if (rgs_[i] <= running_max_[i - 1]) {
      ++rgs_[i];
      running_max_[i] = std::max(running_max_[i - 1], rgs_[i]);
      for (std::size_t j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        running_max_[j] = running_max_[i];
      }
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<SetPartition> all_partitions(std::size_t n) {
  std::vector<SetPartition> out;
  PartitionCursor cursor(n);
  do {
    out.push_back(cursor.partition());
  } while (cursor.next());
  return out;
}

std::vector<std::vector<std::uint32_t>> rgs_prefixes(std::size_t length) {
  std::vector<std::vector<std::uint32_t>> out;
  PartitionCursor cursor(length);
  do {
    out.emplace_back(cursor.rgs().begin(), cursor.rgs().end());
  } while (cursor.next());
  return out;
}

}  // namespace supchar
