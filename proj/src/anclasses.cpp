#include "supchar/anclasses.hpp"

#include <numeric>
#include <stdexcept>

namespace supchar {

namespace {

void partitions_into(unsigned remaining, unsigned max_part, bool odd_distinct, std::vector<unsigned>& stack,
                     std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.push_back({stack});
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    if (odd_distinct && part % 2 == 0) continue;
    stack.push_back(part);
    // Distinct parts: the next one must be strictly smaller.
    partitions_into(remaining - part, odd_distinct ? part - 1 : part, odd_distinct, stack, out);
    stack.pop_back();
  }
}

}  // namespace

unsigned CycleType::n() const { return std::accumulate(parts.begin(), parts.end(), 0U); }

std::string CycleType::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + "]";
}

std::vector<CycleType> integer_partitions(unsigned n) {
  std::vector<CycleType> out;
  std::vector<unsigned> stack;
  partitions_into(n, n, false, stack, out);
  return out;
}

std::vector<CycleType> odd_distinct_partitions(unsigned n) {
  std::vector<CycleType> out;
  std::vector<unsigned> stack;
  partitions_into(n, n, true, stack, out);
  return out;
}

SplitClassProfile split_profile(const CycleType& lambda) {
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    if (lambda.parts[i] == 0 || (i > 0 && lambda.parts[i] > lambda.parts[i - 1])) {
      throw std::invalid_argument("not a cycle type: " + lambda.to_string());
    }
  }
  SplitClassProfile profile{lambda, true, false};
  unsigned half_sum = 0;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
    const unsigned r = lambda.parts[i];
    if (r % 2 == 0 || (i > 0 && r == lambda.parts[i - 1])) profile.splits = false;
    half_sum += (r - 1) / 2;
  }
  profile.nonreal_pair = profile.splits && half_sum % 2 == 1;
  return profile;
}

std::size_t nonreal_pair_count(unsigned n) {
  std::size_t count = 0;
  for (const auto& lambda : odd_distinct_partitions(n)) count += split_profile(lambda).nonreal_pair ? 1 : 0;
  return count;
}

NClassification classify_n(unsigned bound) {
  if (bound < 5) throw std::invalid_argument("classification bound must be at least 5");
  NClassification out;
  for (unsigned n = 5; n <= bound; ++n) {
    const std::size_t c = nonreal_pair_count(n);
    (c == 0 ? out.all_real : c == 1 ? out.exactly_one : out.two_or_more).push_back(n);
  }
  return out;
}

}  // namespace supchar
