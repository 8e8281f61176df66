#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's canonical-form or enumeration code.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "supchar/cyclotomic.hpp"

namespace oracle {

using Complex = std::complex<long double>;

inline Complex root(std::uint64_t n, std::uint64_t e) {
  const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(e % n) / n;
  return {std::cos(angle), std::sin(angle)};
}

/// Floating evaluation of a canonical element straight from its terms.
inline Complex eval(const supchar::Cyclotomic& c) {
  Complex sum = 0;
  for (const auto& [e, q] : c.terms()) sum += static_cast<long double>(q.get_d()) * root(c.conductor(), e);
  return sum;
}

inline bool close(Complex a, Complex b, long double tol = 1e-9L) { return std::abs(a - b) < tol; }

/// Set partitions of {0..n-1} by inserting each element into an existing
/// block or a new one; blocks are kept sorted by minimum.
inline std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out{{}};
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::vector<std::vector<std::size_t>>> next;
    for (const auto& p : out) {
      for (std::size_t b = 0; b <= p.size(); ++b) {
        auto q = p;
        if (b == q.size()) {
          q.push_back({x});
        } else {
          q[b].push_back(x);
        }
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Block label of every element.
inline std::vector<std::size_t> labels_of(const std::vector<std::vector<std::size_t>>& blocks, std::size_t n) {
  std::vector<std::size_t> label(n);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t x : blocks[b]) label[x] = b;
  }
  return label;
}

/// Join by repeated merging until the "same block in p or in q" relation is
/// transitively closed.
inline std::vector<std::vector<std::size_t>> join(const std::vector<std::vector<std::size_t>>& p,
                                                  const std::vector<std::vector<std::size_t>>& q, std::size_t n) {
  std::vector<std::size_t> lp = labels_of(p, n), lq = labels_of(q, n);
  std::vector<std::size_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((lp[i] == lp[j] || lq[i] == lq[j] || comp[i] == comp[j]) && comp[i] != comp[j]) {
          const std::size_t a = std::min(comp[i], comp[j]), b = std::max(comp[i], comp[j]);
          for (auto& c : comp) {
            if (c == b) c = a;
          }
          changed = true;
        }
      }
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find(seen.begin(), seen.end(), comp[i]);
    if (it == seen.end()) {
      seen.push_back(comp[i]);
      blocks.push_back({i});
    } else {
      blocks[static_cast<std::size_t>(it - seen.begin())].push_back(i);
    }
  }
  return blocks;
}

/// Integer partitions of n as ascending part lists, then sorted descending.
inline void ascending_partitions(unsigned n, unsigned min_part, std::vector<unsigned>& stack,
                                 std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.emplace_back(stack.rbegin(), stack.rend());
    return;
  }
  for (unsigned p = min_part; p <= n; ++p) {
    stack.push_back(p);
    ascending_partitions(n - p, p, stack, out);
    stack.pop_back();
  }
}

inline std::vector<std::vector<unsigned>> integer_partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> stack;
  ascending_partitions(n, 1, stack, out);
  return out;
}

/// Trial-division primality.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t divisors(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0 ? 1 : 0;
  return c;
}

}  // namespace oracle
