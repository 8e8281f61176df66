#include "supchar/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "supchar/numtheory.hpp"

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

static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");

std::uint64_t mpz_mod_u64(const Integer& z, std::uint64_t p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

// Ring homomorphism Z[1/d][zeta_L] -> F_p for a prime p = 1 mod L. The image
// of a class partition's central sums under it can only merge rows, never
// separate rows with equal exact sums, so a grouping that is already too fine
// modulo p is too fine exactly.
class ModularImage {
 public:
  // h(c)[i] = |x_c| chi_i(x_c) / chi_i(1) mod p, column-major.
  std::vector<std::uint64_t> h;
  std::uint64_t p = 0;

  static std::optional<ModularImage> build(const CharacterTable& t, std::uint64_t p) {
    const std::uint32_t L = t.conductor();
    ModularImage img;
    img.p = p;
    std::uint64_t g = 1;
    if (L > 1) {
      const auto factors = factorize(L);
      for (std::uint64_t a = 2;; ++a) {
        g = pow_mod(a, (p - 1) / L, p);
        bool primitive = true;
        for (const auto& f : factors) primitive = primitive && pow_mod(g, L / f.prime, p) != 1;
        if (primitive) break;
      }
    }
    std::vector<std::uint64_t> powers(L);
    powers[0] = 1;
    for (std::uint32_t e = 1; e < L; ++e) powers[e] = mul_mod(powers[e - 1], g, p);

    auto rational = [p](const Rational& q) -> std::optional<std::uint64_t> {
      const std::uint64_t den = mpz_mod_u64(q.get_den(), p);
      if (den == 0) return std::nullopt;
      return mul_mod(mpz_mod_u64(q.get_num(), p), pow_mod(den, p - 2, p), p);
    };

    const std::size_t k = t.size();
    std::vector<std::uint64_t> inv_degree(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t d = mpz_mod_u64(t.degree(i), p);
      if (d == 0) return std::nullopt;
      inv_degree[i] = pow_mod(d, p - 2, p);
    }
    img.h.assign(k * k, 0);
    for (std::size_t c = 0; c < k; ++c) {
      const std::uint64_t size = mpz_mod_u64(t.class_data().class_sizes[c], p);
      for (std::size_t i = 0; i < k; ++i) {
        const Cyclotomic& v = t.value(i, c);
        const std::uint32_t stride = L / v.conductor();
        std::uint64_t acc = 0;
        for (const auto& [e, coef] : v.terms()) {
          const auto r = rational(coef);
          if (!r) return std::nullopt;
          acc = (acc + mul_mod(*r, powers[static_cast<std::size_t>(e) * stride], p)) % p;
        }
        img.h[c * k + i] = mul_mod(mul_mod(acc, size, p), inv_degree[i], p);
      }
    }
    return img;
  }
};

// Two primes near 2^62 congruent to 1 mod the table conductor.
std::vector<ModularImage> modular_images(const CharacterTable& t) {
  std::vector<ModularImage> out;
  const std::uint64_t L = t.conductor();
  for (std::uint64_t m = (std::uint64_t{1} << 62) / L; m > 0 && out.size() < 2; --m) {
    const std::uint64_t p = m * L + 1;
    if (!is_prime(p)) continue;
    if (auto img = ModularImage::build(t, p)) out.push_back(std::move(*img));
  }
  return out;
}

struct Screen {
  const CharacterTable& table;
  std::vector<ModularImage> images;
  std::vector<std::size_t> free_cols;  // non-identity columns in order

  explicit Screen(const CharacterTable& t) : table(t), images(modular_images(t)) {
    for (std::size_t c = 0; c < t.size(); ++c) {
      if (c != t.identity_col()) free_cols.push_back(c);
    }
  }
};

// Per-worker scratch for the screen.
class Screener {
 public:
  explicit Screener(const Screen& s) : s_(s), k_(s.table.size()) {
    acc_.resize(s.images.size());
    for (auto& a : acc_) a.assign(k_ * k_, 0);
    group_.resize(k_);
    next_.resize(k_);
  }

  // False when the modular row grouping already exceeds the block count.
  bool admits(std::span<const std::uint32_t> sub_rgs, std::uint32_t sub_blocks) {
    const std::uint32_t limit = sub_blocks + 1;
    for (std::size_t m = 0; m < s_.images.size(); ++m) {
      const ModularImage& img = s_.images[m];
      std::vector<std::uint64_t>& acc = acc_[m];
      std::fill(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(sub_blocks * k_), 0);
      for (std::size_t pos = 0; pos < sub_rgs.size(); ++pos) {
        std::uint64_t* row = acc.data() + sub_rgs[pos] * k_;
        const std::uint64_t* h = img.h.data() + s_.free_cols[pos] * k_;
        for (std::size_t i = 0; i < k_; ++i) {
          std::uint64_t v = row[i] + h[i];
          row[i] = v >= img.p ? v - img.p : v;
        }
      }
    }
    std::fill(group_.begin(), group_.end(), 0);
    std::uint32_t groups = 1;
    for (std::uint32_t b = 0; b < sub_blocks; ++b) {
      // Refine: rows stay together iff same old group and same sums on b.
      std::uint32_t fresh = 0;
      reps_.clear();
      for (std::size_t i = 0; i < k_; ++i) {
        std::uint32_t id = fresh;
        for (std::uint32_t r = 0; r < reps_.size(); ++r) {
          const std::size_t j = reps_[r];
          if (group_[j] != group_[i]) continue;
          bool same = true;
          for (const auto& acc : acc_) same = same && acc[b * k_ + i] == acc[b * k_ + j];
          if (same) {
            id = r;
            break;
          }
        }
        if (id == fresh) {
          reps_.push_back(i);
          ++fresh;
          if (fresh > limit) return false;
        }
        next_[i] = id;
      }
      group_.swap(next_);
      groups = fresh;
    }
    return groups <= limit;
  }

 private:
  const Screen& s_;
  std::size_t k_;
  std::vector<std::vector<std::uint64_t>> acc_;
  std::vector<std::uint32_t> group_, next_;
  std::vector<std::size_t> reps_;
};

SetPartition full_classes(const CharacterTable& t, std::span<const std::uint32_t> sub_rgs) {
  std::vector<std::uint32_t> labels(t.size());
  std::size_t pos = 0;
  for (std::size_t c = 0; c < t.size(); ++c) {
    labels[c] = c == t.identity_col() ? 0 : sub_rgs[pos++] + 1;
  }
  if (t.identity_col() == 0) return SetPartition::from_rgs(std::move(labels));
  return SetPartition::from_labels(std::span<const std::uint32_t>(labels));
}

Integer bell_exact(std::size_t n) {
  std::vector<Integer> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const Integer& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

void check_limit(const CharacterTable& t, std::uint64_t limit) {
  const std::size_t m = t.size() - 1;
  const Integer bell = bell_exact(m);
  if (bell > Integer(std::to_string(limit))) throw CandidateLimitExceeded(bell.get_str(), limit);
}

std::size_t prefix_length(std::size_t m, unsigned workers) {
  const std::uint64_t target = 8ULL * std::max(1U, workers);
  std::size_t d = 0;
  while (d < m && bell_number(d) < target) ++d;
  return d;
}

struct Chunk {
  std::vector<SuperTheory> theories;
  EnumerationStats stats;
  bool done = false;
};

}  // namespace

Cyclotomic central_sum(const CharacterTable& t, std::size_t row, std::span<const std::size_t> classes) {
  Cyclotomic sum;
  for (std::size_t j : classes) {
    if (t.value(row, j).is_zero()) continue;
    sum += Cyclotomic(Rational(t.class_data().class_sizes[j])) * t.value(row, j);
  }
  return sum * Cyclotomic(Rational(Integer(1), t.degree(row)));
}

std::optional<SetPartition> derive_characters(const TablePtr& t, const SetPartition& classes) {
  const std::size_t k = t->size();
  if (classes.size() != k) throw std::invalid_argument("class partition has the wrong size");
  if (classes.block_size(classes.block_of(t->identity_col())) != 1) {
    throw std::invalid_argument("identity class is not a singleton block");
  }
  const auto blocks = classes.blocks();
  std::vector<std::vector<Cyclotomic>> lambda(k);
  for (std::size_t i = 0; i < k; ++i) {
    lambda[i].reserve(blocks.size());
    for (const auto& b : blocks) lambda[i].push_back(central_sum(*t, i, b));
  }
  SetPartition characters = SetPartition::from_labels(std::span<const std::vector<Cyclotomic>>(lambda));
  if (characters.block_count() != classes.block_count()) return std::nullopt;
  if (!sct_verify({t, characters, classes}).verdict) return std::nullopt;
  return characters;
}

std::string bell_number_string(std::size_t n) { return bell_exact(n).get_str(); }

EnumerationResult enumerate_all(const TablePtr& t, const EnumerationOptions& options, const TheorySink& sink) {
  const auto start = std::chrono::steady_clock::now();
  check_limit(*t, options.candidate_limit);
  const std::size_t m = t->size() - 1;
  const unsigned workers = std::max(1U, options.workers);
  const Screen screen(*t);
  const auto prefixes = rgs_prefixes(prefix_length(m, workers));

  std::vector<Chunk> chunks(prefixes.size());
  std::atomic<std::size_t> next_chunk{0};
  std::mutex emit_mutex;
  std::size_t next_emit = 0;
  EnumerationResult result;
  // Theories are only streamed in canonical order when K's RGS order follows
  // the sub-RGS order, i.e. when the identity is column 0.
  const bool stream = sink && t->identity_col() == 0;

  auto flush = [&] {
    while (next_emit < chunks.size() && chunks[next_emit].done) {
      Chunk& c = chunks[next_emit];
      result.count += c.theories.size();
      result.stats.candidates += c.stats.candidates;
      result.stats.rejected_by_grouping += c.stats.rejected_by_grouping;
      result.stats.rejected_by_verify += c.stats.rejected_by_verify;
      for (auto& s : c.theories) {
        if (stream) {
          sink(s);
        } else {
          result.theories.push_back(std::move(s));
        }
      }
      c.theories.clear();
      c.theories.shrink_to_fit();
      ++next_emit;
    }
  };

  auto work = [&] {
    Screener screener(screen);
    for (std::size_t idx = next_chunk++; idx < chunks.size(); idx = next_chunk++) {
      Chunk local;
      PartitionCursor cursor(m, prefixes[idx]);
      do {
        ++local.stats.candidates;
        const auto rgs = cursor.rgs();
        if (!screener.admits(rgs, cursor.block_count())) {
          ++local.stats.rejected_by_grouping;
          continue;
        }
        SetPartition classes = full_classes(*t, rgs);
        auto characters = derive_characters(t, classes);
        if (!characters) {
          ++local.stats.rejected_by_verify;
          continue;
        }
        local.theories.push_back({t, std::move(*characters), std::move(classes)});
      } while (cursor.next());
      std::lock_guard<std::mutex> lock(emit_mutex);
      local.done = true;
      chunks[idx] = std::move(local);
      flush();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::sort(result.theories.begin(), result.theories.end(), canonical_less);
  if (sink && !stream) {
    for (const auto& s : result.theories) sink(s);
    result.theories.clear();
  }
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::uint64_t count_scts(const TablePtr& t, const EnumerationOptions& options) {
  return enumerate_all(t, options, [](const SuperTheory&) {}).count;
}

EnumerationResult naive_enumerate(const TablePtr& t) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t k = t->size();
  if (k > 7) throw std::invalid_argument("naive enumeration supports at most 7 classes");
  const auto row_partitions = all_partitions(k);
  EnumerationResult result;
  PartitionCursor cursor(k - 1);
  do {
    SetPartition classes = full_classes(*t, cursor.rgs());
    for (const SetPartition& characters : row_partitions) {
      ++result.stats.candidates;
      if (characters.block_count() != classes.block_count()) {
        ++result.stats.rejected_by_grouping;
        continue;
      }
      SuperTheory s{t, characters, classes};
      if (!sct_verify(s).verdict) {
        ++result.stats.rejected_by_verify;
        continue;
      }
      result.theories.push_back(std::move(s));
    }
  } while (cursor.next());
  std::sort(result.theories.begin(), result.theories.end(), canonical_less);
  result.count = result.theories.size();
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace supchar
