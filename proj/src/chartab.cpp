#include "supchar/chartab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace supchar {

namespace {

std::size_t hash_vector(std::span<const Cyclotomic> v) {
  std::size_t h = v.size();
  for (const Cyclotomic& c : v) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Exact lookup of value vectors by content.
class VectorIndex {
 public:
  void insert(std::vector<Cyclotomic> v, std::size_t index) {
    buckets_[hash_vector(v)].emplace_back(std::move(v), index);
  }

  std::optional<std::size_t> find(std::span<const Cyclotomic> v) const {
    auto it = buckets_.find(hash_vector(v));
    if (it == buckets_.end()) return std::nullopt;
    for (const auto& [stored, index] : it->second) {
      if (std::equal(stored.begin(), stored.end(), v.begin(), v.end())) return index;
    }
    return std::nullopt;
  }

 private:
  std::unordered_map<std::size_t, std::vector<std::pair<std::vector<Cyclotomic>, std::size_t>>> buckets_;
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::invalid_argument("no modular inverse");
  return ((x % m) + m) % m;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = static_cast<std::uint64_t>((unsigned __int128)result * base % m);
    base = static_cast<std::uint64_t>((unsigned __int128)base * base % m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t primitive_root_mod_prime(std::uint32_t p) {
  if (p == 2) return 1;
  std::vector<std::uint32_t> qs;
  for (const PrimePower& pp : factorize(p - 1)) qs.push_back(pp.prime);
  for (std::uint64_t g = 2;; ++g) {
    if (std::all_of(qs.begin(), qs.end(), [&](std::uint32_t q) { return pow_mod(g, (p - 1) / q, p) != 1; })) {
      return g;
    }
  }
}

}  // namespace

std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    out += '(';
    std::size_t j = start;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out;
}

CharacterTable::CharacterTable(std::string name, std::vector<std::string> class_labels,
                               std::vector<std::string> char_labels,
                               const std::vector<std::vector<Cyclotomic>>& rows, std::size_t identity_col,
                               std::size_t trivial_row)
    : name_(std::move(name)),
      k_(rows.size()),
      class_labels_(std::move(class_labels)),
      char_labels_(std::move(char_labels)),
      identity_col_(identity_col),
      trivial_row_(trivial_row) {
  if (k_ == 0) throw InvalidTable("table is empty");
  for (std::size_t i = 0; i < k_; ++i) {
    if (rows[i].size() != k_) {
      throw InvalidTable("table is not square: row " + std::to_string(i) + " has " +
                         std::to_string(rows[i].size()) + " entries, expected " + std::to_string(k_));
    }
  }
  if (class_labels_.empty()) {
    for (std::size_t j = 0; j < k_; ++j) class_labels_.push_back("x" + std::to_string(j + 1));
  }
  if (char_labels_.empty()) {
    for (std::size_t i = 0; i < k_; ++i) char_labels_.push_back("chi" + std::to_string(i + 1));
  }
  if (class_labels_.size() != k_) throw InvalidTable("number of class labels does not match table size");
  if (char_labels_.size() != k_) throw InvalidTable("number of character labels does not match table size");
  if (identity_col_ >= k_) throw InvalidTable("identity_col out of range");
  if (trivial_row_ >= k_) throw InvalidTable("trivial_row out of range");

  values_.reserve(k_ * k_);
  for (const auto& r : rows) values_.insert(values_.end(), r.begin(), r.end());

  const Cyclotomic one(1L);
  for (std::size_t j = 0; j < k_; ++j) {
    if (value(trivial_row_, j) != one) {
      throw InvalidTable("trivial row is not all ones (class " + std::to_string(j) + ")");
    }
  }
  degrees_.reserve(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    auto d = value(i, identity_col_).integer_value();
    if (!d || *d <= 0) {
      throw InvalidTable("identity column entry of row " + std::to_string(i) + " is not a positive integer");
    }
    degrees_.push_back(*d);
  }

  std::uint64_t n = 1;
  for (const Cyclotomic& c : values_) n = lcm_u64(n, c.conductor());
  conductor_ = static_cast<std::uint32_t>(n);

  VectorIndex columns;
  VectorIndex row_index;
  for (std::size_t j = 0; j < k_; ++j) {
    std::vector<Cyclotomic> col = column(j);
    if (auto other = columns.find(col)) {
      throw InvalidTable("columns not distinct: " + std::to_string(*other) + " and " + std::to_string(j));
    }
    columns.insert(std::move(col), j);
  }
  for (std::size_t i = 0; i < k_; ++i) {
    if (auto other = row_index.find(row(i))) {
      throw InvalidTable("rows not distinct: " + std::to_string(*other) + " and " + std::to_string(i));
    }
    row_index.insert(std::vector<Cyclotomic>(row(i).begin(), row(i).end()), i);
  }

  // Second orthogonality: |C(x_j)| = sum_chi |chi(x_j)|^2.
  class_data_.centralizer_orders.reserve(k_);
  for (std::size_t j = 0; j < k_; ++j) {
    Cyclotomic sum;
    for (std::size_t i = 0; i < k_; ++i) sum += value(i, j) * value(i, j).conjugate();
    auto c = sum.integer_value();
    if (!c || *c <= 0) {
      throw InvalidTable("inconsistent table: centralizer sum of class " + std::to_string(j) + " is " +
                         sum.to_string());
    }
    class_data_.centralizer_orders.push_back(*c);
  }
  class_data_.group_order = class_data_.centralizer_orders[identity_col_];
  Integer total = 0;
  for (std::size_t j = 0; j < k_; ++j) {
    const Integer& c = class_data_.centralizer_orders[j];
    if (class_data_.group_order % c != 0) {
      throw InvalidTable("inconsistent table: centralizer order " + c.get_str() + " of class " +
                         std::to_string(j) + " does not divide |G| = " + class_data_.group_order.get_str());
    }
    class_data_.class_sizes.push_back(class_data_.group_order / c);
    total += class_data_.class_sizes.back();
  }
  if (total != class_data_.group_order) {
    throw InvalidTable("inconsistent table: class sizes sum to " + total.get_str() + ", |G| = " +
                       class_data_.group_order.get_str());
  }

  conjugate_rows_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    std::vector<Cyclotomic> conj;
    conj.reserve(k_);
    for (const Cyclotomic& c : row(i)) conj.push_back(c.conjugate());
    auto match = row_index.find(conj);
    if (!match) throw InvalidTable("inconsistent table: no conjugate of row " + std::to_string(i));
    conjugate_rows_[i] = *match;
  }
  inverse_classes_.resize(k_);
  for (std::size_t j = 0; j < k_; ++j) {
    std::vector<Cyclotomic> conj = column(j);
    for (Cyclotomic& c : conj) c = c.conjugate();
    auto match = columns.find(conj);
    if (!match) throw InvalidTable("inconsistent table: no inverse class for column " + std::to_string(j));
    inverse_classes_[j] = *match;
  }
}

std::vector<Cyclotomic> CharacterTable::column(std::size_t j) const {
  std::vector<Cyclotomic> col;
  col.reserve(k_);
  for (std::size_t i = 0; i < k_; ++i) col.push_back(value(i, j));
  return col;
}

bool operator==(const CharacterTable& a, const CharacterTable& b) {
  return a.name_ == b.name_ && a.k_ == b.k_ && a.class_labels_ == b.class_labels_ &&
         a.char_labels_ == b.char_labels_ && a.identity_col_ == b.identity_col_ &&
         a.trivial_row_ == b.trivial_row_ && a.values_ == b.values_;
}

ClassData centralizer_orders(const CharacterTable& t) { return t.class_data(); }

Permutation inverse_class_map(const CharacterTable& t) { return t.inverse_class_map(); }

std::uint32_t conductor(const CharacterTable& t) { return t.conductor(); }

GaloisAction galois_action(const CharacterTable& t, long long u) {
  const auto n = static_cast<long long>(t.conductor());
  const long long reduced = ((u % n) + n) % n;
  if (gcd_u64(static_cast<std::uint64_t>(reduced), t.conductor()) != 1) {
    throw std::invalid_argument("Galois exponent " + std::to_string(u) + " is not coprime to conductor " +
                                std::to_string(n));
  }
  const std::size_t k = t.size();
  std::vector<Cyclotomic> image;
  image.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const Cyclotomic& c : t.row(i)) image.push_back(c.galois(reduced));
  }

  VectorIndex rows;
  VectorIndex cols;
  for (std::size_t i = 0; i < k; ++i) rows.insert(std::vector<Cyclotomic>(t.row(i).begin(), t.row(i).end()), i);
  for (std::size_t j = 0; j < k; ++j) cols.insert(t.column(j), j);

  GaloisAction action{Permutation(k), Permutation(k)};
  for (std::size_t i = 0; i < k; ++i) {
    auto match = rows.find(std::span<const Cyclotomic>(image).subspan(i * k, k));
    if (!match) throw InvalidTable("inconsistent table: Galois image of row " + std::to_string(i) + " not found");
    action.rows[i] = *match;
  }
  std::vector<Cyclotomic> col(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) col[i] = image[i * k + j];
    auto match = cols.find(col);
    if (!match) {
      throw InvalidTable("inconsistent table: Galois image of column " + std::to_string(j) + " not found");
    }
    action.columns[j] = *match;
  }
  return action;
}

std::vector<std::uint64_t> unit_group_generators(std::uint32_t n) {
  std::vector<std::uint64_t> gens;
  for (const PrimePower& pp : factorize(n)) {
    std::vector<std::uint64_t> local;
    if (pp.prime == 2) {
      if (pp.exponent == 2) local = {3};
      if (pp.exponent >= 3) local = {pp.value - 1, 5};
    } else {
      std::uint64_t g = primitive_root_mod_prime(pp.prime);
      if (pp.exponent >= 2 && pow_mod(g, pp.prime - 1, std::uint64_t{pp.prime} * pp.prime) == 1) g += pp.prime;
      local = {g % pp.value};
    }
    // Lift x = g mod p^k, x = 1 mod n/p^k.
    const std::uint64_t rest = n / pp.value;
    for (std::uint64_t g : local) {
      std::uint64_t x = g;
      if (rest > 1) {
        const auto inv = static_cast<std::uint64_t>(mod_inverse(static_cast<std::int64_t>(rest % pp.value),
                                                                static_cast<std::int64_t>(pp.value)));
        const std::uint64_t t = ((g + pp.value - 1) % pp.value) * inv % pp.value;
        x = (1 + rest * t) % n;
      }
      gens.push_back(x);
    }
  }
  return gens;
}

std::vector<std::string> row_orthogonality_violations(const CharacterTable& t) {
  const std::size_t k = t.size();
  const ClassData& cd = t.class_data();
  std::vector<Cyclotomic> inv_centralizer;
  inv_centralizer.reserve(k);
  for (const Integer& c : cd.centralizer_orders) inv_centralizer.emplace_back(Rational(Integer(1), c));

  std::vector<std::vector<Cyclotomic>> conj(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (const Cyclotomic& c : t.row(i)) conj[i].push_back(c.conjugate());
  }
  std::vector<std::string> problems;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      Cyclotomic sum;
      for (std::size_t j = 0; j < k; ++j) {
        if (t.value(a, j).is_zero() || conj[b][j].is_zero()) continue;
        sum += t.value(a, j) * conj[b][j] * inv_centralizer[j];
      }
      const Cyclotomic expected(a == b ? 1L : 0L);
      if (sum != expected) {
        problems.push_back("rows " + std::to_string(a) + " and " + std::to_string(b) +
                           " not orthonormal: inner product " + sum.to_string());
      }
    }
  }
  return problems;
}

ValidationReport validate(const CharacterTable& t, std::span<const Integer> claimed_class_sizes) {
  ValidationReport report;
  report.problems = row_orthogonality_violations(t);
  if (!claimed_class_sizes.empty()) {
    const auto& sizes = t.class_data().class_sizes;
    if (claimed_class_sizes.size() != sizes.size()) {
      report.problems.push_back("class_sizes has " + std::to_string(claimed_class_sizes.size()) +
                                " entries, expected " + std::to_string(sizes.size()));
    } else {
      for (std::size_t j = 0; j < sizes.size(); ++j) {
        if (claimed_class_sizes[j] != sizes[j]) {
          report.problems.push_back("class size of " + std::to_string(j) + " given as " +
                                    claimed_class_sizes[j].get_str() + ", derived " + sizes[j].get_str());
        }
      }
    }
  }
  report.ok = report.problems.empty();
  return report;
}

TablePtr gen_cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<Cyclotomic>> rows(n);
  std::vector<Cyclotomic> roots;
  roots.reserve(n);
  for (std::uint32_t e = 0; e < n; ++e) roots.push_back(Cyclotomic::root_of_unity(n, e));
  std::vector<std::string> classes, chars;
  for (std::uint32_t i = 0; i < n; ++i) {
    classes.push_back("g^" + std::to_string(i));
    chars.push_back("chi" + std::to_string(i));
    rows[i].reserve(n);
    for (std::uint32_t j = 0; j < n; ++j) rows[i].push_back(roots[(std::uint64_t{i} * j) % n]);
  }
  return std::make_shared<const CharacterTable>("Z" + std::to_string(n), std::move(classes), std::move(chars),
                                                rows);
}

namespace {

// Orbits of <-1, q> acting on the nonzero residues mod m; smallest
// representative of each orbit, ascending.
std::vector<std::uint64_t> suzuki_orbit_reps(std::uint64_t m, std::uint64_t q) {
  std::vector<bool> seen(m, false);
  std::vector<std::uint64_t> reps;
  for (std::uint64_t k = 1; k < m; ++k) {
    if (seen[k]) continue;
    reps.push_back(k);
    for (std::uint64_t x : {k, k * q % m, m - k, m - k * q % m}) seen[x % m] = true;
  }
  return reps;
}

Cyclotomic four_term_sum(std::uint64_t m, std::uint64_t q, std::uint64_t e) {
  e %= m;
  const std::uint64_t eq = e * (q % m) % m;
  const std::pair<std::uint64_t, Rational> terms[] = {
      {e, 1}, {eq, 1}, {(m - e) % m, 1}, {(m - eq) % m, 1}};
  return Cyclotomic::from_exponents(static_cast<std::uint32_t>(m), terms);
}

}  // namespace

TablePtr gen_suzuki(std::uint64_t q) {
  unsigned log2q = 0;
  while ((std::uint64_t{1} << log2q) < q) ++log2q;
  if (q < 8 || (std::uint64_t{1} << log2q) != q || log2q % 2 == 0 || log2q > 9) {
    // q = 2048 already pushes the table conductor past 2^31.
    throw std::invalid_argument("Suzuki parameter q must be an odd power of 2 with 8 <= q <= 512, got " +
                                std::to_string(q));
  }
  const std::uint64_t r = std::uint64_t{1} << ((log2q + 1) / 2);
  const std::uint64_t m0 = q - 1;
  const std::uint64_t m1 = q + r + 1;
  const std::uint64_t m2 = q - r + 1;

  std::vector<std::uint64_t> reps0;
  for (std::uint64_t j = 1; j <= (q - 2) / 2; ++j) reps0.push_back(j);
  const std::vector<std::uint64_t> reps1 = suzuki_orbit_reps(m1, q);
  const std::vector<std::uint64_t> reps2 = suzuki_orbit_reps(m2, q);

  std::vector<std::string> classes = {"1", "sigma", "rho", "rho^-1"};
  for (auto j : reps0) classes.push_back("pi0_" + std::to_string(j));
  for (auto k : reps1) classes.push_back("pi1_" + std::to_string(k));
  for (auto k : reps2) classes.push_back("pi2_" + std::to_string(k));
  const std::size_t k_total = classes.size();
  const std::size_t off0 = 4;
  const std::size_t off1 = off0 + reps0.size();
  const std::size_t off2 = off1 + reps1.size();

  auto blank = [&](long degree, long at_sigma, const Cyclotomic& at_rho, const Cyclotomic& at_rho_inv) {
    std::vector<Cyclotomic> row(k_total);
    row[0] = Cyclotomic(degree);
    row[1] = Cyclotomic(at_sigma);
    row[2] = at_rho;
    row[3] = at_rho_inv;
    return row;
  };

  std::vector<std::string> chars = {"1", "X"};
  std::vector<std::vector<Cyclotomic>> rows;
  rows.emplace_back(k_total, Cyclotomic(1L));

  const auto qq = static_cast<long>(q);
  const auto rr = static_cast<long>(r);
  {
    auto row = blank(qq * qq, 0, 0L, 0L);
    for (std::size_t j = off0; j < off1; ++j) row[j] = 1L;
    for (std::size_t j = off1; j < k_total; ++j) row[j] = -1L;
    rows.push_back(std::move(row));
  }
  for (auto i : reps0) {
    chars.push_back("X_" + std::to_string(i));
    auto row = blank(qq * qq + 1, 1, 1L, 1L);
    for (std::size_t c = 0; c < reps0.size(); ++c) {
      const std::uint64_t e = i * reps0[c] % m0;
      const std::pair<std::uint64_t, Rational> terms[] = {{e, 1}, {(m0 - e) % m0, 1}};
      row[off0 + c] = Cyclotomic::from_exponents(static_cast<std::uint32_t>(m0), terms);
    }
    for (std::size_t j = off1; j < k_total; ++j) row[j] = 0L;
    rows.push_back(std::move(row));
  }
  for (auto j : reps1) {
    chars.push_back("Y_" + std::to_string(j));
    auto row = blank((qq - rr + 1) * (qq - 1), rr - 1, -1L, -1L);
    for (std::size_t c = 0; c < reps1.size(); ++c) row[off1 + c] = -four_term_sum(m1, q, j * reps1[c]);
    rows.push_back(std::move(row));
  }
  for (auto k : reps2) {
    chars.push_back("Z_" + std::to_string(k));
    auto row = blank((qq + rr + 1) * (qq - 1), -rr - 1, -1L, -1L);
    for (std::size_t c = 0; c < reps2.size(); ++c) row[off2 + c] = -four_term_sum(m2, q, k * reps2[c]);
    rows.push_back(std::move(row));
  }

  // W_1, W_2 take the values +-r*sqrt(-1)/2 on rho with opposite signs and
  // the conjugate value on rho^-1. Prefer the assignment that is orthogonal;
  // ties go to the smaller canonical value of W_1(rho).
  const Cyclotomic half_r_i = Cyclotomic(Rational(rr / 2)) * Cyclotomic::root_of_unity(4);
  std::vector<Cyclotomic> candidates = {half_r_i, -half_r_i};
  std::sort(candidates.begin(), candidates.end());
  chars.push_back("W_1");
  chars.push_back("W_2");
  std::string name = "Sz(" + std::to_string(q) + ")";
  for (const Cyclotomic& w1_rho : candidates) {
    auto all_rows = rows;
    for (const Cyclotomic& at_rho : {w1_rho, -w1_rho}) {
      auto row = blank(rr * (qq - 1) / 2, -rr / 2, at_rho, at_rho.conjugate());
      for (std::size_t j = off1; j < off2; ++j) row[j] = 1L;
      for (std::size_t j = off2; j < k_total; ++j) row[j] = -1L;
      all_rows.push_back(std::move(row));
    }
    auto table = std::make_shared<const CharacterTable>(name, classes, chars, all_rows);
    if (row_orthogonality_violations(*table).empty()) return table;
  }
  throw InvalidTable("no sign assignment for W_1, W_2 satisfies row orthogonality");
}

}  // namespace supchar
