#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supchar/cyclotomic.hpp"

namespace supchar {

/// A character table that fails validation or whose derived data
/// (centralizers, inverse classes, Galois images) cannot be recovered.
class InvalidTable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Column permutation (or row permutation): entry j is the image of j.
using Permutation = std::vector<std::size_t>;

/// Cycle notation, e.g. "(0)(1 4)(2 3)".
std::string cycle_string(const Permutation& p);

struct ClassData {
  Integer group_order;
  std::vector<Integer> centralizer_orders;
  std::vector<Integer> class_sizes;
};

/// An ordinary character table: rows are irreducible characters, columns are
/// conjugacy classes. Construction validates the structural invariants and
/// derives the class data from column orthogonality; the object is immutable
/// afterwards.
class CharacterTable {
 public:
  CharacterTable(std::string name, std::vector<std::string> class_labels,
                 std::vector<std::string> char_labels, const std::vector<std::vector<Cyclotomic>>& rows,
                 std::size_t identity_col = 0, std::size_t trivial_row = 0);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return k_; }
  std::size_t identity_col() const noexcept { return identity_col_; }
  std::size_t trivial_row() const noexcept { return trivial_row_; }
  const std::vector<std::string>& class_labels() const noexcept { return class_labels_; }
  const std::vector<std::string>& char_labels() const noexcept { return char_labels_; }

  const Cyclotomic& value(std::size_t row, std::size_t col) const { return values_[row * k_ + col]; }
  std::span<const Cyclotomic> row(std::size_t i) const {
    return std::span<const Cyclotomic>(values_).subspan(i * k_, k_);
  }
  std::vector<Cyclotomic> column(std::size_t j) const;

  /// chi(1) for row i.
  const Integer& degree(std::size_t row) const { return degrees_[row]; }
  const ClassData& class_data() const noexcept { return class_data_; }
  /// lcm of the conductors of all entries.
  std::uint32_t conductor() const noexcept { return conductor_; }

  /// Row whose entries are the complex conjugates of row i.
  std::size_t conjugate_row(std::size_t i) const { return conjugate_rows_[i]; }
  /// Column of the inverse class (entrywise-conjugate column).
  const Permutation& inverse_class_map() const noexcept { return inverse_classes_; }

  friend bool operator==(const CharacterTable& a, const CharacterTable& b);

 private:
  std::string name_;
  std::size_t k_;
  std::vector<std::string> class_labels_;
  std::vector<std::string> char_labels_;
  std::vector<Cyclotomic> values_;
  std::size_t identity_col_;
  std::size_t trivial_row_;

  std::vector<Integer> degrees_;
  ClassData class_data_;
  std::uint32_t conductor_ = 1;
  Permutation conjugate_rows_;
  Permutation inverse_classes_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

ClassData centralizer_orders(const CharacterTable& t);
Permutation inverse_class_map(const CharacterTable& t);
std::uint32_t conductor(const CharacterTable& t);

struct GaloisAction {
  Permutation rows;
  Permutation columns;
};
/// Realizes E(N) -> E(N)^u on the table: the image of entry (i, j) equals
/// both entry (rows[i], j) and entry (i, columns[j]).
GaloisAction galois_action(const CharacterTable& t, long long u);

/// Generators of (Z/NZ)^*, N = conductor(t). Orbits of the whole Galois group
/// are orbits of these.
std::vector<std::uint64_t> unit_group_generators(std::uint32_t n);

/// Exact row orthogonality sum_j chi(x_j) conj(psi(x_j)) / |C(x_j)| = delta.
/// Returns a description of every violated pair (empty when orthogonal).
std::vector<std::string> row_orthogonality_violations(const CharacterTable& t);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};
/// Full validation of an already-constructed table: row orthogonality plus
/// optional cross-check of externally supplied class sizes.
ValidationReport validate(const CharacterTable& t, std::span<const Integer> claimed_class_sizes = {});

/// Z_n with value(i, j) = E(n)^(i*j).
TablePtr gen_cyclic(std::uint32_t n);

/// Sz(q), q = 2^(2m+1) >= 8. Class order: 1, sigma, rho, rho^-1, then the
/// pi_0, pi_1, pi_2 orbit representatives ascending. Character order:
/// trivial, X, X_i, Y_j, Z_k, W_1, W_2.
TablePtr gen_suzuki(std::uint64_t q);

}  // namespace supchar
