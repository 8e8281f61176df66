#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supchar/chartab.hpp"
#include "supchar/partitions.hpp"

namespace supchar {

/// A candidate supercharacter theory: a partition of the characters (rows)
/// and a partition of the classes (columns) of one table. Whether the pair
/// actually is a supercharacter theory is decided by sct_verify; the
/// constructors below only ever return verified theories.
struct SuperTheory {
  TablePtr table;
  SetPartition characters;
  SetPartition classes;

  friend bool operator==(const SuperTheory& a, const SuperTheory& b) {
    return a.characters == b.characters && a.classes == b.classes;
  }
};

/// Theories ordered by class partition, then character partition.
bool canonical_less(const SuperTheory& a, const SuperTheory& b);

enum class Condition { Partition, IdentitySingleton, SigmaConstant, SizeMismatch };

std::string_view to_string(Condition c);

struct Failure {
  Condition condition;
  std::string detail;
};

struct SctReport {
  bool verdict = true;
  std::vector<Failure> failures;
};

/// A construction that does not produce a supercharacter theory, or whose
/// preconditions do not hold.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sigma_X(x_j) = sum_{chi in block} chi(1) chi(x_j) for every class j.
std::vector<Cyclotomic> sigma_values(const CharacterTable& t, std::span<const std::size_t> block);

/// Checks the four defining conditions; every failure is listed.
SctReport sct_verify(const SuperTheory& s);

/// Same, starting from raw block lists (e.g. read from a file). Lists that do
/// not partition the index range are reported as PARTITION failures.
SctReport sct_verify_blocks(const TablePtr& table, const SetPartition::Blocks& characters,
                            const SetPartition::Blocks& classes);

SuperTheory sct_trivial_fine(const TablePtr& t);
SuperTheory sct_trivial_coarse(const TablePtr& t);
/// Pairs every character with its complex conjugate and every class with its
/// inverse class.
SuperTheory sct_conjugation(const TablePtr& t);
/// Orbits of the Galois group of the table's field on rows and on columns.
SuperTheory sct_galois(const TablePtr& t);
/// X = {{1}, {chi, conj chi}, rest}, K = {{e}, {x, x^-1}, rest}; requires
/// value(chi, cls) non-real. "rest" is one block if that verifies, otherwise
/// singletons if that verifies; ConstructionError if neither does.
SuperTheory sct_pair(const TablePtr& t, std::size_t chi, std::size_t cls);
/// Blockwise join. Throws ConstructionError for different tables.
SuperTheory sct_join(const SuperTheory& a, const SuperTheory& b);

}  // namespace supchar
