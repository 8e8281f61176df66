#include "supchar/theory.hpp"

#include <algorithm>
#include <numeric>

namespace supchar {

namespace {

std::string join_indices(std::span<const std::size_t> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// {fixed}, {pair...}, everything else (omitted when empty).
// {fixed}, {pair}, and the remaining points either as one block or as
// singletons.
SetPartition pair_partition(std::size_t n, std::size_t fixed, std::span<const std::size_t> pair,
                            bool merge_rest) {
  std::vector<std::uint32_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = merge_rest ? 2 : static_cast<std::uint32_t>(i + 2);
  label[fixed] = 0;
  for (std::size_t x : pair) label[x] = 1;
  return SetPartition::from_labels(std::span<const std::uint32_t>(label));
}

std::vector<std::size_t> orbit_labels(std::size_t n, const std::vector<const Permutation*>& perms) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation* p : perms) {
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = find(i), b = find((*p)[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (std::size_t i = 0; i < n; ++i) parent[i] = find(i);
  return parent;
}

SuperTheory checked(SuperTheory s, const char* what) {
  const SctReport report = sct_verify(s);
  if (!report.verdict) {
    throw std::logic_error(std::string(what) + " did not verify: " + report.failures.front().detail);
  }
  return s;
}

}  // namespace

bool canonical_less(const SuperTheory& a, const SuperTheory& b) {
  if (a.classes != b.classes) return a.classes < b.classes;
  return a.characters < b.characters;
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::Partition:
      return "PARTITION";
    case Condition::IdentitySingleton:
      return "IDENTITY_SINGLETON";
    case Condition::SigmaConstant:
      return "SIGMA_CONSTANT";
    case Condition::SizeMismatch:
      return "SIZE_MISMATCH";
  }
  return "?";
}

std::vector<Cyclotomic> sigma_values(const CharacterTable& t, std::span<const std::size_t> block) {
  std::vector<Cyclotomic> sigma(t.size());
  for (std::size_t i : block) {
    const Cyclotomic degree(Rational(t.degree(i)));
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!t.value(i, j).is_zero()) sigma[j] += degree * t.value(i, j);
    }
  }
  return sigma;
}

SctReport sct_verify(const SuperTheory& s) {
  SctReport report;
  const CharacterTable& t = *s.table;
  const std::size_t k = t.size();
  auto fail = [&report](Condition c, std::string detail) {
    report.verdict = false;
    report.failures.push_back({c, std::move(detail)});
  };

  if (s.characters.size() != k || s.classes.size() != k) {
    fail(Condition::Partition, "partitions have sizes " + std::to_string(s.characters.size()) + " and " +
                                   std::to_string(s.classes.size()) + ", table has " + std::to_string(k));
    return report;
  }
  const std::uint32_t id_block = s.classes.block_of(t.identity_col());
  if (s.classes.block_size(id_block) != 1) {
    fail(Condition::IdentitySingleton,
         "identity class shares block " + join_indices(s.classes.blocks()[id_block]));
  }
  if (s.characters.block_count() != s.classes.block_count()) {
    fail(Condition::SizeMismatch, std::to_string(s.characters.block_count()) + " character blocks vs " +
                                      std::to_string(s.classes.block_count()) + " class blocks");
  }
  const auto class_blocks = s.classes.blocks();
  for (const auto& xb : s.characters.blocks()) {
    const std::vector<Cyclotomic> sigma = sigma_values(t, xb);
    for (const auto& kb : class_blocks) {
      for (std::size_t idx = 1; idx < kb.size(); ++idx) {
        if (sigma[kb[idx]] != sigma[kb[0]]) {
          fail(Condition::SigmaConstant, "sigma of characters " + join_indices(xb) + " differs on classes " +
                                             join_indices(kb) + ": " + std::to_string(kb[0]) + " -> " +
                                             sigma[kb[0]].to_string() + ", " + std::to_string(kb[idx]) +
                                             " -> " + sigma[kb[idx]].to_string());
          break;
        }
      }
    }
  }
  return report;
}

SctReport sct_verify_blocks(const TablePtr& table, const SetPartition::Blocks& characters,
                            const SetPartition::Blocks& classes) {
  SctReport report;
  SuperTheory s{table, {}, {}};
  try {
    s.characters = SetPartition::from_blocks(table->size(), characters);
  } catch (const std::invalid_argument& e) {
    report.failures.push_back({Condition::Partition, std::string("characters: ") + e.what()});
  }
  try {
    s.classes = SetPartition::from_blocks(table->size(), classes);
  } catch (const std::invalid_argument& e) {
    report.failures.push_back({Condition::Partition, std::string("classes: ") + e.what()});
  }
  if (!report.failures.empty()) {
    report.verdict = false;
    return report;
  }
  return sct_verify(s);
}

SuperTheory sct_trivial_fine(const TablePtr& t) {
  return {t, SetPartition::singletons(t->size()), SetPartition::singletons(t->size())};
}

SuperTheory sct_trivial_coarse(const TablePtr& t) {
  const std::size_t k = t->size();
  std::vector<std::uint32_t> rows(k, 1), cols(k, 1);
  rows[t->trivial_row()] = 0;
  cols[t->identity_col()] = 0;
  return {t, SetPartition::from_labels(std::span<const std::uint32_t>(rows)),
          SetPartition::from_labels(std::span<const std::uint32_t>(cols))};
}

SuperTheory sct_conjugation(const TablePtr& t) {
  const std::size_t k = t->size();
  Permutation conj_rows(k);
  for (std::size_t i = 0; i < k; ++i) conj_rows[i] = t->conjugate_row(i);
  const auto rows = orbit_labels(k, {&conj_rows});
  const auto cols = orbit_labels(k, {&t->inverse_class_map()});
  return checked({t, SetPartition::from_labels(std::span<const std::size_t>(rows)),
                  SetPartition::from_labels(std::span<const std::size_t>(cols))},
                 "conjugation theory");
}

SuperTheory sct_galois(const TablePtr& t) {
  const std::size_t k = t->size();
  std::vector<GaloisAction> actions;
  for (std::uint64_t u : unit_group_generators(t->conductor())) {
    actions.push_back(galois_action(*t, static_cast<long long>(u)));
  }
  std::vector<const Permutation*> row_perms, col_perms;
  for (const auto& a : actions) {
    row_perms.push_back(&a.rows);
    col_perms.push_back(&a.columns);
  }
  const auto rows = orbit_labels(k, row_perms);
  const auto cols = orbit_labels(k, col_perms);
  return checked({t, SetPartition::from_labels(std::span<const std::size_t>(rows)),
                  SetPartition::from_labels(std::span<const std::size_t>(cols))},
                 "Galois theory");
}

SuperTheory sct_pair(const TablePtr& t, std::size_t chi, std::size_t cls) {
  const std::size_t k = t->size();
  if (chi >= k || cls >= k) throw ConstructionError("character or class index out of range");
  if (chi == t->trivial_row()) throw ConstructionError("character must not be the trivial character");
  if (cls == t->identity_col()) throw ConstructionError("class must not be the identity class");
  if (t->value(chi, cls).classify() != ValueKind::NonReal) {
    throw ConstructionError("value of character " + std::to_string(chi) + " on class " + std::to_string(cls) +
                            " is not non-real: " + t->value(chi, cls).to_string());
  }
  const std::size_t chi_pair[] = {chi, t->conjugate_row(chi)};
  const std::size_t cls_pair[] = {cls, t->inverse_class_map()[cls]};
  // The remaining points merged into one block first, then left as singletons.
  std::string detail;
  for (bool merge_rest : {true, false}) {
    SuperTheory s{t, pair_partition(k, t->trivial_row(), chi_pair, merge_rest),
                  pair_partition(k, t->identity_col(), cls_pair, merge_rest)};
    const SctReport report = sct_verify(s);
    if (report.verdict) return s;
    if (detail.empty()) detail = report.failures.front().detail;
  }
  throw ConstructionError("construction invalid for this (chi, x) = (" + std::to_string(chi) + ", " +
                          std::to_string(cls) + "): " + detail);
}

SuperTheory sct_join(const SuperTheory& a, const SuperTheory& b) {
  if (a.table != b.table && !(a.table && b.table && *a.table == *b.table)) {
    throw ConstructionError("theories belong to different tables");
  }
  return checked({a.table, partition_join(a.characters, b.characters), partition_join(a.classes, b.classes)},
                 "join");
}

}  // namespace supchar
