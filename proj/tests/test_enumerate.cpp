#include <algorithm>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "supchar/io.hpp"
#include "supchar/numtheory.hpp"

using namespace supchar;

#ifndef SUPCHAR_FIXTURES
#define SUPCHAR_FIXTURES "fixtures"
#endif

namespace {

using Blocks = SetPartition::Blocks;

TablePtr fixture(const std::string& name) { return load_table_file(std::string(SUPCHAR_FIXTURES) + "/" + name); }

bool contains(const std::vector<SuperTheory>& list, const SuperTheory& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

std::vector<TablePtr> small_tables() {
  std::vector<TablePtr> out{fixture("s3"), fixture("a5")};
  for (std::uint32_t n = 1; n <= 6; ++n) out.push_back(gen_cyclic(n));
  return out;
}

// Every (X, K) pair of raw block lists from the insertion oracle, each
// checked by the verifier.
std::size_t brute_force_count(const TablePtr& t) {
  const std::size_t k = t->size();
  std::size_t count = 0;
  for (const auto& kb : oracle::set_partitions(k)) {
    for (const auto& xb : oracle::set_partitions(k)) {
      if (sct_verify_blocks(t, xb, kb).verdict) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("central sums") {
  const TablePtr z5 = gen_cyclic(5);
  const std::size_t id[] = {0};
  for (std::size_t i = 0; i < 5; ++i) CHECK(central_sum(*z5, i, id) == Cyclotomic(1));
  const std::size_t pair[] = {1, 4};
  CHECK(central_sum(*z5, 1, pair) == parse_cyclotomic("E(5)+E(5)^4"));

  const TablePtr a5 = fixture("a5");
  const std::size_t cls[] = {1, 2};
  CHECK(central_sum(*a5, 0, cls) == Cyclotomic(35));
  for (std::size_t i = 0; i < 5; ++i) CHECK(central_sum(*a5, i, id) == Cyclotomic(1));
}

TEST_CASE("derive characters") {
  const TablePtr z5 = gen_cyclic(5);
  CHECK(derive_characters(z5, SetPartition::singletons(5)) == SetPartition::singletons(5));
  CHECK(derive_characters(z5, SetPartition::from_rgs({0, 1, 1, 1, 1})) == SetPartition::from_rgs({0, 1, 1, 1, 1}));
  CHECK(!derive_characters(z5, SetPartition::from_blocks(5, {{0}, {1}, {2, 3, 4}})));
  CHECK_THROWS_AS(derive_characters(z5, SetPartition::from_rgs({0, 0, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("counts") {
  CHECK(count_scts(gen_cyclic(3)) == 2);
  CHECK(count_scts(gen_cyclic(5)) == 3);
  CHECK(count_scts(gen_cyclic(7)) == 4);
  CHECK(count_scts(fixture("s3")) == 2);
  CHECK(count_scts(fixture("a7")) == 3);
  CHECK(count_scts(gen_cyclic(1)) == 1);
  CHECK(count_scts(gen_cyclic(2)) == 1);

  const auto a5 = enumerate_all(fixture("a5"));
  CHECK(a5.count == 3);
  CHECK(contains(a5.theories, sct_galois(fixture("a5"))));
  CHECK(a5.theories.size() == 3);
}

TEST_CASE("s(Z_p) = d(p - 1) for small p") {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    CHECK(count_scts(gen_cyclic(static_cast<std::uint32_t>(p))) == oracle::divisors(p - 1));
    CHECK(s_cyclic(p) == oracle::divisors(p - 1));
  }
}

TEST_CASE("oracle equivalence for k <= 6") {
  for (const TablePtr& t : small_tables()) {
    const auto fast = enumerate_all(t);
    const auto naive = naive_enumerate(t);
    CHECK(fast.theories == naive.theories);
    CHECK(fast.count == naive.count);
  }
  // A third, fully independent count through raw block lists for k <= 5.
  for (std::uint32_t n = 1; n <= 5; ++n) CHECK(brute_force_count(gen_cyclic(n)) == count_scts(gen_cyclic(n)));
  CHECK(brute_force_count(fixture("a5")) == 3);
  CHECK_THROWS_AS(naive_enumerate(gen_cyclic(8)), std::invalid_argument);
}

TEST_CASE("property: soundness, completeness spot checks and join closure") {
  std::vector<TablePtr> tables = small_tables();
  tables.push_back(fixture("a7"));
  tables.push_back(fixture("m11"));
  tables.push_back(gen_suzuki(8));
  for (std::uint32_t n : {8U, 9U, 10U, 12U}) tables.push_back(gen_cyclic(n));
  for (const TablePtr& t : tables) {
    const auto r = enumerate_all(t);
    CHECK(r.count == r.theories.size());
    CHECK(std::is_sorted(r.theories.begin(), r.theories.end(), canonical_less));
    for (const auto& s : r.theories) {
      CHECK(sct_verify(s).verdict);
      const auto trivial_block = s.characters.block_of(t->trivial_row());
      CHECK(s.characters.block_size(trivial_block) == 1);
    }
    CHECK(contains(r.theories, sct_trivial_fine(t)));
    CHECK(contains(r.theories, sct_trivial_coarse(t)));
    CHECK(contains(r.theories, sct_conjugation(t)));
    CHECK(contains(r.theories, sct_galois(t)));
    for (const auto& a : r.theories) {
      for (const auto& b : r.theories) CHECK(contains(r.theories, sct_join(a, b)));
    }
  }
}

TEST_CASE("property: determinism across worker counts") {
  const unsigned hw = std::max(2U, std::thread::hardware_concurrency());
  for (const TablePtr& t : {gen_cyclic(12), fixture("m11"), gen_suzuki(8), fixture("a7")}) {
    const auto one = enumerate_all(t, {1});
    for (unsigned w : {2U, 8U, hw}) {
      const auto many = enumerate_all(t, {w});
      CHECK(many.theories == one.theories);
      CHECK(many.stats.candidates == one.stats.candidates);
      CHECK(many.stats.rejected_by_grouping == one.stats.rejected_by_grouping);
    }
    std::vector<SuperTheory> streamed;
    const auto s = enumerate_all(t, {3}, [&](const SuperTheory& th) { streamed.push_back(th); });
    CHECK(streamed == one.theories);
    CHECK(s.theories.empty());
    CHECK(s.count == one.count);
  }
}

TEST_CASE("identity not in column 0") {
  // Z_3 with the columns rotated so that the identity sits last.
  const TablePtr t = load_table(R"json({"values": [["1","1","1"],["E(3)","E(3)^2","1"],["E(3)^2","E(3)","1"]],
                                        "identity_col": 2})json");
  const auto r = enumerate_all(t, {2});
  CHECK(r.count == 2);
  std::vector<SuperTheory> streamed;
  enumerate_all(t, {1}, [&](const SuperTheory& th) { streamed.push_back(th); });
  CHECK(streamed == r.theories);
}

TEST_CASE("candidate limit") {
  const TablePtr z13 = gen_cyclic(13);
  try {
    enumerate_all(z13, {1, 1000});
    FAIL("expected a refusal");
  } catch (const CandidateLimitExceeded& e) {
    CHECK(e.bell() == "4213597");
    CHECK(std::string(e.what()).find("4213597") != std::string::npos);
  }
  CHECK(bell_number_string(30) == "846749014511809332450147");
  CHECK_THROWS_AS(count_scts(gen_suzuki(32)), CandidateLimitExceeded);
}
