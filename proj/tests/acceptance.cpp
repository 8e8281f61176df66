// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the stated budget. Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "supchar/anclasses.hpp"
#include "supchar/io.hpp"
#include "supchar/numtheory.hpp"

using namespace supchar;
using Blocks = SetPartition::Blocks;

#ifndef SUPCHAR_FIXTURES
#define SUPCHAR_FIXTURES "fixtures"
#endif

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  bool skipped = false;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

int failures = 0;

void criterion(int id, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.skipped && secs >= budget_seconds) {
    o.pass = false;
    o.note("over budget");
  }
  if (!o.pass) ++failures;
  std::ostringstream time;
  time << std::fixed << std::setprecision(3) << secs << "s/" << budget_seconds << "s";
  std::cout << "criterion " << std::setw(2) << id << ": " << (o.skipped ? "SKIP" : o.pass ? "PASS" : "FAIL") << "  ["
            << time.str() << "]  " << o.detail << std::endl;
}

std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(SUPCHAR_FIXTURES) / (name + ".json");
}

TablePtr fixture(const std::string& name) { return load_table_file(fixture_path(name)); }

std::string blocks_string(const SetPartition& p) { return partition_to_json(p).dump(); }

SuperTheory theory(const TablePtr& t, const Blocks& chars, const Blocks& classes) {
  return {t, SetPartition::from_blocks(t->size(), chars), SetPartition::from_blocks(t->size(), classes)};
}

bool contains(const std::vector<SuperTheory>& list, const SuperTheory& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

// {{fixed}, {selected}, everything else}
Blocks three_blocks(std::size_t k, std::size_t fixed, const std::vector<std::size_t>& selected) {
  Blocks out{{fixed}, selected, {}};
  for (std::size_t i = 0; i < k; ++i) {
    if (i != fixed && std::find(selected.begin(), selected.end(), i) == selected.end()) out[2].push_back(i);
  }
  if (out[2].empty()) out.pop_back();
  return out;
}

// Same selection with every remaining point as its own block.
Blocks singleton_rest(std::size_t k, std::size_t fixed, const std::vector<std::size_t>& selected) {
  Blocks out{{fixed}, selected};
  for (std::size_t i = 0; i < k; ++i) {
    if (i != fixed && std::find(selected.begin(), selected.end(), i) == selected.end()) out.push_back({i});
  }
  return out;
}

std::vector<std::size_t> with_prefix(const std::vector<std::string>& labels, const std::string& prefix) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].rfind(prefix, 0) == 0) out.push_back(i);
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& labels, const std::string& label) {
  return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), label) - labels.begin());
}

Cyclotomic random_element(std::mt19937& rng) {
  static const std::uint32_t conductors[] = {1, 3, 4, 5, 7, 8, 12, 15};
  std::uniform_int_distribution<int> pick(0, 7), coef(-4, 4), den(1, 4), count(1, 4);
  const std::uint32_t n = conductors[pick(rng)];
  std::uniform_int_distribution<std::uint32_t> exp(0, n - 1);
  Cyclotomic c;
  for (int i = count(rng); i > 0; --i) {
    c += Cyclotomic(Rational(coef(rng), den(rng))) * Cyclotomic::root_of_unity(n, exp(rng));
  }
  return c;
}

}  // namespace

int main() {
  std::cout << "acceptance: supercharacter theory library" << std::endl;

  criterion(1, 2.0, [] {
    Outcome o;
    const auto z3 = count_scts(gen_cyclic(3));
    const auto s3 = count_scts(fixture("s3"));
    o.require(z3 == 2, "s(Z_3) = " + std::to_string(z3));
    o.require(s3 == 2, "s(S_3) = " + std::to_string(s3));
    o.note("s(Z_3) = " + std::to_string(z3) + ", s(S_3) = " + std::to_string(s3));
    return o;
  });

  criterion(2, 10.0, [] {
    Outcome o;
    const std::pair<std::uint32_t, std::uint64_t> cases[] = {{5, 3}, {7, 4}, {11, 4}};
    for (auto [p, expected] : cases) {
      const auto s = count_scts(gen_cyclic(p));
      o.require(s == expected && s == divisor_count(p - 1) && s == s_cyclic(p),
                "s(Z_" + std::to_string(p) + ") = " + std::to_string(s));
      o.note("s(Z_" + std::to_string(p) + ") = " + std::to_string(s) + " = d(" + std::to_string(p - 1) + ")");
    }
    return o;
  });

  criterion(3, 300.0, [] {
    Outcome o;
    const TablePtr z13 = gen_cyclic(13);
    const auto one = enumerate_all(z13, {1});
    const auto eight = enumerate_all(z13, {8});
    o.require(one.count == 6 && one.count == divisor_count(12), "s(Z_13) = " + std::to_string(one.count));
    o.require(one.stats.candidates == 4213597, "candidates = " + std::to_string(one.stats.candidates));
    o.require(eight.theories == one.theories, "1 and 8 workers differ");
    std::ostringstream d;
    d << std::fixed << std::setprecision(2) << "s(Z_13) = " << one.count << " over " << one.stats.candidates
      << " candidates; 1 worker " << one.stats.wall_seconds << "s, 8 workers " << eight.stats.wall_seconds
      << "s, identical output";
    o.require(one.stats.wall_seconds < 300.0, "single worker over budget");
    o.note(d.str());
    return o;
  });

  criterion(4, 60.0, [] {
    Outcome o;
    const TablePtr a5 = fixture("a5"), a7 = fixture("a7");
    const auto r5 = enumerate_all(a5), r7 = enumerate_all(a7);
    o.require(r5.count == 3, "s(A_5) = " + std::to_string(r5.count));
    o.require(r7.count == 3, "s(A_7) = " + std::to_string(r7.count));
    const SuperTheory printed = theory(a5, {{0}, {1, 2}, {3}, {4}}, {{0}, {1}, {2}, {3, 4}});
    std::vector<SuperTheory> nontrivial5, nontrivial7;
    for (const auto& s : r5.theories) {
      if (s != sct_trivial_fine(a5) && s != sct_trivial_coarse(a5)) nontrivial5.push_back(s);
    }
    for (const auto& s : r7.theories) {
      if (s != sct_trivial_fine(a7) && s != sct_trivial_coarse(a7)) nontrivial7.push_back(s);
    }
    o.require(nontrivial5.size() == 1 && nontrivial5[0] == sct_galois(a5) && nontrivial5[0] == printed,
              "A_5 non-trivial theory mismatch");
    const std::size_t c7a = index_of(a7->class_labels(), "7a"), c7b = index_of(a7->class_labels(), "7b");
    bool a7_ok = nontrivial7.size() == 1;
    if (a7_ok) {
      const auto& s = nontrivial7[0];
      a7_ok = s.characters.block_of(2) == s.characters.block_of(3) &&
              s.characters.block_size(s.characters.block_of(2)) == 2 &&
              s.classes.block_of(c7a) == s.classes.block_of(c7b) && s.classes.block_size(s.classes.block_of(c7a)) == 2;
      for (std::size_t i = 0; i < a7->size() && a7_ok; ++i) {
        if (i != 2 && i != 3) a7_ok = s.characters.block_size(s.characters.block_of(i)) == 1;
        if (i != c7a && i != c7b) a7_ok = a7_ok && s.classes.block_size(s.classes.block_of(i)) == 1;
      }
    }
    o.require(a7_ok, "A_7 non-trivial theory does not pair {chi3, chi4} with the order-7 classes");
    o.note("s(A_5) = " + std::to_string(r5.count) + ", s(A_7) = " + std::to_string(r7.count) +
           "; A_7 theory K = " + (nontrivial7.empty() ? "?" : blocks_string(nontrivial7[0].classes)));
    return o;
  });

  criterion(5, 120.0, [] {
    Outcome o;
    std::vector<std::pair<std::string, TablePtr>> tables;
    for (std::uint32_t n = 2; n <= 6; ++n) tables.emplace_back("Z_" + std::to_string(n), gen_cyclic(n));
    tables.emplace_back("S_3", fixture("s3"));
    tables.emplace_back("A_5", fixture("a5"));
    std::string counts;
    for (const auto& [name, t] : tables) {
      const auto fast = enumerate_all(t), naive = naive_enumerate(t);
      o.require(fast.theories == naive.theories, name + " differs from the naive oracle");
      counts += (counts.empty() ? "" : ", ") + name + ":" + std::to_string(fast.count);
    }
    o.note("ordered equality on " + counts);
    return o;
  });

  criterion(6, 5.0, [] {
    Outcome o;
    const TablePtr sz = gen_suzuki(8);
    const ValidationReport v = validate(*sz);
    o.require(v.ok, "Sz(8) fails validation");
    o.require(sz->class_data().group_order == 29120, "|Sz(8)| = " + sz->class_data().group_order.get_str());

    const auto& cl = sz->class_labels();
    const auto& ch = sz->char_labels();
    const std::size_t k = sz->size();
    const std::vector<std::size_t> rho{index_of(cl, "rho"), index_of(cl, "rho^-1")};
    const std::vector<std::size_t> w{index_of(ch, "W_1"), index_of(ch, "W_2")};
    const std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> parts{
        {w, rho},
        {with_prefix(ch, "X_"), with_prefix(cl, "pi0_")},
        {with_prefix(ch, "Y_"), with_prefix(cl, "pi1_")},
        {with_prefix(ch, "Z_"), with_prefix(cl, "pi2_")}};

    const auto all = enumerate_all(sz);
    std::vector<SuperTheory> cs;
    std::string verdicts, split_verdicts;
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const Blocks xb = three_blocks(k, sz->trivial_row(), parts[c].first);
      const Blocks kb = three_blocks(k, sz->identity_col(), parts[c].second);
      const SctReport r = sct_verify_blocks(sz, xb, kb);
      const std::string name = "C" + std::to_string(c + 1);
      verdicts += " " + name + (r.verdict ? ":ok" : ":" + std::string(to_string(r.failures.front().condition)));
      o.require(r.verdict, name + " fails sct_verify");
      if (r.verdict) cs.push_back(theory(sz, xb, kb));
      const bool split_ok = sct_verify_blocks(sz, singleton_rest(k, sz->trivial_row(), parts[c].first),
                                              singleton_rest(k, sz->identity_col(), parts[c].second))
                                .verdict;
      split_verdicts += " " + name + (split_ok ? ":ok" : ":fails");
    }
    bool distinct = cs.size() == 4;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      distinct = distinct && cs[i] != sct_trivial_fine(sz) && cs[i] != sct_trivial_coarse(sz) && contains(all.theories, cs[i]);
      for (std::size_t j = 0; j < i; ++j) distinct = distinct && cs[i] != cs[j];
    }
    o.require(distinct, "C1..C4 are not four distinct non-trivial enumerated theories");
    o.require(all.count >= 6, "s(Sz(8)) = " + std::to_string(all.count) + " < 6");
    o.note("|G| = " + sz->class_data().group_order.get_str() + ";" + verdicts + "; with singleton rest" +
           split_verdicts +
           "; full enumeration s(Sz(8)) = " + std::to_string(all.count) + " over " +
           std::to_string(all.stats.candidates) + " candidates");
    return o;
  });

  criterion(7, 60.0, [] {
    Outcome o;
    if (!std::filesystem::exists(fixture_path("m11"))) {
      o.skipped = true;
      o.note("warning: M_11 fixture absent, skipped");
      return o;
    }
    const TablePtr m11 = fixture("m11");
    const std::size_t c11a = index_of(m11->class_labels(), "11a"), c8a = index_of(m11->class_labels(), "8a");
    const SuperTheory c1 = sct_pair(m11, 5, c11a);
    const SuperTheory c2 = sct_pair(m11, 2, c8a);
    const SuperTheory c3 = sct_join(c1, c2);
    o.require(sct_verify(c1).verdict && sct_verify(c2).verdict && sct_verify(c3).verdict, "verification failed");
    o.require(c1.classes.blocks() == Blocks{{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8, 9}} &&
                  c1.characters.blocks() == Blocks{{0}, {1}, {2}, {3}, {4}, {5, 6}, {7}, {8}, {9}},
              "C1 is not the printed partition");
    o.require(c2.classes.blocks() == Blocks{{0}, {1}, {2}, {3}, {4}, {5}, {6, 7}, {8}, {9}} &&
                  c2.characters.blocks() == Blocks{{0}, {1}, {2, 3}, {4}, {5}, {6}, {7}, {8}, {9}},
              "C2 is not the printed partition");
    const SuperTheory fine = sct_trivial_fine(m11), coarse = sct_trivial_coarse(m11);
    const bool distinct = c3 != c1 && c3 != c2 && c3 != fine && c3 != coarse && c1 != c2 && c1 != fine &&
                          c1 != coarse && c2 != fine && c2 != coarse;
    o.require(distinct, "C1, C2, C3, m, M are not pairwise distinct");
    const auto all = enumerate_all(m11);
    o.require(all.count >= 5, "s(M_11) = " + std::to_string(all.count));
    o.require(contains(all.theories, c1) && contains(all.theories, c2) && contains(all.theories, c3),
              "enumeration misses C1..C3");
    o.note("C3 K = " + blocks_string(c3.classes) + "; full enumeration s(M_11) = " + std::to_string(all.count) +
           " over " + std::to_string(all.stats.candidates) + " candidates");
    return o;
  });

  criterion(8, 5.0, [] {
    Outcome o;
    const NClassification c = classify_n(30);
    o.require(c.all_real == std::vector<unsigned>{5, 6, 10, 14}, "AllReal mismatch");
    o.require(c.exactly_one == std::vector<unsigned>{7, 9, 11, 15, 18, 19, 23}, "ExactlyOne mismatch");
    for (unsigned n = 1; n <= 30; ++n) {
      std::size_t brute = 0;
      for (const auto& parts : oracle::integer_partitions(n)) {
        std::vector<unsigned> sorted = parts;
        std::sort(sorted.begin(), sorted.end());
        const bool odd_distinct =
            std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
            std::all_of(sorted.begin(), sorted.end(), [](unsigned r) { return r % 2 == 1; });
        unsigned half = 0;
        for (unsigned r : parts) half += (r - 1) / 2;
        brute += odd_distinct && half % 2 == 1 ? 1 : 0;
      }
      o.require(nonreal_pair_count(n) == brute, "count mismatch at n = " + std::to_string(n));
    }
    o.note("AllReal = {5,6,10,14}, ExactlyOne = {7,9,11,15,18,19,23}, brute force agrees for n <= 30");
    return o;
  });

  criterion(9, 5.0, [] {
    Outcome o;
    const std::vector<std::uint64_t> listed{5,   7,   11,  23,  47,  59,  83,   107,  167,  179,  227,  263, 347,
                                            359, 383, 467, 479, 503, 563, 587,  719,  839,  863,  887,  983, 1019,
                                            1187, 1283, 1307, 1319, 1367, 1439, 1487, 1523, 1619, 1823, 1907};
    o.require(safe_primes_upto(1907) == listed, "safe primes differ from the listed sequence");
    std::size_t primes = 0;
    for (std::uint64_t p = 2; p < 10000; ++p) {
      if (!is_prime(p)) continue;
      ++primes;
      const auto c = classify_small_s(p);
      const auto s = s_cyclic(p);
      o.require((c == 3U) == (s == 3) && (c == 4U) == (s == 4), "disagreement at p = " + std::to_string(p));
    }
    o.note("37 safe primes match; classify_small_s agrees with s_cyclic on " + std::to_string(primes) + " primes");
    return o;
  });

  criterion(10, 120.0, [] {
    Outcome o;
    std::mt19937 rng(20240601);
    for (int i = 0; i < 150; ++i) {
      const Cyclotomic a = random_element(rng), b = random_element(rng), c = random_element(rng);
      o.require(a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
                    a * (b + c) == a * b + a * c,
                "ring law violated");
      const std::uint32_t n = a.conductor();
      o.require(a.conjugate().conjugate() == a, "conjugation not an involution");
      if (n > 1) o.require(a.conjugate() == a.galois(n - 1), "conjugation != galois(N-1)");
      for (long long u = 1; u < n; ++u) {
        for (long long v = 1; v < n; ++v) {
          if (gcd_u64(u, n) == 1 && gcd_u64(v, n) == 1) {
            o.require(a.galois(u).galois(v) == a.galois(u * v % n), "Galois composition violated");
          }
        }
      }
    }
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto all = all_partitions(n);
      for (const auto& p : all) {
        for (const auto& q : all) {
          const SetPartition j = partition_join(p, q);
          o.require(j == partition_join(q, p) && partition_refines(p, j) && partition_refines(q, j),
                    "join is not an upper bound");
          for (const auto& r : all) {
            if (partition_refines(p, r) && partition_refines(q, r)) {
              o.require(partition_refines(j, r), "join is not least");
            }
            o.require(partition_join(partition_join(p, q), r) == partition_join(p, partition_join(q, r)),
                      "join not associative");
          }
        }
      }
    }
    std::size_t closure_checks = 0;
    for (const TablePtr& t : {fixture("a5"), fixture("a7"), gen_cyclic(12), gen_suzuki(8)}) {
      const auto one = enumerate_all(t, {1});
      for (const auto& a : one.theories) {
        for (const auto& b : one.theories) {
          o.require(contains(one.theories, sct_join(a, b)), "enumerated set not closed under join");
          ++closure_checks;
        }
      }
      for (unsigned w : {2U, 8U}) o.require(enumerate_all(t, {w}).theories == one.theories, "worker count changes output");
    }
    o.note("ring, Galois, lattice (n <= 5) laws; " + std::to_string(closure_checks) +
           " join-closure checks; 1/2/8 workers identical");
    return o;
  });

  std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: " + std::to_string(failures) + " criterion(s) failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
