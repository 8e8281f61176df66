// sct: command-line front end.
//
// Exit codes: 0 success, 1 a domain verdict of "no" (invalid table, failed
// verification, refused enumeration, impossible construction), 2 usage, I/O
// or parse errors.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "supchar/anclasses.hpp"
#include "supchar/enumerate.hpp"
#include "supchar/io.hpp"
#include "supchar/numtheory.hpp"

using namespace supchar;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Verdict {
  int code;
};

struct TableSource {
  std::string path;
  std::optional<std::uint32_t> cyclic;
  std::optional<std::uint64_t> suzuki;

  void attach(CLI::App* cmd) {
    auto* p = cmd->add_option("--table", path, "table file (\".json\" may be omitted)");
    auto* c = cmd->add_option("--cyclic", cyclic, "generated Z_n");
    auto* s = cmd->add_option("--suzuki", suzuki, "generated Sz(q)");
    p->excludes(c, s);
    c->excludes(s);
  }

  TablePtr load() const {
    if (cyclic) {
      if (*cyclic < 1) throw UsageError("--cyclic needs n >= 1");
      return gen_cyclic(*cyclic);
    }
    if (suzuki) return gen_suzuki(*suzuki);
    if (path.empty()) throw UsageError("one of --table, --cyclic, --suzuki is required");
    return load_table_file(path);
  }
};

std::string output_path;

void emit(const std::string& text) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + output_path);
  out << text;
}

json table_summary(const CharacterTable& t) {
  json sizes = json::array(), centralizers = json::array();
  for (const Integer& z : t.class_data().class_sizes) sizes.push_back(z.get_str());
  for (const Integer& z : t.class_data().centralizer_orders) centralizers.push_back(z.get_str());
  return json{{"name", t.name()},
              {"k", t.size()},
              {"group_order", t.class_data().group_order.get_str()},
              {"conductor", t.conductor()},
              {"class_sizes", std::move(sizes)},
              {"centralizer_orders", std::move(centralizers)}};
}

SuperTheory verified_theory(const TablePtr& t, const std::string& path) {
  const TheoryBlocks blocks = load_theory_file(path);
  const SctReport report = sct_verify_blocks(t, blocks.characters, blocks.classes);
  if (!report.verdict) {
    std::cout << report_to_json(report).dump() << "\n";
    std::cerr << "sct: " << path << " is not a supercharacter theory\n";
    throw Verdict{1};
  }
  return {t, SetPartition::from_blocks(t->size(), blocks.characters),
          SetPartition::from_blocks(t->size(), blocks.classes)};
}

int run(int argc, char** argv) {
  CLI::App app{"Supercharacter theories of finite groups from exact character tables", "sct"};
  app.require_subcommand(1);
  app.fallthrough();

  // gen
  auto* gen = app.add_subcommand("gen", "write a generated character table");
  std::optional<std::uint32_t> gen_cyc;
  std::optional<std::uint64_t> gen_sz;
  auto* gc = gen->add_option("--cyclic", gen_cyc, "Z_n");
  auto* gs = gen->add_option("--suzuki", gen_sz, "Sz(q), q = 8, 32, 128, 512");
  gc->excludes(gs);
  gen->add_option("--out", output_path, "output file (default stdout)");

  // validate
  auto* val = app.add_subcommand("validate", "load and validate a table file");
  std::string val_path;
  val->add_option("path", val_path, "table file")->required();

  // construct
  auto* con = app.add_subcommand("construct", "build one theory");
  TableSource con_src;
  con_src.attach(con);
  std::string method;
  std::optional<std::size_t> chi, cls;
  con->add_option("--method", method, "fine|coarse|conjugation|galois|pair")
      ->required()
      ->check(CLI::IsMember({"fine", "coarse", "conjugation", "galois", "pair"}));
  con->add_option("--char", chi, "row index for --method pair");
  con->add_option("--class", cls, "column index for --method pair");
  con->add_option("--out", output_path, "output file (default stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "check a theory file against a table");
  TableSource ver_src;
  ver_src.attach(ver);
  std::string theory_path;
  ver->add_option("--theory", theory_path, "theory file")->required();

  // join
  auto* join = app.add_subcommand("join", "join two theories");
  TableSource join_src;
  join_src.attach(join);
  std::vector<std::string> join_paths;
  join->add_option("--theory", join_paths, "theory file (give twice)")->required()->expected(2);
  join->add_option("--out", output_path, "output file (default stdout)");

  // enumerate / count
  EnumerationOptions opts;
  bool naive = false, count_only = false;
  TableSource enum_src, count_src;
  auto* en = app.add_subcommand("enumerate", "list every supercharacter theory");
  enum_src.attach(en);
  en->add_flag("--naive", naive, "brute force over (X, K) pairs, k <= 7");
  en->add_option("--workers", opts.workers, "worker threads")->check(CLI::Range(1U, 1024U));
  en->add_option("--limit", opts.candidate_limit, "refuse above this many candidates");
  en->add_flag("--count-only", count_only, "print only the count");
  auto* cnt = app.add_subcommand("count", "print s(G)");
  count_src.attach(cnt);
  cnt->add_option("--workers", opts.workers, "worker threads")->check(CLI::Range(1U, 1024U));
  cnt->add_option("--limit", opts.candidate_limit, "refuse above this many candidates");

  // primes
  auto* pr = app.add_subcommand("primes", "prime profiles and safe primes");
  std::optional<std::uint64_t> profile, safe_upto;
  auto* pp = pr->add_option("--profile", profile, "profile of p");
  auto* ps = pr->add_option("--safe-upto", safe_upto, "safe primes up to a bound");
  pp->excludes(ps);

  // an-classes
  auto* an = app.add_subcommand("an-classes", "split and non-real classes of A_n");
  std::optional<unsigned> an_n, an_bound;
  auto* an1 = an->add_option("--n", an_n, "profiles for one n")->check(CLI::PositiveNumber);
  auto* an2 = an->add_option("--classify-upto", an_bound, "classification of 5..bound")->check(CLI::Range(5U, 100000U));
  an1->excludes(an2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << app.help();
    return 2;
  }

  if (gen->parsed()) {
    TablePtr t;
    if (gen_cyc) {
      if (*gen_cyc < 1) throw UsageError("--cyclic needs n >= 1");
      t = gen_cyclic(*gen_cyc);
    } else if (gen_sz) {
      t = gen_suzuki(*gen_sz);
    } else {
      throw UsageError("gen needs --cyclic or --suzuki");
    }
    emit(dump_table(*t));
    return 0;
  }

  if (val->parsed()) {
    const TablePtr t = load_table_file(val_path);
    json summary = table_summary(*t);
    summary["valid"] = true;
    std::cout << summary.dump() << "\n";
    return 0;
  }

  if (con->parsed()) {
    const TablePtr t = con_src.load();
    SuperTheory s;
    if (method == "fine") {
      s = sct_trivial_fine(t);
    } else if (method == "coarse") {
      s = sct_trivial_coarse(t);
    } else if (method == "conjugation") {
      s = sct_conjugation(t);
    } else if (method == "galois") {
      s = sct_galois(t);
    } else {
      if (!chi || !cls) throw UsageError("--method pair needs --char and --class");
      s = sct_pair(t, *chi, *cls);
    }
    emit(theory_to_json(s).dump() + "\n");
    return 0;
  }

  if (ver->parsed()) {
    const TablePtr t = ver_src.load();
    const TheoryBlocks blocks = load_theory_file(theory_path);
    const SctReport report = sct_verify_blocks(t, blocks.characters, blocks.classes);
    std::cout << report_to_json(report).dump() << "\n";
    return report.verdict ? 0 : 1;
  }

  if (join->parsed()) {
    const TablePtr t = join_src.load();
    const SuperTheory a = verified_theory(t, join_paths[0]);
    const SuperTheory b = verified_theory(t, join_paths[1]);
    emit(theory_to_json(sct_join(a, b)).dump() + "\n");
    return 0;
  }

  if (en->parsed() || cnt->parsed()) {
    const bool counting = cnt->parsed() || count_only;
    const TablePtr t = (en->parsed() ? enum_src : count_src).load();
    EnumerationResult result;
    auto print = [](const SuperTheory& s) { std::cout << theory_to_json(s).dump() << "\n"; };
    if (naive && en->parsed()) {
      result = naive_enumerate(t);
      if (!counting) {
        for (const auto& s : result.theories) print(s);
      }
    } else if (counting) {
      result = enumerate_all(t, opts, [](const SuperTheory&) {});
    } else {
      result = enumerate_all(t, opts, print);
    }
    if (cnt->parsed()) {
      std::cout << result.count << "\n";
    } else {
      std::cout << json{{"count", result.count}, {"stats", stats_to_json(result.stats)}}.dump() << "\n";
    }
    return 0;
  }

  if (pr->parsed()) {
    if (profile) {
      const PrimeProfile p = prime_profile(*profile);
      std::cout << json{{"p", p.p},
                        {"is_prime", p.is_prime},
                        {"is_sophie_germain", p.is_sophie_germain},
                        {"is_safe", p.is_safe}}
                       .dump()
                << "\n";
    } else if (safe_upto) {
      const auto primes = safe_primes_upto(*safe_upto);
      std::cout << json{{"bound", *safe_upto}, {"count", primes.size()}, {"safe_primes", primes}}.dump() << "\n";
    } else {
      throw UsageError("primes needs --profile or --safe-upto");
    }
    return 0;
  }

  if (an->parsed()) {
    if (an_n) {
      json profiles = json::array();
      for (const CycleType& lambda : odd_distinct_partitions(*an_n)) {
        const SplitClassProfile p = split_profile(lambda);
        profiles.push_back({{"cycle_type", lambda.parts}, {"splits", p.splits}, {"nonreal_pair", p.nonreal_pair}});
      }
      std::cout << json{{"n", *an_n}, {"split_classes", std::move(profiles)}, {"nonreal_pairs", nonreal_pair_count(*an_n)}}
                       .dump()
                << "\n";
    } else if (an_bound) {
      const NClassification c = classify_n(*an_bound);
      std::cout << json{{"bound", *an_bound},
                        {"all_real", c.all_real},
                        {"exactly_one", c.exactly_one},
                        {"two_or_more", c.two_or_more}}
                       .dump()
                << "\n";
    } else {
      throw UsageError("an-classes needs --n or --classify-upto");
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Verdict& v) {
    return v.code;
  } catch (const InvalidTable& e) {
    std::cerr << "sct: invalid table: " << e.what() << "\n";
    return 1;
  } catch (const CandidateLimitExceeded& e) {
    std::cerr << "sct: " << e.what() << "\n";
    return 1;
  } catch (const ConstructionError& e) {
    std::cerr << "sct: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "sct: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "sct: " << e.what() << "\n";
    return 2;
  }
}
