#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "supchar/enumerate.hpp"
#include "supchar/theory.hpp"

namespace supchar {

/// A document that is not valid JSON or does not have the expected shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Table document:
///   {"name": str, "classes": [str], "chars": [str],
///    "values": [[expr]], "identity_col": int, "trivial_row": int,
///    "class_sizes": [int]}
/// Entries of "values" are strings in the cyclotomic grammar (plain integers
/// are accepted too). "class_sizes" is optional and only cross-checked.
/// Loading validates the table and throws InvalidTable on any problem.
TablePtr load_table(std::string_view document);
TablePtr load_table_file(const std::filesystem::path& path);
/// `path` itself if it exists, else `path` + ".json".
std::filesystem::path resolve_table_path(const std::filesystem::path& path);

nlohmann::json table_to_json(const CharacterTable& t);
std::string dump_table(const CharacterTable& t);

/// Blocks as sorted index lists, ordered by minimum.
nlohmann::json partition_to_json(const SetPartition& p);
SetPartition::Blocks blocks_from_json(const nlohmann::json& j);

/// {"chars": blocks, "classes": blocks}
nlohmann::json theory_to_json(const SuperTheory& s);
struct TheoryBlocks {
  SetPartition::Blocks characters;
  SetPartition::Blocks classes;
};
TheoryBlocks theory_blocks_from_json(const nlohmann::json& j);
TheoryBlocks load_theory_file(const std::filesystem::path& path);

/// {"verdict": bool, "failures": [{"condition": id, "detail": str}]}
nlohmann::json report_to_json(const SctReport& r);

nlohmann::json stats_to_json(const EnumerationStats& s);

std::string read_file(const std::filesystem::path& path);

}  // namespace supchar
