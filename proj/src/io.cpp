#include "supchar/io.hpp"

#include <fstream>
#include <sstream>

namespace supchar {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& doc, const char* key) {
  std::vector<std::string> out;
  if (!doc.contains(key)) return out;
  const json& list = doc.at(key);
  if (!list.is_array()) throw FormatError(std::string("\"") + key + "\" must be a list of strings");
  for (const json& item : list) {
    if (!item.is_string()) throw FormatError(std::string("\"") + key + "\" must be a list of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::size_t index_field(const json& doc, const char* key) {
  if (!doc.contains(key)) return 0;
  const json& v = doc.at(key);
  if (!v.is_number_unsigned()) throw FormatError(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Integer integer_entry(const json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  throw FormatError("class size must be an integer: " + v.dump());
}

Cyclotomic value_entry(const json& v, std::size_t row, std::size_t col) {
  const std::string where = "values[" + std::to_string(row) + "][" + std::to_string(col) + "]";
  if (v.is_number_integer()) return Cyclotomic(v.get<long>());
  if (!v.is_string()) throw FormatError(where + " must be a string or an integer");
  try {
    return parse_cyclotomic(v.get<std::string>());
  } catch (const ParseError& e) {
    throw FormatError(where + ": " + e.what());
  }
}

json parse_json(std::string_view document) {
  try {
    return json::parse(document);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TablePtr load_table(std::string_view document) {
  const json doc = parse_json(document);
  if (!doc.is_object()) throw FormatError("table document must be an object");
  if (!doc.contains("values") || !doc.at("values").is_array()) throw FormatError("missing \"values\" matrix");

  std::vector<std::vector<Cyclotomic>> rows;
  for (std::size_t i = 0; i < doc.at("values").size(); ++i) {
    const json& row = doc.at("values")[i];
    if (!row.is_array()) throw FormatError("values[" + std::to_string(i) + "] must be a list");
    rows.emplace_back();
    for (std::size_t j = 0; j < row.size(); ++j) rows.back().push_back(value_entry(row[j], i, j));
  }
  std::string name = "table";
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw FormatError("\"name\" must be a string");
    name = doc.at("name").get<std::string>();
  }

  auto table = std::make_shared<const CharacterTable>(name, string_list(doc, "classes"), string_list(doc, "chars"),
                                                      rows, index_field(doc, "identity_col"),
                                                      index_field(doc, "trivial_row"));
  std::vector<Integer> sizes;
  if (doc.contains("class_sizes")) {
    if (!doc.at("class_sizes").is_array()) throw FormatError("\"class_sizes\" must be a list");
    for (const json& v : doc.at("class_sizes")) sizes.push_back(integer_entry(v));
  }
  const ValidationReport report = validate(*table, sizes);
  if (!report.ok) {
    std::string message = report.problems.front();
    for (std::size_t i = 1; i < report.problems.size(); ++i) message += "; " + report.problems[i];
    throw InvalidTable(message);
  }
  return table;
}

std::filesystem::path resolve_table_path(const std::filesystem::path& path) {
  if (std::filesystem::exists(path)) return path;
  std::filesystem::path with_ext = path;
  with_ext += ".json";
  if (std::filesystem::exists(with_ext)) return with_ext;
  return path;
}

TablePtr load_table_file(const std::filesystem::path& path) { return load_table(read_file(resolve_table_path(path))); }

json table_to_json(const CharacterTable& t) {
  json values = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json row = json::array();
    for (const Cyclotomic& v : t.row(i)) row.push_back(v.to_string());
    values.push_back(std::move(row));
  }
  json sizes = json::array();
  for (const Integer& z : t.class_data().class_sizes) {
    if (z.fits_slong_p()) {
      sizes.push_back(z.get_si());
    } else {
      sizes.push_back(z.get_str());
    }
  }
  return json{{"name", t.name()},
              {"classes", t.class_labels()},
              {"chars", t.char_labels()},
              {"identity_col", t.identity_col()},
              {"trivial_row", t.trivial_row()},
              {"class_sizes", std::move(sizes)},
              {"values", std::move(values)}};
}

std::string dump_table(const CharacterTable& t) { return table_to_json(t).dump(1) + "\n"; }

json partition_to_json(const SetPartition& p) { return p.blocks(); }

SetPartition::Blocks blocks_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("a partition must be a list of blocks");
  SetPartition::Blocks blocks;
  for (const json& b : j) {
    if (!b.is_array()) throw FormatError("a block must be a list of indices");
    blocks.emplace_back();
    for (const json& x : b) {
      if (!x.is_number_unsigned()) throw FormatError("block entries must be non-negative integers");
      blocks.back().push_back(x.get<std::size_t>());
    }
  }
  return blocks;
}

json theory_to_json(const SuperTheory& s) {
  return json{{"chars", partition_to_json(s.characters)}, {"classes", partition_to_json(s.classes)}};
}

TheoryBlocks theory_blocks_from_json(const json& j) {
  if (!j.is_object() || !j.contains("chars") || !j.contains("classes")) {
    throw FormatError("theory document needs \"chars\" and \"classes\"");
  }
  return {blocks_from_json(j.at("chars")), blocks_from_json(j.at("classes"))};
}

TheoryBlocks load_theory_file(const std::filesystem::path& path) {
  return theory_blocks_from_json(parse_json(read_file(path)));
}

json report_to_json(const SctReport& r) {
  json failures = json::array();
  for (const Failure& f : r.failures) {
    failures.push_back({{"condition", std::string(to_string(f.condition))}, {"detail", f.detail}});
  }
  return json{{"verdict", r.verdict}, {"failures", std::move(failures)}};
}

json stats_to_json(const EnumerationStats& s) {
  return json{{"candidates", s.candidates},
              {"rejected_by_grouping", s.rejected_by_grouping},
              {"rejected_by_verify", s.rejected_by_verify},
              {"wall_seconds", s.wall_seconds}};
}

}  // namespace supchar
