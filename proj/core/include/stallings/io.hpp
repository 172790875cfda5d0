#pragma once

// Structure documents: the JSON file format shared by every tool.
//
//   { "signature": {"constants": [...], "functions": {"inv": 1},
//                   "relations": {"D": 2, "M": 3}},
//     "carrier": ["1", "a", "b"],
//     "constants": {"1": "1"},
//     "functions": {"inv": {"1": "1", "a": "a", "b": "b"}},
//     "relations": {"D": [["1","1"], ...], "M": [["a","a","1"], ...]} }
//
// n-ary function tables are keyed by the comma-joined argument ids.  Two
// optional keys are recognised: "kind" ("structure", "pregroup" or
// "spregroup") and "designated" (name -> element ids, S-pregroups only).
// Any other key is rejected.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stallings/structure.hpp"

namespace stallings {

struct StructureDocument {
  StructureData data;
  std::string kind = "structure";
  std::map<std::string, std::vector<std::string>> designated;
};

StructureDocument parse_structure_document(std::string_view text);
std::string format_structure_document(const StructureDocument& doc);

StructureDocument load_structure_document(const std::filesystem::path& path);
void save_structure_document(const StructureDocument& doc, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// "a,b,a" -> {"a","b","a"}; the empty string is the empty list.
std::vector<std::string> split_ids(std::string_view text, char sep = ',');
std::string join_ids(const std::vector<std::string>& ids, char sep = ',');

}  // namespace stallings
