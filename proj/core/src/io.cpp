#include "stallings/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace stallings {

using nlohmann::json;

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw ParseError("structure document: " + what, 0);
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    require(known, "unknown key '" + key + "' in " + where);
  }
}

std::string as_string(const json& j, const std::string& where) {
  require(j.is_string(), where + " must be a string");
  return j.get<std::string>();
}

}  // namespace

StructureDocument parse_structure_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("structure document is not valid JSON: ") + e.what(), e.byte);
  }
  require(doc.is_object(), "top level must be an object");
  reject_unknown(doc, {"signature", "carrier", "constants", "functions", "relations", "kind", "designated"},
                 "document");

  StructureDocument out;
  auto& d = out.data;

  require(doc.contains("signature") && doc["signature"].is_object(), "missing \"signature\" object");
  const auto& sig = doc["signature"];
  reject_unknown(sig, {"constants", "functions", "relations"}, "signature");
  if (sig.contains("constants")) {
    require(sig["constants"].is_array(), "signature.constants must be an array");
    for (const auto& c : sig["constants"]) d.signature.constants.insert(as_string(c, "constant name"));
  }
  for (const char* part : {"functions", "relations"}) {
    if (!sig.contains(part)) continue;
    require(sig[part].is_object(), std::string("signature.") + part + " must be an object");
    auto& target = std::string(part) == "functions" ? d.signature.functions : d.signature.relations;
    for (const auto& [name, arity] : sig[part].items()) {
      require(arity.is_number_integer(), "arity of '" + name + "' must be an integer");
      target.emplace(name, arity.get<int>());
    }
  }

  require(doc.contains("carrier") && doc["carrier"].is_array(), "missing \"carrier\" array");
  for (const auto& e : doc["carrier"]) d.carrier.push_back(as_string(e, "element id"));

  if (doc.contains("constants")) {
    require(doc["constants"].is_object(), "constants must be an object");
    for (const auto& [c, v] : doc["constants"].items()) d.constants.emplace(c, as_string(v, "constant value"));
  }
  if (doc.contains("functions")) {
    require(doc["functions"].is_object(), "functions must be an object");
    for (const auto& [f, table] : doc["functions"].items()) {
      require(table.is_object(), "table of '" + f + "' must be an object");
      auto& t = d.functions[f];
      for (const auto& [args, v] : table.items()) t.emplace(split_ids(args), as_string(v, "function value"));
    }
  }
  if (doc.contains("relations")) {
    require(doc["relations"].is_object(), "relations must be an object");
    for (const auto& [r, tuples] : doc["relations"].items()) {
      require(tuples.is_array(), "tuples of '" + r + "' must be an array");
      auto& ts = d.relations[r];
      for (const auto& tup : tuples) {
        require(tup.is_array(), "relation tuple must be an array");
        std::vector<std::string> t;
        for (const auto& x : tup) t.push_back(as_string(x, "tuple element"));
        ts.push_back(std::move(t));
      }
    }
  }
  if (doc.contains("kind")) {
    out.kind = as_string(doc["kind"], "kind");
    require(out.kind == "structure" || out.kind == "pregroup" || out.kind == "spregroup",
            "unknown kind '" + out.kind + "'");
  }
  if (doc.contains("designated")) {
    require(out.kind == "spregroup", "\"designated\" requires kind \"spregroup\"");
    require(doc["designated"].is_object(), "designated must be an object");
    for (const auto& [name, ids] : doc["designated"].items()) {
      require(ids.is_array(), "designated subset must be an array");
      auto& v = out.designated[name];
      for (const auto& x : ids) v.push_back(as_string(x, "designated element"));
    }
  }
  return out;
}

std::string format_structure_document(const StructureDocument& doc) {
  // ordered_json keeps the key order below stable across runs
  nlohmann::ordered_json j;
  const auto& d = doc.data;
  if (doc.kind != "structure") j["kind"] = doc.kind;
  auto& sig = j["signature"];
  sig["constants"] = nlohmann::ordered_json::array();
  for (const auto& c : d.signature.constants) sig["constants"].push_back(c);
  sig["functions"] = nlohmann::ordered_json::object();
  for (const auto& [f, n] : d.signature.functions) sig["functions"][f] = n;
  sig["relations"] = nlohmann::ordered_json::object();
  for (const auto& [r, n] : d.signature.relations) sig["relations"][r] = n;
  j["carrier"] = d.carrier;
  j["constants"] = nlohmann::ordered_json::object();
  for (const auto& [c, v] : d.constants) j["constants"][c] = v;
  j["functions"] = nlohmann::ordered_json::object();
  for (const auto& [f, table] : d.functions) {
    auto& t = j["functions"][f];
    t = nlohmann::ordered_json::object();
    for (const auto& [args, v] : table) t[join_ids(args)] = v;
  }
  j["relations"] = nlohmann::ordered_json::object();
  for (const auto& [r, tuples] : d.relations) j["relations"][r] = tuples;
  if (!doc.designated.empty()) {
    j["designated"] = nlohmann::ordered_json::object();
    for (const auto& [name, ids] : doc.designated) j["designated"][name] = ids;
  }
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

StructureDocument load_structure_document(const std::filesystem::path& path) {
  return parse_structure_document(read_text_file(path));
}

void save_structure_document(const StructureDocument& doc, const std::filesystem::path& path) {
  write_text_file(path, format_structure_document(doc));
}

std::vector<std::string> split_ids(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto end = text.find(sep, start);
    auto piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    // trim spaces
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.emplace_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string join_ids(const std::vector<std::string>& ids, char sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += ids[i];
  }
  return out;
}

}  // namespace stallings
