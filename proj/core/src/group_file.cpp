#include "hasse/group_file.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hasse/error.hpp"

namespace hasse {

std::string to_group_file(const FiniteGroup& group) {
  nlohmann::ordered_json j;
  j["name"] = group.name();
  j["order"] = group.order();
  auto table = nlohmann::ordered_json::array();
  for (Element a = 0; a < group.order(); ++a) {
    auto row = group.row(a);
    table.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  j["table"] = std::move(table);
  return j.dump() + "\n";
}

FiniteGroup parse_group_file(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InputError, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::InputError, "group file must hold an object");
  if (!j.contains("name") || !j["name"].is_string())
    throw Error(ErrorKind::InputError, "field 'name' must be a string");
  if (!j.contains("order") || !j["order"].is_number_unsigned())
    throw Error(ErrorKind::InputError, "field 'order' must be a positive integer");
  if (!j.contains("table") || !j["table"].is_array())
    throw Error(ErrorKind::InputError, "field 'table' must be an array");

  auto n = j["order"].get<std::uint64_t>();
  const auto& rows = j["table"];
  if (n == 0 || rows.size() != n)
    throw Error(ErrorKind::InputError, "table must have 'order' rows and order >= 1");
  std::vector<std::vector<Element>> table(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& row = rows[a];
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorKind::InputError, "row " + std::to_string(a) + " must have " +
                                             std::to_string(n) + " entries");
    table[a].reserve(n);
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n)
        throw Error(ErrorKind::InputError, "row " + std::to_string(a) + " has an entry outside 0.." +
                                               std::to_string(n - 1));
      table[a].push_back(static_cast<Element>(v.get<std::uint64_t>()));
    }
  }
  return FiniteGroup::from_cayley_table(table, j["name"].get<std::string>());
}

void write_group_file(const FiniteGroup& group, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InputError, "cannot open " + path.string() + " for writing");
  out << to_group_file(group);
  if (!out) throw Error(ErrorKind::InputError, "failed writing " + path.string());
}

FiniteGroup read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InputError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str());
}

}  // namespace hasse
