#include "cattorus/lattice.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cattorus {

Lattice lattice_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("lattice file: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("lattice file: top level must be an object");
  std::string name = doc.value("name", std::string("custom"));
  if (!doc.contains("rank") || !doc["rank"].is_number_integer())
    throw std::invalid_argument("lattice file: missing integer field 'rank'");
  const long long rank = doc["rank"].get<long long>();
  if (rank < 0) throw std::invalid_argument("lattice file: rank must be >= 0");
  if (!doc.contains("gram") || !doc["gram"].is_array())
    throw std::invalid_argument("lattice file: missing array field 'gram'");
  const auto& rows = doc["gram"];
  if (static_cast<long long>(rows.size()) != rank)
    throw std::invalid_argument("lattice file: gram has wrong number of rows");
  MatZ g(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    if (!rows[r].is_array() || static_cast<long long>(rows[r].size()) != rank)
      throw std::invalid_argument("lattice file: gram row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (!rows[r][c].is_number_integer())
        throw std::invalid_argument("lattice file: gram entries must be integers");
      g.at(r, c) = Int(rows[r][c].get<long long>());
    }
  }
  std::string kind = doc.value("gram_is", std::string("I"));
  if (kind == "J") return lattice_from_j(std::move(name), std::move(g));
  if (kind == "I") return lattice_from_i(std::move(name), std::move(g));
  throw std::invalid_argument("lattice file: gram_is must be \"J\" or \"I\"");
}

Lattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("lattice file: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return lattice_from_json_text(buf.str());
}

Lattice resolve_lattice(const std::string& designator) {
  if (designator.rfind("file:", 0) == 0) return load_lattice_file(designator.substr(5));
  return builtin_lattice(designator);
}

}  // namespace cattorus
