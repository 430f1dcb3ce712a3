#include "cli/document.hpp"

#include <json.hpp>

namespace tropsd::cli {

using nlohmann::json;
using nlohmann::ordered_json;

SymMatrix parse_matrix_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("matrix document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw DocumentError("matrix document needs an integer field \"n\"");
  }
  const auto n_signed = doc["n"].get<long long>();
  if (n_signed < 1) throw DocumentError("\"n\" must be positive");
  const auto n = static_cast<std::size_t>(n_signed);
  if (!doc.contains("entries") || !doc["entries"].is_array() || doc["entries"].size() != n) {
    throw DocumentError("\"entries\" must be an array of n rows");
  }

  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = doc["entries"][i];
    if (!row.is_array() || row.size() != n) {
      throw DocumentError("row " + std::to_string(i + 1) + " must have n entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!row[j].is_string()) {
        throw DocumentError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") must be a rational string such as \"3/2\"");
      }
      try {
        m(i, j) = Rat::parse(row[j].get<std::string>());
      } catch (const InvalidInput& e) {
        throw DocumentError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                            e.what());
      }
    }
  }
  try {
    return SymMatrix::from_matrix(m);
  } catch (const InvalidInput& e) {
    throw DocumentError(e.what());
  }
}

std::string render_matrix_document(const SymMatrix& a) {
  ordered_json doc;
  doc["n"] = a.n();
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < a.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < a.n(); ++j) row.push_back(a(i, j).str());
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  return doc.dump();
}

}  // namespace tropsd::cli
