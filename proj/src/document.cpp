#include "sl2t/document.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace sl2t {

using ordered_json = nlohmann::ordered_json;

std::string to_document(const TilingWindow& t) {
  const std::size_t n = t.dimension();
  ordered_json doc;
  doc["n"] = n;
  ordered_json eps = ordered_json::array();
  for (std::size_t k = 0; k < n; ++k) {
    ordered_json row = ordered_json::array();
    for (std::size_t l = 0; l < n; ++l) row.push_back(t.epsilon().at(k, l));
    eps.push_back(std::move(row));
  }
  doc["epsilon"] = std::move(eps);
  doc["lo"] = t.window().lo();
  doc["hi"] = t.window().hi();
  ordered_json entries = ordered_json::array();
  for (const BigInt& v : t.entries()) entries.push_back(to_decimal(v));
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

namespace {

const ordered_json& field(const ordered_json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) fail(errc::bad_format, std::string("missing field '") + name + "'");
  return *it;
}

LatticePoint parse_point(const ordered_json& arr, const char* name) {
  if (!arr.is_array()) fail(errc::bad_format, std::string(name) + " must be an array");
  LatticePoint p;
  p.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      fail(errc::bad_format, std::string(name) + " must hold integers");
    p.push_back(v.get<Coord>());
  }
  return p;
}

}  // namespace

TilingWindow parse_document(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text) ;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::bad_format, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(errc::bad_format, "document must be a JSON object");
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "n" && key != "epsilon" && key != "lo" && key != "hi" && key != "entries")
      fail(errc::bad_format, "unknown field '" + key + "'");
  }

  const ordered_json& jn = field(doc, "n");
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 2)
    fail(errc::bad_format, "n must be an integer >= 2");
  const std::size_t n = jn.get<std::size_t>();

  const ordered_json& jeps = field(doc, "epsilon");
  if (!jeps.is_array() || jeps.size() != n)
    fail(errc::bad_format, "epsilon must be an n x n array");
  std::vector<std::int8_t> eps;
  eps.reserve(n * n);
  for (const auto& row : jeps) {
    if (!row.is_array() || row.size() != n)
      fail(errc::bad_format, "epsilon must be an n x n array");
    for (const auto& v : row) {
      if (!v.is_number_integer())
        fail(errc::bad_format, "epsilon entries must be -1 or +1");
      std::int64_t s = v.get<std::int64_t>();
      if (s != 1 && s != -1) fail(errc::bad_format, "epsilon entries must be -1 or +1");
      eps.push_back(static_cast<std::int8_t>(s));
    }
  }

  LatticePoint lo = parse_point(field(doc, "lo"), "lo");
  LatticePoint hi = parse_point(field(doc, "hi"), "hi");
  if (lo.size() != n || hi.size() != n)
    fail(errc::bad_format, "lo/hi must have n coordinates");

  const ordered_json& jentries = field(doc, "entries");
  if (!jentries.is_array()) fail(errc::bad_format, "entries must be an array");
  std::vector<BigInt> entries;
  entries.reserve(jentries.size());
  for (const auto& v : jentries) {
    if (!v.is_string()) fail(errc::bad_format, "entries must be decimal strings");
    BigInt value = parse_decimal(v.get<std::string>());
    if (value < 1) fail(errc::bad_format, "entries must be positive");
    entries.push_back(std::move(value));
  }

  try {
    return TilingWindow(SignatureMatrix(n, std::move(eps)),
                        Window(std::move(lo), std::move(hi)), std::move(entries));
  } catch (const tiling_error& e) {
    fail(errc::bad_format, e.what());
  }
}

void write_document(const TilingWindow& t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::bad_format, "cannot open '" + path + "' for writing");
  out << to_document(t);
  if (!out) fail(errc::bad_format, "write to '" + path + "' failed");
}

TilingWindow read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::bad_format, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

}  // namespace sl2t
