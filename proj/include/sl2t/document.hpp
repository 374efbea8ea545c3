#pragma once

#include "sl2t/lattice.hpp"

#include <string>
#include <string_view>

namespace sl2t {

// Tiling document: UTF-8 JSON object with fields, in this order,
//   n        dimension
//   epsilon  n x n array of -1/+1
//   lo, hi   arrays of n integers (inclusive bounds)
//   entries  flat array of decimal strings, lexicographic cell order
// Entries are decimal strings so values of any magnitude round-trip
// bit-for-bit. Serialization is canonical: identical windows produce
// byte-identical documents.
std::string to_document(const TilingWindow& t);

// errc::bad_format on anything that is not a well-formed document.
TilingWindow parse_document(std::string_view text);

void write_document(const TilingWindow& t, const std::string& path);
TilingWindow read_document(const std::string& path);

}  // namespace sl2t
