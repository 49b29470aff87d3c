#pragma once

// Output encodings shared by the command-line front end.

#include <string>
#include <vector>

#include "json.hpp"

#include "unitary/numeric.hpp"
#include "unitary/polynomial.hpp"
#include "unitary/ring.hpp"

namespace unitary {

using Json = nlohmann::json;  // std::map-backed, so object keys come out sorted

/// A JSON number when the value fits in 64 bits, else its decimal string.
Json to_json(const BigInt& v);
Json to_json(const std::vector<BigInt>& v);
/// {"coeffs": [[k, "p/q"], ...], "n": n}
Json to_json(const TruncatedFunction& f);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Quotes a field when it contains a comma, quote, CR or LF; quotes double.
std::string csv_field(const std::string& s);
std::string to_csv(const Table& t);
/// Left-aligned columns separated by two spaces.
std::string to_text(const Table& t);

/// One row whose columns are the object's keys; nested values compact JSON.
Table table_from_object(const Json& object);
/// "key: value" per line; nested values compact JSON.
std::string text_from_object(const Json& object);

/// Scalar rendering for table cells: strings unquoted, the rest as JSON.
std::string cell(const Json& value);

}  // namespace unitary
