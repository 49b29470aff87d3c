#include "unitary/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace unitary {

Json to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Json to_json(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const BigInt& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const TruncatedFunction& f) {
  Json coeffs = Json::array();
  for (const auto& [k, c] : f.terms()) coeffs.push_back(Json::array({k, to_string(c)}));
  return {{"n", f.n()}, {"coeffs", coeffs}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) os << ',';
      os << csv_field(fields[i]);
    }
    os << "\r\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

std::string to_text(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], fields[i].size());
    }
  };
  measure(t.header);
  for (const auto& row : t.rows) measure(row);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& fields) {
    std::string text;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) text += "  ";
      text += fields[i];
      if (i + 1 < fields.size() && i < width.size()) text.append(width[i] - fields[i].size(), ' ');
    }
    os << text << '\n';
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

std::string cell(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

Table table_from_object(const Json& object) {
  Table t;
  std::vector<std::string> row;
  for (const auto& [key, value] : object.items()) {
    t.header.push_back(key);
    row.push_back(cell(value));
  }
  t.rows.push_back(std::move(row));
  return t;
}

std::string text_from_object(const Json& object) {
  std::ostringstream os;
  for (const auto& [key, value] : object.items()) os << key << ": " << cell(value) << '\n';
  return os.str();
}

}  // namespace unitary
