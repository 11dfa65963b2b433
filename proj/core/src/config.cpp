#include "dgt/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace dgt {

const std::string& ConfigValue::as_string() const {
  if (!is_string()) throw std::invalid_argument("config: expected a string");
  return std::get<std::string>(v_);
}
const Int& ConfigValue::as_int() const {
  if (!is_int()) throw std::invalid_argument("config: expected an integer");
  return std::get<Int>(v_);
}
bool ConfigValue::as_bool() const {
  if (!is_bool()) throw std::invalid_argument("config: expected a boolean");
  return std::get<bool>(v_);
}
const ConfigValue::Array& ConfigValue::as_array() const {
  if (!is_array()) throw std::invalid_argument("config: expected an array");
  return std::get<Array>(v_);
}
const ConfigValue::Table& ConfigValue::as_table() const {
  if (!is_table()) throw std::invalid_argument("config: expected a table");
  return std::get<Table>(v_);
}

namespace {

struct ConfigParser {
  const std::string& s;
  std::size_t i = 0;

  explicit ConfigParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("config: " + why + " at offset " + std::to_string(i));
  }

  void skip_space(bool newlines) {
    while (i < s.size()) {
      char c = s[i];
      if (c == '#') {
        while (i < s.size() && s[i] != '\n') ++i;
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        ++i;
      } else {
        break;
      }
    }
  }

  bool eof() const { return i >= s.size(); }

  std::string parse_key() {
    skip_space(true);
    std::size_t b = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '-'))
      ++i;
    if (i == b) fail("expected a key");
    return s.substr(b, i - b);
  }

  void expect(char c) {
    skip_space(true);
    if (eof() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }

  ConfigValue parse_value() {
    skip_space(true);
    if (eof()) fail("expected a value");
    char c = s[i];
    if (c == '"') return parse_string();
    if (c == '[') return parse_array();
    if (c == '{') return parse_table();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_int();
    if (s.compare(i, 4, "true") == 0) {
      i += 4;
      return ConfigValue(ConfigValue::Storage(true));
    }
    if (s.compare(i, 5, "false") == 0) {
      i += 5;
      return ConfigValue(ConfigValue::Storage(false));
    }
    fail("unrecognized value");
  }

  ConfigValue parse_string() {
    ++i;  // opening quote
    std::string out;
    while (i < s.size() && s[i] != '"') {
      if (s[i] == '\\' && i + 1 < s.size()) ++i;
      out.push_back(s[i]);
      ++i;
    }
    if (eof()) fail("unterminated string");
    ++i;  // closing quote
    return ConfigValue(ConfigValue::Storage(std::move(out)));
  }

  ConfigValue parse_int() {
    std::size_t b = i;
    if (s[i] == '-') ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == b || (s[b] == '-' && i == b + 1)) fail("bad integer");
    return ConfigValue(ConfigValue::Storage(Int(s.substr(b, i - b))));
  }

  ConfigValue parse_array() {
    ++i;  // [
    ConfigValue::Array items;
    skip_space(true);
    if (!eof() && s[i] == ']') {
      ++i;
      return ConfigValue(ConfigValue::Storage(std::move(items)));
    }
    while (true) {
      items.push_back(parse_value());
      skip_space(true);
      if (!eof() && s[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
    return ConfigValue(ConfigValue::Storage(std::move(items)));
  }

  ConfigValue parse_table() {
    ++i;  // {
    ConfigValue::Table t;
    skip_space(true);
    if (!eof() && s[i] == '}') {
      ++i;
      return ConfigValue(ConfigValue::Storage(std::move(t)));
    }
    while (true) {
      std::string key = parse_key();
      expect('=');
      t.emplace(std::move(key), parse_value());
      skip_space(true);
      if (!eof() && s[i] == ',') {
        ++i;
        continue;
      }
      expect('}');
      break;
    }
    return ConfigValue(ConfigValue::Storage(std::move(t)));
  }
};

}  // namespace

ConfigTable parse_config(const std::string& text) {
  ConfigParser p(text);
  ConfigTable top;
  while (true) {
    p.skip_space(true);
    if (p.eof()) break;
    std::string key = p.parse_key();
    p.expect('=');
    top.emplace(std::move(key), p.parse_value());
  }
  return top;
}

ConfigTable parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

PolySequencePtr sequence_from_config(const ConfigTable& seq_table) {
  std::vector<LaurentPoly> prefix;
  std::optional<PolySequence::Periodic> tail;
  if (auto it = seq_table.find("prefix"); it != seq_table.end()) {
    for (const auto& v : it->second.as_array()) prefix.push_back(parse_poly(v.as_string()));
  }
  if (auto it = seq_table.find("period"); it != seq_table.end()) {
    PolySequence::Periodic per;
    for (const auto& v : it->second.as_array())
      per.period.push_back(parse_poly(v.as_string()));
    tail = std::move(per);
  }
  return std::make_shared<const PolySequence>(std::move(prefix), std::move(tail));
}

namespace {

std::vector<LaurentPoly> split_polys(const std::string& list) {
  std::vector<LaurentPoly> out;
  std::string cur;
  for (char c : list) {
    if (c == ';' || c == ',') {
      if (!cur.empty()) out.push_back(parse_poly(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_poly(cur));
  return out;
}

}  // namespace

PolySequencePtr sequence_from_string(const std::string& period_entries,
                                     const std::string& prefix_entries) {
  std::vector<LaurentPoly> prefix = split_polys(prefix_entries);
  std::optional<PolySequence::Periodic> tail;
  auto period = split_polys(period_entries);
  if (!period.empty()) tail = PolySequence::Periodic{std::move(period)};
  return std::make_shared<const PolySequence>(std::move(prefix), std::move(tail));
}

}  // namespace dgt
