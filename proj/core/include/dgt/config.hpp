#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "dgt/sequence.hpp"

namespace dgt {

/// Minimal structured-text config: `key = value` lines, values are strings,
/// integers, booleans, arrays, or inline tables. `#` starts a comment.
/// Example:
///   seq = { prefix = ["3+2x"], period = ["3+2x"] }
///   caps = { stage = 64, mult = 65536 }
class ConfigValue {
 public:
  using Array = std::vector<ConfigValue>;
  using Table = std::map<std::string, ConfigValue>;
  using Storage = std::variant<std::string, Int, bool, Array, Table>;

  ConfigValue() : v_(std::string{}) {}
  explicit ConfigValue(Storage v) : v_(std::move(v)) {}

  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_int() const { return std::holds_alternative<Int>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_array() const { return std::holds_alternative<Array>(v_); }
  bool is_table() const { return std::holds_alternative<Table>(v_); }

  const std::string& as_string() const;
  const Int& as_int() const;
  bool as_bool() const;
  const Array& as_array() const;
  const Table& as_table() const;

 private:
  Storage v_;
};

using ConfigTable = ConfigValue::Table;

/// Parses the config text; throws std::invalid_argument with a position on
/// malformed input. Unknown keys are the caller's concern.
ConfigTable parse_config(const std::string& text);

ConfigTable parse_config_file(const std::string& path);

/// Builds the sequence from a table with keys `prefix` and/or `period`
/// (arrays of polynomial strings).
PolySequencePtr sequence_from_config(const ConfigTable& seq_table);

/// Convenience: "3+2x" or "3+2x ; 1+x" (period entries) into a sequence.
PolySequencePtr sequence_from_string(const std::string& period_entries,
                                     const std::string& prefix_entries = "");

}  // namespace dgt
