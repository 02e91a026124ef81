#pragma once

// Line-oriented problem files:
//
//   # the tablet's givens
//   p1 = 10,0
//   p2 = 36,0,0
//   p3 = 20,24
//
// Keys are lowercase identifiers, values are sexagesimal numerals, '#'
// starts a comment and blank lines are ignored.

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "babylon/sexnum.hpp"

namespace babylon {

class ProblemFile {
 public:
  using Entry = std::pair<std::string, SexValue>;

  /// Throws MalformedProblemFile (with the line number) for syntax errors and
  /// duplicate keys.
  static ProblemFile parse(std::string_view text);
  /// Throws Io when the file cannot be read.
  static ProblemFile load(const std::filesystem::path& path);

  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Throws MalformedProblemFile when key is absent.
  const SexValue& get(std::string_view key) const;

  /// Throws MalformedProblemFile if any of keys is missing or any other key is
  /// present.
  void require_exactly(std::initializer_list<std::string_view> keys) const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace babylon
