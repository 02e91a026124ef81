#include "babylon/problem_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "babylon/error.hpp"

namespace babylon {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_key(std::string_view k) {
  if (k.empty() || k.front() < 'a' || k.front() > 'z') return false;
  return std::all_of(k.begin(), k.end(),
                     [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; });
}

}  // namespace

ProblemFile ProblemFile::parse(std::string_view text) {
  ProblemFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::MalformedProblemFile, "line " + std::to_string(line_no) + ": " + why);
    };

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    if (!is_key(key)) fail("bad key '" + key + "'");
    if (std::any_of(file.entries_.begin(), file.entries_.end(), [&](const Entry& e) { return e.first == key; })) {
      fail("duplicate key '" + key + "'");
    }
    try {
      file.entries_.emplace_back(key, parse_sexagesimal(trim(line.substr(eq + 1))));
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  return file;
}

ProblemFile ProblemFile::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const SexValue& ProblemFile::get(std::string_view key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  throw Error(ErrorKind::MalformedProblemFile, "missing key '" + std::string(key) + "'");
}

void ProblemFile::require_exactly(std::initializer_list<std::string_view> keys) const {
  for (auto key : keys) get(key);
  for (const auto& [k, v] : entries_) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw Error(ErrorKind::MalformedProblemFile, "unknown key '" + k + "'");
    }
  }
}

}  // namespace babylon
