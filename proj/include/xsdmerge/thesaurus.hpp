#pragma once

// File-backed lexical synonymy. Format: one `term_a<TAB>term_b` pair per
// line, `#` starts a comment line, blank lines are ignored.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "xsdmerge/error.hpp"
#include "xsdmerge/names.hpp"

namespace xsdmerge {

class Thesaurus {
 public:
  Thesaurus() = default;

  /// Records a symmetric pair; terms are trimmed and lowercased.
  void add(std::string_view a, std::string_view b) {
    auto x = lowercase(trim(a));
    auto y = lowercase(trim(b));
    pairs_.emplace(x, y);
    pairs_.emplace(std::move(y), std::move(x));
  }

  bool related(std::string_view a, std::string_view b) const {
    return pairs_.count({lowercase(a), lowercase(b)}) != 0;
  }

  /// Number of stored (unordered) pairs.
  std::size_t size() const {
    std::size_t self_pairs = 0;
    for (const auto& [a, b] : pairs_) self_pairs += a == b ? 1 : 0;
    return (pairs_.size() - self_pairs) / 2 + self_pairs;
  }

  static Thesaurus parse(std::string_view text) {
    Thesaurus t;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      std::string_view view = line;
      if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
      auto content = trim(view);
      if (content.empty() || content.front() == '#') continue;
      auto tab = view.find('\t');
      if (tab == std::string_view::npos || view.find('\t', tab + 1) != std::string_view::npos) {
        throw Error(ErrorCode::FormatError, "line " + std::to_string(number) + ": expected exactly one tab");
      }
      auto a = trim(view.substr(0, tab));
      auto b = trim(view.substr(tab + 1));
      if (a.empty() || b.empty()) {
        throw Error(ErrorCode::FormatError, "line " + std::to_string(number) + ": empty term");
      }
      t.add(a, b);
    }
    return t;
  }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

inline Thesaurus load_thesaurus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read thesaurus '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Thesaurus::parse(buffer.str());
}

/// Identical names (case-insensitive) always count; otherwise the pair must
/// be listed. No transitive closure.
inline bool lexical_synonym(const Thesaurus& t, std::string_view a, std::string_view b) {
  return iequals(a, b) || t.related(a, b);
}

}  // namespace xsdmerge
