#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace eulercat {

/// One manifest record. `path` (and `right`, for functor pairs) are relative
/// to the manifest file.
struct CorpusEntry {
  std::string name;
  std::string kind;  // matrix | category | functor-pair | diagram
  std::filesystem::path path;
  std::optional<std::filesystem::path> right;
  nlohmann::json expected = nlohmann::json::object();
};

/// {"entries": [{"name", "kind", "path", "right"?, "expected"?}, ...]}.
/// Throws ParseError.
std::vector<CorpusEntry> load_manifest(const std::filesystem::path& manifest);

/// Every check an entry of the given kind can report, computed from the
/// file. Rationals appear as canonical "p/q" strings.
nlohmann::json corpus_facts(const CorpusEntry& entry);

struct CorpusCheck {
  std::string entry;
  std::string check;
  bool ok = false;
  nlohmann::json expected;
  nlohmann::json actual;
};

/// Compares each expected value with the computed one. Integers and
/// rational strings compare as rationals. An unknown check name fails.
std::vector<CorpusCheck> run_corpus(const std::filesystem::path& manifest);

}  // namespace eulercat
