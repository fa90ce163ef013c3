#ifndef PERMFORMS_GROUPFILE_HPP_
#define PERMFORMS_GROUPFILE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permforms/group.hpp"
#include "permforms/groupgen.hpp"
#include "permforms/verify.hpp"

namespace permforms {

/// On-disk description of a permutation group: a JSON document with cycle
/// notation generators (0-based points, whitespace-insensitive).
struct GroupSpecFile {
  std::string name;
  unsigned degree = 0;
  std::vector<std::string> generators;
  std::optional<std::uint64_t> expected_order;
  std::vector<std::string> tags;
};

/// Parses the JSON text. Syntax errors carry line/column; cycle errors name
/// the offending generator and character offset. When expected_order is
/// present the constructed group must match it.
GroupSpecFile parse_group_spec(const std::string& text);

Group build_group(const GroupSpecFile& spec,
                  const EngineConfig& config = EngineConfig::defaults());

/// Reads and builds a group file from disk.
std::pair<GroupSpecFile, Group> parse_group_file(
    const std::string& path, const EngineConfig& config = EngineConfig::defaults());

/// Canonical rendering: fixed field order, two-space indent, trailing
/// newline. parse(render(s)) reproduces s exactly.
std::string render_group_spec(const GroupSpecFile& spec);

GroupSpecFile spec_of(const NamedGroup& g);

/// Writes one canonical .json file per corpus member into dir.
void write_corpus_dir(const std::vector<NamedGroup>& corpus, const std::string& dir);

struct CorpusLoad {
  std::vector<CorpusEntry> entries;                          // parsed in filename order
  std::vector<std::pair<std::string, std::string>> errors;   // (file, message)
};

/// Loads every .json file in dir (sorted by filename). Unreadable entries
/// are collected as errors; the load never aborts.
CorpusLoad load_corpus_dir(const std::string& dir,
                           const EngineConfig& config = EngineConfig::defaults());

}  // namespace permforms

#endif  // PERMFORMS_GROUPFILE_HPP_
