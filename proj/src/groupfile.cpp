#include "permforms/groupfile.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "permforms/errors.hpp"

namespace permforms {

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

GroupSpecFile parse_group_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw InputError("group file: JSON syntax error at line " + std::to_string(line) +
                     ", column " + std::to_string(col));
  }
  if (!doc.is_object()) throw InputError("group file: top level must be an object");

  GroupSpecFile spec;
  try {
    spec.name = doc.at("name").get<std::string>();
    spec.degree = doc.at("degree").get<unsigned>();
    spec.generators = doc.at("generators").get<std::vector<std::string>>();
    if (doc.contains("expected_order"))
      spec.expected_order = doc.at("expected_order").get<std::uint64_t>();
    if (doc.contains("tags")) spec.tags = doc.at("tags").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("group file: ") + e.what());
  }
  if (spec.degree == 0) throw InputError("group file: degree must be positive");
  return spec;
}

Group build_group(const GroupSpecFile& spec, const EngineConfig& config) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    try {
      gens.push_back(Permutation::parse_cycles(spec.generators[i], spec.degree));
    } catch (const InputError& e) {
      throw InputError("group file: generator " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  Group g = Group::from_generators(spec.degree, std::move(gens), config);
  if (spec.expected_order && g.order() != *spec.expected_order)
    throw InputError("group file: constructed order " + std::to_string(g.order()) +
                     " does not match expected_order " + std::to_string(*spec.expected_order));
  return g;
}

std::pair<GroupSpecFile, Group> parse_group_file(const std::string& path,
                                                 const EngineConfig& config) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  GroupSpecFile spec = parse_group_spec(ss.str());
  Group g = build_group(spec, config);
  return {std::move(spec), std::move(g)};
}

std::string render_group_spec(const GroupSpecFile& spec) {
  nlohmann::ordered_json doc;
  doc["name"] = spec.name;
  doc["degree"] = spec.degree;
  doc["generators"] = spec.generators;
  if (spec.expected_order) doc["expected_order"] = *spec.expected_order;
  doc["tags"] = spec.tags;
  return doc.dump(2) + "\n";
}

GroupSpecFile spec_of(const NamedGroup& g) {
  GroupSpecFile spec;
  spec.name = g.name;
  spec.degree = g.group.degree();
  for (const auto& p : g.group.generators()) spec.generators.push_back(p.to_cycles());
  spec.expected_order = g.group.order();
  spec.tags = g.tags;
  return spec;
}

void write_corpus_dir(const std::vector<NamedGroup>& corpus, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& g : corpus) {
    std::ofstream out(std::filesystem::path(dir) / (g.name + ".json"));
    if (!out) throw InputError("cannot write corpus file for " + g.name + " in " + dir);
    out << render_group_spec(spec_of(g));
  }
}

CorpusLoad load_corpus_dir(const std::string& dir, const EngineConfig& config) {
  CorpusLoad load;
  if (!std::filesystem::is_directory(dir))
    throw InputError("corpus directory does not exist: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    try {
      auto [spec, group] = parse_group_file(file, config);
      load.entries.push_back(CorpusEntry{spec.name, std::move(group)});
    } catch (const std::exception& e) {
      load.errors.emplace_back(file, e.what());
    }
  }
  return load;
}

}  // namespace permforms
