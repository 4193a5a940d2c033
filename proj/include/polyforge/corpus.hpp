#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyforge {

// One expected value together with where it comes from. The loader refuses
// entries without a provenance tag, so every number the test suite checks
// against is traceable to either published theory or this artifact's own
// enumeration oracle.
template <typename T>
struct Expected {
  T value{};
  std::string provenance;
};

struct CorpusEntry {
  std::string id;
  std::string file;  // presentation path relative to the corpus directory
  int rank = 0;
  std::optional<Expected<std::uint64_t>> order;
  std::optional<Expected<std::vector<std::uint64_t>>> schlafli;
  std::optional<Expected<std::uint64_t>> c_order;
};

// Loads corpus metadata from `<dir>/corpus.json`, sorted by id. Throws
// InvalidArgumentError on duplicate ids or untagged expected values.
std::vector<CorpusEntry> load_corpus(const std::string& dir);

// Reads a whole file; throws Error when unreadable.
std::string read_file(const std::string& path);

}  // namespace polyforge
