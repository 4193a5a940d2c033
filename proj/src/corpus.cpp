#include "polyforge/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "polyforge/errors.hpp"

namespace polyforge {

namespace {

using nlohmann::json;

template <typename T>
Expected<T> parse_expected(const json& j, const std::string& entry_id,
                           const std::string& key) {
  if (!j.contains("provenance") || !j.at("provenance").is_string() ||
      j.at("provenance").get<std::string>().empty())
    throw InvalidArgumentError("corpus entry '" + entry_id +
                               "': expected value '" + key +
                               "' has no provenance tag");
  Expected<T> e;
  e.value = j.at("value").get<T>();
  e.provenance = j.at("provenance").get<std::string>();
  return e;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  const std::string text = read_file(dir + "/corpus.json");
  json root = json::parse(text);
  std::vector<CorpusEntry> entries;
  std::set<std::string> ids;
  for (const json& je : root.at("entries")) {
    CorpusEntry e;
    e.id = je.at("id").get<std::string>();
    if (!ids.insert(e.id).second)
      throw InvalidArgumentError("duplicate corpus id '" + e.id + "'");
    e.file = je.at("file").get<std::string>();
    e.rank = je.at("rank").get<int>();
    if (je.contains("expected")) {
      const json& ex = je.at("expected");
      if (ex.contains("order"))
        e.order = parse_expected<std::uint64_t>(ex.at("order"), e.id, "order");
      if (ex.contains("schlafli"))
        e.schlafli = parse_expected<std::vector<std::uint64_t>>(
            ex.at("schlafli"), e.id, "schlafli");
      if (ex.contains("c_order"))
        e.c_order =
            parse_expected<std::uint64_t>(ex.at("c_order"), e.id, "c_order");
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) {
              return a.id < b.id;
            });
  return entries;
}

}  // namespace polyforge
