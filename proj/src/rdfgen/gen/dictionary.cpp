#include "rdfgen/gen/dictionary.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rdfgen/error.hpp"

namespace rdfgen::gen {

namespace {

struct EmbeddedDictionary {
  const char* key;
  const char* text;
};

const EmbeddedDictionary kEmbedded[] = {
#include "embedded_dictionaries.inc"
};

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> parse_dictionary_text(std::string_view text) {
  std::vector<std::string> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    values.emplace_back(line);
  }
  return values;
}

DictionaryRegistry DictionaryRegistry::built_in() {
  DictionaryRegistry registry;
  for (auto& embedded : kEmbedded) {
    Dictionary dict;
    dict.key = embedded.key;
    dict.values = parse_dictionary_text(embedded.text);
    dict.source_file = "<built-in>";
    registry.add(std::move(dict));
  }
  registry.bind("http://schema.org/Book", "name", "book_titles");
  registry.bind("http://schema.org/TVSeries", "name", "movie_titles");
  registry.bind("http://schema.org/Movie", "name", "movie_titles");
  registry.bind("*", "jobTitle", "job_titles");
  registry.bind("*", "genre", "genres");
  registry.bind("*", "award", "awards");
  registry.bind("*", "bookEdition", "book_editions");
  return registry;
}

void DictionaryRegistry::load_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorKind::Io, "dictionary directory not found: " + dir);
  }
  for (auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".csv") continue;
    std::ifstream in(entry.path());
    if (!in) throw Error(ErrorKind::Io, "cannot read dictionary " + entry.path().string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    Dictionary dict;
    dict.key = entry.path().stem().string();
    dict.values = parse_dictionary_text(buffer.str());
    dict.source_file = entry.path().string();
    if (dict.values.empty()) {
      throw Error(ErrorKind::Io, "dictionary " + entry.path().string() + " has no values");
    }
    add(std::move(dict));
  }
}

void DictionaryRegistry::add(Dictionary dict) { dictionaries_[dict.key] = std::move(dict); }

void DictionaryRegistry::bind(std::string class_iri, std::string property_local,
                              std::string dictionary) {
  bindings_.push_back({std::move(class_iri), std::move(property_local), std::move(dictionary)});
}

const Dictionary* DictionaryRegistry::find(std::string_view name) const {
  auto it = dictionaries_.find(name);
  return it == dictionaries_.end() ? nullptr : &it->second;
}

const Dictionary* DictionaryRegistry::lookup(std::string_view class_iri,
                                             std::string_view property_local) const {
  for (auto& binding : bindings_) {
    if (binding.class_iri != "*" && binding.class_iri == class_iri &&
        iequals(binding.property_local, property_local)) {
      return find(binding.dictionary);
    }
  }
  for (auto& binding : bindings_) {
    if (binding.class_iri == "*" && iequals(binding.property_local, property_local)) {
      return find(binding.dictionary);
    }
  }
  return nullptr;
}

}  // namespace rdfgen::gen
