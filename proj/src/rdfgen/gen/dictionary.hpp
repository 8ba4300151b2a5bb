#ifndef RDFGEN_GEN_DICTIONARY_HPP
#define RDFGEN_GEN_DICTIONARY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rdfgen::gen {

/// One named value set, loaded from a one-column CSV (one value per line,
/// '#' comment lines ignored) or from the built-in copies embedded at build
/// time from data/dictionaries/.
struct Dictionary {
  std::string key;
  std::vector<std::string> values;
  std::string source_file;
};

class DictionaryRegistry {
 public:
  /// Registry seeded with the embedded dictionaries and the default
  /// (class, property) bindings.
  static DictionaryRegistry built_in();

  /// Loads every *.csv in `dir`, replacing same-named built-ins. Throws
  /// Error(Io) when the directory cannot be read or a file is empty.
  void load_directory(const std::string& dir);

  void add(Dictionary dict);
  void bind(std::string class_iri, std::string property_local, std::string dictionary);

  const Dictionary* find(std::string_view name) const;

  /// Dictionary bound to (class, property local name), trying the exact
  /// class first and the "*" wildcard second. Property names compare
  /// case-insensitively.
  const Dictionary* lookup(std::string_view class_iri, std::string_view property_local) const;

 private:
  std::map<std::string, Dictionary, std::less<>> dictionaries_;
  struct Binding {
    std::string class_iri;  // "*" matches any class (or none)
    std::string property_local;
    std::string dictionary;
  };
  std::vector<Binding> bindings_;
};

/// Parses dictionary lines out of CSV-shaped text.
std::vector<std::string> parse_dictionary_text(std::string_view text);

}  // namespace rdfgen::gen

#endif
