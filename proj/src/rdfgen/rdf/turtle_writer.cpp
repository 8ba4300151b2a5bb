#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>

#include "rdfgen/rdf/turtle.hpp"
#include "rdfgen/rdf/vocab.hpp"

namespace rdfgen::rdf {

namespace {

bool lexical_is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

bool lexical_is_decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos || dot + 1 >= s.size()) return false;
  return lexical_is_integer(s.substr(0, dot)) && lexical_is_integer(s.substr(dot + 1));
}

bool valid_pn_local(std::string_view local) {
  if (local.empty()) return false;
  for (char c : local) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  }
  return true;
}

std::string escape_string(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

class Writer {
 public:
  explicit Writer(const Graph& graph) : graph_(graph) {
    // Longest-namespace-first so nested namespaces pick the tightest prefix.
    for (auto& [prefix, ns] : graph.prefixes()) by_namespace_[ns] = prefix;
  }

  std::string run() {
    std::ostringstream out;
    for (auto& [prefix, ns] : graph_.prefixes()) {
      out << "@prefix " << prefix << ": <" << ns << "> .\n";
    }
    if (!graph_.prefixes().empty() && !graph_.sorted().empty()) out << "\n";

    auto it = graph_.sorted().begin();
    auto end = graph_.sorted().end();
    while (it != end) {
      const Term& subject = it->subject;
      // Collect the subject's block; the set is (s, p, o) sorted already.
      std::vector<Triple> block;
      for (; it != end && it->subject == subject; ++it) block.push_back(*it);
      write_block(out, subject, block);
    }
    return out.str();
  }

 private:
  const Graph& graph_;
  std::map<std::string, std::string> by_namespace_;

  void write_block(std::ostringstream& out, const Term& subject, std::vector<Triple>& block) {
    const Term rdf_type = Term::iri(std::string(vocab::rdf_type));
    std::stable_partition(block.begin(), block.end(),
                          [&](const Triple& t) { return t.predicate == rdf_type; });

    out << render(subject) << " ";
    for (std::size_t i = 0; i < block.size();) {
      const Term& predicate = block[i].predicate;
      if (i > 0) out << " ;\n    ";
      out << (predicate == rdf_type ? "a" : render(predicate));
      bool first_object = true;
      for (; i < block.size() && block[i].predicate == predicate; ++i) {
        out << (first_object ? " " : ",\n        ") << render(block[i].object);
        first_object = false;
      }
    }
    out << " .\n\n";
  }

  std::string render(const Term& term) {
    switch (term.kind()) {
      case TermKind::Blank: return "_:" + term.blank_id();
      case TermKind::Iri: return render_iri(term.iri_value());
      case TermKind::Literal: break;
    }
    const std::string& dt = term.datatype();
    if (!term.lang().empty()) return "\"" + escape_string(term.lexical()) + "\"@" + term.lang();
    if (dt == vocab::xsd_integer && lexical_is_integer(term.lexical())) return term.lexical();
    if (dt == vocab::xsd_decimal && lexical_is_decimal(term.lexical())) return term.lexical();
    if (dt == vocab::xsd_boolean && (term.lexical() == "true" || term.lexical() == "false")) {
      return term.lexical();
    }
    std::string quoted = "\"" + escape_string(term.lexical()) + "\"";
    if (dt == vocab::xsd_string) return quoted;
    return quoted + "^^" + render_iri(dt);
  }

  std::string render_iri(const std::string& iri) {
    std::string_view best_ns;
    std::string_view best_prefix;
    for (auto& [ns, prefix] : by_namespace_) {
      if (ns.size() > best_ns.size() && iri.size() > ns.size() && iri.starts_with(ns)) {
        std::string_view local(iri.data() + ns.size(), iri.size() - ns.size());
        if (valid_pn_local(local)) {
          best_ns = ns;
          best_prefix = prefix;
        }
      }
    }
    if (!best_ns.empty()) {
      return std::string(best_prefix) + ":" + iri.substr(best_ns.size());
    }
    return "<" + iri + ">";
  }
};

}  // namespace

std::string serialize_turtle(const Graph& graph) { return Writer(graph).run(); }

}  // namespace rdfgen::rdf
