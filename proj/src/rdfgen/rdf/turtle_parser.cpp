#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "rdfgen/error.hpp"
#include "rdfgen/rdf/turtle.hpp"
#include "rdfgen/rdf/vocab.hpp"

namespace rdfgen::rdf {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view source) : src_(source) {}

  Graph parse() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  Graph graph_;
  std::map<std::string, std::string> blank_labels_;

  [[noreturn]] void fail(const std::string& message) { throw SyntaxError(message, line_, col_); }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  char peek2() const { return pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0'; }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool try_consume(char c) {
    skip_ws();
    if (!at_end() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  bool keyword_follows(std::string_view word) {
    skip_ws();
    if (src_.substr(pos_, word.size()) != word) return false;
    char after = pos_ + word.size() < src_.size() ? src_[pos_ + word.size()] : '\0';
    return after == '\0' || std::isspace(static_cast<unsigned char>(after)) || after == '<';
  }

  void consume_keyword(std::string_view word) {
    for (char c : word) {
      if (at_end() || peek() != c) fail("expected '" + std::string(word) + "'");
      advance();
    }
  }

  void statement() {
    if (keyword_follows("@prefix")) {
      consume_keyword("@prefix");
      prefix_directive();
      return;
    }
    if (keyword_follows("@base")) {
      consume_keyword("@base");
      base_ = iriref();
      expect('.');
      return;
    }
    triples();
    expect('.');
  }

  void prefix_directive() {
    skip_ws();
    std::string prefix = pname_ns();
    skip_ws();
    std::string iri = iriref();
    if (iri.empty()) fail("prefix must map to a non-empty IRI");
    graph_.add_prefix(prefix, iri);
    expect('.');
  }

  // PNAME_NS: the part before ':' in a prefix declaration.
  std::string pname_ns() {
    std::string name;
    while (!at_end() && is_pn_char(peek())) name.push_back(advance());
    if (at_end() || peek() != ':') fail("expected ':' after prefix name");
    advance();
    return name;
  }

  static bool is_pn_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  }

  std::string iriref() {
    skip_ws();
    if (at_end() || peek() != '<') fail("expected IRI of the form <...>");
    advance();
    std::string iri;
    while (!at_end() && peek() != '>') {
      char c = advance();
      if (c == '\n') fail("newline inside IRI");
      iri.push_back(c);
    }
    if (at_end()) fail("unterminated IRI");
    advance();
    if (!base_.empty() && iri.find(':') == std::string::npos) iri = base_ + iri;
    return iri;
  }

  void triples() {
    skip_ws();
    char c = peek();
    Term subject;
    if (c == '[') {
      subject = blank_node_property_list();
      skip_ws();
      if (peek() == '.') return;  // bare [ ... ] . statement
    } else if (c == '(') {
      subject = collection();
    } else {
      subject = resource();
      if (subject.is_literal()) fail("a literal cannot be a subject");
    }
    predicate_object_list(subject);
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      skip_ws();
      Term predicate = verb();
      object_list(subject, predicate);
      if (!try_consume(';')) break;
      skip_ws();
      // Trailing ';' before '.' or ']' is permitted.
      if (at_end() || peek() == '.' || peek() == ']') break;
    }
  }

  Term verb() {
    skip_ws();
    if (peek() == 'a') {
      char after = peek2();
      if (std::isspace(static_cast<unsigned char>(after)) || after == '<' || after == '[') {
        advance();
        return Term::iri(std::string(vocab::rdf_type));
      }
    }
    Term t = resource();
    if (!t.is_iri()) fail("predicate must be an IRI");
    return t;
  }

  void object_list(const Term& subject, const Term& predicate) {
    while (true) {
      Term object = object_term();
      graph_.insert({subject, predicate, object});
      if (!try_consume(',')) break;
    }
  }

  Term object_term() {
    skip_ws();
    char c = peek();
    if (c == '[') return blank_node_property_list();
    if (c == '(') return collection();
    return resource();
  }

  Term blank_node_property_list() {
    expect('[');
    Term node = Term::blank(graph_.fresh_blank_id());
    skip_ws();
    if (peek() != ']') predicate_object_list(node);
    expect(']');
    return node;
  }

  Term collection() {
    expect('(');
    std::vector<Term> items;
    while (true) {
      skip_ws();
      if (at_end()) fail("unterminated collection");
      if (peek() == ')') {
        advance();
        break;
      }
      items.push_back(object_term());
    }
    return write_list(graph_, items);
  }

  // IRI, prefixed name, labelled blank node, or literal.
  Term resource() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (c == '<') return Term::iri(iriref());
    if (c == '"' || c == '\'') return string_literal();
    if (c == '_' && peek2() == ':') return labelled_blank();
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      return numeric_literal();
    }
    if (keyword_follows_boolean("true")) return boolean(true);
    if (keyword_follows_boolean("false")) return boolean(false);
    return prefixed_name();
  }

  bool keyword_follows_boolean(std::string_view word) {
    if (src_.substr(pos_, word.size()) != word) return false;
    char after = pos_ + word.size() < src_.size() ? src_[pos_ + word.size()] : '\0';
    return !(std::isalnum(static_cast<unsigned char>(after)) || after == '_' || after == ':');
  }

  Term boolean(bool value) {
    consume_keyword(value ? "true" : "false");
    return Term::literal(value ? "true" : "false", std::string(vocab::xsd_boolean));
  }

  Term labelled_blank() {
    advance();  // _
    advance();  // :
    std::string label;
    while (!at_end() && is_pn_char(peek())) label.push_back(advance());
    if (label.empty()) fail("blank node label expected after '_:'");
    auto it = blank_labels_.find(label);
    if (it == blank_labels_.end()) {
      it = blank_labels_.emplace(label, graph_.fresh_blank_id()).first;
    }
    return Term::blank(it->second);
  }

  Term numeric_literal() {
    std::string lex;
    if (peek() == '+' || peek() == '-') lex.push_back(advance());
    bool has_dot = false;
    bool has_exp = false;
    while (!at_end()) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        lex.push_back(advance());
      } else if (c == '.' && !has_dot && !has_exp &&
                 std::isdigit(static_cast<unsigned char>(peek2()))) {
        has_dot = true;
        lex.push_back(advance());
      } else if ((c == 'e' || c == 'E') && !has_exp) {
        has_exp = true;
        lex.push_back(advance());
        if (peek() == '+' || peek() == '-') lex.push_back(advance());
      } else {
        break;
      }
    }
    if (lex.empty() || !std::isdigit(static_cast<unsigned char>(lex.back()))) {
      fail("malformed numeric literal");
    }
    std::string_view dt = has_exp   ? vocab::xsd_double
                          : has_dot ? vocab::xsd_decimal
                                    : vocab::xsd_integer;
    return Term::literal(lex, std::string(dt));
  }

  Term string_literal() {
    char quote = advance();
    std::string lex;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      char c = advance();
      if (c == quote) break;
      if (c == '\n') fail("newline inside string literal");
      if (c == '\\') {
        if (at_end()) fail("dangling escape");
        char e = advance();
        switch (e) {
          case 'n': lex.push_back('\n'); break;
          case 't': lex.push_back('\t'); break;
          case 'r': lex.push_back('\r'); break;
          case '\\': lex.push_back('\\'); break;
          case '"': lex.push_back('"'); break;
          case '\'': lex.push_back('\''); break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
        continue;
      }
      lex.push_back(c);
    }
    // Optional language tag or datatype.
    if (!at_end() && peek() == '@') {
      advance();
      std::string lang;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
        lang.push_back(advance());
      }
      if (lang.empty()) fail("empty language tag");
      return Term::literal(lex, "", lang);
    }
    if (!at_end() && peek() == '^' && peek2() == '^') {
      advance();
      advance();
      skip_ws();
      Term dt = peek() == '<' ? Term::iri(iriref()) : prefixed_name();
      if (!dt.is_iri()) fail("datatype must be an IRI");
      return Term::literal(lex, dt.iri_value());
    }
    return Term::literal(lex);
  }

  Term prefixed_name() {
    std::string prefix;
    while (!at_end() && is_pn_char(peek())) prefix.push_back(advance());
    if (at_end() || peek() != ':') {
      fail(prefix.empty() ? "expected a term" : "expected ':' in prefixed name '" + prefix + "'");
    }
    advance();
    std::string local;
    while (!at_end() && is_pn_char(peek())) local.push_back(advance());
    // PN_LOCAL may not end in '.'; the dot terminates the statement instead.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
      --col_;
    }
    auto it = graph_.prefixes().find(prefix);
    if (it == graph_.prefixes().end()) {
      throw Error(ErrorKind::UnresolvedPrefix,
                  "prefix '" + prefix + ":' is not declared (line " + std::to_string(line_) + ")");
    }
    return Term::iri(it->second + local);
  }

  std::string base_;
};

}  // namespace

Graph parse_turtle(std::string_view source) { return Parser(source).parse(); }

Graph parse_turtle_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_turtle(buffer.str());
}

}  // namespace rdfgen::rdf
