#include "rdfgen/gen/regex_gen.hpp"

#include <algorithm>
#include <cctype>
#include <variant>

#include "rdfgen/error.hpp"

namespace rdfgen::gen {

namespace {

constexpr char kPrintableFirst = 0x21;  // '!'
constexpr char kPrintableLast = 0x7e;   // '~'

std::vector<char> digit_chars() {
  std::vector<char> out;
  for (char c = '0'; c <= '9'; ++c) out.push_back(c);
  return out;
}

std::vector<char> word_chars() {
  std::vector<char> out = digit_chars();
  for (char c = 'A'; c <= 'Z'; ++c) out.push_back(c);
  for (char c = 'a'; c <= 'z'; ++c) out.push_back(c);
  out.push_back('_');
  return out;
}

std::vector<char> any_chars() {
  std::vector<char> out;
  for (char c = kPrintableFirst; c <= kPrintableLast; ++c) out.push_back(c);
  return out;
}

std::vector<char> complement(const std::vector<char>& chars) {
  std::vector<char> out;
  for (char c = kPrintableFirst; c <= kPrintableLast; ++c) {
    if (std::find(chars.begin(), chars.end(), c) == chars.end()) out.push_back(c);
  }
  return out;
}

}  // namespace

struct CharSet {
  std::vector<char> chars;
};

struct Group;

using Atom = std::variant<char, CharSet, std::unique_ptr<Group>>;

struct Item {
  Atom atom;
  long long min = 1;
  long long max = 1;
};

struct Sequence {
  std::vector<Item> items;
};

struct RegexProgram::Alternation {
  std::vector<Sequence> options;
};

struct Group {
  RegexProgram::Alternation inner;
};

using Alternation = RegexProgram::Alternation;

class RegexParser {
 public:
  explicit RegexParser(std::string_view pattern) : src_(pattern) {}

  RegexProgram run() {
    RegexProgram prog;
    prog.pattern_ = std::string(src_);
    if (!src_.empty() && src_.front() == '^') src_.remove_prefix(1);
    if (!src_.empty() && src_.back() == '$' &&
        (src_.size() < 2 || src_[src_.size() - 2] != '\\')) {
      src_.remove_suffix(1);
    }
    prog.root_ = std::make_unique<Alternation>(alternation());
    if (pos_ != src_.size()) unsupported("unbalanced ')'");
    return prog;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void unsupported(const std::string& what) {
    throw Error(ErrorKind::UnsupportedRegexFeature, what + " in pattern");
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  char advance() { return src_[pos_++]; }

  Alternation alternation() {
    Alternation alt;
    alt.options.push_back(sequence());
    while (!at_end() && peek() == '|') {
      advance();
      alt.options.push_back(sequence());
    }
    return alt;
  }

  Sequence sequence() {
    Sequence seq;
    while (!at_end() && peek() != '|' && peek() != ')') {
      Item item;
      item.atom = atom();
      quantifier(item);
      seq.items.push_back(std::move(item));
    }
    return seq;
  }

  Atom atom() {
    char c = advance();
    switch (c) {
      case '(': {
        if (peek() == '?') {
          advance();
          char kind = peek();
          if (kind == ':') {
            advance();
          } else {
            unsupported(std::string("lookaround '(?") + kind + "'");
          }
        }
        auto group = std::make_unique<Group>();
        group->inner = alternation();
        if (at_end() || peek() != ')') unsupported("unbalanced '('");
        advance();
        return group;
      }
      case '[': return char_class();
      case '.': return CharSet{any_chars()};
      case '\\': return escape();
      case '^':
      case '$': unsupported(std::string("anchor '") + c + "' inside pattern");
      case '*':
      case '+':
      case '?': unsupported(std::string("dangling quantifier '") + c + "'");
      default: return c;
    }
  }

  Atom escape() {
    if (at_end()) unsupported("dangling '\\'");
    char c = advance();
    switch (c) {
      case 'd': return CharSet{digit_chars()};
      case 'D': return CharSet{complement(digit_chars())};
      case 'w': return CharSet{word_chars()};
      case 'W': return CharSet{complement(word_chars())};
      case 's': return ' ';
      case 'S': return CharSet{any_chars()};
      case 'n': return '\n';
      case 't': return '\t';
      case 'r': return '\r';
      case 'b':
      case 'B': unsupported(std::string("word boundary '\\") + c + "'");
      default:
        if (c >= '1' && c <= '9') unsupported(std::string("backreference '\\") + c + "'");
        return c;  // escaped metacharacter
    }
  }

  CharSet char_class() {
    bool negated = false;
    std::vector<char> chars;
    if (peek() == '^') {
      negated = true;
      advance();
    }
    bool first = true;
    while (true) {
      if (at_end()) unsupported("unterminated character class");
      char c = peek();
      if (c == ']' && !first) {
        advance();
        break;
      }
      first = false;
      advance();
      if (c == '\\') {
        if (at_end()) unsupported("dangling '\\' in character class");
        char e = advance();
        switch (e) {
          case 'd': {
            for (char d : digit_chars()) chars.push_back(d);
            continue;
          }
          case 'w': {
            for (char w : word_chars()) chars.push_back(w);
            continue;
          }
          case 's': chars.push_back(' '); continue;
          case 'n': c = '\n'; break;
          case 't': c = '\t'; break;
          case 'r': c = '\r'; break;
          default: c = e; break;
        }
      }
      // Range when '-' is followed by something other than ']'.
      if (peek() == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] != ']') {
        advance();
        char hi = advance();
        if (hi == '\\') {
          if (at_end()) unsupported("dangling '\\' in character class");
          hi = advance();
        }
        if (hi < c) unsupported("inverted range in character class");
        for (char r = c; r <= hi; ++r) chars.push_back(r);
      } else {
        chars.push_back(c);
      }
    }
    if (negated) chars = complement(chars);
    if (chars.empty()) unsupported("empty character class");
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    return CharSet{std::move(chars)};
  }

  void quantifier(Item& item) {
    if (at_end()) return;
    char c = peek();
    if (c == '?') {
      advance();
      item.min = 0;
      item.max = 1;
    } else if (c == '*') {
      advance();
      item.min = 0;
      item.max = 10;
    } else if (c == '+') {
      advance();
      item.min = 1;
      item.max = 10;
    } else if (c == '{') {
      // '{' without a numeric body is a literal brace; leave it alone.
      std::size_t save = pos_;
      advance();
      long long lo = 0;
      bool has_digits = false;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        lo = lo * 10 + (advance() - '0');
        has_digits = true;
      }
      if (!has_digits) {
        pos_ = save;
        return;
      }
      long long hi = lo;
      if (peek() == ',') {
        advance();
        if (peek() == '}') {
          hi = lo + 10;  // open-ended
        } else {
          hi = 0;
          while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            hi = hi * 10 + (advance() - '0');
          }
        }
      }
      if (at_end() || peek() != '}') {
        pos_ = save;
        return;
      }
      advance();
      if (hi < lo) unsupported("quantifier with max < min");
      item.min = lo;
      item.max = hi;
    }
    if (!at_end() && peek() == '?') unsupported("lazy quantifier '?'");
  }
};

namespace {

void sample_alternation(const Alternation& alt, Rng& rng, std::string& out);

void sample_atom(const Atom& atom, Rng& rng, std::string& out) {
  if (auto* c = std::get_if<char>(&atom)) {
    out.push_back(*c);
  } else if (auto* set = std::get_if<CharSet>(&atom)) {
    out.push_back(set->chars[rng.next(set->chars.size())]);
  } else {
    sample_alternation(std::get<std::unique_ptr<Group>>(atom)->inner, rng, out);
  }
}

void sample_alternation(const Alternation& alt, Rng& rng, std::string& out) {
  const Sequence& seq = alt.options[rng.next(alt.options.size())];
  for (auto& item : seq.items) {
    long long count = item.min + static_cast<long long>(rng.next(item.max - item.min + 1));
    for (long long i = 0; i < count; ++i) sample_atom(item.atom, rng, out);
  }
}

void enumerate_alternation(const Alternation& alt, std::vector<std::string>& out,
                           std::size_t limit);

std::vector<std::string> enumerate_atom(const Atom& atom, std::size_t limit) {
  std::vector<std::string> out;
  if (auto* c = std::get_if<char>(&atom)) {
    out.push_back(std::string(1, *c));
  } else if (auto* set = std::get_if<CharSet>(&atom)) {
    for (char ch : set->chars) out.push_back(std::string(1, ch));
  } else {
    enumerate_alternation(std::get<std::unique_ptr<Group>>(atom)->inner, out, limit);
  }
  return out;
}

void check_limit(std::size_t size, std::size_t limit) {
  if (size > limit) {
    throw Error(ErrorKind::InvalidArgument, "regex language exceeds enumeration limit");
  }
}

void enumerate_alternation(const Alternation& alt, std::vector<std::string>& out,
                           std::size_t limit) {
  for (auto& seq : alt.options) {
    std::vector<std::string> partials = {""};
    for (auto& item : seq.items) {
      std::vector<std::string> units = enumerate_atom(item.atom, limit);
      // Expand the quantifier into every allowed repeat count.
      std::vector<std::string> repeats;
      std::vector<std::string> current = {""};
      for (long long n = 0; n <= item.max; ++n) {
        if (n >= item.min) {
          repeats.insert(repeats.end(), current.begin(), current.end());
          check_limit(repeats.size(), limit);
        }
        if (n == item.max) break;
        std::vector<std::string> grown;
        for (auto& prefix : current) {
          for (auto& unit : units) grown.push_back(prefix + unit);
        }
        check_limit(grown.size(), limit);
        current = std::move(grown);
      }
      std::vector<std::string> next;
      for (auto& prefix : partials) {
        for (auto& rep : repeats) next.push_back(prefix + rep);
      }
      check_limit(next.size(), limit);
      partials = std::move(next);
    }
    out.insert(out.end(), partials.begin(), partials.end());
    check_limit(out.size(), limit);
  }
}

}  // namespace

RegexProgram::RegexProgram() = default;
RegexProgram::RegexProgram(RegexProgram&&) noexcept = default;
RegexProgram& RegexProgram::operator=(RegexProgram&&) noexcept = default;
RegexProgram::~RegexProgram() = default;

RegexProgram RegexProgram::parse(std::string_view pattern) {
  return RegexParser(pattern).run();
}

std::string RegexProgram::sample(Rng& rng) const {
  std::string out;
  sample_alternation(*root_, rng, out);
  return out;
}

std::vector<std::string> RegexProgram::enumerate(std::size_t limit) const {
  std::vector<std::string> out;
  enumerate_alternation(*root_, out, limit);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rdfgen::gen
